import itertools
import random

import pytest

from rulerunner.common.exceptions import UnknownOperatorError
from rulerunner.formula import Formula, FormulaKind, compile_formula
from rulerunner.rulegen import (RULES_PER_NODE_BOUND, Qualifier, Rule, Stage, TableContext, TruthValue, Value,
                                activation_set, build_tables, grouped_rule_count_of, initialise, rule_count,
                                rule_count_of)
from rulerunner.rulegen import state_atom
from rulerunner.suite import random_formula

T, F, U = TruthValue.T, TruthValue.F, TruthValue.U


def formatted(system, atoms):
    return {a.format(system.describe) for a in atoms}


def rule_texts(system, rules):
    return {r.format(system.describe) for r in rules}


class TestTables:

    @pytest.mark.parametrize("kind,count", [
        (FormulaKind.ATOM, 2),
        (FormulaKind.NEG_ATOM, 2),
        (FormulaKind.TRUE, 1),
        (FormulaKind.END, 2),
        (FormulaKind.OR, 99),
        (FormulaKind.AND, 99),
        (FormulaKind.UNTIL, 183),
        (FormulaKind.NEXT, 11),
        (FormulaKind.WEAK_NEXT, 11),
        (FormulaKind.EVENTUALLY, 17),
        (FormulaKind.ALWAYS, 10),
    ])
    def test_cell_counts(self, kind, count):
        assert len(build_tables(kind)) == count

    def test_negation_has_no_table(self):
        with pytest.raises(UnknownOperatorError):
            build_tables(FormulaKind.NOT)

    @pytest.mark.parametrize("kind", [FormulaKind.OR, FormulaKind.AND, FormulaKind.UNTIL])
    def test_binary_tables_are_exclusive(self, kind):
        values = TableContext().operand_values()
        cells = build_tables(kind)
        modes = (Qualifier.A, Qualifier.B) if kind is FormulaKind.UNTIL else (Qualifier.B,)
        for mode in modes:
            for left, right in itertools.product(values, values):
                for end in (False, True):
                    matching = [c for c in cells if c.mode is mode and c.operands == (left, right)
                                and c.end in (None, end)]
                    assert len(matching) == 1, (mode, left, right, end)

    def test_disjunction_with_undecided_left_and_false_right(self):
        cell = next(c for c in build_tables(FormulaKind.OR)
                    if c.mode is Qualifier.B and c.operands == (Value(U), Value(F)))
        assert cell.output == Value(U, Qualifier.L)

    def test_conjunction_falsity_dominates(self):
        cell = next(c for c in build_tables(FormulaKind.AND)
                    if c.mode is Qualifier.B and c.operands == (Value(F), Value(U, Qualifier.M)))
        assert cell.output == Value(F)

    def test_eventually_with_true_operand(self):
        cells = [c for c in build_tables(FormulaKind.EVENTUALLY) if c.operands == (Value(T),)]
        assert [c.output for c in cells] == [Value(T)]

    def test_until_tables(self):
        cells = build_tables(FormulaKind.UNTIL)

        def outputs(left, right):
            return {(c.end, c.output) for c in cells if c.mode is Qualifier.A and c.operands == (left, right)}

        assert outputs(Value(F), Value(T)) == {(None, Value(T))}
        assert outputs(Value(F), Value(F)) == {(None, Value(F))}
        assert outputs(Value(T), Value(F)) == {(False, Value(U, Qualifier.A)), (True, Value(F))}
        assert outputs(Value(F), Value(U)) == {(None, Value(U, Qualifier.R))}

    def test_always_is_undecided_while_operand_holds(self):
        cells = [c for c in build_tables(FormulaKind.ALWAYS) if c.operands == (Value(T),)]
        assert {(c.end, c.output) for c in cells} == {(False, Value(U, Qualifier.K)), (True, Value(T))}


class TestRules:

    def test_rule_needs_a_body(self):
        with pytest.raises(ValueError):
            Rule(frozenset(), state_atom.SUCCESS, Stage.EVALUATION, 0)

    def test_reactivation_is_triggered_by_one_undecided_value(self):
        with pytest.raises(ValueError):
            Rule(frozenset({state_atom.truth(0, T)}), state_atom.act(0), Stage.REACTIVATION, 0)
        rule = Rule(frozenset({state_atom.truth(0, U, Qualifier.M)}), state_atom.act(0, Qualifier.M),
                    Stage.REACTIVATION, 0)
        assert rule.activation is None

    def test_decided_values_carry_no_qualifier(self):
        with pytest.raises(ValueError):
            state_atom.truth(0, T, Qualifier.L)

    def test_atom_text(self):
        assert str(state_atom.obs("a")) == "obs:a"
        assert str(state_atom.absent("a")) == "!obs:a"
        assert str(state_atom.truth(3, U, Qualifier.R)) == "[#3]?R"
        assert str(state_atom.act(2, Qualifier.B)) == "R[#2]B"
        assert str(state_atom.NOT_END) == "!END"


class TestInitialise:

    def test_eventually_rules(self):
        system = initialise(compile_formula("F a"))
        texts = rule_texts(system, system.eval_rules)
        assert {
            "R[a] & obs:a -> [a]T",
            "R[a] & !obs:a -> [a]F",
            "R[F a] & [a]T -> [F a]T",
            "R[F a] & [a]F & !END -> [F a]?",
            "R[F a] & [a]F & END -> [F a]F",
            "[F a]T -> SUCCESS",
            "[F a]F -> FAILURE",
            "[F a]? -> REPEAT",
        } <= texts
        react = [r for r in system.react_rules if r.body == frozenset({state_atom.truth(1, U)})]
        assert formatted(system, (r.head for r in react)) == {"R[a]", "R[F a]"}
        assert formatted(system, system.initial_state) == {"R[a]", "R[F a]"}

    def test_initial_state_of_disjunction(self):
        system = initialise(compile_formula("a | F b"))
        assert formatted(system, system.initial_state) == {"R[a]", "R[b]", "R[F b]", "R[(a | F b)]B"}

    def test_next_starts_without_its_operand(self):
        system = initialise(compile_formula("a | X b"))
        assert formatted(system, system.initial_state) == {"R[a]", "R[X b]", "R[(a | X b)]B"}
        first = [r.head for r in system.react_rules if r.body == frozenset({state_atom.truth(2, U)})]
        assert formatted(system, first) == {"R[b]", "R[X b]M"}
        mirror = [r.head for r in system.react_rules
                  if r.body == frozenset({state_atom.truth(2, U, Qualifier.M)})]
        assert formatted(system, mirror) == {"R[X b]M"}

    def test_until_restarts_both_operands(self):
        system = initialise(compile_formula("a U b"))
        assert formatted(system, system.initial_state) == {"R[a]", "R[b]", "R[(a U b)]A"}
        restart = [r.head for r in system.react_rules
                   if r.body == frozenset({state_atom.truth(2, U, Qualifier.A)})]
        assert formatted(system, restart) == {"R[a]", "R[b]", "R[(a U b)]A"}

    def test_leaves_have_no_reactivation(self):
        system = initialise(compile_formula("a"))
        assert system.react_rules == ()
        assert len(system.eval_rules) == 2 + 9
        assert system.leaf_names == {0: "a"}

    def test_eval_rules_follow_post_order(self):
        system = initialise(compile_formula("(a | b) U X c"))
        owners = [r.owner for r in system.eval_rules]
        assert owners == sorted(owners)
        tail = system.eval_rules[-9:]
        assert {r.head.kind for r in tail} == {state_atom.SUCCESS.kind, state_atom.FAILURE.kind,
                                               state_atom.REPEAT.kind}

    def test_eventually_of_a_next_is_an_obligation(self):
        system = initialise(compile_formula("F X a"))
        root = 2
        assert formatted(system, system.initial_state) == {"R[F X a]"}
        assert system.leaves == ()
        assert Rule(frozenset({state_atom.act(root, Qualifier.P), state_atom.obligation(root, U)}),
                    state_atom.truth(root, U), Stage.EVALUATION, root) in system.eval_rules
        assert {r.owner for r in system.eval_rules} == {root}
        assert [(formatted(system, r.body), r.head.format(system.describe)) for r in system.react_rules] == \
            [({"[F X a]?"}, "R[F X a]P")]
        (index, spec), = system.obligations
        assert index == root and system.obligation_of(root) is spec
        assert spec.kind is FormulaKind.EVENTUALLY
        operand, = spec.operands
        assert formatted(operand, operand.initial_state) == {"R[X a]"}

    def test_until_over_a_next_compiles_both_operands(self):
        system = initialise(compile_formula("X a U b"))
        (_, spec), = system.obligations
        assert [str(s.subformulas.root) for s in spec.operands] == ["X a", "b"]

    def test_nodes_without_temporal_operands_stay_in_the_kernel(self):
        assert initialise(compile_formula("G ((a | b) | (c | d))")).obligations == ()
        assert initialise(compile_formula("X F a")).obligations == ()


class TestRuleCount:

    def test_leaf(self):
        assert rule_count(compile_formula("a")) == 11
        assert rule_count(compile_formula("!a")) == 11

    def test_disjunction_adds_a_constant(self):
        for left, right in (("a", "F b"), ("X a", "b U c"), ("G a", "a & b")):
            combined = rule_count(compile_formula("(%s) | (%s)" % (left, right)))
            assert combined == rule_count(compile_formula(left)) + rule_count(compile_formula(right)) + 93

    def test_eventually_counts(self):
        assert rule_count(compile_formula("F a")) == 30
        assert rule_count(compile_formula("a | F b")) == 134

    @pytest.mark.parametrize("text", ["a", "!a", "a | b", "(a & b) | END"])
    def test_eventually_reactivates_its_operand(self, text):
        operand = compile_formula(text)
        wrapped = Formula.unary(FormulaKind.EVENTUALLY, operand)
        assert rule_count(wrapped) == rule_count(operand) + 18 + len(activation_set(operand))

    @pytest.mark.parametrize("text", ["X a", "a U b", "G (a | X b)", "F a & W b"])
    def test_eventually_of_a_temporal_operand_adds_a_constant(self, text):
        operand = compile_formula(text)
        wrapped = Formula.unary(FormulaKind.EVENTUALLY, operand)
        assert rule_count(wrapped) == rule_count(operand) + 16

    @pytest.mark.parametrize("text", ["a", "a U b", "(a U b) U (c U d)", "F ((a & X b) | (c & W d))",
                                      "G ((a | b) | (c | d))"])
    def test_linear_bound(self, text):
        f = compile_formula(text)
        assert rule_count(f) <= RULES_PER_NODE_BOUND * f.size()

    def test_grouped_count_merges_reactivation_heads(self):
        f = compile_formula("a U b")
        system = initialise(f)
        # the A group has three heads, the B, L and R groups one each
        assert rule_count(f) == grouped_rule_count_of(system) + 2
        assert rule_count(f) == len(system.eval_rules) + len(system.react_rules)

    def test_obligation_operands_are_counted(self):
        system = initialise(compile_formula("F X a"))
        (_, spec), = system.obligations
        operand = spec.operands[0]
        assert rule_count_of(system) == len(system.eval_rules) + len(system.react_rules) + rule_count_of(operand)

    def test_bound_holds_for_random_formulas(self):
        rng = random.Random(2024)
        for _ in range(500):
            f = random_formula(rng.randint(1, 200), ["a", "b", "c"], rng)
            assert rule_count(f) <= RULES_PER_NODE_BOUND * f.size()

    def test_disjunction_constant_for_random_pairs(self):
        rng = random.Random(7)
        for _ in range(100):
            left = random_formula(rng.randint(1, 12), ["a", "b"], rng)
            right = random_formula(rng.randint(1, 12), ["a", "b"], rng)
            combined = rule_count(Formula.binary(FormulaKind.OR, left, right))
            assert combined - rule_count(left) - rule_count(right) == 93
