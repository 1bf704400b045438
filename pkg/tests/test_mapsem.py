import pytest

from rulerunner.common.exceptions import MapError
from rulerunner.formula import Formula, FormulaKind, compile_formula
from rulerunner.mapsem import (BOTTOM, TOP, Join, Judge, Meet, UntilBlockMapping, check_rewriting_chain,
                               is_rewriting_step, map_state)
from rulerunner.oracle import Trace
from rulerunner.rulegen import Qualifier, TruthValue
from rulerunner.rulegen import state_atom
from rulerunner.traceio import parse_trace


def judge(index, text):
    return Judge(index, compile_formula(text))


class TestJudgement:

    def test_render(self):
        j = Join(judge(0, "a"), Meet(judge(0, "b"), judge(1, "X c")))
        assert str(j) == "[u,0 ⊨ a]F ⊔ ([u,0 ⊨ b]F ⊓ [u,1 ⊨ X c]F)"
        assert str(TOP) == "⊤"
        assert str(BOTTOM) == "⊥"

    def test_simplify(self):
        a = judge(0, "a")
        assert Join(TOP, a).simplify() == TOP
        assert Join(BOTTOM, a).simplify() == a
        assert Meet(BOTTOM, a).simplify() == BOTTOM
        assert Meet(a, TOP).simplify() == a
        assert Meet(Join(BOTTOM, a), Join(a, BOTTOM)).simplify() == Meet(a, a)

    def test_value(self):
        trace = Trace.of({"a"}, {"b"})
        assert judge(0, "a").value(trace)
        assert not judge(1, "a").value(trace)
        assert Join(judge(1, "a"), judge(0, "X b")).value(trace)
        assert not Meet(judge(1, "a"), TOP).value(trace)

    def test_rewriting_step(self):
        trace = Trace.of({"a"}, {"b"})
        root = judge(0, "a | X b")
        assert is_rewriting_step(root, judge(1, "b"), trace)
        assert is_rewriting_step(root, TOP, trace)
        assert not is_rewriting_step(root, BOTTOM, trace)
        assert not is_rewriting_step(root, judge(0, "a & a"), trace)


class TestMapState:

    def test_verdicts_and_decided_values(self):
        f = compile_formula("a | b")
        assert map_state(f, {state_atom.SUCCESS}, 0) == TOP
        assert map_state(f, {state_atom.FAILURE}, 3) == BOTTOM
        assert map_state(f, {state_atom.truth(2, TruthValue.T)}, 0) == TOP

    def test_disjunction(self):
        f = compile_formula("a | b")
        atoms = {state_atom.act(0), state_atom.act(1), state_atom.act(2, Qualifier.B)}
        assert map_state(f, atoms, 0) == Join(judge(0, "a"), judge(0, "b"))
        atoms.add(state_atom.truth(2, TruthValue.U, Qualifier.L))
        assert map_state(f, atoms, 2) == judge(2, "a")

    def test_until_in_block_mode(self):
        f = compile_formula("a U b")
        again = Judge(0, Formula.unary(FormulaKind.NEXT, f))
        atoms = {state_atom.act(0), state_atom.act(1), state_atom.truth(2, TruthValue.U, Qualifier.B)}
        assert map_state(f, atoms, 0) == Meet(judge(0, "b"), again)
        assert map_state(f, atoms, 0, UntilBlockMapping.UNFOLDING) == Meet(judge(0, "a"), again)

    def test_eventually_and_always_are_not_mapped(self):
        for text in ("F a", "G a"):
            f = compile_formula(text)
            with pytest.raises(MapError):
                map_state(f, {state_atom.act(0), state_atom.act(1)}, 0)

    def test_unknown_subformula(self):
        f = compile_formula("a | b")
        with pytest.raises(MapError):
            map_state(f, {state_atom.act(2, Qualifier.B), state_atom.act(0)}, 0)


class TestRewritingChain:

    def test_rows_of_a_next(self):
        rows = check_rewriting_chain(compile_formula("a | X b"), parse_trace("b - b"))
        assert len(rows) == 11
        assert [r.cell_index for r in rows] == [1] * 5 + [2] * 6
        assert all(r.valid for r in rows)
        assert [str(r.judgement) for r in rows[:5]] == [
            "[u,0 ⊨ a]F ⊔ [u,0 ⊨ X b]F",
            "[u,0 ⊨ a]F ⊔ [u,0 ⊨ X b]F",
            "⊥ ⊔ [u,0 ⊨ X b]F",
            "⊥ ⊔ [u,0 ⊨ X b]F",
            "[u,0 ⊨ X b]F",
        ]
        assert str(rows[5].judgement) == "[u,1 ⊨ b]F"
        assert [str(r.judgement) for r in rows[7:]] == ["⊤"] * 4
        assert rows[-1].added == (state_atom.SUCCESS,)

    def test_single_atom(self):
        rows = check_rewriting_chain(compile_formula("a"), parse_trace("a"))
        assert len(rows) == 4
        assert rows[-1].judgement == TOP

    def test_observations_do_not_change_the_judgement(self):
        rows = check_rewriting_chain(compile_formula("(a U b) | c"), parse_trace("a - a,c - b"))
        for before, after in zip(rows, rows[1:]):
            if after.added and after.added[0].kind in (state_atom.END_MARKER.kind, state_atom.NOT_END.kind,
                                                      state_atom.obs("x").kind, state_atom.absent("x").kind):
                assert after.judgement == before.judgement

    @pytest.mark.parametrize("mapping", list(UntilBlockMapping))
    def test_until(self, mapping):
        rows = check_rewriting_chain(compile_formula("a U b"), parse_trace("a - a - b"), mapping)
        assert all(r.valid for r in rows)
        assert rows[-1].judgement == TOP

    def test_failing_eventually(self):
        rows = check_rewriting_chain(compile_formula("F a"), parse_trace("b - b"))
        assert all(r.valid for r in rows)
        assert rows[-1].judgement == BOTTOM

    def test_always_is_rejected(self):
        with pytest.raises(MapError):
            check_rewriting_chain(compile_formula("G a"), parse_trace("a"))

    @pytest.mark.parametrize("text, trace, final", [
        ("F X a", "b - a", TOP),
        ("F X a", "b - b", BOTTOM),
        ("X a U b", "a - a - a,b", TOP),
        ("X a U b", "a - a - b", BOTTOM),
        ("F ((a & X b) | (c & X d))", "a - c - d", TOP),
    ])
    def test_restarted_temporal_operands(self, text, trace, final):
        rows = check_rewriting_chain(compile_formula(text), parse_trace(trace))
        assert all(r.valid for r in rows)
        assert rows[-1].judgement == final
