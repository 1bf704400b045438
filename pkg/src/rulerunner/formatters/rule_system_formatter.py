from rulerunner.formatters.formatter import Formatter
from rulerunner.rulegen import RuleSystem, sort_key


class RuleSystemFormatter(Formatter):
    """
    Renders a rule system as the line oriented dump printed by the
    compile command: one rule per line in the sections ``# EVALUATION``
    and ``# REACTIVATION``, followed by the atoms of ``# INITIAL``.

    Reactivation rules sharing a body are printed once with all their
    heads joined by commas. The operand systems of every obligation node
    follow, each under an ``# OBLIGATION`` line naming the node and the
    operand.
    """

    def compile(self, system: RuleSystem) -> int:
        describe = system.describe
        lines = ["# EVALUATION"]
        lines += [rule.format(describe) for rule in system.eval_rules]
        lines.append("# REACTIVATION")
        heads = {}
        for rule in system.react_rules:
            heads.setdefault(rule.body, []).append(rule.head)
        for body, group in heads.items():
            trigger = " & ".join(a.format(describe) for a in sorted(body, key=sort_key))
            lines.append("%s -> %s" % (trigger, ", ".join(h.format(describe) for h in group)))
        lines.append("# INITIAL")
        lines += [a.format(describe) for a in sorted(system.initial_state, key=sort_key)]
        for node, spec in system.obligations:
            for operand in spec.operands:
                root = operand.subformulas.root.index
                lines.append("# OBLIGATION %s OPERAND %s" % (describe(node), operand.describe(root)))
                nested = RuleSystemFormatter()
                nested.compile(operand)
                lines += nested.text.splitlines()
        self._text = "\n".join(lines) + "\n"
        return len(self._text)
