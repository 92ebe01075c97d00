"""Deterministic renderers from checked proof trees to LaTeX derivations and
natural-language outlines.

The LaTeX renderer emits one scaled proof-tree environment per derivation,
using axiom/unary/binary/trinary inference commands with a right-hand rule
label per node.  Two claim styles exist because the published derivations use
two conventions: ``full`` parenthesizes every compound claim, ``flat``
renders conjunction chains without parentheses (the style of the generated
search trees).

Identifiers with trailing digits become subscripts (``C1`` prints as
``C_{1}``); an actor annotates its witness as a superscript and a non-unit
weight as a subscript.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .core import (
    And,
    App,
    Atom,
    Atomic,
    Bottom,
    Cases,
    Claim,
    Evidence,
    Implies,
    Judgement,
    Lambda,
    ONE,
    Or,
    Pair,
    Sequent,
    Split,
    TagLeft,
    TagRight,
    Var,
    format_weight,
)
from .errors import InvalidTreeError
from .kernel import ProofTree, RuleName, check
from .machine import parse_machine, render_machine  # re-exported for convenience

__all__ = [
    "render_latex",
    "render_nl",
    "render_machine",
    "parse_machine",
    "latex_claim",
    "latex_evidence",
    "latex_judgement",
    "latex_sequent",
]

_TRAILING_DIGITS = re.compile(r"^([A-Za-z_]+?)([0-9]+)$")


def latex_name(name: str) -> str:
    m = _TRAILING_DIGITS.match(name)
    if m:
        return f"{m.group(1)}_{{{m.group(2)}}}"
    return name


def latex_claim(c: Claim, style: str = "full") -> str:
    if style not in ("full", "flat"):
        raise ValueError("claim style must be 'full' or 'flat'")
    if isinstance(c, Atomic):
        return latex_name(c.name)
    if isinstance(c, Bottom):
        return "\\bot"
    if isinstance(c, And):
        body = f"{latex_claim(c.left, style)} \\wedge {latex_claim(c.right, style)}"
        return body if style == "flat" else f"({body})"
    if isinstance(c, Or):
        return f"({latex_claim(c.left, style)} \\vee {latex_claim(c.right, style)})"
    if isinstance(c, Implies):
        return f"({latex_claim(c.antecedent, style)} \\rightarrow {latex_claim(c.consequent, style)})"
    raise TypeError(f"not a claim: {c!r}")


def latex_evidence(e: Evidence) -> str:
    if isinstance(e, (Atom, Var)):
        return latex_name(e.name)
    if isinstance(e, Pair):
        return f"({latex_evidence(e.left)}, {latex_evidence(e.right)})"
    if isinstance(e, TagLeft):
        return f"i({latex_evidence(e.value)})"
    if isinstance(e, TagRight):
        return f"j({latex_evidence(e.value)})"
    if isinstance(e, Lambda):
        return f"\\lambda({latex_name(e.var)})({latex_evidence(e.body)})"
    if isinstance(e, App):
        return f"app({latex_evidence(e.fn)}, {latex_evidence(e.arg)})"
    if isinstance(e, Cases):
        return (
            f"cases({latex_evidence(e.scrutinee)}, "
            f"({latex_name(e.left_var)}){latex_evidence(e.left_body)}, "
            f"({latex_name(e.right_var)}){latex_evidence(e.right_body)})"
        )
    if isinstance(e, Split):
        return (
            f"split({latex_evidence(e.scrutinee)}, "
            f"({latex_name(e.left_var)}, {latex_name(e.right_var)}){latex_evidence(e.body)})"
        )
    raise TypeError(f"not evidence: {e!r}")


def latex_judgement(j: Judgement, style: str = "full") -> str:
    marks = f"^{{{latex_name(j.actor)}}}"
    if j.weight != ONE:
        marks = f"_{{{format_weight(j.weight)}}}" + marks
    return f"{latex_evidence(j.evidence)}{marks} \\in {latex_claim(j.claim, style)}"


def latex_sequent(s: Sequent, style: str = "full") -> str:
    head = latex_judgement(s.conclusion, style)
    if not len(s.assumptions):
        return head
    left = ", ".join(latex_judgement(j, style) for j in s.assumptions)
    return f"{left} \\vdash_{{}} {head}"


_RULE_LABELS = {
    RuleName.ASSUME: "assume",
    RuleName.BOT_ELIM: "\\bot^{-}",
    RuleName.AND_INTRO: "\\wedge^{+}",
    RuleName.AND_ELIM1: "\\wedge^{-}1",
    RuleName.AND_ELIM2: "\\wedge^{-}2",
    RuleName.AND_ELIM_SPLIT: "\\wedge^{-}",
    RuleName.OR_INTRO1: "\\vee^{+}1",
    RuleName.OR_INTRO2: "\\vee^{+}2",
    RuleName.OR_ELIM1: "\\vee^{-}1",
    RuleName.OR_ELIM2: "\\vee^{-}2",
    RuleName.OR_ELIM_CASES: "\\vee^{-}",
    RuleName.IMPL_INTRO: "\\rightarrow^+",
    RuleName.IMPL_ELIM: "\\rightarrow^-",
}

_INF_COMMANDS = {1: "\\UnaryInfC", 2: "\\BinaryInfC", 3: "\\TrinaryInfC"}


def rule_label(instance) -> str:
    """The paper-style LaTeX label for a rule instance."""
    if instance.rule == RuleName.TRUST:
        return f"trust\\ {instance.relation}"
    return _RULE_LABELS[instance.rule]


def _format_scale(scale) -> str:
    frac = Fraction(str(scale))
    if frac <= 0:
        raise ValueError("scale must be positive")
    if frac.denominator == 1:
        return str(frac.numerator)
    from .core import Weight

    return format_weight(Weight(frac)) if frac <= 1 else str(float(frac))


def render_latex(tree: ProofTree, scale=1, claim_style: str = "full", trust=None) -> str:
    """Render a checked tree as a scaled proof-tree environment, one
    derivation per line in the exact token layout of the published figures:
    a right label gets a leading space, and symbolic labels (everything but
    ``assume``) also get a trailing one."""
    if not check(tree, trust).ok:
        raise InvalidTreeError("refusing to render a tree that does not check")
    parts: list[str] = [f"\\begin{{scprooftree}}{{{_format_scale(scale)}}}"]

    def label(text: str):
        parts.append(f" \\RightLabel{{ $ {text} $}}")
        if text != "assume":
            parts.append(" ")

    def visit(node: ProofTree):
        if node.instance.rule == RuleName.ASSUME:
            claim = latex_claim(node.conclusion.conclusion.claim, claim_style)
            parts.append(f"\\AxiomC{{$ {claim} \\textit{{ is a veracity claim}} $}}")
            label("assume")
            parts.append(f"\\UnaryInfC{{$ {latex_sequent(node.conclusion, claim_style)} $}}")
            return
        for premise in node.premises:
            visit(premise)
        label(rule_label(node.instance))
        command = _INF_COMMANDS[len(node.premises)]
        parts.append(f"{command}{{$ {latex_sequent(node.conclusion, claim_style)} $}}")

    visit(tree)
    parts.append("\\end{scprooftree}")
    return "".join(parts) + "\n"


# ---------------------------------------------------------------------------
# Natural language
# ---------------------------------------------------------------------------

_NL_JUSTIFICATIONS = {
    RuleName.ASSUME: "by assumption.",
    RuleName.BOT_ELIM: "by the rule for the impossible claim.",
    RuleName.AND_INTRO: "by a logical rule for 'and'.",
    RuleName.AND_ELIM1: "by a logical rule for 'and'.",
    RuleName.AND_ELIM2: "by a logical rule for 'and'.",
    RuleName.AND_ELIM_SPLIT: "by a logical rule for 'and'.",
    RuleName.OR_INTRO1: "by a logical rule for 'or'.",
    RuleName.OR_INTRO2: "by a logical rule for 'or'.",
    RuleName.OR_ELIM1: "by a logical rule for 'or'.",
    RuleName.OR_ELIM2: "by a logical rule for 'or'.",
    RuleName.OR_ELIM_CASES: "by a logical rule for 'or'.",
    RuleName.IMPL_INTRO: "by a logical rule for implication.",
    RuleName.IMPL_ELIM: "by a logical rule for implication.",
}


def _nl_claim(c: Claim, claim_names: Mapping[str, str]) -> str:
    if isinstance(c, Atomic):
        return claim_names.get(c.name, c.name)
    if isinstance(c, Bottom):
        return "the impossible claim"
    if isinstance(c, And):
        return f"({_nl_claim(c.left, claim_names)} and {_nl_claim(c.right, claim_names)})"
    if isinstance(c, Or):
        return f"({_nl_claim(c.left, claim_names)} or {_nl_claim(c.right, claim_names)})"
    if isinstance(c, Implies):
        return f"({_nl_claim(c.antecedent, claim_names)} implies {_nl_claim(c.consequent, claim_names)})"
    raise TypeError(f"not a claim: {c!r}")


def _nl_judgement(j: Judgement, actor_names, claim_names) -> str:
    actor = actor_names.get(j.actor, j.actor)
    phrase = f"{_nl_claim(j.claim, claim_names)} is supported by ${latex_evidence(j.evidence)}$ which {actor} uses"
    if j.weight != ONE:
        phrase += f" at weight {format_weight(j.weight)}"
    return phrase


def _nl_sequent(s: Sequent, actor_names, claim_names) -> str:
    head = _nl_judgement(s.conclusion, actor_names, claim_names)
    if not len(s.assumptions):
        return head
    parts = [_nl_judgement(j, actor_names, claim_names) for j in s.assumptions]
    if len(parts) == 1:
        assuming = parts[0]
    else:
        assuming = ", ".join(parts[:-1]) + ", and " + parts[-1]
    return f"Assuming {assuming} then {head}"


def _nl_justification(node: ProofTree, actor_names) -> str:
    inst = node.instance
    if inst.rule == RuleName.TRUST:
        truster = actor_names.get(inst.truster, inst.truster)
        trusted = actor_names.get(inst.trusted, inst.trusted)
        return f"because {truster} trusts {trusted} (weight {format_weight(inst.weight)})."
    return _NL_JUSTIFICATIONS[inst.rule]


def render_nl(
    tree: ProofTree,
    actor_names: Mapping[str, str] | None = None,
    claim_names: Mapping[str, str] | None = None,
    trust=None,
) -> str:
    """Render a checked tree as a nested bullet outline.

    Each node contributes its sequent in prose, an indented block with its
    premises (or, for an assumption leaf, the claim-formation line), and a
    closing justification bullet.  ``actor_names``/``claim_names`` substitute
    display names for raw identifiers.
    """
    if not check(tree, trust).ok:
        raise InvalidTreeError("refusing to render a tree that does not check")
    actor_names = dict(actor_names or {})
    claim_names = dict(claim_names or {})
    lines: list[str] = []

    def emit(depth: int, text: str):
        lines.append("  " * depth + text)

    def visit(node: ProofTree, depth: int):
        emit(depth, f"\\item {_nl_sequent(node.conclusion, actor_names, claim_names)}, because")
        emit(depth + 1, "\\begin{itemize}")
        if node.instance.rule == RuleName.ASSUME:
            claim = _nl_claim(node.conclusion.conclusion.claim, claim_names)
            emit(depth + 1, f"\\item {claim} is a veracity claim.")
        else:
            for premise in node.premises:
                visit(premise, depth + 1)
        emit(depth + 1, "\\end{itemize}")
        emit(depth, f"\\item {_nl_justification(node, actor_names)}")

    emit(0, "\\begin{itemize}")
    visit(tree, 1)
    emit(0, "\\end{itemize}")
    return "\n".join(lines) + "\n"
