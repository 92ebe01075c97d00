"""Shared builders and generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from veracity import (
    And,
    App,
    Atom,
    Atomic,
    BOTTOM,
    Cases,
    Implies,
    Judgement,
    Lambda,
    Or,
    Pair,
    Split,
    TagLeft,
    TagRight,
    TrustRelation,
    Var,
    Weight,
    and_elim2,
    and_intro,
    apply_rule,
    assume,
    impl_intro,
    trust_step,
)

GOLDEN = Path(__file__).parent / "golden"

C1, C2, C3 = Atomic("C1"), Atomic("C2"), Atomic("C3")


def build_fig1():
    """The worked proof: three assumptions paired up, then abstracted."""
    a1 = apply_rule(assume(Var("x"), "P", C1))
    a2 = apply_rule(assume(Var("y"), "P", C2))
    n1 = apply_rule(and_intro(), [a1, a2])
    a3 = apply_rule(assume(Var("z"), "P", C3))
    n2 = apply_rule(and_intro(), [n1, a3])
    n3 = apply_rule(impl_intro("x", C1), [n2])
    n4 = apply_rule(impl_intro("y", C2), [n3])
    return apply_rule(impl_intro("z", C3), [n4])


def build_c2():
    """The same conjunction tree with its assumptions left open."""
    a1 = apply_rule(assume(Var("x"), "P", C1))
    a2 = apply_rule(assume(Var("y"), "P", C2))
    n1 = apply_rule(and_intro(), [a1, a2])
    a3 = apply_rule(assume(Var("z"), "P", C3))
    return apply_rule(and_intro(), [n1, a3])


def build_c3():
    """The process-status derivation: an atomic final witness abstracted
    over three step claims.  Each step claim is routed into context by
    pairing with the running tree and projecting back out."""
    L3, L56, L10, L12 = (
        Atomic("L3"),
        And(Atomic("L5"), Atomic("L6")),
        Atomic("L10"),
        Atomic("L12"),
    )
    tree = apply_rule(assume(Atom("l"), "Peter", L12))
    for var, claim in (("z", L10), ("y", L56), ("x", L3)):
        hyp = apply_rule(assume(Var(var), "Peter", claim))
        paired = apply_rule(and_intro(), [hyp, tree])
        tree = apply_rule(and_elim2(), [paired])
        tree = apply_rule(impl_intro(var, claim), [tree])
    return tree


def trust_weighted() -> TrustRelation:
    return TrustRelation.of("T", [("k", "l", Fraction(1, 2)), ("l", "m", Fraction(2, 5))])


def trust_total() -> TrustRelation:
    return TrustRelation.of("T", [("k", "l", 1), ("l", "m", 1)])


def build_trust_chain(rel: TrustRelation):
    """a^m in A transferred to l, then to k."""
    leaf = apply_rule(assume(Atom("a"), "m", Atomic("A")))
    mid = apply_rule(
        trust_step("T", "l", "m", rel.edge_weight("l", "m")), [leaf], trust=rel
    )
    return apply_rule(trust_step("T", "k", "l", rel.edge_weight("k", "l")), [mid], trust=rel)


# ---------------------------------------------------------------------------
# Random generators (seeded by the caller; deterministic across runs)
# ---------------------------------------------------------------------------

_CLAIM_ATOMS = ("C", "D", "E", "C1", "C2")


def gen_claim(rng: random.Random, depth: int = 3, atoms=_CLAIM_ATOMS):
    if depth <= 0 or rng.random() < 0.35:
        if rng.random() < 0.08:
            return BOTTOM
        return Atomic(rng.choice(atoms))
    kind = rng.choice((And, Or, Implies))
    return kind(gen_claim(rng, depth - 1, atoms), gen_claim(rng, depth - 1, atoms))


_FREE_NAMES = ("a", "b", "c", "e")


def gen_evidence(
    rng: random.Random,
    depth: int = 4,
    binders: tuple[str, ...] = (),
    counter: list[int] | None = None,
    noncanonical: bool = True,
):
    """Well-scoped evidence: bound names come from enclosing binders, free
    names from a disjoint atom pool, and every binder is globally fresh, so
    printing and re-parsing is exact and substitution never captures."""
    if counter is None:
        counter = [0]

    def fresh() -> str:
        counter[0] += 1
        return f"v{counter[0]}"

    leaf_choices = ["atom"] + (["var"] if binders else [])
    if depth <= 0 or rng.random() < 0.3:
        choice = rng.choice(leaf_choices)
        if choice == "var":
            return Var(rng.choice(binders))
        return Atom(rng.choice(_FREE_NAMES))

    forms = ["pair", "tag_left", "tag_right", "lambda"]
    if noncanonical:
        forms += ["app", "cases", "split"]
    form = rng.choice(forms)
    if form == "pair":
        return Pair(
            gen_evidence(rng, depth - 1, binders, counter, noncanonical),
            gen_evidence(rng, depth - 1, binders, counter, noncanonical),
        )
    if form == "tag_left":
        return TagLeft(gen_evidence(rng, depth - 1, binders, counter, noncanonical))
    if form == "tag_right":
        return TagRight(gen_evidence(rng, depth - 1, binders, counter, noncanonical))
    if form == "lambda":
        v = fresh()
        return Lambda(v, gen_evidence(rng, depth - 1, binders + (v,), counter, noncanonical))
    if form == "app":
        return App(
            gen_evidence(rng, depth - 1, binders, counter, noncanonical),
            gen_evidence(rng, depth - 1, binders, counter, noncanonical),
        )
    if form == "cases":
        lv, rv = fresh(), fresh()
        return Cases(
            gen_evidence(rng, depth - 1, binders, counter, noncanonical),
            lv,
            gen_evidence(rng, depth - 1, binders + (lv,), counter, noncanonical),
            rv,
            gen_evidence(rng, depth - 1, binders + (rv,), counter, noncanonical),
        )
    lv, rv = fresh(), fresh()
    return Split(
        gen_evidence(rng, depth - 1, binders, counter, noncanonical),
        lv,
        rv,
        gen_evidence(rng, depth - 1, binders + (lv, rv), counter, noncanonical),
    )


_WEIGHT_POOL = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2, 5),
    Fraction(3, 4),
    Fraction(1, 5),
    Fraction(0),
)


def gen_weight(rng: random.Random) -> Weight:
    return Weight(rng.choice(_WEIGHT_POOL))


def gen_judgement(rng: random.Random) -> Judgement:
    return Judgement(
        gen_evidence(rng, depth=3),
        rng.choice(("P", "Q", "k", "a1")),
        gen_claim(rng, depth=3),
        gen_weight(rng),
    )
