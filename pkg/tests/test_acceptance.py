"""Acceptance suite: one test per acceptance criterion, each printing a
PASS line (run with ``pytest tests/test_acceptance.py -v -s``).  Tolerances
are pinned here: weight comparisons are exact rational equality, golden
comparisons are whitespace-normalized text (the LaTeX ones are in fact
byte-exact), and set equalities admit no tolerance at all.
"""

import math
import random
import re
import time
from fractions import Fraction

from veracity import (
    And,
    Atom,
    Atomic,
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
    Assumable,
    RuleName,
    StepConfig,
    apply_rule,
    apply_trust,
    assume,
    assumptions_used,
    check,
    compare_chain_star,
    parse_claim,
    parse_evidence,
    parse_judgement,
    parse_machine,
    print_claim,
    print_evidence,
    print_judgement,
    render_latex,
    render_machine,
    render_nl,
    reduce_step,
    search,
    trust_step,
)
from veracity.trust import ChainStarOutcome

from conftest import GOLDEN, build_c3, build_fig1, gen_claim, gen_evidence, gen_judgement
from test_normalize import _oracle_subst, _normal_parts
from test_search import INTRO_RULES, all_claims_up_to, gen_small_claim, oracle_enumerate

WS = lambda s: re.sub(r"\s+", " ", s).strip()


def done(name: str):
    print(f"ACCEPTANCE PASS: {name}")


def test_golden_proof_fig1():
    start = time.perf_counter()
    fig1 = build_fig1()
    witness = fig1.conclusion.conclusion.evidence
    assert witness == Lambda("z", Lambda("y", Lambda("x", Pair(Pair(Var("x"), Var("y")), Var("z")))))
    assert fig1.conclusion.conclusion.claim == parse_claim("C3 -> (C2 -> (C1 -> ((C1 /\\ C2) /\\ C3)))")

    latex = render_latex(fig1, scale="0.8")
    assert WS(latex) == WS((GOLDEN / "fig1.tex").read_text())

    nl = render_nl(
        fig1,
        actor_names={"P": "Penelope"},
        claim_names={"C1": "claim 1", "C2": "claim 2", "C3": "claim 3"},
    )
    golden_nl = (GOLDEN / "fig1_nl.txt").read_text()
    assert WS(nl) == WS(golden_nl)
    assert nl.count("\\item") == golden_nl.count("\\item")

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    done("golden proof: construction, LaTeX and NL renderings match the figures")


def test_trust_arithmetic_exact():
    rel = TrustRelation.of("T", [("k", "l", Fraction(1, 2)), ("l", "m", Fraction(2, 5))])
    j = Judgement(Atom("a"), "m", Atomic("A"))
    stepped = apply_trust(apply_trust(j, rel, "l"), rel, "k")
    assert stepped.weight == Weight(Fraction(1, 5))  # exact, zero tolerance
    assert stepped.weight.value == Fraction(1, 5)
    done("trust arithmetic: 0.5 then 0.4 composes to exactly 1/5")


def test_chain_vs_star_property():
    rng = random.Random(331)
    for _ in range(1000):
        chain = [Fraction(rng.randint(0, 12), 12) for _ in range(rng.randint(1, 5))]
        star = Fraction(rng.randint(0, 12), 12)
        product = math.prod(chain, start=Fraction(1))  # independent brute product
        got = compare_chain_star(chain, star)
        assert (got == ChainStarOutcome.STAR_BETTER) == (star > product)
        assert (got == ChainStarOutcome.CHAIN_BETTER) == (star < product)
        assert (got == ChainStarOutcome.EQUAL) == (star == product)
    done("chain vs star: outcome matches the sign of c - product on 1000 draws")


def test_proof_multiplicity_appendix_d():
    start = time.perf_counter()
    C = Atomic("C")
    cfg = StepConfig(
        assumables=(Assumable("e", "a1", C), Assumable("e", "a1", And(C, C))),
        rules=frozenset({RuleName.ASSUME, RuleName.AND_INTRO}),
        depth_limit=3,
    )
    goal = parse_judgement("e ^ a1 in (C /\\ C) /\\ (C /\\ C)")
    proofs = search(cfg, goal)
    assert len(proofs) == 4
    assert all(check(t).ok for t in proofs)

    e = Var("e")
    assert {t.conclusion.conclusion.evidence for t in proofs} == {
        Pair(e, e),
        Pair(Pair(e, e), e),
        Pair(e, Pair(e, e)),
        Pair(Pair(e, e), Pair(e, e)),
    }
    for i, (tree, scale) in enumerate(zip(proofs, ["1", "0.8", "0.8", "0.63"]), start=1):
        got = render_latex(tree, scale=scale, claim_style="flat")
        assert WS(got) == WS((GOLDEN / f"appd{i}.tex").read_text()), f"tree {i}"

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    done("proof multiplicity: exactly the four published proofs, renderings match")


def test_search_oracle_equivalence():
    # exhaustive over every goal of <= 2 connectives for three assumable sets
    C, D = Atomic("C"), Atomic("D")
    assumable_sets = [
        (Assumable("e", "a1", C),),
        (Assumable("e", "a1", C), Assumable("f", "a1", D)),
        (Assumable("e", "a1", C), Assumable("f", "a1", And(C, D)), Assumable("x", "a1", D)),
    ]
    exhaustive = 0
    for goal_claim in all_claims_up_to(2):
        for assumables in assumable_sets:
            cfg = StepConfig(assumables=assumables, rules=INTRO_RULES, depth_limit=4, max_proofs=10_000)
            got = search(cfg, Judgement(Var("_"), "a1", goal_claim))
            want = oracle_enumerate(cfg, "a1", goal_claim, 4)
            assert set(got) == set(want)  # set equality, zero tolerance
            exhaustive += 1

    # plus a seeded random sample up to the full 4-connective, depth-4 bound
    rng = random.Random(8191)
    pool = ("e", "f", "x")
    trials = 0
    for _ in range(150):
        goal_claim = gen_small_claim(rng, rng.randint(0, 4))
        assumables = tuple(
            dict.fromkeys(
                Assumable(name, "a1", gen_small_claim(rng, rng.randint(0, 2)))
                for name in pool[: rng.randint(1, 3)]
            )
        )
        depth = rng.randint(1, 4)
        cfg = StepConfig(assumables=assumables, rules=INTRO_RULES, depth_limit=depth, max_proofs=10_000)
        got = search(cfg, Judgement(Var("_"), "a1", goal_claim))
        want = oracle_enumerate(cfg, "a1", goal_claim, depth)
        assert set(got) == set(want)  # set equality, zero tolerance
        assert len(got) == len(set(got))
        trials += 1
    assert trials == 150
    done(
        f"search equals brute-force enumeration: {exhaustive} exhaustive "
        f"small configurations plus {trials} random ones"
    )


def test_appendix_c3_derivation():
    tree = build_c3()
    assert check(tree).ok
    root = tree.conclusion.conclusion
    assert root.evidence == Lambda("x", Lambda("y", Lambda("z", Atom("l"))))
    assert root.claim == parse_claim("L3 -> ((L5 /\\ L6) -> (L10 -> L12))")
    uses = assumptions_used(tree)
    discharged = [u.judgement for u in uses if u.discharged]
    assert {(j.evidence, print_claim(j.claim)) for j in discharged} == {
        (Var("x"), "L3"),
        (Var("y"), "L5 /\\ L6"),
        (Var("z"), "L10"),
    }
    done("process-status derivation checks with its three discharged assumptions")


def test_normalization_suite():
    rng = random.Random(4099)

    # each computation rule, 100 instances, against the independent oracle
    for _ in range(100):
        body, arg = _normal_parts(rng, 2)
        assert reduce_step(
            __import__("veracity").App(Lambda("w", body), arg)
        ) == _oracle_subst(body, {"w": arg})
    for _ in range(100):
        value, lbody, rbody = _normal_parts(rng, 3)
        assert reduce_step(Cases(TagLeft(value), "w", lbody, "u", rbody)) == _oracle_subst(
            lbody, {"w": value}
        )
    for _ in range(100):
        value, lbody, rbody = _normal_parts(rng, 3)
        assert reduce_step(Cases(TagRight(value), "w", lbody, "u", rbody)) == _oracle_subst(
            rbody, {"u": value}
        )
    for _ in range(100):
        left, right, body = _normal_parts(rng, 3)
        assert reduce_step(Split(Pair(left, right), "w", "u", body)) == _oracle_subst(
            body, {"w": left, "u": right}
        )

    # canonical terms have no redex
    for _ in range(300):
        canonical = gen_evidence(rng, depth=4, noncanonical=False)
        assert reduce_step(canonical) is None

    # strategies agree
    from test_normalize import _bounded_normalize
    from veracity.normalize import reduce_step_outermost

    agreed = 0
    while agreed < 1000:
        term = gen_evidence(rng, depth=4)
        inner = _bounded_normalize(term, reduce_step)
        outer = _bounded_normalize(term, reduce_step_outermost)
        if inner is None or outer is None:
            continue
        assert inner == outer
        agreed += 1
    done("normalization: 4x100 rule instances, canonical stability, 1000 strategy agreements")


def test_negative_suite():
    import pytest

    from veracity import (
        ActorMismatchError,
        ArityMismatchError,
        CaptureError,
        EvidenceShapeError,
        FreshnessError,
        NotAnAssumptionError,
        UnknownTrustEdgeError,
        WeightOutOfRangeError,
        and_intro,
        impl_elim,
        impl_intro,
        or_elim1,
        or_intro2,
    )
    from veracity.core import Context, Sequent
    from veracity.kernel import derive_conclusion

    A, B = Atomic("A"), Atomic("B")
    seq = lambda j, *ctx: Sequent(Context.of(*ctx), j)
    cases = []

    def rejected(name, code, thunk):
        try:
            thunk()
        except Exception as exc:
            assert getattr(exc, "code", None) == code, f"{name}: got {exc!r}"
            cases.append(name)
            return
        raise AssertionError(f"{name}: accepted a malformed proof")

    p_a = apply_rule(assume(Atom("a"), "P", A))
    q_b = apply_rule(assume(Atom("b"), "Q", B))
    rejected("actor mismatch", "ACTOR_MISMATCH", lambda: apply_rule(and_intro(), [p_a, q_b]))

    tagged_right = apply_rule(or_intro2(A), [apply_rule(assume(Atom("b"), "P", B))])
    rejected(
        "wrong tag for left or-elimination",
        "EVIDENCE_SHAPE_MISMATCH",
        lambda: apply_rule(or_elim1(), [tagged_right]),
    )

    # broken context union: a stored node whose context lost an assumption
    from dataclasses import replace

    pair = apply_rule(
        and_intro(), [apply_rule(assume(Var("x"), "P", A)), apply_rule(assume(Var("y"), "P", B))]
    )
    broken = replace(
        pair, conclusion=Sequent(Context.of(pair.conclusion.assumptions.entries[0]), pair.conclusion.conclusion)
    )
    report = check(broken)
    assert not report.ok and report.violations[0].code == "CONTEXT_ERROR"
    cases.append("broken context union")

    rejected(
        "discharge of a non-assumption",
        "NOT_AN_ASSUMPTION",
        lambda: apply_rule(impl_intro("z", B), [apply_rule(assume(Var("x"), "P", A))]),
    )

    shadowed = seq(Judgement(Lambda("x", Lambda("x", Var("x"))), "P", Implies(A, Implies(A, A))))
    rejected(
        "rebinding inside an inner lambda",
        "FRESHNESS_VIOLATION",
        lambda: derive_conclusion(impl_elim("beta"), (shadowed, seq(Judgement(Atom("a"), "P", A)))),
    )

    rejected(
        "weight above one",
        "WEIGHT_OUT_OF_RANGE",
        lambda: parse_judgement("a ^ k @ 1.5 in A"),
    )

    rejected(
        "unknown trust edge",
        "UNKNOWN_TRUST_EDGE",
        lambda: apply_rule(trust_step("T", "k", "P", Fraction(1, 2)), [p_a]),
    )

    rejected("arity error", "ARITY_MISMATCH", lambda: apply_rule(and_intro(), [p_a]))

    capture_fn = seq(Judgement(Lambda("x", Lambda("y", Var("x"))), "P", Implies(A, Implies(B, A))))
    arg_j = Judgement(Var("y"), "P", A)
    rejected(
        "variable capture",
        "CAPTURE_ERROR",
        lambda: derive_conclusion(impl_elim("beta"), (capture_fn, seq(arg_j, arg_j))),
    )

    rejected(
        "compound evidence in an assumption",
        "EVIDENCE_SHAPE_MISMATCH",
        lambda: apply_rule(assume(Pair(Atom("a"), Atom("b")), "P", A)),
    )

    assert len(cases) >= 8
    done(f"negative suite: {len(cases)} malformed proofs rejected with their codes")


def test_round_trip_suite():
    rng = random.Random(65537)
    for _ in range(500):
        claim = gen_claim(rng, depth=4)
        assert parse_claim(print_claim(claim)) == claim
    for _ in range(500):
        term = gen_evidence(rng, depth=4)
        assert parse_evidence(print_evidence(term)) == term
    for _ in range(200):
        j = gen_judgement(rng)
        assert parse_judgement(print_judgement(j)) == j

    fig1 = build_fig1()
    text = render_machine(fig1)
    assert parse_machine(text) == fig1
    assert render_machine(parse_machine(text)) == text  # byte-exact

    from test_render import build_appd_trees

    for tree in build_appd_trees():
        text = render_machine(tree)
        assert parse_machine(text) == tree
        assert render_machine(parse_machine(text)) == text
    done("round trips: 500 claims, 500 evidence terms, 200 judgements, machine format byte-exact")


def test_performance_targets():
    # a 1000-node proof: one assumption passed along a 999-step trust chain
    n = 1000
    actors = [f"a{i}" for i in range(n)]
    rel = TrustRelation.of("T", [(actors[i], actors[i + 1], 1) for i in range(n - 1)])
    tree = apply_rule(assume(Atom("w"), actors[-1], Atomic("A")))
    for i in range(n - 2, -1, -1):
        tree = apply_rule(trust_step("T", actors[i], actors[i + 1], 1), [tree], trust=rel)

    def count(t):
        total, stack = 0, [t]
        while stack:
            node = stack.pop()
            total += 1
            stack.extend(node.premises)
        return total

    assert count(tree) == 1000
    start = time.perf_counter()
    report = check(tree, rel)
    check_elapsed = time.perf_counter() - start
    assert report.ok
    assert check_elapsed < 0.1, f"check took {check_elapsed * 1000:.1f} ms"

    C = Atomic("C")
    cfg = StepConfig(
        assumables=(Assumable("e", "a1", C), Assumable("e", "a1", And(C, C))),
        rules=frozenset({RuleName.ASSUME, RuleName.AND_INTRO}),
        depth_limit=5,
    )
    start = time.perf_counter()
    proofs = search(cfg, parse_judgement("e ^ a1 in (C /\\ C) /\\ (C /\\ C)"))
    search_elapsed = time.perf_counter() - start
    assert len(proofs) == 4
    assert search_elapsed < 5.0, f"search took {search_elapsed:.3f} s"
    done(
        f"performance: 1000-node check in {check_elapsed * 1000:.1f} ms, "
        f"depth-5 search in {search_elapsed * 1000:.1f} ms"
    )
