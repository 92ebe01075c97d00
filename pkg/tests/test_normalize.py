import random

import pytest

from veracity import (
    App,
    Atom,
    Cases,
    Lambda,
    Pair,
    Split,
    TagLeft,
    TagRight,
    Var,
    FuelExhaustedError,
    evidence_equal,
    free_vars,
    normalize,
    reduce_step,
)
from veracity.normalize import reduce_step_outermost
from conftest import gen_evidence


def test_beta_contraction():
    assert reduce_step(App(Lambda("x", Var("x")), Atom("e"))) == Atom("e")


def test_cases_left_contraction():
    term = Cases(TagLeft(Atom("a")), "x", Var("x"), "y", Var("y"))
    assert reduce_step(term) == Atom("a")


def test_cases_right_contraction():
    term = Cases(TagRight(Atom("b")), "x", Var("x"), "y", Atom("c"))
    assert reduce_step(term) == Atom("c")


def test_split_contraction():
    term = Split(Pair(Atom("a"), Atom("b")), "x", "y", Pair(Var("y"), Var("x")))
    assert reduce_step(term) == Pair(Atom("b"), Atom("a"))


def test_normalize_two_steps():
    term = App(Lambda("x", App(Lambda("y", Var("y")), Var("x"))), Atom("a"))
    first = reduce_step(term)
    assert first is not None and reduce_step(first) == Atom("a")
    assert normalize(term) == Atom("a")


def test_normalize_canonical_is_identity():
    rng = random.Random(5)
    for _ in range(200):
        e = gen_evidence(rng, depth=4, noncanonical=False)
        assert reduce_step(e) is None
        assert normalize(e) == e


def test_normalize_deterministic():
    rng = random.Random(7)
    for _ in range(100):
        e = gen_evidence(rng, depth=4)
        a = _bounded_normalize(e, reduce_step)
        b = _bounded_normalize(e, reduce_step)
        assert a == b


def test_reduce_never_grows_free_vars():
    rng = random.Random(13)
    checked = 0
    while checked < 300:
        e = gen_evidence(rng, depth=4)
        r = reduce_step(e)
        if r is None:
            continue
        assert free_vars(r) <= free_vars(e)
        checked += 1


def test_fuel_exhaustion_on_looping_term():
    omega = Lambda("x", App(Var("x"), Var("x")))
    loop = App(omega, omega)
    with pytest.raises(FuelExhaustedError) as err:
        normalize(loop, fuel=50)
    assert err.value.term is not None


def test_evidence_equal():
    assert evidence_equal(App(Lambda("x", Var("x")), Atom("a")), Atom("a"))
    assert not evidence_equal(Atom("a"), Atom("b"))
    pair = Pair(Atom("a"), Atom("b"))
    assert evidence_equal(Split(pair, "x", "y", Pair(Var("x"), Var("y"))), pair)


# --- the four computation rules against an independent oracle -----------------


def _oracle_subst(term, env):
    """Naive environment-based substitution, written independently of the
    production code: binders shadow by deleting from the environment."""
    match term:
        case Var(name=n):
            return env.get(n, term)
        case Atom():
            return term
        case Pair(left=l, right=r):
            return Pair(_oracle_subst(l, env), _oracle_subst(r, env))
        case TagLeft(value=v):
            return TagLeft(_oracle_subst(v, env))
        case TagRight(value=v):
            return TagRight(_oracle_subst(v, env))
        case Lambda(var=v, body=b):
            return Lambda(v, _oracle_subst(b, {k: w for k, w in env.items() if k != v}))
        case App(fn=f, arg=a):
            return App(_oracle_subst(f, env), _oracle_subst(a, env))
        case Cases(scrutinee=s, left_var=lv, left_body=lb, right_var=rv, right_body=rb):
            return Cases(
                _oracle_subst(s, env),
                lv,
                _oracle_subst(lb, {k: w for k, w in env.items() if k != lv}),
                rv,
                _oracle_subst(rb, {k: w for k, w in env.items() if k != rv}),
            )
        case Split(scrutinee=s, left_var=lv, right_var=rv, body=b):
            return Split(
                _oracle_subst(s, env),
                lv,
                rv,
                _oracle_subst(b, {k: w for k, w in env.items() if k not in (lv, rv)}),
            )
    raise AssertionError(term)


def _normal_parts(rng, n):
    counter = [0]
    return [gen_evidence(rng, depth=2, counter=counter, noncanonical=False) for _ in range(n)]


def test_beta_rule_against_oracle():
    rng = random.Random(101)
    for _ in range(100):
        body, arg = _normal_parts(rng, 2)
        redex = App(Lambda("w", body), arg)
        assert reduce_step(redex) == _oracle_subst(body, {"w": arg})


def test_cases_left_rule_against_oracle():
    rng = random.Random(103)
    for _ in range(100):
        value, lbody, rbody = _normal_parts(rng, 3)
        redex = Cases(TagLeft(value), "w", lbody, "u", rbody)
        assert reduce_step(redex) == _oracle_subst(lbody, {"w": value})


def test_cases_right_rule_against_oracle():
    rng = random.Random(107)
    for _ in range(100):
        value, lbody, rbody = _normal_parts(rng, 3)
        redex = Cases(TagRight(value), "w", lbody, "u", rbody)
        assert reduce_step(redex) == _oracle_subst(rbody, {"u": value})


def test_split_rule_against_oracle():
    rng = random.Random(109)
    for _ in range(100):
        left, right, body = _normal_parts(rng, 3)
        redex = Split(Pair(left, right), "w", "u", body)
        assert reduce_step(redex) == _oracle_subst(body, {"w": left, "u": right})


def _size(e) -> int:
    match e:
        case Pair(left=l, right=r) | App(fn=l, arg=r):
            return 1 + _size(l) + _size(r)
        case TagLeft(value=v) | TagRight(value=v) | Lambda(body=v):
            return 1 + _size(v)
        case Cases(scrutinee=s, left_body=l, right_body=r):
            return 1 + _size(s) + _size(l) + _size(r)
        case Split(scrutinee=s, body=b):
            return 1 + _size(s) + _size(b)
    return 1


def _bounded_normalize(e, step, fuel=200, max_size=3000):
    """Skip-or-finish normalization: None when fuel runs out or the term
    balloons (duplicating redexes can grow terms exponentially)."""
    for _ in range(fuel):
        if _size(e) > max_size:
            return None
        r = step(e)
        if r is None:
            return e
        e = r
    return None


def test_innermost_and_outermost_agree():
    rng = random.Random(41)
    checked = 0
    while checked < 1000:
        e = gen_evidence(rng, depth=4)
        inner = _bounded_normalize(e, reduce_step)
        outer = _bounded_normalize(e, reduce_step_outermost)
        if inner is None or outer is None:
            continue
        assert inner == outer
        checked += 1
