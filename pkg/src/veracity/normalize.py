"""Computation rules for evidence terms.

Non-canonical evidence (App, Cases, Split) reduces towards canonical form by
exactly four contractions:

    app(\\x. b, a)              ->  b[x := a]
    cases(i(a), (x) d, (y) e)   ->  d[x := a]
    cases(j(b), (x) d, (y) e)   ->  e[y := b]
    split((a, b), (x, y) d)     ->  d[x := a][y := b]

The strategy is leftmost-innermost and deterministic; ``normalize`` is fuel
bounded so arbitrary parsed terms cannot loop the process.
"""

from __future__ import annotations

from .core import (
    App,
    Atom,
    Cases,
    Evidence,
    Lambda,
    Pair,
    Split,
    TagLeft,
    TagRight,
    Var,
    substitute,
)
from .errors import FuelExhaustedError


def _contract(e: Evidence) -> Evidence | None:
    """The head contraction at this node, if the node is a redex."""
    if isinstance(e, App) and isinstance(e.fn, Lambda):
        return substitute(e.fn.body, e.fn.var, e.arg)
    if isinstance(e, Cases) and isinstance(e.scrutinee, TagLeft):
        return substitute(e.left_body, e.left_var, e.scrutinee.value)
    if isinstance(e, Cases) and isinstance(e.scrutinee, TagRight):
        return substitute(e.right_body, e.right_var, e.scrutinee.value)
    if isinstance(e, Split) and isinstance(e.scrutinee, Pair):
        step = substitute(e.body, e.left_var, e.scrutinee.left)
        return substitute(step, e.right_var, e.scrutinee.right)
    return None


def _children(e: Evidence) -> tuple[tuple[str, Evidence], ...]:
    if isinstance(e, Pair):
        return (("left", e.left), ("right", e.right))
    if isinstance(e, (TagLeft, TagRight)):
        return (("value", e.value),)
    if isinstance(e, Lambda):
        return (("body", e.body),)
    if isinstance(e, App):
        return (("fn", e.fn), ("arg", e.arg))
    if isinstance(e, Cases):
        return (("scrutinee", e.scrutinee), ("left_body", e.left_body), ("right_body", e.right_body))
    if isinstance(e, Split):
        return (("scrutinee", e.scrutinee), ("body", e.body))
    return ()


def _replace(e: Evidence, slot: str, child: Evidence) -> Evidence:
    if isinstance(e, Pair):
        return Pair(child, e.right) if slot == "left" else Pair(e.left, child)
    if isinstance(e, TagLeft):
        return TagLeft(child)
    if isinstance(e, TagRight):
        return TagRight(child)
    if isinstance(e, Lambda):
        return Lambda(e.var, child)
    if isinstance(e, App):
        return App(child, e.arg) if slot == "fn" else App(e.fn, child)
    if isinstance(e, Cases):
        if slot == "scrutinee":
            return Cases(child, e.left_var, e.left_body, e.right_var, e.right_body)
        if slot == "left_body":
            return Cases(e.scrutinee, e.left_var, child, e.right_var, e.right_body)
        return Cases(e.scrutinee, e.left_var, e.left_body, e.right_var, child)
    if isinstance(e, Split):
        if slot == "scrutinee":
            return Split(child, e.left_var, e.right_var, e.body)
        return Split(e.scrutinee, e.left_var, e.right_var, child)
    raise TypeError(f"no children: {e!r}")


def reduce_step(e: Evidence) -> Evidence | None:
    """One leftmost-innermost contraction, or None if ``e`` is normal."""
    if isinstance(e, (Atom, Var)):
        return None
    for slot, child in _children(e):
        reduced = reduce_step(child)
        if reduced is not None:
            return _replace(e, slot, reduced)
    return _contract(e)


def reduce_step_outermost(e: Evidence) -> Evidence | None:
    """One leftmost-outermost contraction; used as a cross-check strategy."""
    if isinstance(e, (Atom, Var)):
        return None
    head = _contract(e)
    if head is not None:
        return head
    for slot, child in _children(e):
        reduced = reduce_step_outermost(child)
        if reduced is not None:
            return _replace(e, slot, reduced)
    return None


def normalize(e: Evidence, fuel: int = 1000, step=reduce_step) -> Evidence:
    """Contract until no redex remains.  Raises FuelExhaustedError (carrying
    the last term reached) if ``fuel`` contractions do not suffice."""
    if fuel < 1:
        raise ValueError("fuel must be >= 1")
    current = e
    for _ in range(fuel):
        reduced = step(current)
        if reduced is None:
            return current
        current = reduced
    if step(current) is None:
        return current
    raise FuelExhaustedError(f"no normal form within {fuel} steps", term=current)


def evidence_equal(e1: Evidence, e2: Evidence, fuel: int = 1000) -> bool:
    """Equality of evidence up to computation: compare normal forms."""
    return normalize(e1, fuel) == normalize(e2, fuel)
