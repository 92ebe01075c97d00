"""Value types shared by every module: claims, evidence, judgements,
contexts, sequents, trust relations, and exact trust weights.

All types here are immutable (frozen dataclasses over tuples), hashable, and
compared structurally, so they can be freely shared, placed in sets, and used
as dictionary keys.  Negation has no constructor of its own: ``not A`` is
``Implies(A, BOTTOM)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    CaptureError,
    NotAnAssumptionError,
    WeightOutOfRangeError,
)

# Actors are bare identifier strings; equality is case-sensitive.
ActorId = str


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

WeightLike = Union["Weight", Fraction, int, str]


@dataclass(frozen=True, order=True)
class Weight:
    """A degree of trust: an exact rational in [0, 1].

    Arithmetic is exact; ``Weight.parse("0.5") * Weight.parse("0.4")``
    compares equal to ``Weight.parse("0.2")`` with no rounding.
    """

    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if not (0 <= self.value <= 1):
            raise WeightOutOfRangeError(f"weight {self.value} outside [0, 1]")

    @staticmethod
    def parse(text: str) -> "Weight":
        """Accepts a decimal ("0.5") or a fraction ("1/3")."""
        try:
            return Weight(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise WeightOutOfRangeError(f"bad weight {text!r}: {exc}") from exc

    def __mul__(self, other: "Weight") -> "Weight":
        return Weight(self.value * other.value)

    def __str__(self) -> str:
        return format_weight(self)


ONE = Weight(Fraction(1))
ZERO = Weight(Fraction(0))


def as_weight(w: WeightLike) -> Weight:
    if isinstance(w, Weight):
        return w
    if isinstance(w, str):
        return Weight.parse(w)
    return Weight(Fraction(w))


def weight_mul(a: WeightLike, b: WeightLike) -> Weight:
    """Exact product of two weights; closed on [0, 1]."""
    return as_weight(a) * as_weight(b)


def format_weight(w: Weight) -> str:
    """Shortest faithful rendering: decimal when the value has a finite
    decimal expansion, ``p/q`` otherwise."""
    f = w.value
    if f.denominator == 1:
        return str(f.numerator)
    den = f.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{f.numerator}/{f.denominator}"
    k = max(twos, fives)
    digits = str(f.numerator * 10**k // f.denominator).rjust(k + 1, "0")
    return f"{digits[:-k]}.{digits[-k:]}"


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------


class Claim:
    """Base class of the claim algebra."""

    __slots__ = ()


@dataclass(frozen=True)
class Atomic(Claim):
    name: str


@dataclass(frozen=True)
class Bottom(Claim):
    """The claim with no witnesses."""


@dataclass(frozen=True)
class And(Claim):
    left: Claim
    right: Claim


@dataclass(frozen=True)
class Or(Claim):
    left: Claim
    right: Claim


@dataclass(frozen=True)
class Implies(Claim):
    antecedent: Claim
    consequent: Claim


BOTTOM = Bottom()


def negation(claim: Claim) -> Implies:
    return Implies(claim, BOTTOM)


# ---------------------------------------------------------------------------
# Evidence
# ---------------------------------------------------------------------------


class Evidence:
    """Base class of witness terms.

    Atom, Var, Pair, TagLeft, TagRight, and Lambda are the canonical
    constructors; App, Cases, and Split are non-canonical and are removed by
    the computation rules in :mod:`veracity.normalize`.
    """

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Evidence):
    """A named piece of ground evidence.

    The optional payload carries provenance (who/where/when/how) as opaque
    key-value pairs; the logic never inspects it.
    """

    name: str
    payload: tuple[tuple[str, str], ...] | None = None

    @staticmethod
    def with_payload(name: str, payload: Mapping[str, str]) -> "Atom":
        return Atom(name, tuple(sorted(payload.items())))


@dataclass(frozen=True)
class Var(Evidence):
    name: str


@dataclass(frozen=True)
class Pair(Evidence):
    left: Evidence
    right: Evidence


@dataclass(frozen=True)
class TagLeft(Evidence):
    value: Evidence


@dataclass(frozen=True)
class TagRight(Evidence):
    value: Evidence


@dataclass(frozen=True)
class Lambda(Evidence):
    var: str
    body: Evidence


@dataclass(frozen=True)
class App(Evidence):
    fn: Evidence
    arg: Evidence


@dataclass(frozen=True)
class Cases(Evidence):
    scrutinee: Evidence
    left_var: str
    left_body: Evidence
    right_var: str
    right_body: Evidence


@dataclass(frozen=True)
class Split(Evidence):
    scrutinee: Evidence
    left_var: str
    right_var: str
    body: Evidence


CANONICAL_HEADS = (Atom, Var, Pair, TagLeft, TagRight, Lambda)


def free_vars(e: Evidence) -> frozenset[str]:
    """Variables not bound by any enclosing Lambda/Cases/Split binder."""
    if isinstance(e, Atom):
        return frozenset()
    if isinstance(e, Var):
        return frozenset((e.name,))
    if isinstance(e, Pair):
        return free_vars(e.left) | free_vars(e.right)
    if isinstance(e, (TagLeft, TagRight)):
        return free_vars(e.value)
    if isinstance(e, Lambda):
        return free_vars(e.body) - {e.var}
    if isinstance(e, App):
        return free_vars(e.fn) | free_vars(e.arg)
    if isinstance(e, Cases):
        return (
            free_vars(e.scrutinee)
            | (free_vars(e.left_body) - {e.left_var})
            | (free_vars(e.right_body) - {e.right_var})
        )
    if isinstance(e, Split):
        return free_vars(e.scrutinee) | (free_vars(e.body) - {e.left_var, e.right_var})
    raise TypeError(f"not evidence: {e!r}")


def substitute(body: Evidence, var: str, value: Evidence) -> Evidence:
    """Replace every free occurrence of ``var`` in ``body`` with ``value``.

    There is no alpha-renaming: if the replacement would capture a free
    variable of ``value`` under some binder, a CaptureError is raised.
    """
    if isinstance(body, (Atom,)):
        return body
    if isinstance(body, Var):
        return value if body.name == var else body
    if isinstance(body, Pair):
        return Pair(substitute(body.left, var, value), substitute(body.right, var, value))
    if isinstance(body, TagLeft):
        return TagLeft(substitute(body.value, var, value))
    if isinstance(body, TagRight):
        return TagRight(substitute(body.value, var, value))
    if isinstance(body, App):
        return App(substitute(body.fn, var, value), substitute(body.arg, var, value))
    if isinstance(body, Lambda):
        if body.var == var:
            return body
        _check_capture(body.body, (body.var,), var, value)
        return Lambda(body.var, substitute(body.body, var, value))
    if isinstance(body, Cases):
        scrut = substitute(body.scrutinee, var, value)
        left = body.left_body
        if body.left_var != var:
            _check_capture(body.left_body, (body.left_var,), var, value)
            left = substitute(body.left_body, var, value)
        right = body.right_body
        if body.right_var != var:
            _check_capture(body.right_body, (body.right_var,), var, value)
            right = substitute(body.right_body, var, value)
        return Cases(scrut, body.left_var, left, body.right_var, right)
    if isinstance(body, Split):
        scrut = substitute(body.scrutinee, var, value)
        inner = body.body
        if var not in (body.left_var, body.right_var):
            _check_capture(body.body, (body.left_var, body.right_var), var, value)
            inner = substitute(body.body, var, value)
        return Split(scrut, body.left_var, body.right_var, inner)
    raise TypeError(f"not evidence: {body!r}")


def _check_capture(scope: Evidence, binders: tuple[str, ...], var: str, value: Evidence):
    if var not in free_vars(scope):
        return
    captured = set(binders) & free_vars(value)
    if captured:
        names = ", ".join(sorted(captured))
        raise CaptureError(f"substituting for {var} would capture {names}")


# ---------------------------------------------------------------------------
# Judgements, contexts, sequents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Judgement:
    """``evidence ^ actor @ weight in claim``; weight defaults to 1."""

    evidence: Evidence
    actor: ActorId
    claim: Claim
    weight: Weight = ONE


@dataclass(frozen=True)
class Context:
    """A duplicate-free, order-preserving list of assumption judgements."""

    entries: tuple[Judgement, ...] = ()

    def __post_init__(self):
        seen = dict.fromkeys(self.entries)
        if len(seen) != len(self.entries):
            object.__setattr__(self, "entries", tuple(seen))

    @staticmethod
    def of(*entries: Judgement) -> "Context":
        return Context(tuple(entries))

    def __iter__(self) -> Iterator[Judgement]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, j: Judgement) -> bool:
        return j in self.entries


EMPTY_CONTEXT = Context()


def ctx_union(p: Context, q: Context) -> Context:
    """Append with duplicates removed, keeping first-occurrence order."""
    return Context(tuple(dict.fromkeys(p.entries + q.entries)))


def ctx_discharge(ctx: Context, j: Judgement) -> Context:
    """Remove the single occurrence of ``j``; error if it is not present."""
    if j not in ctx.entries:
        raise NotAnAssumptionError("judgement is not an assumption of the context")
    return Context(tuple(e for e in ctx.entries if e != j))


@dataclass(frozen=True)
class Sequent:
    assumptions: Context
    conclusion: Judgement


# ---------------------------------------------------------------------------
# Trust relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrustEdge:
    truster: ActorId
    trusted: ActorId
    weight: Weight = ONE


@dataclass(frozen=True)
class TrustRelation:
    """A named, weighted, reflexive, not-necessarily-symmetric relation on
    actors.  Self-edges of weight 1 are implicit; listing an explicit
    self-edge overrides the implicit one."""

    name: str
    edges: tuple[TrustEdge, ...] = ()

    def __post_init__(self):
        table = {(e.truster, e.trusted): e.weight for e in self.edges}
        if len(table) != len(self.edges):
            raise ValueError(f"duplicate edge in trust relation {self.name!r}")
        object.__setattr__(self, "_table", table)

    @staticmethod
    def of(name: str, edges: Iterable[tuple[ActorId, ActorId, WeightLike]]) -> "TrustRelation":
        return TrustRelation(name, tuple(TrustEdge(a, b, as_weight(w)) for a, b, w in edges))

    def edge_weight(self, truster: ActorId, trusted: ActorId) -> Weight | None:
        w = self._table.get((truster, trusted))
        if w is not None:
            return w
        if truster == trusted:
            return ONE
        return None

    def actors(self) -> frozenset[ActorId]:
        out = set()
        for e in self.edges:
            out.add(e.truster)
            out.add(e.trusted)
        return frozenset(out)
