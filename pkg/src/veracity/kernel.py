"""Rule schemas, proof trees, forward construction, and re-validation.

A proof tree stores at every node the rule instance that produced it, the
premise subtrees, and the concluded sequent.  ``apply_rule`` is the only
constructor that computes conclusions; ``check`` re-derives every node's
conclusion from its premises and reports the first divergence per node, so a
tree loaded from disk is trusted only after it re-checks.

Weight flow: the trust rule multiplies weights; every multi-premise logical
rule takes the minimum of its premise weights (weakest link); single-premise
logical rules pass the weight through.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .core import (
    And,
    App,
    Atom,
    Bottom,
    Cases,
    Claim,
    Context,
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
    TrustRelation,
    Var,
    Weight,
    WeightLike,
    as_weight,
    ctx_discharge,
    ctx_union,
    free_vars,
    substitute,
)
from .errors import (
    ActorMismatchError,
    ArityMismatchError,
    ClaimMismatchError,
    EvidenceShapeError,
    FreshnessError,
    InvalidTreeError,
    NotAnAssumptionError,
    UnknownTrustEdgeError,
    VeracityError,
)


class RuleName(enum.Enum):
    ASSUME = "assume"
    BOT_ELIM = "bot_elim"
    AND_INTRO = "and_intro"
    AND_ELIM1 = "and_elim1"
    AND_ELIM2 = "and_elim2"
    AND_ELIM_SPLIT = "and_elim_split"
    OR_INTRO1 = "or_intro1"
    OR_INTRO2 = "or_intro2"
    OR_ELIM1 = "or_elim1"
    OR_ELIM2 = "or_elim2"
    OR_ELIM_CASES = "or_elim_cases"
    IMPL_INTRO = "impl_intro"
    IMPL_ELIM = "impl_elim"
    TRUST = "trust"


ARITY = {
    RuleName.ASSUME: 0,
    RuleName.BOT_ELIM: 1,
    RuleName.AND_INTRO: 2,
    RuleName.AND_ELIM1: 1,
    RuleName.AND_ELIM2: 1,
    RuleName.AND_ELIM_SPLIT: 2,
    RuleName.OR_INTRO1: 1,
    RuleName.OR_INTRO2: 1,
    RuleName.OR_ELIM1: 1,
    RuleName.OR_ELIM2: 1,
    RuleName.OR_ELIM_CASES: 3,
    RuleName.IMPL_INTRO: 1,
    RuleName.IMPL_ELIM: 2,
    RuleName.TRUST: 1,
}


@dataclass(frozen=True)
class RuleInstance:
    """A rule plus the parameters needed to recompute its conclusion.

    Unused fields stay None; which fields a rule reads is documented by the
    constructor helpers below.
    """

    rule: RuleName
    evidence: Evidence | None = None   # assume: the assumed witness
    actor: str | None = None           # assume: the assuming actor
    claim: Claim | None = None         # assume/bot_elim target, or_intro other disjunct, impl_intro antecedent
    var: str | None = None             # impl_intro / split / cases first binder
    var2: str | None = None            # split / cases second binder
    mode: str | None = None            # impl_elim: "beta" or "app"
    relation: str | None = None        # trust: relation name
    truster: str | None = None
    trusted: str | None = None
    weight: Weight | None = None       # trust: edge weight


def assume(evidence: Evidence | str, actor: str, claim: Claim) -> RuleInstance:
    """Assume ``evidence ^ actor in claim``.  A bare string becomes an Atom
    (a ground fact); pass Var(...) for an assumption meant to be discharged."""
    if isinstance(evidence, str):
        evidence = Atom(evidence)
    return RuleInstance(RuleName.ASSUME, evidence=evidence, actor=actor, claim=claim)


def bot_elim(claim: Claim) -> RuleInstance:
    return RuleInstance(RuleName.BOT_ELIM, claim=claim)


def and_intro() -> RuleInstance:
    return RuleInstance(RuleName.AND_INTRO)


def and_elim1() -> RuleInstance:
    return RuleInstance(RuleName.AND_ELIM1)


def and_elim2() -> RuleInstance:
    return RuleInstance(RuleName.AND_ELIM2)


def and_elim_split(left_var: str, right_var: str) -> RuleInstance:
    return RuleInstance(RuleName.AND_ELIM_SPLIT, var=left_var, var2=right_var)


def or_intro1(other: Claim) -> RuleInstance:
    return RuleInstance(RuleName.OR_INTRO1, claim=other)


def or_intro2(other: Claim) -> RuleInstance:
    return RuleInstance(RuleName.OR_INTRO2, claim=other)


def or_elim1() -> RuleInstance:
    return RuleInstance(RuleName.OR_ELIM1)


def or_elim2() -> RuleInstance:
    return RuleInstance(RuleName.OR_ELIM2)


def or_elim_cases(left_var: str, right_var: str) -> RuleInstance:
    return RuleInstance(RuleName.OR_ELIM_CASES, var=left_var, var2=right_var)


def impl_intro(var: str, antecedent: Claim) -> RuleInstance:
    return RuleInstance(RuleName.IMPL_INTRO, var=var, claim=antecedent)


def impl_elim(mode: str = "beta") -> RuleInstance:
    if mode not in ("beta", "app"):
        raise ValueError("impl_elim mode must be 'beta' or 'app'")
    return RuleInstance(RuleName.IMPL_ELIM, mode=mode)


def trust_step(relation: str, truster: str, trusted: str, weight: WeightLike = ONE) -> RuleInstance:
    return RuleInstance(
        RuleName.TRUST,
        relation=relation,
        truster=truster,
        trusted=trusted,
        weight=as_weight(weight),
    )


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent
    instance: RuleInstance
    premises: tuple["ProofTree", ...] = ()


@dataclass(frozen=True)
class Violation:
    path: tuple[int, ...]
    code: str
    message: str

    @property
    def path_str(self) -> str:
        return ".".join(map(str, self.path)) if self.path else "root"


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


TrustInput = Union[None, TrustRelation, Mapping[str, TrustRelation], Iterable[TrustRelation]]


def as_registry(trust: TrustInput) -> dict[str, TrustRelation]:
    if trust is None:
        return {}
    if isinstance(trust, TrustRelation):
        return {trust.name: trust}
    if isinstance(trust, Mapping):
        return dict(trust)
    return {rel.name: rel for rel in trust}


# ---------------------------------------------------------------------------
# Schema computation
# ---------------------------------------------------------------------------


def _min_weight(*weights: Weight) -> Weight:
    return min(weights)


def _one_actor(*judgements: Judgement) -> str:
    actors = {j.actor for j in judgements}
    if len(actors) != 1:
        raise ActorMismatchError(f"logical rules need one actor, got {sorted(actors)}")
    return actors.pop()


def _binds_inside(e: Evidence, name: str) -> bool:
    """True if any binder below ``e`` rebinds ``name`` (the mechanised
    side-condition behind no-alpha-renaming substitution)."""
    if isinstance(e, Lambda):
        return e.var == name or _binds_inside(e.body, name)
    if isinstance(e, Pair):
        return _binds_inside(e.left, name) or _binds_inside(e.right, name)
    if isinstance(e, (TagLeft, TagRight)):
        return _binds_inside(e.value, name)
    if isinstance(e, Cases):
        return (
            e.left_var == name
            or e.right_var == name
            or _binds_inside(e.scrutinee, name)
            or _binds_inside(e.left_body, name)
            or _binds_inside(e.right_body, name)
        )
    if isinstance(e, Split):
        return (
            name in (e.left_var, e.right_var)
            or _binds_inside(e.scrutinee, name)
            or _binds_inside(e.body, name)
        )
    if hasattr(e, "fn"):
        return _binds_inside(e.fn, name) or _binds_inside(e.arg, name)
    return False


def _take_assumption(ctx: Context, var: str, actor: str, claim: Claim) -> tuple[Judgement, Context]:
    """Locate the dischargeable assumption Var(var)^actor in claim (any
    weight) and return it together with the context without it."""
    for entry in ctx:
        if entry.evidence == Var(var) and entry.actor == actor and entry.claim == claim:
            return entry, ctx_discharge(ctx, entry)
    raise NotAnAssumptionError(f"{var} is not an assumption of the premise context")


def _require_fresh(var: str, remaining: Context):
    for entry in remaining:
        if var in free_vars(entry.evidence):
            raise FreshnessError(f"{var} still occurs free in an undischarged assumption")


def derive_conclusion(
    instance: RuleInstance,
    premises: tuple[Sequent, ...],
    trust: TrustInput = None,
) -> Sequent:
    """Compute the sequent this rule instance concludes from these premise
    sequents, enforcing every side condition.  Raises a VeracityError
    subclass (see :mod:`veracity.errors`) when a condition fails."""
    rule = instance.rule
    if len(premises) != ARITY[rule]:
        raise ArityMismatchError(f"{rule.value} takes {ARITY[rule]} premises, got {len(premises)}")

    if rule == RuleName.ASSUME:
        if instance.evidence is None or instance.actor is None or instance.claim is None:
            raise EvidenceShapeError("assume needs evidence, actor and claim")
        if not isinstance(instance.evidence, (Atom, Var)):
            raise EvidenceShapeError("assumed evidence must be an atomic name or a variable")
        j = Judgement(instance.evidence, instance.actor, instance.claim, ONE)
        return Sequent(Context.of(j), j)

    heads = tuple(p.conclusion for p in premises)

    if rule == RuleName.BOT_ELIM:
        (j,) = heads
        if not isinstance(j.claim, Bottom):
            raise ClaimMismatchError("bottom elimination needs a premise over the impossible claim")
        if instance.claim is None:
            raise ClaimMismatchError("bot_elim needs the target claim")
        return Sequent(premises[0].assumptions, Judgement(j.evidence, j.actor, instance.claim, j.weight))

    if rule == RuleName.AND_INTRO:
        j1, j2 = heads
        actor = _one_actor(j1, j2)
        return Sequent(
            ctx_union(premises[0].assumptions, premises[1].assumptions),
            Judgement(
                Pair(j1.evidence, j2.evidence),
                actor,
                And(j1.claim, j2.claim),
                _min_weight(j1.weight, j2.weight),
            ),
        )

    if rule in (RuleName.AND_ELIM1, RuleName.AND_ELIM2):
        (j,) = heads
        if not isinstance(j.claim, And):
            raise ClaimMismatchError("conjunction elimination needs a conjunction premise")
        if not isinstance(j.evidence, Pair):
            raise EvidenceShapeError("conjunction elimination needs pair evidence")
        if rule == RuleName.AND_ELIM1:
            picked = Judgement(j.evidence.left, j.actor, j.claim.left, j.weight)
        else:
            picked = Judgement(j.evidence.right, j.actor, j.claim.right, j.weight)
        return Sequent(premises[0].assumptions, picked)

    if rule == RuleName.AND_ELIM_SPLIT:
        j1, j2 = heads
        actor = _one_actor(j1, j2)
        if not isinstance(j1.claim, And):
            raise ClaimMismatchError("split needs a conjunction premise")
        if instance.var is None or instance.var2 is None:
            raise EvidenceShapeError("split needs its two binders")
        if instance.var == instance.var2:
            raise FreshnessError("split binders must be distinct")
        _, rest = _take_assumption(premises[1].assumptions, instance.var, actor, j1.claim.left)
        _, rest = _take_assumption(rest, instance.var2, actor, j1.claim.right)
        _require_fresh(instance.var, rest)
        _require_fresh(instance.var2, rest)
        return Sequent(
            ctx_union(premises[0].assumptions, rest),
            Judgement(
                Split(j1.evidence, instance.var, instance.var2, j2.evidence),
                actor,
                j2.claim,
                _min_weight(j1.weight, j2.weight),
            ),
        )

    if rule in (RuleName.OR_INTRO1, RuleName.OR_INTRO2):
        (j,) = heads
        if instance.claim is None:
            raise ClaimMismatchError("or introduction needs the other disjunct")
        if rule == RuleName.OR_INTRO1:
            out = Judgement(TagLeft(j.evidence), j.actor, Or(j.claim, instance.claim), j.weight)
        else:
            out = Judgement(TagRight(j.evidence), j.actor, Or(instance.claim, j.claim), j.weight)
        return Sequent(premises[0].assumptions, out)

    if rule in (RuleName.OR_ELIM1, RuleName.OR_ELIM2):
        (j,) = heads
        if not isinstance(j.claim, Or):
            raise ClaimMismatchError("disjunction elimination needs a disjunction premise")
        want = TagLeft if rule == RuleName.OR_ELIM1 else TagRight
        if not isinstance(j.evidence, want):
            raise EvidenceShapeError(
                f"{rule.value} needs {'left' if want is TagLeft else 'right'}-tagged evidence"
            )
        claim = j.claim.left if rule == RuleName.OR_ELIM1 else j.claim.right
        return Sequent(premises[0].assumptions, Judgement(j.evidence.value, j.actor, claim, j.weight))

    if rule == RuleName.OR_ELIM_CASES:
        j1, j2, j3 = heads
        actor = _one_actor(j1, j2, j3)
        if not isinstance(j1.claim, Or):
            raise ClaimMismatchError("case analysis needs a disjunction premise")
        if j2.claim != j3.claim:
            raise ClaimMismatchError("both case branches must conclude the same claim")
        if instance.var is None or instance.var2 is None:
            raise EvidenceShapeError("cases needs its two branch binders")
        _, rest_l = _take_assumption(premises[1].assumptions, instance.var, actor, j1.claim.left)
        _require_fresh(instance.var, rest_l)
        _, rest_r = _take_assumption(premises[2].assumptions, instance.var2, actor, j1.claim.right)
        _require_fresh(instance.var2, rest_r)
        return Sequent(
            ctx_union(ctx_union(premises[0].assumptions, rest_l), rest_r),
            Judgement(
                Cases(j1.evidence, instance.var, j2.evidence, instance.var2, j3.evidence),
                actor,
                j2.claim,
                _min_weight(j1.weight, j2.weight, j3.weight),
            ),
        )

    if rule == RuleName.IMPL_INTRO:
        (j,) = heads
        if instance.var is None or instance.claim is None:
            raise EvidenceShapeError("impl_intro needs a bound variable and the antecedent")
        _, rest = _take_assumption(premises[0].assumptions, instance.var, j.actor, instance.claim)
        _require_fresh(instance.var, rest)
        return Sequent(
            rest,
            Judgement(
                Lambda(instance.var, j.evidence),
                j.actor,
                Implies(instance.claim, j.claim),
                j.weight,
            ),
        )

    if rule == RuleName.IMPL_ELIM:
        j1, j2 = heads
        actor = _one_actor(j1, j2)
        if not isinstance(j1.claim, Implies):
            raise ClaimMismatchError("implication elimination needs an implication premise")
        if j2.claim != j1.claim.antecedent:
            raise ClaimMismatchError("argument claim does not match the antecedent")
        mode = instance.mode or "beta"
        if mode == "beta":
            if not isinstance(j1.evidence, Lambda):
                raise EvidenceShapeError("beta-form implication elimination needs a lambda witness")
            if _binds_inside(j1.evidence.body, j1.evidence.var):
                raise FreshnessError(
                    f"{j1.evidence.var} is rebound inside the lambda body"
                )
            evidence = substitute(j1.evidence.body, j1.evidence.var, j2.evidence)
        elif mode == "app":
            evidence = App(j1.evidence, j2.evidence)
        else:
            raise EvidenceShapeError(f"unknown impl_elim mode {mode!r}")
        return Sequent(
            ctx_union(premises[0].assumptions, premises[1].assumptions),
            Judgement(evidence, actor, j1.claim.consequent, _min_weight(j1.weight, j2.weight)),
        )

    if rule == RuleName.TRUST:
        (j,) = heads
        if None in (instance.relation, instance.truster, instance.trusted, instance.weight):
            raise UnknownTrustEdgeError("trust needs relation, truster, trusted and weight")
        if j.actor != instance.trusted:
            raise ActorMismatchError("trust premise must be held by the trusted actor")
        registry = as_registry(trust)
        rel = registry.get(instance.relation)
        if rel is None:
            raise UnknownTrustEdgeError(f"no trust relation named {instance.relation!r} in scope")
        w = rel.edge_weight(instance.truster, instance.trusted)
        if w is None or w != instance.weight:
            raise UnknownTrustEdgeError(
                f"{instance.relation} has no edge {instance.truster} -> {instance.trusted} "
                f"at weight {instance.weight}"
            )
        return Sequent(
            premises[0].assumptions,
            Judgement(j.evidence, instance.truster, j.claim, instance.weight * j.weight),
        )

    raise VeracityError(f"unhandled rule {rule}")


def apply_rule(
    instance: RuleInstance,
    premises: Iterable[ProofTree] = (),
    trust: TrustInput = None,
) -> ProofTree:
    """Build the proof tree this rule instance concludes from already-built
    premise trees.  Trees built this way always re-check."""
    premises = tuple(premises)
    conclusion = derive_conclusion(instance, tuple(p.conclusion for p in premises), trust)
    return ProofTree(conclusion, instance, premises)


# ---------------------------------------------------------------------------
# Checking and analysis
# ---------------------------------------------------------------------------


def check(tree: ProofTree, trust: TrustInput = None) -> CheckReport:
    """Re-derive every node from its premises and report divergences.

    At most one violation is reported per node: a rule error, a context
    mismatch (CONTEXT_ERROR), or a concluded-judgement mismatch
    (CONCLUSION_MISMATCH), in that order of precedence.
    """
    violations: list[Violation] = []
    stack: list[tuple[ProofTree, tuple[int, ...]]] = [(tree, ())]
    while stack:
        node, path = stack.pop()
        try:
            expected = derive_conclusion(
                node.instance, tuple(p.conclusion for p in node.premises), trust
            )
        except VeracityError as exc:
            violations.append(Violation(path, exc.code, exc.message))
        else:
            if expected.assumptions != node.conclusion.assumptions:
                violations.append(
                    Violation(path, "CONTEXT_ERROR", "stored context differs from the rule's context")
                )
            elif expected.conclusion != node.conclusion.conclusion:
                violations.append(
                    Violation(path, "CONCLUSION_MISMATCH", "stored judgement differs from the rule's conclusion")
                )
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append((node.premises[i], path + (i,)))
    return CheckReport(not violations, tuple(violations))


@dataclass(frozen=True)
class AssumptionUse:
    judgement: Judgement
    discharged: bool


def assumptions_used(tree: ProofTree, trust: TrustInput = None) -> tuple[AssumptionUse, ...]:
    """Every assume-leaf of a checked tree, in first-occurrence order, each
    flagged discharged (absent from the root context) or not."""
    report = check(tree, trust)
    if not report.ok:
        raise InvalidTreeError("assumptions_used needs a tree that checks")
    leaves: dict[Judgement, None] = {}
    stack = [tree]
    while stack:
        node = stack.pop()
        if node.instance.rule == RuleName.ASSUME:
            leaves.setdefault(node.conclusion.conclusion)
        stack.extend(reversed(node.premises))
    root_ctx = tree.conclusion.assumptions
    return tuple(AssumptionUse(j, j not in root_ctx) for j in leaves)


def trust_edges_used(
    tree: ProofTree, trust: TrustInput = None
) -> frozenset[tuple[str, str, str, Weight]]:
    """All (relation, truster, trusted, weight) edges used by trust steps."""
    report = check(tree, trust)
    if not report.ok:
        raise InvalidTreeError("trust_edges_used needs a tree that checks")
    edges = set()
    stack = [tree]
    while stack:
        node = stack.pop()
        inst = node.instance
        if inst.rule == RuleName.TRUST:
            edges.add((inst.relation, inst.truster, inst.trusted, inst.weight))
        stack.extend(node.premises)
    return frozenset(edges)
