"""Depth-bounded, all-proofs search over partial proof trees with holes.

Search works on goals that carry only an actor and a claim; evidence, weights,
and assumption contexts are reconstructed by the kernel once a tree is
complete.  Each level replaces every open hole with every one-node expansion
the step function offers, taking the cartesian product across holes, and a
tree moves to the result list as soon as it completes and re-checks.  Distinct
proofs are all kept: which proof supports a claim matters here, so the search
never collapses alternatives into a single representative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterable

from .core import (
    And,
    Claim,
    Implies,
    Judgement,
    Or,
    TrustRelation,
    Var,
    Weight,
)
from .errors import VeracityError
from .kernel import (
    ProofTree,
    RuleInstance,
    RuleName,
    and_intro,
    apply_rule,
    assume,
    check,
    impl_intro,
    or_intro1,
    or_intro2,
    trust_step,
)

# Elimination rules are deliberately absent from the default set: goal-directed
# expansion cannot guess the compound claim they would eliminate.
DEFAULT_SEARCH_RULES = frozenset(
    {
        RuleName.ASSUME,
        RuleName.AND_INTRO,
        RuleName.OR_INTRO1,
        RuleName.OR_INTRO2,
        RuleName.IMPL_INTRO,
        RuleName.TRUST,
    }
)

_PLACEHOLDER = Var("_")


@dataclass(frozen=True)
class Assumable:
    name: str
    actor: str
    claim: Claim


@dataclass(frozen=True)
class ConfigEdge:
    relation: str
    truster: str
    trusted: str
    weight: Weight


@dataclass(frozen=True)
class StepConfig:
    assumables: tuple[Assumable, ...] = ()
    trust_edges: tuple[ConfigEdge, ...] = ()
    rules: frozenset[RuleName] = DEFAULT_SEARCH_RULES
    depth_limit: int = 5
    max_proofs: int = 100

    def __post_init__(self):
        if self.depth_limit < 1:
            raise ValueError("depth_limit must be >= 1")
        if self.max_proofs < 1:
            raise ValueError("max_proofs must be >= 1")


class PartialProof:
    """Either a Hole (an open goal) or a Node (a rule applied to subgoals)."""

    __slots__ = ()


@dataclass(frozen=True)
class Hole(PartialProof):
    goal: Judgement


@dataclass(frozen=True)
class Node(PartialProof):
    goal: Judgement
    instance: RuleInstance
    premises: tuple[PartialProof, ...] = ()


def goal_judgement(actor: str, claim: Claim) -> Judgement:
    """Search goals track actor and claim only; the evidence slot holds a
    placeholder until the kernel reconstructs the real witness."""
    return Judgement(_PLACEHOLDER, actor, claim)


def is_complete(p: PartialProof) -> bool:
    if isinstance(p, Hole):
        return False
    return all(is_complete(q) for q in p.premises)


def registry_from_config(cfg: StepConfig) -> dict[str, TrustRelation]:
    grouped: dict[str, list[tuple[str, str, Weight]]] = {}
    for e in cfg.trust_edges:
        grouped.setdefault(e.relation, []).append((e.truster, e.trusted, e.weight))
    return {name: TrustRelation.of(name, edges) for name, edges in grouped.items()}


def step(cfg: StepConfig, goal: Judgement) -> list[PartialProof]:
    """All one-node expansions of ``goal``: assume-leaves first, then rule
    nodes in kernel rule order.  Only enabled rules contribute."""
    actor, claim = goal.actor, goal.claim
    out: list[PartialProof] = []

    if RuleName.ASSUME in cfg.rules:
        for a in cfg.assumables:
            if a.actor == actor and a.claim == claim:
                out.append(Node(goal, assume(Var(a.name), actor, claim)))

    if RuleName.AND_INTRO in cfg.rules and isinstance(claim, And):
        out.append(
            Node(
                goal,
                and_intro(),
                (Hole(goal_judgement(actor, claim.left)), Hole(goal_judgement(actor, claim.right))),
            )
        )

    if isinstance(claim, Or):
        if RuleName.OR_INTRO1 in cfg.rules:
            out.append(Node(goal, or_intro1(claim.right), (Hole(goal_judgement(actor, claim.left)),)))
        if RuleName.OR_INTRO2 in cfg.rules:
            out.append(Node(goal, or_intro2(claim.left), (Hole(goal_judgement(actor, claim.right)),)))

    if RuleName.IMPL_INTRO in cfg.rules and isinstance(claim, Implies):
        # The bound variable comes from an assumable of the antecedent: the
        # subproof must be able to assume it, or the discharge would fail.
        for a in cfg.assumables:
            if a.actor == actor and a.claim == claim.antecedent:
                out.append(
                    Node(
                        goal,
                        impl_intro(a.name, claim.antecedent),
                        (Hole(goal_judgement(actor, claim.consequent)),),
                    )
                )

    if RuleName.TRUST in cfg.rules:
        for e in cfg.trust_edges:
            if e.truster == actor:
                out.append(
                    Node(
                        goal,
                        trust_step(e.relation, e.truster, e.trusted, e.weight),
                        (Hole(goal_judgement(e.trusted, claim)),),
                    )
                )

    return out


def one_level_deeper(cfg: StepConfig, p: PartialProof) -> list[PartialProof]:
    """Replace every open hole with each of its step expansions, multiplying
    alternatives across holes.  A hole-free tree comes back unchanged."""
    if isinstance(p, Hole):
        return step(cfg, p.goal)
    if is_complete(p):
        return [p]
    options = [one_level_deeper(cfg, q) for q in p.premises]
    # leftmost subtree varies fastest, matching the published enumeration
    return [
        replace(p, premises=tuple(reversed(combo)))
        for combo in itertools.product(*reversed(options))
    ]


def to_proof_tree(p: PartialProof, trust=None) -> ProofTree:
    """Rebuild a complete partial proof through the kernel, recomputing
    evidence and contexts bottom-up."""
    if isinstance(p, Hole):
        raise VeracityError("cannot convert a tree that still has holes")
    return apply_rule(p.instance, [to_proof_tree(q, trust) for q in p.premises], trust=trust)


def search(cfg: StepConfig, goal: Judgement) -> list[ProofTree]:
    """All structurally distinct proofs of ``goal`` reachable within the
    configured depth, each kernel-checked, in deterministic order (results
    found at depth d are a prefix of the results found at depth d+1)."""
    registry = registry_from_config(cfg)
    frontier: list[PartialProof] = [Hole(goal_judgement(goal.actor, goal.claim))]
    results: list[ProofTree] = []
    seen: set[ProofTree] = set()

    for _ in range(cfg.depth_limit):
        if not frontier:
            break
        expanded: list[PartialProof] = []
        for p in frontier:
            expanded.extend(one_level_deeper(cfg, p))
        frontier = []
        for p in expanded:
            if not is_complete(p):
                frontier.append(p)
                continue
            try:
                tree = to_proof_tree(p, registry)
            except VeracityError:
                continue
            if not check(tree, registry).ok:
                continue
            if tree in seen:
                continue
            seen.add(tree)
            results.append(tree)
            if len(results) >= cfg.max_proofs:
                return results
    return results
