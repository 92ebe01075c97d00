"""Trust-relation algebra: applying edges to judgements, composing weights
along paths, best-path lookup, and the chain-versus-star comparison."""

from __future__ import annotations

import enum
from typing import Sequence

from .core import ActorId, Judgement, ONE, TrustRelation, Weight, WeightLike, as_weight
from .errors import BrokenPathError, UnknownTrustEdgeError


def apply_trust(j: Judgement, rel: TrustRelation, truster: ActorId) -> Judgement:
    """Transfer ``j`` to ``truster`` along the edge truster -> j.actor,
    multiplying the weights.  Self-edges of weight 1 are implicit."""
    w = rel.edge_weight(truster, j.actor)
    if w is None:
        raise UnknownTrustEdgeError(f"{rel.name} has no edge {truster} -> {j.actor}")
    return Judgement(j.evidence, truster, j.claim, w * j.weight)


def path_weight(rel: TrustRelation, path: Sequence[ActorId]) -> Weight:
    """Exact product of edge weights along ``path`` (a single actor composes
    the empty product, 1)."""
    if not path:
        raise BrokenPathError("empty actor path")
    total = ONE
    for truster, trusted in zip(path, path[1:]):
        w = rel.edge_weight(truster, trusted)
        if w is None:
            raise BrokenPathError(f"{rel.name} has no edge {truster} -> {trusted}")
        total = total * w
    return total


def best_trust(
    rel: TrustRelation, source: ActorId, target: ActorId
) -> tuple[Weight, tuple[ActorId, ...]] | None:
    """The maximum-product simple path from ``source`` to ``target`` and its
    weight, or None if the target is unreachable.  Ties go to the shorter
    path, then to the lexicographically smaller actor sequence.

    Only simple paths are considered: weights never exceed 1, so revisiting
    a node cannot improve the product.
    """
    if source == target:
        return ONE, (source,)

    outgoing: dict[ActorId, list[tuple[ActorId, Weight]]] = {}
    for e in rel.edges:
        if e.truster != e.trusted:
            outgoing.setdefault(e.truster, []).append((e.trusted, e.weight))
    for nbrs in outgoing.values():
        nbrs.sort()

    best: tuple[Weight, tuple[ActorId, ...]] | None = None

    def better(weight: Weight, path: tuple[ActorId, ...]) -> bool:
        if best is None:
            return True
        bw, bp = best
        if weight != bw:
            return weight > bw
        if len(path) != len(bp):
            return len(path) < len(bp)
        return path < bp

    def walk(node: ActorId, weight: Weight, path: tuple[ActorId, ...]):
        nonlocal best
        if node == target:
            if better(weight, path):
                best = (weight, path)
            return
        for nxt, w in outgoing.get(node, ()):
            if nxt in path:
                continue
            walk(nxt, weight * w, path + (nxt,))

    walk(source, ONE, (source,))
    return best


class ChainStarOutcome(enum.Enum):
    STAR_BETTER = "star_better"
    CHAIN_BETTER = "chain_better"
    EQUAL = "equal"


def compare_chain_star(
    chain_weights: Sequence[WeightLike], star_weight: WeightLike
) -> ChainStarOutcome:
    """Compare trusting through a chain of intermediaries against trusting a
    shared hub: the hub wins exactly when its weight beats the chain's
    product."""
    if not chain_weights:
        raise ValueError("chain must have at least one edge")
    product = ONE
    for w in chain_weights:
        product = product * as_weight(w)
    c = as_weight(star_weight)
    if c > product:
        return ChainStarOutcome.STAR_BETTER
    if c < product:
        return ChainStarOutcome.CHAIN_BETTER
    return ChainStarOutcome.EQUAL
