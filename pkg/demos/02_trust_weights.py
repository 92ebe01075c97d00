"""Degrees of trust: weighted edges compose multiplicatively.

k trusts l at 0.5, l trusts m at 0.4.  A judgement held by m reaches k with
weight exactly 0.2 — exact rationals, no floating-point drift.  The second
half contrasts a supply *chain* with a *star* around a shared ledger: the
hub wins whenever its single edge beats the chain's product.

Run:  python demos/02_trust_weights.py
"""

from fractions import Fraction

from veracity import (
    Atom,
    Atomic,
    Judgement,
    TrustRelation,
    apply_trust,
    best_trust,
    compare_chain_star,
    path_weight,
    print_judgement,
)

T = TrustRelation.of("T", [("k", "l", Fraction(1, 2)), ("l", "m", Fraction(2, 5))])

j = Judgement(Atom("a"), "m", Atomic("A"))
print("start:        ", print_judgement(j))
j = apply_trust(j, T, "l")
print("after l trusts:", print_judgement(j))
j = apply_trust(j, T, "k")
print("after k trusts:", print_judgement(j))

# chain p - q - r - s - t versus a star through the ledger actor
chain_edges = [("p", "q", Fraction(9, 10)), ("q", "r", Fraction(9, 10)),
               ("r", "s", Fraction(9, 10)), ("s", "t", Fraction(9, 10))]
star_edges = [(node, "ledger", 1) for node in "pqrst"] + [("ledger", "t", Fraction(4, 5))]
S = TrustRelation.of("S", chain_edges + star_edges)

chain = path_weight(S, ["p", "q", "r", "s", "t"])
star = path_weight(S, ["p", "ledger", "t"])
print(f"\nchain p..t weight: {chain}")
print(f"star  p..t weight: {star}")
print("verdict:", compare_chain_star([w for _, _, w in chain_edges], star.value).value)

weight, path = best_trust(S, "p", "t")
print(f"best path p..t:   {' -> '.join(path)}  at {weight}")
