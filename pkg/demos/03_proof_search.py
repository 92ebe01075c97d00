"""All-proofs search: which proof you have matters.

With C and C /\\ C assumable for actor a1, the claim (C /\\ C) /\\ (C /\\ C)
has exactly four structurally different proofs, distinguished by their
witnesses.  A search that returned one representative would hide three ways
of justifying the claim.

Run:  python demos/03_proof_search.py
"""

from veracity import (
    Assumable,
    RuleName,
    StepConfig,
    Hole,
    goal_judgement,
    one_level_deeper,
    parse_claim,
    parse_judgement,
    print_evidence,
    print_judgement,
    render_latex,
    search,
    step,
)

cfg = StepConfig(
    assumables=(
        Assumable("e", "a1", parse_claim("C")),
        Assumable("e", "a1", parse_claim("C /\\ C")),
    ),
    rules=frozenset({RuleName.ASSUME, RuleName.AND_INTRO}),
    depth_limit=3,
)

goal = parse_judgement("e ^ a1 in (C /\\ C) /\\ (C /\\ C)")

# what one expansion step offers at the root goal
print("step candidates at the root goal:")
for node in step(cfg, goal_judgement(goal.actor, goal.claim)):
    print("  -", node.instance.rule.value)

# one level of deepening multiplies alternatives per hole
level1 = one_level_deeper(cfg, Hole(goal_judgement(goal.actor, goal.claim)))
level2 = [q for p in level1 for q in one_level_deeper(cfg, p)]
print(f"partial trees after one level: {len(level1)}, after two: {len(level2)}")

proofs = search(cfg, goal)
print(f"\nsearch found {len(proofs)} proofs:")
for i, proof in enumerate(proofs, start=1):
    root = proof.conclusion.conclusion
    print(f"  {i}. witness {print_evidence(root.evidence)}")
    print(f"     root    {print_judgement(root)}")

print("\nLaTeX of the first proof:\n")
print(render_latex(proofs[0], scale="1", claim_style="flat"))
