"""Build the worked certification proof by hand, check it, and render it.

Penelope holds three claims about a fertilizer batch with witnesses x, y, z.
Pairing them yields the combined claim; abstracting over each witness turns
the proof into a reusable process: a function that, given evidence for the
three inputs, produces evidence for the conjunction.

Run:  python demos/01_worked_proof.py
"""

from veracity import (
    Atomic,
    Var,
    and_intro,
    apply_rule,
    assume,
    assumptions_used,
    check,
    impl_intro,
    print_judgement,
    render_latex,
    render_nl,
)

C1, C2, C3 = Atomic("C1"), Atomic("C2"), Atomic("C3")

# assumptions: x supports C1, y supports C2, z supports C3 (all held by P)
x = apply_rule(assume(Var("x"), "P", C1))
y = apply_rule(assume(Var("y"), "P", C2))
z = apply_rule(assume(Var("z"), "P", C3))

# (x, y) supports C1 /\ C2, then ((x, y), z) supports (C1 /\ C2) /\ C3
both = apply_rule(and_intro(), [x, y])
all_three = apply_rule(and_intro(), [both, z])

# discharge x, then y, then z: the witness becomes a curried function
proof = all_three
for var, claim in (("x", C1), ("y", C2), ("z", C3)):
    proof = apply_rule(impl_intro(var, claim), [proof])

print("root judgement:")
print(" ", print_judgement(proof.conclusion.conclusion))
print("kernel re-check:", "ok" if check(proof).ok else "FAILED")

print("\nassumption usage:")
for use in assumptions_used(proof):
    state = "discharged" if use.discharged else "open"
    print(f"  {print_judgement(use.judgement):30} [{state}]")

print("\nLaTeX derivation (scale 0.8):\n")
print(render_latex(proof, scale="0.8"))

print("natural-language outline:\n")
print(
    render_nl(
        proof,
        actor_names={"P": "Penelope"},
        claim_names={"C1": "claim 1", "C2": "claim 2", "C3": "claim 3"},
    )
)
