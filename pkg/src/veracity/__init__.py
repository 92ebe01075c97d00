"""A natural-deduction logic of evidence, actors, and weighted trust:
core terms, a checking kernel, evidence normalization, trust algebra,
all-proofs search, renderers, a DSL, a CLI, and an HTTP service.
"""

from .core import (
    ActorId,
    And,
    App,
    Atom,
    Atomic,
    BOTTOM,
    Bottom,
    Cases,
    Claim,
    Context,
    EMPTY_CONTEXT,
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
    TrustEdge,
    TrustRelation,
    Var,
    Weight,
    ZERO,
    as_weight,
    ctx_discharge,
    ctx_union,
    format_weight,
    free_vars,
    negation,
    substitute,
    weight_mul,
)
from .errors import (
    ActorMismatchError,
    ArityMismatchError,
    BrokenPathError,
    CaptureError,
    ClaimMismatchError,
    ContextError,
    EvidenceShapeError,
    FreshnessError,
    FuelExhaustedError,
    InvalidTreeError,
    NotAnAssumptionError,
    ParseError,
    UnknownTrustEdgeError,
    VeracityError,
    WeightOutOfRangeError,
)
from .kernel import (
    AssumptionUse,
    CheckReport,
    ProofTree,
    RuleInstance,
    RuleName,
    Violation,
    and_elim1,
    and_elim2,
    and_elim_split,
    and_intro,
    apply_rule,
    assume,
    assumptions_used,
    bot_elim,
    check,
    impl_elim,
    impl_intro,
    or_elim1,
    or_elim2,
    or_elim_cases,
    or_intro1,
    or_intro2,
    trust_edges_used,
    trust_step,
)
from .machine import parse_machine, render_machine
from .normalize import evidence_equal, normalize, reduce_step
from .render import render_latex, render_nl
from .search import (
    Assumable,
    ConfigEdge,
    DEFAULT_SEARCH_RULES,
    Hole,
    Node,
    PartialProof,
    StepConfig,
    goal_judgement,
    one_level_deeper,
    search,
    step,
)
from .syntax import (
    parse_claim,
    parse_config,
    parse_evidence,
    parse_judgement,
    parse_trust,
    print_claim,
    print_evidence,
    print_judgement,
)
from .trust import ChainStarOutcome, apply_trust, best_trust, compare_chain_star, path_weight

__version__ = "0.1.0"
