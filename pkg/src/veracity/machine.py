"""Machine-readable proof documents.

A ``.vproof`` file is a JSON document carrying a schema version and one
self-describing tree: every node stores its rule, the rule's parameters, the
concluded sequent, and its premise subtrees.  The conclusion is stored rather
than recomputed so that a tampered file is *loadable* and the kernel checker
can point at the node that no longer follows from its premises.

Rendering is deterministic (sorted keys, fixed indentation), so equal trees
produce byte-equal documents and documents round-trip byte-exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import (
    And,
    App,
    Atom,
    Atomic,
    BOTTOM,
    Bottom,
    Cases,
    Claim,
    Context,
    Evidence,
    Implies,
    Judgement,
    Lambda,
    Or,
    Pair,
    Sequent,
    Split,
    TagLeft,
    TagRight,
    Var,
    Weight,
)
from .errors import ParseError
from .kernel import ProofTree, RuleInstance, RuleName
from .search import Hole, Node, PartialProof

FORMAT_NAME = "veracity-proof"
FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# Encoding
# ---------------------------------------------------------------------------


def encode_claim(c: Claim) -> dict:
    if isinstance(c, Atomic):
        return {"kind": "atomic", "name": c.name}
    if isinstance(c, Bottom):
        return {"kind": "bottom"}
    if isinstance(c, And):
        return {"kind": "and", "left": encode_claim(c.left), "right": encode_claim(c.right)}
    if isinstance(c, Or):
        return {"kind": "or", "left": encode_claim(c.left), "right": encode_claim(c.right)}
    if isinstance(c, Implies):
        return {
            "kind": "implies",
            "antecedent": encode_claim(c.antecedent),
            "consequent": encode_claim(c.consequent),
        }
    raise TypeError(f"not a claim: {c!r}")


def encode_evidence(e: Evidence) -> dict:
    if isinstance(e, Atom):
        out: dict[str, Any] = {"kind": "atom", "name": e.name}
        if e.payload is not None:
            out["payload"] = dict(e.payload)
        return out
    if isinstance(e, Var):
        return {"kind": "var", "name": e.name}
    if isinstance(e, Pair):
        return {"kind": "pair", "left": encode_evidence(e.left), "right": encode_evidence(e.right)}
    if isinstance(e, TagLeft):
        return {"kind": "tag_left", "value": encode_evidence(e.value)}
    if isinstance(e, TagRight):
        return {"kind": "tag_right", "value": encode_evidence(e.value)}
    if isinstance(e, Lambda):
        return {"kind": "lambda", "var": e.var, "body": encode_evidence(e.body)}
    if isinstance(e, App):
        return {"kind": "app", "fn": encode_evidence(e.fn), "arg": encode_evidence(e.arg)}
    if isinstance(e, Cases):
        return {
            "kind": "cases",
            "scrutinee": encode_evidence(e.scrutinee),
            "left_var": e.left_var,
            "left_body": encode_evidence(e.left_body),
            "right_var": e.right_var,
            "right_body": encode_evidence(e.right_body),
        }
    if isinstance(e, Split):
        return {
            "kind": "split",
            "scrutinee": encode_evidence(e.scrutinee),
            "left_var": e.left_var,
            "right_var": e.right_var,
            "body": encode_evidence(e.body),
        }
    raise TypeError(f"not evidence: {e!r}")


def encode_judgement(j: Judgement) -> dict:
    return {
        "evidence": encode_evidence(j.evidence),
        "actor": j.actor,
        "weight": str(j.weight.value),
        "claim": encode_claim(j.claim),
    }


def encode_sequent(s: Sequent) -> dict:
    return {
        "assumptions": [encode_judgement(j) for j in s.assumptions],
        "judgement": encode_judgement(s.conclusion),
    }


def encode_instance_params(inst: RuleInstance) -> dict:
    params: dict[str, Any] = {}
    if inst.evidence is not None:
        params["evidence"] = encode_evidence(inst.evidence)
    if inst.actor is not None:
        params["actor"] = inst.actor
    if inst.claim is not None:
        params["claim"] = encode_claim(inst.claim)
    if inst.var is not None:
        params["var"] = inst.var
    if inst.var2 is not None:
        params["var2"] = inst.var2
    if inst.mode is not None:
        params["mode"] = inst.mode
    if inst.relation is not None:
        params["relation"] = inst.relation
    if inst.truster is not None:
        params["truster"] = inst.truster
    if inst.trusted is not None:
        params["trusted"] = inst.trusted
    if inst.weight is not None:
        params["weight"] = str(inst.weight.value)
    return params


def encode_tree(t: ProofTree) -> dict:
    return {
        "rule": t.instance.rule.value,
        "params": encode_instance_params(t.instance),
        "conclusion": encode_sequent(t.conclusion),
        "premises": [encode_tree(p) for p in t.premises],
    }


def encode_partial(p: PartialProof) -> dict:
    if isinstance(p, Hole):
        return {"kind": "hole", "goal": encode_judgement(p.goal)}
    assert isinstance(p, Node)
    return {
        "kind": "node",
        "rule": p.instance.rule.value,
        "params": encode_instance_params(p.instance),
        "goal": encode_judgement(p.goal),
        "premises": [encode_partial(q) for q in p.premises],
    }


def render_machine(t: ProofTree) -> str:
    doc = {"format": FORMAT_NAME, "version": FORMAT_VERSION, "proof": encode_tree(t)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Decoding
# ---------------------------------------------------------------------------


def _need(obj: Any, key: str, path: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"expected an object at {path}")
    if key not in obj:
        raise ParseError(f"missing field {key!r} at {path}")
    return obj[key]


def _need_str(obj: Any, key: str, path: str) -> str:
    v = _need(obj, key, path)
    if not isinstance(v, str) or not v:
        raise ParseError(f"field {key!r} at {path} must be a non-empty string")
    return v


def decode_claim(v: Any, path: str = "claim") -> Claim:
    kind = _need_str(v, "kind", path)
    if kind == "atomic":
        return Atomic(_need_str(v, "name", path))
    if kind == "bottom":
        return BOTTOM
    if kind in ("and", "or"):
        left = decode_claim(_need(v, "left", path), f"{path}.left")
        right = decode_claim(_need(v, "right", path), f"{path}.right")
        return And(left, right) if kind == "and" else Or(left, right)
    if kind == "implies":
        return Implies(
            decode_claim(_need(v, "antecedent", path), f"{path}.antecedent"),
            decode_claim(_need(v, "consequent", path), f"{path}.consequent"),
        )
    raise ParseError(f"unknown claim kind {kind!r} at {path}")


def decode_evidence(v: Any, path: str = "evidence") -> Evidence:
    kind = _need_str(v, "kind", path)
    if kind == "atom":
        payload = v.get("payload")
        if payload is None:
            return Atom(_need_str(v, "name", path))
        if not isinstance(payload, dict) or not all(
            isinstance(k, str) and isinstance(val, str) for k, val in payload.items()
        ):
            raise ParseError(f"payload at {path} must map strings to strings")
        return Atom.with_payload(_need_str(v, "name", path), payload)
    if kind == "var":
        return Var(_need_str(v, "name", path))
    if kind == "pair":
        return Pair(
            decode_evidence(_need(v, "left", path), f"{path}.left"),
            decode_evidence(_need(v, "right", path), f"{path}.right"),
        )
    if kind == "tag_left":
        return TagLeft(decode_evidence(_need(v, "value", path), f"{path}.value"))
    if kind == "tag_right":
        return TagRight(decode_evidence(_need(v, "value", path), f"{path}.value"))
    if kind == "lambda":
        return Lambda(
            _need_str(v, "var", path),
            decode_evidence(_need(v, "body", path), f"{path}.body"),
        )
    if kind == "app":
        return App(
            decode_evidence(_need(v, "fn", path), f"{path}.fn"),
            decode_evidence(_need(v, "arg", path), f"{path}.arg"),
        )
    if kind == "cases":
        return Cases(
            decode_evidence(_need(v, "scrutinee", path), f"{path}.scrutinee"),
            _need_str(v, "left_var", path),
            decode_evidence(_need(v, "left_body", path), f"{path}.left_body"),
            _need_str(v, "right_var", path),
            decode_evidence(_need(v, "right_body", path), f"{path}.right_body"),
        )
    if kind == "split":
        return Split(
            decode_evidence(_need(v, "scrutinee", path), f"{path}.scrutinee"),
            _need_str(v, "left_var", path),
            _need_str(v, "right_var", path),
            decode_evidence(_need(v, "body", path), f"{path}.body"),
        )
    raise ParseError(f"unknown evidence kind {kind!r} at {path}")


def decode_weight(v: Any, path: str) -> Weight:
    if not isinstance(v, str):
        raise ParseError(f"weight at {path} must be a string")
    try:
        return Weight(Fraction(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight {v!r} at {path}: {exc}") from exc


def decode_judgement(v: Any, path: str = "judgement") -> Judgement:
    return Judgement(
        decode_evidence(_need(v, "evidence", path), f"{path}.evidence"),
        _need_str(v, "actor", path),
        decode_claim(_need(v, "claim", path), f"{path}.claim"),
        decode_weight(_need(v, "weight", path), f"{path}.weight"),
    )


def decode_sequent(v: Any, path: str = "sequent") -> Sequent:
    assumptions = _need(v, "assumptions", path)
    if not isinstance(assumptions, list):
        raise ParseError(f"assumptions at {path} must be a list")
    ctx = Context(
        tuple(decode_judgement(j, f"{path}.assumptions[{i}]") for i, j in enumerate(assumptions))
    )
    return Sequent(ctx, decode_judgement(_need(v, "judgement", path), f"{path}.judgement"))


def decode_instance(rule_value: str, params: Any, path: str) -> RuleInstance:
    try:
        rule = RuleName(rule_value)
    except ValueError:
        raise ParseError(f"unknown rule {rule_value!r} at {path}") from None
    if params is None:
        params = {}
    if not isinstance(params, dict):
        raise ParseError(f"params at {path} must be an object")
    known = {
        "evidence", "actor", "claim", "var", "var2", "mode",
        "relation", "truster", "trusted", "weight",
    }
    unknown = set(params) - known
    if unknown:
        raise ParseError(f"unknown params {sorted(unknown)} at {path}")

    def opt_str(key):
        if key not in params:
            return None
        v = params[key]
        if not isinstance(v, str) or not v:
            raise ParseError(f"param {key!r} at {path} must be a non-empty string")
        return v

    return RuleInstance(
        rule,
        evidence=decode_evidence(params["evidence"], f"{path}.evidence") if "evidence" in params else None,
        actor=opt_str("actor"),
        claim=decode_claim(params["claim"], f"{path}.claim") if "claim" in params else None,
        var=opt_str("var"),
        var2=opt_str("var2"),
        mode=opt_str("mode"),
        relation=opt_str("relation"),
        truster=opt_str("truster"),
        trusted=opt_str("trusted"),
        weight=decode_weight(params["weight"], f"{path}.weight") if "weight" in params else None,
    )


def decode_tree(v: Any, path: str = "proof") -> ProofTree:
    rule = _need_str(v, "rule", path)
    instance = decode_instance(rule, v.get("params"), f"{path}.params")
    conclusion = decode_sequent(_need(v, "conclusion", path), f"{path}.conclusion")
    premises = _need(v, "premises", path)
    if not isinstance(premises, list):
        raise ParseError(f"premises at {path} must be a list")
    return ProofTree(
        conclusion,
        instance,
        tuple(decode_tree(p, f"{path}.premises[{i}]") for i, p in enumerate(premises)),
    )


def parse_machine(text: str) -> ProofTree:
    """Parse a proof document.  The result is *not* validated: run it through
    the kernel checker before trusting it."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("format") != FORMAT_NAME:
        raise ParseError(f"not a {FORMAT_NAME} document")
    if doc.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    return decode_tree(_need(doc, "proof", "document"))
