"""Stateful HTTP API for interactive proof construction.

A session starts from a goal judgement and a search configuration; the client
grows the proof by picking a hole and applying one of the candidates the step
function offers there, with unlimited undo back to the initial single hole.
The service holds all the logic: clients render exactly what they are given.

Endpoints
    POST /sessions                          {goal, config} -> session summary
    GET  /sessions/{id}                     session summary
    GET  /sessions/{id}/holes               open holes
    GET  /sessions/{id}/holes/{h}/rules     candidates for one hole
    POST /sessions/{id}/holes/{h}/apply     {candidate} -> updated summary
    POST /sessions/{id}/undo                drop the last apply
    GET  /sessions/{id}/export?format=...   latex | nl | machine text
    POST /search                            stateless search {goal, config}

Errors use problem-detail JSON: {"code", "message", "path"}.
"""

from __future__ import annotations

import json
import threading
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .core import Judgement
from .errors import VeracityError
from .kernel import check
from .machine import encode_judgement, encode_partial, encode_tree, render_machine
from .render import render_latex, render_nl, rule_label
from .search import (
    Hole,
    Node,
    PartialProof,
    StepConfig,
    goal_judgement,
    is_complete,
    registry_from_config,
    search,
    step,
    to_proof_tree,
)
from .syntax import parse_config, parse_judgement, print_claim, print_evidence


class ServiceError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


@dataclass
class Session:
    id: str
    goal: Judgement
    config: StepConfig
    config_text: str
    current: PartialProof
    history: list[PartialProof] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


# ---------------------------------------------------------------------------
# Hole addressing: stable child-index paths from the root ("root", "0.1", ...)
# ---------------------------------------------------------------------------


def _path_id(path: tuple[int, ...]) -> str:
    return ".".join(map(str, path)) if path else "root"


def _parse_path(hole_id: str) -> tuple[int, ...]:
    if hole_id == "root":
        return ()
    try:
        return tuple(int(part) for part in hole_id.split("."))
    except ValueError:
        raise ServiceError(404, "NOT_FOUND", f"bad hole id {hole_id!r}") from None


def _holes(p: PartialProof, path: tuple[int, ...] = ()) -> list[tuple[tuple[int, ...], Judgement]]:
    if isinstance(p, Hole):
        return [(path, p.goal)]
    out = []
    for i, q in enumerate(p.premises):
        out.extend(_holes(q, path + (i,)))
    return out


def _hole_at(p: PartialProof, path: tuple[int, ...]) -> Hole | None:
    for i in path:
        if not isinstance(p, Node) or i >= len(p.premises):
            return None
        p = p.premises[i]
    return p if isinstance(p, Hole) else None


def _fill(p: PartialProof, path: tuple[int, ...], sub: PartialProof) -> PartialProof:
    if not path:
        return sub
    assert isinstance(p, Node)
    i = path[0]
    premises = list(p.premises)
    premises[i] = _fill(premises[i], path[1:], sub)
    return replace(p, premises=tuple(premises))


def _goal_json(goal: Judgement) -> dict:
    return {"actor": goal.actor, "claim": print_claim(goal.claim)}


def _tree_json(p: PartialProof, path: tuple[int, ...] = ()) -> dict:
    if isinstance(p, Hole):
        return {"kind": "hole", "id": _path_id(path), "goal": _goal_json(p.goal)}
    summary: dict[str, Any] = {
        "kind": "node",
        "rule": p.instance.rule.value,
        "label": rule_label(p.instance),
        "goal": _goal_json(p.goal),
        "premises": [_tree_json(q, path + (i,)) for i, q in enumerate(p.premises)],
    }
    if p.instance.rule.value == "assume" and p.instance.evidence is not None:
        summary["evidence"] = print_evidence(p.instance.evidence)
    return summary


def _candidate_json(i: int, node: Node) -> dict:
    inst = node.instance
    if inst.rule.value == "assume":
        display = f"assume {print_evidence(inst.evidence)} ^ {inst.actor} in {print_claim(inst.claim)}"
    elif inst.rule.value == "impl_intro":
        display = f"introduce the implication, binding {inst.var}"
    elif inst.rule.value == "trust":
        display = f"trust {inst.trusted} via {inst.relation} at {inst.weight}"
    elif inst.rule.value == "and_intro":
        display = "introduce the conjunction"
    elif inst.rule.value in ("or_intro1", "or_intro2"):
        side = "left" if inst.rule.value == "or_intro1" else "right"
        display = f"introduce the disjunction from its {side} side"
    else:
        display = inst.rule.value
    return {
        "id": i,
        "rule": inst.rule.value,
        "label": rule_label(inst),
        "display": display,
        "premises": len(node.premises),
    }


def _session_json(s: Session) -> dict:
    return {
        "id": s.id,
        "goal": _goal_json(goal_judgement(s.goal.actor, s.goal.claim)),
        "complete": is_complete(s.current),
        "holes": [
            {"id": _path_id(path), "goal": _goal_json(goal)} for path, goal in _holes(s.current)
        ],
        "tree": _tree_json(s.current),
        "history_depth": len(s.history),
    }


class CreateSessionBody(BaseModel):
    goal: str
    config: str = ""


class ApplyBody(BaseModel):
    candidate: int


class SearchBody(BaseModel):
    goal: str
    config: str = ""


def create_app(static_dir: str | None = None, snapshot_dir: str | None = None) -> FastAPI:
    sessions: dict[str, Session] = {}
    store_lock = threading.Lock()

    def write_snapshots():
        out = Path(snapshot_dir)
        out.mkdir(parents=True, exist_ok=True)
        with store_lock:
            for session in sessions.values():
                doc = {
                    "id": session.id,
                    "goal": encode_judgement(session.goal),
                    "config": session.config_text,
                    "partial": encode_partial(session.current),
                }
                (out / f"{session.id}.json").write_text(
                    json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8"
                )

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        yield
        if snapshot_dir is not None:
            write_snapshots()

    app = FastAPI(title="veracity proof service", lifespan=lifespan)

    @app.exception_handler(ServiceError)
    async def _service_error(request: Request, exc: ServiceError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "path": request.url.path},
        )

    @app.exception_handler(VeracityError)
    async def _domain_error(request: Request, exc: VeracityError):
        return JSONResponse(
            status_code=400,
            content={"code": exc.code, "message": exc.message, "path": request.url.path},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "BAD_REQUEST", "message": str(exc.errors()), "path": request.url.path},
        )

    def get_session(session_id: str) -> Session:
        with store_lock:
            session = sessions.get(session_id)
        if session is None:
            raise ServiceError(404, "NOT_FOUND", f"no session {session_id!r}")
        return session

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        goal = parse_judgement(body.goal)
        config = parse_config(body.config) if body.config.strip() else StepConfig()
        session = Session(
            id=uuid.uuid4().hex[:12],
            goal=goal,
            config=config,
            config_text=body.config,
            current=Hole(goal_judgement(goal.actor, goal.claim)),
        )
        with store_lock:
            sessions[session.id] = session
        return _session_json(session)

    @app.get("/sessions/{session_id}")
    def get_session_state(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return _session_json(session)

    @app.get("/sessions/{session_id}/holes")
    def get_holes(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return {
                "holes": [
                    {"id": _path_id(path), "goal": _goal_json(goal)}
                    for path, goal in _holes(session.current)
                ]
            }

    def hole_candidates(session: Session, hole_id: str) -> tuple[tuple[int, ...], list[Node]]:
        path = _parse_path(hole_id)
        hole = _hole_at(session.current, path)
        if hole is None:
            raise ServiceError(404, "NOT_FOUND", f"no open hole at {hole_id!r}")
        return path, step(session.config, hole.goal)

    @app.get("/sessions/{session_id}/holes/{hole_id}/rules")
    def get_rules(session_id: str, hole_id: str):
        session = get_session(session_id)
        with session.lock:
            _, candidates = hole_candidates(session, hole_id)
            return {"candidates": [_candidate_json(i, c) for i, c in enumerate(candidates)]}

    @app.post("/sessions/{session_id}/holes/{hole_id}/apply")
    def apply_candidate(session_id: str, hole_id: str, body: ApplyBody):
        session = get_session(session_id)
        with session.lock:
            path, candidates = hole_candidates(session, hole_id)
            if not (0 <= body.candidate < len(candidates)):
                raise ServiceError(404, "NOT_FOUND", f"no candidate {body.candidate} at {hole_id!r}")
            session.history.append(session.current)
            session.current = _fill(session.current, path, candidates[body.candidate])
            return _session_json(session)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = get_session(session_id)
        with session.lock:
            if not session.history:
                raise ServiceError(409, "NOTHING_TO_UNDO", "already at the initial state")
            session.current = session.history.pop()
            return _session_json(session)

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str, format: str = "latex", scale: str = "1", claim_style: str = "full"):
        if format not in ("latex", "nl", "machine"):
            raise ServiceError(400, "BAD_REQUEST", f"unknown export format {format!r}")
        session = get_session(session_id)
        with session.lock:
            if not is_complete(session.current):
                raise ServiceError(409, "INCOMPLETE_PROOF", "the proof still has holes")
            registry = registry_from_config(session.config)
            tree = to_proof_tree(session.current, registry)
            report = check(tree, registry)
            if not report.ok:
                first = report.violations[0]
                raise ServiceError(409, first.code, f"proof does not check: {first.message}")
            if format == "latex":
                text = render_latex(tree, scale=scale, claim_style=claim_style, trust=registry)
            elif format == "nl":
                text = render_nl(tree, trust=registry)
            else:
                text = render_machine(tree)
            return PlainTextResponse(text)

    @app.post("/search")
    def stateless_search(body: SearchBody):
        goal = parse_judgement(body.goal)
        config = parse_config(body.config) if body.config.strip() else StepConfig()
        proofs = search(config, goal)
        return {"count": len(proofs), "proofs": [encode_tree(t) for t in proofs]}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
