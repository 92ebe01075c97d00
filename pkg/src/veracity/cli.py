"""Command-line front door: check, search, render, trust, serve.

Exit codes: 0 success, 1 proof invalid, 2 usage/parse/IO error, 3 service
startup failure.  Output is byte-identical across runs on identical inputs;
ANSI color is used only on a terminal and can be disabled with
VERACITY_COLOR=0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import Weight, format_weight
from .errors import BrokenPathError, ParseError, VeracityError
from .kernel import check
from .machine import parse_machine, render_machine
from .render import render_latex, render_nl
from .search import search
from .syntax import parse_config, parse_judgement, parse_trust
from .trust import best_trust, path_weight


def _color_enabled() -> bool:
    if os.environ.get("VERACITY_COLOR") == "0":
        return False
    return sys.stdout.isatty()


def _paint(text: str, code: str) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _color_enabled() else text


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc.strerror or exc}")


class SystemExit2(Exception):
    """Usage, parse, or IO failure: exit status 2."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _load_trust(path: str | None):
    if path is None:
        return None
    return parse_trust(_read(path))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    tree = parse_machine(_read(args.proof))
    report = check(tree, _load_trust(args.trust))
    if args.json:
        payload = {
            "ok": report.ok,
            "violations": [
                {"path": v.path_str, "code": v.code, "message": v.message}
                for v in report.violations
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0 if report.ok else 1
    if report.ok:
        print(_paint("OK", "32"))
        return 0
    for v in report.violations:
        print(f"{v.path_str}: {v.code} {v.message}")
    return 1


_EXTENSIONS = {"latex": ".tex", "nl": ".txt", "machine": ".vproof"}


def cmd_search(args) -> int:
    goal = parse_judgement(args.goal)
    cfg = parse_config(_read(args.config))
    proofs = search(cfg, goal)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for i, proof in enumerate(proofs, start=1):
        if args.format == "latex":
            text = render_latex(proof, scale=args.scale, claim_style=args.claim_style)
        elif args.format == "nl":
            text = render_nl(proof)
        else:
            text = render_machine(proof)
        (out_dir / f"proof-{i:03d}{_EXTENSIONS[args.format]}").write_text(text, encoding="utf-8")
    print(f"{len(proofs)} proofs" if len(proofs) != 1 else "1 proof")
    return 0


def _name_map(pairs: list[str], flag: str) -> dict[str, str]:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise SystemExit2(f"{flag} expects KEY=NAME, got {pair!r}")
        key, _, name = pair.partition("=")
        out[key] = name
    return out


def cmd_render(args) -> int:
    tree = parse_machine(_read(args.proof))
    trust = _load_trust(args.trust)
    if args.format == "latex":
        sys.stdout.write(render_latex(tree, scale=args.scale, claim_style=args.claim_style, trust=trust))
    else:
        sys.stdout.write(
            render_nl(
                tree,
                actor_names=_name_map(args.actor_name, "--actor-name"),
                claim_names=_name_map(args.claim_name, "--claim-name"),
                trust=trust,
            )
        )
    return 0


def _format_weight_long(w: Weight) -> str:
    frac = w.value
    if frac.denominator == 1:
        return str(frac.numerator)
    short = format_weight(w)
    if short == f"{frac.numerator}/{frac.denominator}":
        return f"{short} (~{float(frac):.6g})"
    return f"{frac.numerator}/{frac.denominator} ({short})"


def cmd_trust(args) -> int:
    rel = parse_trust(_read(args.trust_file))
    if args.path:
        actors = [a.strip() for a in args.path.split(",") if a.strip()]
        if not actors:
            raise SystemExit2("--path needs at least one actor")
        print(_format_weight_long(path_weight(rel, actors)))
        return 0
    if not args.source or not args.target:
        raise SystemExit2("trust needs --from and --to (or --path)")
    found = best_trust(rel, args.source, args.target)
    if found is None:
        print("unreachable")
        return 0
    weight, path = found
    print(_format_weight_long(weight))
    if args.verbose:
        print("via " + " -> ".join(path))
    return 0


def cmd_serve(args) -> int:
    import socket

    import uvicorn

    from .service import create_app

    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
        probe.close()
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc.strerror or exc}", file=sys.stderr)
        return 3
    app = create_app(static_dir=args.static, snapshot_dir=args.snapshot_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="veracity", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="re-validate a proof file")
    p.add_argument("proof", help="a .vproof machine-format proof")
    p.add_argument("--trust", help="a .vtrust relation file", default=None)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="enumerate proofs of a goal")
    p.add_argument("--goal", required=True, help='goal judgement, e.g. "e ^ a1 in C /\\\\ C"')
    p.add_argument("--config", required=True, help="a .vcfg search configuration")
    p.add_argument("--format", choices=("latex", "nl", "machine"), default="machine")
    p.add_argument("--out", default="proofs", help="directory for proof-NNN files")
    p.add_argument("--scale", default="1", help="proof-tree scale for latex output")
    p.add_argument("--claim-style", choices=("full", "flat"), default="full")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="render a proof file")
    p.add_argument("proof")
    p.add_argument("--format", choices=("latex", "nl"), required=True)
    p.add_argument("--trust", default=None)
    p.add_argument("--scale", default="1")
    p.add_argument("--claim-style", choices=("full", "flat"), default="full")
    p.add_argument("--actor-name", action="append", default=[], metavar="ACTOR=NAME")
    p.add_argument("--claim-name", action="append", default=[], metavar="CLAIM=NAME")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("trust", help="path and best-path trust weights")
    p.add_argument("trust_file")
    p.add_argument("--from", dest="source", default=None)
    p.add_argument("--to", dest="target", default=None)
    p.add_argument("--path", default=None, help="comma-separated actor path")
    p.add_argument("--verbose", action="store_true", help="also print the best path")
    p.set_defaults(func=cmd_trust)

    p = sub.add_parser("serve", help="host the interactive proof service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory of UI assets to serve")
    p.add_argument("--snapshot-dir", default=None, help="write session snapshots here on shutdown")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BrokenPathError) as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 2
    except SystemExit2 as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 2
    except VeracityError as exc:
        print(f"error: {exc.code} {exc.message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
