"""Concrete syntax for claims, evidence, judgements, trust files, and search
configurations.

Claims      atoms are identifiers; ``_|_`` is the impossible claim; the
            connectives are ``/\\`` > ``\\/`` > ``->`` by precedence, with
            ``/\\`` and ``\\/`` left-associative and ``->`` right-associative.
Evidence    ``name``, ``(e1, e2)``, ``i(e)``, ``j(e)``, ``\\x. e``,
            ``app(e1, e2)``, ``cases(e, (x) d, (y) f)``, ``split(e, (x, y) d)``.
            Names bound by an enclosing binder parse as variables; free names
            parse as atoms.
Judgements  ``<evidence> ^ <actor> [@ <weight>] in <claim>`` with the weight
            as a decimal or a fraction; omitted weight means 1.
Trust files a ``relation <name>`` header, then one ``k <name>[w] l`` edge per
            line (``[w]`` optional, default 1).  ``#`` starts a comment.
Configs     ``assume:``, ``trust:``, ``rules:``, ``depth:``, ``max-proofs:``
            sections; items may follow the colon or sit on their own lines.

Printers emit minimal parentheses, so ``parse(print(v)) == v`` on ASTs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    And,
    App,
    Atom,
    Atomic,
    BOTTOM,
    Bottom,
    Cases,
    Claim,
    Evidence,
    Implies,
    Judgement,
    Lambda,
    ONE,
    Or,
    Pair,
    Split,
    TagLeft,
    TagRight,
    TrustEdge,
    TrustRelation,
    Var,
    Weight,
    format_weight,
)
from .errors import ParseError
from .kernel import RuleName
from .search import DEFAULT_SEARCH_RULES, Assumable, ConfigEdge, StepConfig

# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_SYMBOLS = ("/\\", "\\/", "->", "_|_", "(", ")", "[", "]", ",", ".", "^", "@", "\\", "/")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"[0-9]+(\.[0-9]+)?")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "number", "symbol", "eof"
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            m = _NUMBER_RE.match(text, i)
            tokens.append(Token("number", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        sym = next((s for s in _SYMBOLS if text.startswith(s, i)), None)
        if sym is not None:
            tokens.append(Token("symbol", sym, line, col))
            col += len(sym)
            i += len(sym)
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(Token("ident", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at_symbol(self, sym: str) -> bool:
        tok = self.peek()
        return tok.kind == "symbol" and tok.value == sym

    def eat_symbol(self, sym: str) -> bool:
        if self.at_symbol(sym):
            self.next()
            return True
        return False

    def expect_symbol(self, sym: str) -> Token:
        tok = self.peek()
        if tok.kind != "symbol" or tok.value != sym:
            raise ParseError(f"expected {sym!r}, found {tok.value or 'end of input'!r}", tok.line, tok.column)
        return self.next()

    def expect_ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise ParseError(f"expected {what}, found {tok.value or 'end of input'!r}", tok.line, tok.column)
        return self.next()

    def expect_keyword(self, word: str):
        tok = self.expect_ident(f"keyword {word!r}")
        if tok.value != word:
            raise ParseError(f"expected keyword {word!r}, found {tok.value!r}", tok.line, tok.column)

    def expect_eof(self):
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected trailing input {tok.value!r}", tok.line, tok.column)

    # -- claims -------------------------------------------------------------

    def claim(self) -> Claim:
        left = self.claim_or()
        if self.eat_symbol("->"):
            return Implies(left, self.claim())
        return left

    def claim_or(self) -> Claim:
        out = self.claim_and()
        while self.eat_symbol("\\/"):
            out = Or(out, self.claim_and())
        return out

    def claim_and(self) -> Claim:
        out = self.claim_atom()
        while self.eat_symbol("/\\"):
            out = And(out, self.claim_atom())
        return out

    def claim_atom(self) -> Claim:
        tok = self.peek()
        if self.eat_symbol("_|_"):
            return BOTTOM
        if self.eat_symbol("("):
            inner = self.claim()
            self.expect_symbol(")")
            return inner
        if tok.kind == "ident":
            return Atomic(self.next().value)
        raise ParseError(f"expected a claim, found {tok.value or 'end of input'!r}", tok.line, tok.column)

    # -- evidence -----------------------------------------------------------

    _CALL_FORMS = ("i", "j", "app", "cases", "split")

    def evidence(self, scope: tuple[str, ...] = ()) -> Evidence:
        if self.eat_symbol("\\"):
            var = self.expect_ident("bound variable").value
            self.expect_symbol(".")
            return Lambda(var, self.evidence(scope + (var,)))
        return self.evidence_primary(scope)

    def evidence_primary(self, scope: tuple[str, ...]) -> Evidence:
        tok = self.peek()
        if tok.kind == "ident":
            if tok.value in self._CALL_FORMS and self.tokens[self.pos + 1].value == "(":
                return self.call_form(scope)
            self.next()
            return Var(tok.value) if tok.value in scope else Atom(tok.value)
        if self.eat_symbol("("):
            first = self.evidence(scope)
            if self.eat_symbol(","):
                second = self.evidence(scope)
                self.expect_symbol(")")
                return Pair(first, second)
            self.expect_symbol(")")
            return first
        raise ParseError(f"expected evidence, found {tok.value or 'end of input'!r}", tok.line, tok.column)

    def call_form(self, scope: tuple[str, ...]) -> Evidence:
        head = self.expect_ident().value
        self.expect_symbol("(")
        if head == "i":
            inner = self.evidence(scope)
            self.expect_symbol(")")
            return TagLeft(inner)
        if head == "j":
            inner = self.evidence(scope)
            self.expect_symbol(")")
            return TagRight(inner)
        if head == "app":
            fn = self.evidence(scope)
            self.expect_symbol(",")
            arg = self.evidence(scope)
            self.expect_symbol(")")
            return App(fn, arg)
        if head == "cases":
            scrut = self.evidence(scope)
            self.expect_symbol(",")
            lvar, lbody = self.branch(scope)
            self.expect_symbol(",")
            rvar, rbody = self.branch(scope)
            self.expect_symbol(")")
            return Cases(scrut, lvar, lbody, rvar, rbody)
        # split
        scrut = self.evidence(scope)
        self.expect_symbol(",")
        self.expect_symbol("(")
        lvar = self.expect_ident("binder").value
        self.expect_symbol(",")
        rvar = self.expect_ident("binder").value
        self.expect_symbol(")")
        body = self.evidence(scope + (lvar, rvar))
        self.expect_symbol(")")
        return Split(scrut, lvar, rvar, body)

    def branch(self, scope: tuple[str, ...]) -> tuple[str, Evidence]:
        self.expect_symbol("(")
        var = self.expect_ident("binder").value
        self.expect_symbol(")")
        return var, self.evidence(scope + (var,))

    # -- judgements, weights ------------------------------------------------

    def weight(self) -> Weight:
        tok = self.peek()
        if tok.kind != "number":
            raise ParseError(f"expected a weight, found {tok.value or 'end of input'!r}", tok.line, tok.column)
        self.next()
        value = Fraction(tok.value)
        if self.eat_symbol("/"):
            den = self.peek()
            if den.kind != "number" or "." in den.value:
                raise ParseError("expected an integer denominator", den.line, den.column)
            self.next()
            value = value / Fraction(den.value)
        return Weight(value)

    def judgement(self) -> Judgement:
        ev = self.evidence()
        self.expect_symbol("^")
        actor = self.expect_ident("actor").value
        w = ONE
        if self.eat_symbol("@"):
            w = self.weight()
        self.expect_keyword("in")
        return Judgement(ev, actor, self.claim(), w)


# ---------------------------------------------------------------------------
# Public parse functions
# ---------------------------------------------------------------------------


def parse_claim(text: str) -> Claim:
    p = _Parser(text)
    out = p.claim()
    p.expect_eof()
    return out


def parse_evidence(text: str) -> Evidence:
    p = _Parser(text)
    out = p.evidence()
    p.expect_eof()
    return out


def parse_judgement(text: str) -> Judgement:
    p = _Parser(text)
    out = p.judgement()
    p.expect_eof()
    return out


def parse_assumable(text: str) -> Assumable:
    """An assumable is ``name ^ actor in claim`` (no weight, bare name)."""
    p = _Parser(text)
    name = p.expect_ident("evidence name").value
    p.expect_symbol("^")
    actor = p.expect_ident("actor").value
    p.expect_keyword("in")
    claim = p.claim()
    p.expect_eof()
    return Assumable(name, actor, claim)


def _parse_edge(p: _Parser) -> ConfigEdge:
    truster = p.expect_ident("truster").value
    relation = p.expect_ident("relation name").value
    weight = ONE
    if p.eat_symbol("["):
        weight = p.weight()
        p.expect_symbol("]")
    trusted = p.expect_ident("trusted actor").value
    return ConfigEdge(relation, truster, trusted, weight)


def parse_trust_edge(text: str) -> ConfigEdge:
    p = _Parser(text)
    edge = _parse_edge(p)
    p.expect_eof()
    return edge


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_trust(text: str) -> TrustRelation:
    """Parse a ``.vtrust`` document: one relation header, then edges."""
    name = None
    edges: list[TrustEdge] = []
    for lineno, line in _logical_lines(text):
        if name is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "relation":
                raise ParseError("trust file must start with 'relation <name>'", lineno, 1)
            name = parts[1]
            continue
        if line.startswith("relation"):
            raise ParseError("only one relation per trust file", lineno, 1)
        try:
            edge = parse_trust_edge(line)
        except ParseError as exc:
            raise ParseError(f"bad trust edge: {exc.message}", lineno, 1) from exc
        if edge.relation != name:
            raise ParseError(f"edge names relation {edge.relation!r}, expected {name!r}", lineno, 1)
        edges.append(TrustEdge(edge.truster, edge.trusted, edge.weight))
    if name is None:
        raise ParseError("empty trust file", 1, 1)
    try:
        return TrustRelation(name, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from exc


_CONFIG_SECTIONS = ("assume", "trust", "rules", "depth", "max-proofs")
_SECTION_RE = re.compile(r"^(assume|trust|rules|depth|max-proofs)\s*:\s*(.*)$")


def parse_config(text: str) -> StepConfig:
    """Parse a ``.vcfg`` search configuration."""
    items: dict[str, list[tuple[int, str]]] = {s: [] for s in _CONFIG_SECTIONS}
    current = None
    for lineno, line in _logical_lines(text):
        m = _SECTION_RE.match(line)
        if m:
            current = m.group(1)
            rest = m.group(2).strip()
            if rest:
                items[current].append((lineno, rest))
            continue
        if current is None:
            raise ParseError(f"expected a section header, found {line!r}", lineno, 1)
        items[current].append((lineno, line))

    assumables = []
    for lineno, line in items["assume"]:
        try:
            assumables.append(parse_assumable(line))
        except ParseError as exc:
            raise ParseError(f"bad assumable: {exc.message}", lineno, 1) from exc

    edges = []
    pairs: dict[tuple[str, str, str], int] = {}
    for lineno, line in items["trust"]:
        try:
            edge = parse_trust_edge(line)
        except ParseError as exc:
            raise ParseError(f"bad trust edge: {exc.message}", lineno, 1) from exc
        key = (edge.relation, edge.truster, edge.trusted)
        if key in pairs and edge not in edges:
            raise ParseError(
                f"conflicting weights for edge {edge.truster} -> {edge.trusted}", lineno, 1
            )
        pairs[key] = lineno
        edges.append(edge)

    rules = DEFAULT_SEARCH_RULES
    if items["rules"]:
        names = []
        for _, line in items["rules"]:
            names.extend(n for n in re.split(r"[,\s]+", line) if n)
        try:
            rules = frozenset(RuleName(n) for n in names)
        except ValueError:
            bad = next(n for n in names if n not in {r.value for r in RuleName})
            lineno = items["rules"][0][0]
            raise ParseError(f"unknown rule name {bad!r}", lineno, 1) from None

    def single_int(section: str, default: int) -> int:
        entries = items[section]
        if not entries:
            return default
        if len(entries) > 1:
            raise ParseError(f"section {section!r} given more than once", entries[1][0], 1)
        lineno, value = entries[0]
        if not value.isdigit() or int(value) < 1:
            raise ParseError(f"section {section!r} needs a positive integer", lineno, 1)
        return int(value)

    return StepConfig(
        assumables=tuple(dict.fromkeys(assumables)),
        trust_edges=tuple(dict.fromkeys(edges)),
        rules=rules,
        depth_limit=single_int("depth", 5),
        max_proofs=single_int("max-proofs", 100),
    )


# ---------------------------------------------------------------------------
# Printers
# ---------------------------------------------------------------------------

_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_ATOM = 4


def _claim_text(c: Claim, required: int) -> str:
    if isinstance(c, Atomic):
        return c.name
    if isinstance(c, Bottom):
        return "_|_"
    if isinstance(c, And):
        prec = _PREC_AND
        body = f"{_claim_text(c.left, prec)} /\\ {_claim_text(c.right, prec + 1)}"
    elif isinstance(c, Or):
        prec = _PREC_OR
        body = f"{_claim_text(c.left, prec)} \\/ {_claim_text(c.right, prec + 1)}"
    elif isinstance(c, Implies):
        prec = _PREC_IMPLIES
        body = f"{_claim_text(c.antecedent, prec + 1)} -> {_claim_text(c.consequent, prec)}"
    else:
        raise TypeError(f"not a claim: {c!r}")
    return f"({body})" if prec < required else body


def print_claim(c: Claim) -> str:
    return _claim_text(c, 0)


def print_evidence(e: Evidence) -> str:
    if isinstance(e, (Atom, Var)):
        return e.name
    if isinstance(e, Pair):
        return f"({print_evidence(e.left)}, {print_evidence(e.right)})"
    if isinstance(e, TagLeft):
        return f"i({print_evidence(e.value)})"
    if isinstance(e, TagRight):
        return f"j({print_evidence(e.value)})"
    if isinstance(e, Lambda):
        return f"\\{e.var}. {print_evidence(e.body)}"
    if isinstance(e, App):
        return f"app({print_evidence(e.fn)}, {print_evidence(e.arg)})"
    if isinstance(e, Cases):
        return (
            f"cases({print_evidence(e.scrutinee)}, "
            f"({e.left_var}) {print_evidence(e.left_body)}, "
            f"({e.right_var}) {print_evidence(e.right_body)})"
        )
    if isinstance(e, Split):
        return (
            f"split({print_evidence(e.scrutinee)}, "
            f"({e.left_var}, {e.right_var}) {print_evidence(e.body)})"
        )
    raise TypeError(f"not evidence: {e!r}")


def print_judgement(j: Judgement) -> str:
    weight = "" if j.weight == ONE else f" @ {format_weight(j.weight)}"
    return f"{print_evidence(j.evidence)} ^ {j.actor}{weight} in {print_claim(j.claim)}"
