"""Term ASTs, the concrete-syntax parser, and the pretty-printer.

One AST covers three term languages plus their mixed union:

* ST  -- short-circuit terms: atoms, T, F, ``!``, ``&&``, ``||``
* FT  -- fully evaluated terms: atoms, T, F, ``!``, ``&``, ``|``
* CT  -- conditional terms: atoms, T, F, ``p ? q : r``

Surface syntax is Java-flavoured.  Precedence, high to low:
``!``, ``&``, ``|``, ``&&``, ``||``, ``?:``.  Binary operators associate
to the left, the conditional to the right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*")
VARIABLE_PATTERN = re.compile(r"[A-Z][A-Za-z0-9_]*")


class Term:
    """Base class for all term nodes.  Instances are immutable."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Atom(Term):
    name: str

    def __post_init__(self) -> None:
        if not ATOM_PATTERN.fullmatch(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True)
class TrueConst(Term):
    pass


@dataclass(frozen=True)
class FalseConst(Term):
    pass


@dataclass(frozen=True)
class Not(Term):
    operand: Term


@dataclass(frozen=True)
class AndSC(Term):
    """Short-circuit conjunction, surface ``&&``."""

    left: Term
    right: Term


@dataclass(frozen=True)
class OrSC(Term):
    """Short-circuit disjunction, surface ``||``."""

    left: Term
    right: Term


@dataclass(frozen=True)
class AndFull(Term):
    """Full conjunction, surface ``&``: the right operand is always evaluated."""

    left: Term
    right: Term


@dataclass(frozen=True)
class OrFull(Term):
    """Full disjunction, surface ``|``."""

    left: Term
    right: Term


@dataclass(frozen=True)
class Cond(Term):
    """Ternary conditional.  ``p ? q : r`` parses to ``Cond(then=q, test=p, orelse=r)``."""

    then: Term
    test: Term
    orelse: Term


@dataclass(frozen=True)
class Var(Term):
    """Schematic variable (uppercase).  Only valid inside equation schemas;
    the evaluators and classifiers reject open terms."""

    name: str

    def __post_init__(self) -> None:
        if not VARIABLE_PATTERN.fullmatch(self.name) or self.name in ("T", "F"):
            raise ValueError(f"invalid variable name: {self.name!r}")


# ---------------------------------------------------------------------------
# Parsing


class ParseError(ValueError):
    """Syntax error with the byte offset and the expected-token set."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<andsc>&&) | (?P<orsc>\|\|)
      | (?P<andf>&)   | (?P<orf>\|)
      | (?P<not>!)    | (?P<qmark>\?) | (?P<colon>:)
      | (?P<lparen>\() | (?P<rparen>\))
      | (?P<name>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unknown character {text[i]!r}", _byte_offset(text, i))
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), _byte_offset(text, i)))
        i = m.end()
    tokens.append(("eof", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_variables: bool):
        if not text.strip():
            raise ParseError("empty input", 0, ("term",))
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_variables = allow_variables

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"unexpected {tok[1]!r}" if tok[0] != "eof" else "unexpected end of input",
                             tok[2], (what,))
        return self.take()

    def parse(self) -> Term:
        t = self.term()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], ("end of input",))
        return t

    def term(self) -> Term:
        return self.cond()

    def cond(self) -> Term:
        test = self.orsc()
        if self.peek()[0] == "qmark":
            self.take()
            then = self.term()
            self.expect("colon", "':'")
            orelse = self.cond()
            return Cond(then, test, orelse)
        return test

    def _binary(self, sub, op_kind: str, ctor) -> Term:
        t = sub()
        while self.peek()[0] == op_kind:
            self.take()
            t = ctor(t, sub())
        return t

    def orsc(self) -> Term:
        return self._binary(self.andsc, "orsc", OrSC)

    def andsc(self) -> Term:
        return self._binary(self.orf, "andsc", AndSC)

    def orf(self) -> Term:
        return self._binary(self.andf, "orf", OrFull)

    def andf(self) -> Term:
        return self._binary(self.unary, "andf", AndFull)

    def unary(self) -> Term:
        tok = self.peek()
        if tok[0] == "not":
            self.take()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Term:
        tok = self.peek()
        if tok[0] == "lparen":
            self.take()
            t = self.term()
            self.expect("rparen", "')'")
            return t
        if tok[0] == "name":
            self.take()
            text = tok[1]
            if text == "T" or text == "true":
                return TrueConst()
            if text == "F" or text == "false":
                return FalseConst()
            if text[0].islower():
                return Atom(text)
            if self.allow_variables:
                return Var(text)
            raise ParseError(f"unexpected {text!r} (uppercase names are reserved for schema variables)",
                             tok[2], ("atom", "'T'", "'F'", "'('", "'!'"))
        raise ParseError(f"unexpected {tok[1]!r}" if tok[0] != "eof" else "unexpected end of input",
                         tok[2], ("atom", "'T'", "'F'", "'('", "'!'"))


def parse(text: str) -> Term:
    """Parse a closed term from concrete syntax."""
    return _Parser(text, allow_variables=False).parse()


def parse_open(text: str) -> Term:
    """Parse a term that may contain uppercase schema variables."""
    return _Parser(text, allow_variables=True).parse()


# ---------------------------------------------------------------------------
# Printing

_PREC_COND = 1
_PREC_ORSC = 2
_PREC_ANDSC = 3
_PREC_ORF = 4
_PREC_ANDF = 5
_PREC_UNARY = 6
_PREC_ATOM = 7

_BINARY_PREC = {OrSC: (_PREC_ORSC, "||"), AndSC: (_PREC_ANDSC, "&&"),
                OrFull: (_PREC_ORF, "|"), AndFull: (_PREC_ANDF, "&")}


def _fmt(t: Term, min_prec: int) -> str:
    if isinstance(t, Atom) or isinstance(t, Var):
        return t.name
    if isinstance(t, TrueConst):
        return "T"
    if isinstance(t, FalseConst):
        return "F"
    if isinstance(t, Not):
        return "!" + _fmt(t.operand, _PREC_UNARY)
    if isinstance(t, Cond):
        s = (f"{_fmt(t.test, _PREC_ORSC)} ? {_fmt(t.then, _PREC_COND)}"
             f" : {_fmt(t.orelse, _PREC_COND)}")
        return f"({s})" if min_prec > _PREC_COND else s
    prec, op = _BINARY_PREC[type(t)]
    s = f"{_fmt(t.left, prec)} {op} {_fmt(t.right, prec + 1)}"
    return f"({s})" if min_prec > prec else s


def print_term(t: Term) -> str:
    """Concrete syntax with minimal parenthesization; inverse of ``parse``."""
    return _fmt(t, _PREC_COND)


# ---------------------------------------------------------------------------
# Language classification

_SC_ONLY = (AndSC, OrSC)
_FULL_ONLY = (AndFull, OrFull)


def _walk(t: Term):
    yield t
    if isinstance(t, Not):
        yield from _walk(t.operand)
    elif isinstance(t, (AndSC, OrSC, AndFull, OrFull)):
        yield from _walk(t.left)
        yield from _walk(t.right)
    elif isinstance(t, Cond):
        yield from _walk(t.then)
        yield from _walk(t.test)
        yield from _walk(t.orelse)


def _require_closed(t: Term) -> None:
    for sub in _walk(t):
        if isinstance(sub, Var):
            raise ValueError(f"open term: contains variable {sub.name!r}")


def is_st_term(t: Term) -> bool:
    """True iff the term uses only short-circuit connectives."""
    _require_closed(t)
    return not any(isinstance(s, _FULL_ONLY + (Cond,)) for s in _walk(t))


def is_ft_term(t: Term) -> bool:
    """True iff the term uses only full connectives."""
    _require_closed(t)
    return not any(isinstance(s, _SC_ONLY + (Cond,)) for s in _walk(t))


def is_ct_term(t: Term) -> bool:
    """True iff the term is built from atoms, constants, and conditionals only."""
    _require_closed(t)
    return all(isinstance(s, (Atom, TrueConst, FalseConst, Cond)) for s in _walk(t))


def classify_language(t: Term) -> set[str]:
    """Every language the term belongs to; ``MIXED`` is always included."""
    langs = {"MIXED"}
    if is_st_term(t):
        langs.add("ST")
    if is_ft_term(t):
        langs.add("FT")
    if is_ct_term(t):
        langs.add("CT")
    return langs


def atom_occurrences(t: Term) -> int:
    """Number of atom occurrences (with multiplicity)."""
    return sum(1 for s in _walk(t) if isinstance(s, Atom))
