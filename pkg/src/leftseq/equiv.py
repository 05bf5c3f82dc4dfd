"""Equivalence decisions, the FEL-to-SCL translation, and equation catalogs.

Two terms of the same language are equal exactly when their evaluation
trees coincide, so equality is decided by building and comparing trees.
For the pure languages the decision is cross-checked against canonical
forms: tree equality and syntactic identity of the normalized terms must
agree, and a disagreement is reported as an internal error.

The embedded equation catalogs cover the two logics' equation sets, the
conditional-algebra axioms with their short-circuit and full-connective
extensions, the two equations defining the general mixed logic, and the
derived equations used by the normal-form machinery.  ``check_schema``
probes a schema with random closed substitutions and reports the first
counterexample, if any.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .evaltree import Leaf, Node, Trace, Tree, ce, fe, leaf_count, se
from .normalize import fel_normalize, scl_normalize
from .terms import (Atom, AndFull, AndSC, Cond, FalseConst, Not, OrFull,
                    OrSC, Term, TrueConst, Var, atom_occurrences, is_ft_term,
                    is_st_term, parse_open, print_term)

DEFAULT_MAX_ATOMS = 20


class GuardExceeded(RuntimeError):
    """A term has more atom occurrences than the configured cap allows."""

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"term has {count} atom occurrences, guard allows {limit}")


def _guard(t: Term, max_atoms: int) -> None:
    n = atom_occurrences(t)
    if n > max_atoms:
        raise GuardExceeded(n, max_atoms)


@dataclass(frozen=True)
class EquivResult:
    equal: bool
    witness: Optional[Trace]
    lhs_tree_size: int
    rhs_tree_size: int


def _leftmost_trace(x: Tree, prefix: list[tuple[str, bool]]) -> Trace:
    steps = list(prefix)
    while isinstance(x, Node):
        steps.append((x.atom, True))
        x = x.left
    return Trace(tuple(steps), x.label == "T")


def find_witness(x: Tree, y: Tree) -> Optional[Trace]:
    """A trace of ``x`` that is not a trace of ``y`` (or the converse),
    demonstrating that the trees differ; ``None`` when they are equal."""

    def go(a: Tree, b: Tree, prefix: list[tuple[str, bool]]) -> Optional[Trace]:
        if a == b:
            return None
        if isinstance(a, Node) and isinstance(b, Node) and a.atom == b.atom:
            w = go(a.left, b.left, prefix + [(a.atom, True)])
            if w is not None:
                return w
            return go(a.right, b.right, prefix + [(a.atom, False)])
        # structures diverge here; any leftmost continuation of one side
        # fails to replay on the other
        return _leftmost_trace(a, prefix)

    return go(x, y, [])


def _decide(x: Tree, y: Tree) -> EquivResult:
    equal = x == y
    witness = None if equal else find_witness(x, y)
    return EquivResult(equal, witness, leaf_count(x), leaf_count(y))


def equal_ffel(p: Term, q: Term, max_atoms: int = DEFAULT_MAX_ATOMS) -> EquivResult:
    """Decide equality of two FT-terms under full evaluation."""
    if not (is_ft_term(p) and is_ft_term(q)):
        raise ValueError("equal_ffel expects FT-terms")
    _guard(p, max_atoms)
    _guard(q, max_atoms)
    result = _decide(fe(p), fe(q))
    canonical = fel_normalize(p) == fel_normalize(q)
    if canonical != result.equal:
        raise RuntimeError("internal error: canonical forms disagree with tree equality")
    return result


def equal_fscl(p: Term, q: Term, max_atoms: int = DEFAULT_MAX_ATOMS) -> EquivResult:
    """Decide equality of two ST-terms under short-circuit evaluation."""
    if not (is_st_term(p) and is_st_term(q)):
        raise ValueError("equal_fscl expects ST-terms")
    _guard(p, max_atoms)
    _guard(q, max_atoms)
    result = _decide(se(p), se(q))
    canonical = scl_normalize(p) == scl_normalize(q)
    if canonical != result.equal:
        raise RuntimeError("internal error: canonical forms disagree with tree equality")
    return result


def equal_mixed(p: Term, q: Term, max_atoms: int = DEFAULT_MAX_ATOMS) -> EquivResult:
    """Decide equality of two mixed terms (any connectives, conditionals included)."""
    _guard(p, max_atoms)
    _guard(q, max_atoms)
    return _decide(ce(p), ce(q))


# ---------------------------------------------------------------------------
# Translation from full to short-circuit connectives


def _h(t: Term) -> Term:
    if isinstance(t, (Atom, TrueConst, FalseConst)):
        return t
    if isinstance(t, Not):
        return Not(_h(t.operand))
    if isinstance(t, AndFull):
        left, right = _h(t.left), _h(t.right)
        return AndSC(OrSC(left, AndSC(right, FalseConst())), right)
    left, right = _h(t.left), _h(t.right)
    return OrSC(AndSC(left, OrSC(right, TrueConst())), right)


def translate_h(p: Term) -> Term:
    """Translate an FT-term into an ST-term with the same evaluation tree.

    A full conjunction ``x & y`` becomes ``(x || (y && F)) && y``: the left
    disjunct evaluates ``x`` and, when it fails, still runs ``y`` while
    forcing the disjunction to continue, so ``y`` is evaluated exactly once
    on every path.
    """
    if not is_ft_term(p):
        raise ValueError("translate_h expects an FT-term")
    result = _h(p)
    assert se(result) == fe(p), "translation changed the evaluation tree"
    return result


# ---------------------------------------------------------------------------
# Random term generation

_GEN_OPS = {
    "ST": ("not", "andsc", "orsc"),
    "FT": ("not", "andfull", "orfull"),
    "CT": ("cond",),
    "MIXED": ("not", "andsc", "orsc", "andfull", "orfull", "cond"),
}

_MAX_GEN_DEPTH = 10


def _alphabet(size: int) -> list[str]:
    base = "abcdefghijklmnopqrstuvwxyz"
    if size <= len(base):
        return [base[i] for i in range(size)]
    return [base[i] for i in range(len(base))] + [f"a{i}" for i in range(size - len(base))]


def gen_term(language: str, max_atoms: int, alphabet_size: int, seed: int) -> Term:
    """Deterministic random closed term of the given language.

    The result contains at most ``max_atoms`` atom occurrences.  Leaves are
    biased towards constants so absorption laws get exercised.
    """
    language = language.upper()
    if language not in _GEN_OPS:
        raise ValueError(f"unknown language {language!r}")
    if max_atoms < 0 or alphabet_size < 1:
        raise ValueError("max_atoms must be >= 0 and alphabet_size >= 1")
    rng = random.Random(seed)
    names = _alphabet(alphabet_size)
    ops = _GEN_OPS[language]

    def leaf(budget: int) -> Term:
        if budget > 0 and rng.random() < 0.6:
            return Atom(rng.choice(names))
        return TrueConst() if rng.random() < 0.5 else FalseConst()

    def go(budget: int, level: int) -> Term:
        stop_p = min(0.85, 0.10 + 0.17 * level)
        if budget == 0 or level >= _MAX_GEN_DEPTH or rng.random() < stop_p:
            return leaf(budget)
        op = rng.choice(ops)
        if op == "not":
            return Not(go(budget, level + 1))
        if op == "cond":
            b1 = rng.randint(0, budget)
            b2 = rng.randint(0, budget - b1)
            b3 = budget - b1 - b2
            return Cond(go(b1, level + 1), go(b2, level + 1), go(b3, level + 1))
        split = rng.randint(0, budget)
        left = go(split, level + 1)
        right = go(budget - split, level + 1)
        ctor = {"andsc": AndSC, "orsc": OrSC, "andfull": AndFull, "orfull": OrFull}[op]
        return ctor(left, right)

    return go(max_atoms, 0)


# ---------------------------------------------------------------------------
# Equation schemas and catalogs


@dataclass(frozen=True)
class EquationSchema:
    name: str
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]
    logic: str  # FFEL | FSCL | MIXED | CP | CP_s | CP_f


@dataclass(frozen=True)
class Catalog:
    name: str
    schemas: tuple[EquationSchema, ...]


def _variables_of(t: Term) -> list[str]:
    seen: list[str] = []

    def go(s: Term) -> None:
        if isinstance(s, Var):
            if s.name not in seen:
                seen.append(s.name)
        elif isinstance(s, Not):
            go(s.operand)
        elif isinstance(s, (AndSC, OrSC, AndFull, OrFull)):
            go(s.left)
            go(s.right)
        elif isinstance(s, Cond):
            go(s.then)
            go(s.test)
            go(s.orelse)

    go(t)
    return seen


def _schema(name: str, lhs: str, rhs: str, logic: str) -> EquationSchema:
    left, right = parse_open(lhs), parse_open(rhs)
    names = _variables_of(left)
    for v in _variables_of(right):
        if v not in names:
            names.append(v)
    return EquationSchema(name, left, right, tuple(names), logic)


def substitute(t: Term, mapping: dict[str, Term]) -> Term:
    """Replace every schema variable by its image; the result must be closed."""
    if isinstance(t, Var):
        try:
            return mapping[t.name]
        except KeyError:
            raise ValueError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Not):
        return Not(substitute(t.operand, mapping))
    if isinstance(t, (AndSC, OrSC, AndFull, OrFull)):
        return type(t)(substitute(t.left, mapping), substitute(t.right, mapping))
    if isinstance(t, Cond):
        return Cond(substitute(t.then, mapping), substitute(t.test, mapping),
                    substitute(t.orelse, mapping))
    return t


def _catalog(name: str, logic: str, rows: list[tuple[str, str, str]]) -> Catalog:
    return Catalog(name, tuple(_schema(n, l, r, logic) for n, l, r in rows))


CATALOGS: dict[str, Catalog] = {
    "EqFFEL": _catalog("EqFFEL", "FFEL", [
        ("FEL1", "F", "!T"),
        ("FEL2", "X | Y", "!(!X & !Y)"),
        ("FEL3", "!!X", "X"),
        ("FEL4", "(X & Y) & Z", "X & (Y & Z)"),
        ("FEL5", "T & X", "X"),
        ("FEL6", "X & T", "X"),
        ("FEL7", "X & F", "F & X"),
        ("FEL8", "X & F", "!X & F"),
        ("FEL9", "(X & F) | Y", "(X | T) & Y"),
        ("FEL10", "X | (Y & F)", "X & (Y | T)"),
    ]),
    "EqFSCL": _catalog("EqFSCL", "FSCL", [
        ("SCL1", "F", "!T"),
        ("SCL2", "X || Y", "!(!X && !Y)"),
        ("SCL3", "!!X", "X"),
        ("SCL4", "(X && Y) && Z", "X && (Y && Z)"),
        ("SCL5", "T && X", "X"),
        ("SCL6", "X && T", "X"),
        ("SCL7", "F && X", "F"),
        ("SCL8", "X && F", "!X && F"),
        ("SCL9", "(X && F) || Y", "(X || T) && Y"),
        ("SCL10", "(X && Y) || (Z && F)", "(X || (Z && F)) && (Y || (Z && F))"),
    ]),
    "CP": _catalog("CP", "CP", [
        ("CP1", "T ? X : Y", "X"),
        ("CP2", "F ? X : Y", "Y"),
        ("CP3", "X ? T : F", "X"),
        ("CP4", "(Z ? Y : U) ? X : V", "Z ? (Y ? X : V) : (U ? X : V)"),
    ]),
    "CP_s": _catalog("CP_s", "CP_s", [
        ("CPs-not", "!X", "X ? F : T"),
        ("CPs-and", "X && Y", "X ? Y : F"),
        ("CPs-or", "X || Y", "X ? T : Y"),
    ]),
    "CP_f": _catalog("CP_f", "CP_f", [
        ("CPf-not", "!X", "X ? F : T"),
        ("CPf-and", "X & Y", "X ? Y : (Y ? F : F)"),
        ("CPf-or", "X | Y", "X ? (Y ? T : T) : Y"),
    ]),
    "GeneralExt": _catalog("GeneralExt", "MIXED", [
        ("GenExt-and", "X & Y", "(X || (Y && F)) && Y"),
        ("GenExt-or", "X | Y", "(X && (Y || T)) || Y"),
    ]),
    "DerivedLemmas-FEL": _catalog("DerivedLemmas-FEL", "FFEL", [
        ("DFEL1", "X & (Y & F)", "!X & (Y & F)"),
        ("DFEL2", "(X | T) & Y", "!(X | T) | Y"),
        ("DFEL3", "X | (Y & (Z | T))", "(X | Y) & (Z | T)"),
        ("DFEL4", "X & (Y & (Z & F))", "(X | Y) & (Z & F)"),
        ("DFEL5", "!X & (Y | T)", "!(X & (Y | T))"),
    ]),
    "DerivedLemmas-SCL": _catalog("DerivedLemmas-SCL", "FSCL", [
        ("DSCL1", "(X || Y) && (Z && F)", "(!X || (Z && F)) && (Y && (Z && F))"),
        ("DSCL2", "(X || (Y && F)) && (Z && F)", "(!X || (Z && F)) && (Y && F)"),
        ("DSCL3", "(X && (Y || T)) || (Z && F)", "(X || (Z && F)) && (Y || T)"),
        ("DSCL4", "(X || T) && !Y", "!((X || T) && Y)"),
        ("DSCL5", "(X && (Y && (Z || T))) || (W && (Z || T))",
         "((X && Y) || W) && (Z || T)"),
        ("DSCL6", "(X || ((Y || T) && (Z && F))) && ((W || T) && (Z && F))",
         "((X && (W || T)) || (Y || T)) && (Z && F)"),
        ("DSCL7", "(X || ((Y || T) && (Z && F))) && (W && F)",
         "((!X && (Y || T)) || (W && F)) && (Z && F)"),
    ]),
}

# term language used to instantiate schema variables, per logic
_GEN_LANGUAGE = {
    "FFEL": "FT",
    "FSCL": "ST",
    "CP": "CT",
    "CP_s": "MIXED",
    "CP_f": "MIXED",
    "MIXED": "MIXED",
}

_EVALUATOR: dict[str, Callable[[Term], Tree]] = {
    "FFEL": fe,
    "FSCL": se,
    "CP": ce,
    "CP_s": ce,
    "CP_f": ce,
    "MIXED": ce,
}


@dataclass
class Counterexample:
    substitution: dict[str, Term]
    witness: Trace
    lhs: Term
    rhs: Term


@dataclass
class SchemaReport:
    schema: str
    passed: bool
    trials: int
    counterexample: Optional[Counterexample] = None


def check_schema(schema: EquationSchema, trials: int, max_atoms: int,
                 seed: int, alphabet_size: int = 3) -> SchemaReport:
    """Probe an equation schema with random closed substitutions.

    Every variable independently receives a random term of the schema's
    language (at most ``max_atoms`` atom occurrences each).  Both sides are
    evaluated and compared; the first diverging trial is reported as a
    counterexample, which is a report and not an error.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    language = _GEN_LANGUAGE[schema.logic]
    evaluate = _EVALUATOR[schema.logic]
    for trial in range(trials):
        mapping = {v: gen_term(language, max_atoms, alphabet_size, rng.getrandbits(63))
                   for v in schema.variables}
        lhs = substitute(schema.lhs, mapping)
        rhs = substitute(schema.rhs, mapping)
        x, y = evaluate(lhs), evaluate(rhs)
        if x != y:
            witness = find_witness(x, y)
            assert witness is not None
            return SchemaReport(schema.name, False, trial + 1,
                                Counterexample(mapping, witness, lhs, rhs))
    return SchemaReport(schema.name, True, trials)


def catalog_table(names: list[str] | None = None) -> str:
    """Text table of the embedded catalogs: name, lhs, rhs in concrete syntax."""
    lines = []
    for key in (names or list(CATALOGS)):
        catalog = CATALOGS[key]
        for s in catalog.schemas:
            lines.append(f"{catalog.name}\t{s.name}\t{print_term(s.lhs)} = {print_term(s.rhs)}")
    return "\n".join(lines)
