"""Shared strategies and generators for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

import leftseq as L

ATOM_NAMES = ("a", "b", "c")

atoms = st.sampled_from(ATOM_NAMES)
leaves = st.one_of(st.builds(L.Atom, atoms),
                   st.just(L.TrueConst()), st.just(L.FalseConst()))

_BINARY = {
    "ST": (L.AndSC, L.OrSC),
    "FT": (L.AndFull, L.OrFull),
    "MIXED": (L.AndSC, L.OrSC, L.AndFull, L.OrFull),
}


def st_terms(language: str = "MIXED", max_leaves: int = 8):
    """Hypothesis strategy for closed terms of the given language."""

    def extend(children):
        options = []
        if language != "CT":
            options.append(st.builds(L.Not, children))
            for ctor in _BINARY[language]:
                options.append(st.builds(ctor, children, children))
        if language in ("CT", "MIXED"):
            options.append(st.builds(L.Cond, children, children, children))
        return st.one_of(options)

    base = leaves if language != "CT" else st.one_of(
        st.builds(L.Atom, atoms), st.just(L.TrueConst()), st.just(L.FalseConst()))
    return st.recursive(base, extend, max_leaves=max_leaves)


def st_trees(max_leaves: int = 8, labels: tuple[str, ...] = ("T", "F")):
    """Hypothesis strategy for trees with the given leaf labels."""
    base = st.sampled_from([L.Leaf(lbl) for lbl in labels])
    return st.recursive(base, lambda kids: st.builds(L.Node, atoms, kids, kids),
                        max_leaves=max_leaves)


# ---------------------------------------------------------------------------
# Normal-form builders, used by the decomposition tests.  These follow the
# block grammars directly instead of normalizing random terms, so they can
# target specific shapes (a *-term conjunction, a *-term disjunction, ...).


def fel_tterm(rng: random.Random, max_links: int = 2) -> L.Term:
    t: L.Term = L.TrueConst()
    for _ in range(rng.randint(0, max_links)):
        t = L.OrFull(L.Atom(rng.choice(ATOM_NAMES)), t)
    return t


def fel_fterm(rng: random.Random, max_links: int = 2) -> L.Term:
    t: L.Term = L.FalseConst()
    for _ in range(rng.randint(0, max_links)):
        t = L.AndFull(L.Atom(rng.choice(ATOM_NAMES)), t)
    return t


def fel_lterm(rng: random.Random) -> L.Term:
    head: L.Term = L.Atom(rng.choice(ATOM_NAMES))
    if rng.random() < 0.5:
        head = L.Not(head)
    return L.AndFull(head, fel_tterm(rng))


def fel_star(rng: random.Random, depth: int) -> L.Term:
    if depth <= 0 or rng.random() < 0.4:
        return fel_lterm(rng)
    if rng.random() < 0.5:
        return L.AndFull(fel_star(rng, depth - 1), fel_dterm(rng, depth - 1))
    return L.OrFull(fel_star(rng, depth - 1), fel_cterm(rng, depth - 1))


def fel_cterm(rng: random.Random, depth: int) -> L.Term:
    if depth <= 0 or rng.random() < 0.5:
        return fel_lterm(rng)
    return L.AndFull(fel_star(rng, depth - 1), fel_dterm(rng, depth - 1))


def fel_dterm(rng: random.Random, depth: int) -> L.Term:
    if depth <= 0 or rng.random() < 0.5:
        return fel_lterm(rng)
    return L.OrFull(fel_star(rng, depth - 1), fel_cterm(rng, depth - 1))


def scl_tterm(rng: random.Random, depth: int = 1) -> L.Term:
    if depth <= 0 or rng.random() < 0.6:
        return L.TrueConst()
    head = L.AndSC(L.Atom(rng.choice(ATOM_NAMES)), scl_tterm(rng, depth - 1))
    return L.OrSC(head, scl_tterm(rng, depth - 1))


def scl_fterm(rng: random.Random, depth: int = 1) -> L.Term:
    if depth <= 0 or rng.random() < 0.6:
        return L.FalseConst()
    head = L.OrSC(L.Atom(rng.choice(ATOM_NAMES)), scl_fterm(rng, depth - 1))
    return L.AndSC(head, scl_fterm(rng, depth - 1))


def scl_lterm(rng: random.Random) -> L.Term:
    head: L.Term = L.Atom(rng.choice(ATOM_NAMES))
    if rng.random() < 0.5:
        head = L.Not(head)
    return L.OrSC(L.AndSC(head, scl_tterm(rng)), scl_fterm(rng))


def scl_star(rng: random.Random, depth: int) -> L.Term:
    if depth <= 0 or rng.random() < 0.4:
        return scl_lterm(rng)
    if rng.random() < 0.5:
        return L.AndSC(scl_star(rng, depth - 1), scl_dterm(rng, depth - 1))
    return L.OrSC(scl_star(rng, depth - 1), scl_cterm(rng, depth - 1))


def scl_cterm(rng: random.Random, depth: int) -> L.Term:
    if depth <= 0 or rng.random() < 0.5:
        return scl_lterm(rng)
    return L.AndSC(scl_star(rng, depth - 1), scl_dterm(rng, depth - 1))


def scl_dterm(rng: random.Random, depth: int) -> L.Term:
    if depth <= 0 or rng.random() < 0.5:
        return scl_lterm(rng)
    return L.OrSC(scl_star(rng, depth - 1), scl_cterm(rng, depth - 1))


def subterms(t: L.Term):
    yield t
    if isinstance(t, L.Not):
        yield from subterms(t.operand)
    elif isinstance(t, (L.AndSC, L.OrSC, L.AndFull, L.OrFull)):
        yield from subterms(t.left)
        yield from subterms(t.right)
    elif isinstance(t, L.Cond):
        yield from subterms(t.then)
        yield from subterms(t.test)
        yield from subterms(t.orelse)
