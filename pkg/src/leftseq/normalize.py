"""Grammatical classification and normalization for both left-sequential logics.

Each logic has a normal form built from four kinds of blocks:

* T-terms evaluate every atom and always yield true; F-terms always false.
* An l-term packages one determinative atom occurrence (possibly negated)
  with the non-determinative atoms evaluated after it.
* *-terms combine l-terms with conjunctions and disjunctions.
* A normal term is a T-term, an F-term, or ``T-term AND *-term``
  (a T-*-term).

On the full-evaluation side the block grammar is

    T-term ::= T | a | T-term          F-term ::= F | a & F-term
    l-term ::= a & T-term | !a & T-term
    c-term ::= l-term | *-term & d-term
    d-term ::= l-term | *-term | c-term

and on the short-circuit side the blocks carry their own recovery terms:

    T-term ::= T | (a && T-term) || T-term
    F-term ::= F | (a || F-term) && F-term
    l-term ::= (a && T-term) || F-term | (!a && T-term) || F-term

with c-/d-terms as above over ``&&``/``||``.  Bare atoms are deliberately
not normal; ``a`` normalizes to ``T & (a & T)`` resp. ``T && ((a && T) || F)``.

The normalizers are structured as a negation rewriter (``*_fn``), a
conjunction rewriter on already-normal arguments (``*_fc``), and a public
entry point (``*_normalize``) that accepts arbitrary terms of the logic and
eliminates disjunctions through the duality ``x | y = !(!x & !y)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (Atom, AndFull, AndSC, FalseConst, Not, OrFull, OrSC,
                    Term, TrueConst, is_ft_term, is_st_term)


class NormalFormError(ValueError):
    """Raised when an argument is not in the expected normal form."""


@dataclass(frozen=True)
class NormalCategory:
    kind: str
    detail: str | None = None

    def __str__(self) -> str:
        return self.kind if self.detail is None else f"{self.kind}({self.detail})"


TTERM = NormalCategory("TTerm")
FTERM = NormalCategory("FTerm")
LTERM_POS = NormalCategory("LTerm", "positive")
LTERM_NEG = NormalCategory("LTerm", "negative")
STAR_CONJ = NormalCategory("StarTerm", "conjunction")
STAR_DISJ = NormalCategory("StarTerm", "disjunction")
TSTAR = NormalCategory("TStarTerm")
NOT_NORMAL = NormalCategory("NotNormal")


def is_normal(category: NormalCategory) -> bool:
    return category != NOT_NORMAL


# ---------------------------------------------------------------------------
# FEL-side grammar predicates


def _fel_is_tterm(t: Term) -> bool:
    while isinstance(t, OrFull) and isinstance(t.left, Atom):
        t = t.right
    return isinstance(t, TrueConst)


def _fel_is_fterm(t: Term) -> bool:
    while isinstance(t, AndFull) and isinstance(t.left, Atom):
        t = t.right
    return isinstance(t, FalseConst)


def _fel_lterm_polarity(t: Term) -> str | None:
    if isinstance(t, AndFull) and _fel_is_tterm(t.right):
        if isinstance(t.left, Atom):
            return "positive"
        if isinstance(t.left, Not) and isinstance(t.left.operand, Atom):
            return "negative"
    return None


def _fel_is_star(t: Term) -> bool:
    return _fel_is_cterm(t) or _fel_is_dterm(t)


def _fel_is_cterm(t: Term) -> bool:
    if _fel_lterm_polarity(t):
        return True
    return (isinstance(t, AndFull) and _fel_is_star(t.left)
            and _fel_is_dterm(t.right))


def _fel_is_dterm(t: Term) -> bool:
    if _fel_lterm_polarity(t):
        return True
    return (isinstance(t, OrFull) and _fel_is_star(t.left)
            and _fel_is_cterm(t.right))


def classify_fnf(t: Term) -> NormalCategory:
    """The unique normal-form category of an FT-term, or ``NotNormal``."""
    if not is_ft_term(t):
        raise ValueError("classify_fnf expects an FT-term")
    if _fel_is_tterm(t):
        return TTERM
    if _fel_is_fterm(t):
        return FTERM
    polarity = _fel_lterm_polarity(t)
    if polarity:
        return LTERM_POS if polarity == "positive" else LTERM_NEG
    if _fel_is_cterm(t):
        return STAR_CONJ
    if _fel_is_dterm(t):
        return STAR_DISJ
    if isinstance(t, AndFull) and _fel_is_tterm(t.left) and _fel_is_star(t.right):
        return TSTAR
    return NOT_NORMAL


# ---------------------------------------------------------------------------
# FEL-side normalizer


def fel_fn(p: Term) -> Term:
    """Negation rewriter: maps a normal FT-term to a normal term for ``!p``.

    T-terms and F-terms swap roles; a T-*-term keeps its T-term prefix and
    has the negation pushed into its *-term, which is also accepted directly.
    """
    cat = classify_fnf(p)
    if cat == NOT_NORMAL:
        raise NormalFormError(f"not in normal form: {p}")
    if cat == TTERM:
        if isinstance(p, TrueConst):
            return FalseConst()
        return AndFull(p.left, fel_fn(p.right))
    if cat == FTERM:
        if isinstance(p, FalseConst):
            return TrueConst()
        return OrFull(p.left, fel_fn(p.right))
    if cat == TSTAR:
        return AndFull(p.left, _fel_fn_star(p.right))
    return _fel_fn_star(p)


def _fel_fn_star(s: Term) -> Term:
    polarity = _fel_lterm_polarity(s)
    if polarity == "positive":
        return AndFull(Not(s.left), s.right)
    if polarity == "negative":
        return AndFull(s.left.operand, s.right)
    if isinstance(s, AndFull):
        return OrFull(_fel_fn_star(s.left), _fel_fn_star(s.right))
    return AndFull(_fel_fn_star(s.left), _fel_fn_star(s.right))


def fel_fc(p: Term, q: Term) -> Term:
    """Conjunction rewriter: normal form of ``p & q`` for normal ``p``, ``q``."""
    pcat, qcat = classify_fnf(p), classify_fnf(q)
    if pcat not in (TTERM, FTERM, TSTAR) or qcat not in (TTERM, FTERM, TSTAR):
        raise NormalFormError("fel_fc expects T-terms, F-terms, or T-*-terms")
    if pcat == TTERM:
        if isinstance(p, TrueConst):
            return q
        if qcat == TTERM:
            return OrFull(p.left, fel_fc(p.right, q))
        if qcat == FTERM:
            return AndFull(p.left, fel_fc(p.right, q))
        return AndFull(fel_fc(p, q.left), q.right)
    if pcat == FTERM:
        if isinstance(p, FalseConst):
            if qcat == TTERM:
                return fel_fn(q)
            if qcat == FTERM:
                return q
            # F & (T-*-term): commute, the conjunction with F absorbs yields
            return fel_fc(q, FalseConst())
        return AndFull(p.left, fel_fc(p.right, q))
    if qcat == TTERM:
        return AndFull(p.left, _fel_fc_tail(p.right, q))
    if qcat == FTERM:
        return fel_fc(p.left, _fel_fc_flatten(p.right, q))
    return AndFull(p.left, _fel_fc_merge(p.right, q))


def _fel_fc_tail(s: Term, r: Term) -> Term:
    """Push a T-term into the rightmost l-term of a *-term."""
    if _fel_lterm_polarity(s):
        return AndFull(s.left, fel_fc(s.right, r))
    if isinstance(s, AndFull):
        return AndFull(s.left, _fel_fc_tail(s.right, r))
    return OrFull(s.left, _fel_fc_tail(s.right, r))


def _fel_fc_flatten(s: Term, r: Term) -> Term:
    """Convert ``*-term & F-term`` to an F-term; the yields no longer matter,
    so negations on determinative atoms are dropped."""
    polarity = _fel_lterm_polarity(s)
    if polarity == "positive":
        return AndFull(s.left, fel_fc(s.right, r))
    if polarity == "negative":
        return AndFull(s.left.operand, fel_fc(s.right, r))
    # conjunction and disjunction collapse the same way under a false tail
    return _fel_fc_flatten(s.left, _fel_fc_flatten(s.right, r))


def _fel_fc_merge(s: Term, q: Term) -> Term:
    """Conjoin a *-term with a T-*-term ``q``, keeping the result a *-term."""
    prefix, star = q.left, q.right
    if _fel_lterm_polarity(star):
        return AndFull(_fel_fc_tail(s, prefix), star)
    if isinstance(star, AndFull):
        return AndFull(_fel_fc_merge(s, AndFull(prefix, star.left)), star.right)
    return AndFull(_fel_fc_tail(s, prefix), star)


def fel_normalize(t: Term) -> Term:
    """Rewrite any FT-term to its normal form; the evaluation tree is preserved."""
    if not is_ft_term(t):
        raise ValueError("fel_normalize expects an FT-term")
    if isinstance(t, Atom):
        return AndFull(TrueConst(), AndFull(t, TrueConst()))
    if isinstance(t, (TrueConst, FalseConst)):
        return t
    if isinstance(t, Not):
        return fel_fn(fel_normalize(t.operand))
    if isinstance(t, AndFull):
        return fel_fc(fel_normalize(t.left), fel_normalize(t.right))
    # t = left | right, rewritten through !(!left & !right)
    return fel_fn(fel_fc(fel_fn(fel_normalize(t.left)), fel_fn(fel_normalize(t.right))))


# ---------------------------------------------------------------------------
# SCL-side grammar predicates


def _scl_is_tterm(t: Term) -> bool:
    while (isinstance(t, OrSC) and isinstance(t.left, AndSC)
           and isinstance(t.left.left, Atom) and _scl_is_tterm(t.left.right)):
        t = t.right
    return isinstance(t, TrueConst)


def _scl_is_fterm(t: Term) -> bool:
    while (isinstance(t, AndSC) and isinstance(t.left, OrSC)
           and isinstance(t.left.left, Atom) and _scl_is_fterm(t.left.right)):
        t = t.right
    return isinstance(t, FalseConst)


def _scl_lterm_polarity(t: Term) -> str | None:
    if isinstance(t, OrSC) and _scl_is_fterm(t.right) and isinstance(t.left, AndSC):
        head = t.left
        if isinstance(head.left, Atom) and _scl_is_tterm(head.right):
            return "positive"
        if (isinstance(head.left, Not) and isinstance(head.left.operand, Atom)
                and _scl_is_tterm(head.right)):
            return "negative"
    return None


def _scl_is_star(t: Term) -> bool:
    return _scl_is_cterm(t) or _scl_is_dterm(t)


def _scl_is_cterm(t: Term) -> bool:
    if _scl_lterm_polarity(t):
        return True
    return isinstance(t, AndSC) and _scl_is_star(t.left) and _scl_is_dterm(t.right)


def _scl_is_dterm(t: Term) -> bool:
    if _scl_lterm_polarity(t):
        return True
    return isinstance(t, OrSC) and _scl_is_star(t.left) and _scl_is_cterm(t.right)


def classify_snf(t: Term) -> NormalCategory:
    """The unique normal-form category of an ST-term, or ``NotNormal``."""
    if not is_st_term(t):
        raise ValueError("classify_snf expects an ST-term")
    if _scl_is_tterm(t):
        return TTERM
    if _scl_is_fterm(t):
        return FTERM
    polarity = _scl_lterm_polarity(t)
    if polarity:
        return LTERM_POS if polarity == "positive" else LTERM_NEG
    if _scl_is_cterm(t):
        return STAR_CONJ
    if _scl_is_dterm(t):
        return STAR_DISJ
    if isinstance(t, AndSC) and _scl_is_tterm(t.left) and _scl_is_star(t.right):
        return TSTAR
    return NOT_NORMAL


# ---------------------------------------------------------------------------
# SCL-side normalizer


def scl_fn(p: Term) -> Term:
    cat = classify_snf(p)
    if cat == NOT_NORMAL:
        raise NormalFormError(f"not in normal form: {p}")
    if cat == TTERM:
        if isinstance(p, TrueConst):
            return FalseConst()
        # (a && P) || Q  ->  (a || !Q) && !P
        return AndSC(OrSC(p.left.left, scl_fn(p.right)), scl_fn(p.left.right))
    if cat == FTERM:
        if isinstance(p, FalseConst):
            return TrueConst()
        # (a || P) && Q  ->  (a && !Q) || !P
        return OrSC(AndSC(p.left.left, scl_fn(p.right)), scl_fn(p.left.right))
    if cat == TSTAR:
        return AndSC(p.left, _scl_fn_star(p.right))
    return _scl_fn_star(p)


def _scl_fn_star(s: Term) -> Term:
    polarity = _scl_lterm_polarity(s)
    if polarity:
        head, recovery = s.left, s.right
        flipped = head.left.operand if polarity == "negative" else Not(head.left)
        return OrSC(AndSC(flipped, scl_fn(recovery)), scl_fn(head.right))
    if isinstance(s, AndSC):
        return OrSC(_scl_fn_star(s.left), _scl_fn_star(s.right))
    return AndSC(_scl_fn_star(s.left), _scl_fn_star(s.right))


def scl_fc(p: Term, q: Term) -> Term:
    """Conjunction rewriter: normal form of ``p && q`` for normal ``p``, ``q``."""
    pcat, qcat = classify_snf(p), classify_snf(q)
    if pcat not in (TTERM, FTERM, TSTAR) or qcat not in (TTERM, FTERM, TSTAR):
        raise NormalFormError("scl_fc expects T-terms, F-terms, or T-*-terms")
    if pcat == TTERM:
        if isinstance(p, TrueConst):
            return q
        a, pt, qt = p.left.left, p.left.right, p.right
        if qcat == TTERM:
            return OrSC(AndSC(a, scl_fc(pt, q)), scl_fc(qt, q))
        if qcat == FTERM:
            return AndSC(OrSC(a, scl_fc(qt, q)), scl_fc(pt, q))
        return AndSC(scl_fc(p, q.left), q.right)
    if pcat == FTERM:
        # short-circuiting: nothing after a false prefix is ever evaluated
        return p
    if qcat == TTERM:
        return AndSC(p.left, _scl_fc_tail(p.right, q))
    if qcat == FTERM:
        return scl_fc(p.left, _scl_fc_flatten(p.right, q))
    return AndSC(p.left, _scl_fc_merge(p.right, q))


def _scl_fc_tail(s: Term, r: Term) -> Term:
    """Push a T-term into the true-continuations of a *-term."""
    polarity = _scl_lterm_polarity(s)
    if polarity:
        head, recovery = s.left, s.right
        return OrSC(AndSC(head.left, scl_fc(head.right, r)), recovery)
    if isinstance(s, AndSC):
        return AndSC(s.left, _scl_fc_tail(s.right, r))
    # both disjuncts can be the one that yields true, so both absorb r
    return OrSC(_scl_fc_tail(s.left, r), _scl_fc_tail(s.right, r))


def _scl_fc_flatten(s: Term, r: Term) -> Term:
    """Convert ``*-term && F-term`` to an F-term."""
    polarity = _scl_lterm_polarity(s)
    if polarity == "positive":
        head, recovery = s.left, s.right
        return AndSC(OrSC(head.left, recovery), scl_fc(head.right, r))
    if polarity == "negative":
        head, recovery = s.left, s.right
        return AndSC(OrSC(head.left.operand, scl_fc(head.right, r)), recovery)
    if isinstance(s, AndSC):
        return _scl_fc_flatten(s.left, _scl_fc_flatten(s.right, r))
    # s = s1 || s2: when s1 yields true, s2 is skipped, so its false-path
    # must be spliced behind the negation of s1
    return _scl_fc_flatten(scl_fn(_scl_fc_tail(s.left, scl_fn(r))),
                           _scl_fc_flatten(s.right, r))


def _scl_fc_merge(s: Term, q: Term) -> Term:
    prefix, star = q.left, q.right
    if _scl_lterm_polarity(star):
        return AndSC(_scl_fc_tail(s, prefix), star)
    if isinstance(star, AndSC):
        return AndSC(_scl_fc_merge(s, AndSC(prefix, star.left)), star.right)
    return AndSC(_scl_fc_tail(s, prefix), star)


def scl_normalize(t: Term) -> Term:
    """Rewrite any ST-term to its normal form; the evaluation tree is preserved."""
    if not is_st_term(t):
        raise ValueError("scl_normalize expects an ST-term")
    if isinstance(t, Atom):
        return AndSC(TrueConst(), OrSC(AndSC(t, TrueConst()), FalseConst()))
    if isinstance(t, (TrueConst, FalseConst)):
        return t
    if isinstance(t, Not):
        return scl_fn(scl_normalize(t.operand))
    if isinstance(t, AndSC):
        return scl_fc(scl_normalize(t.left), scl_normalize(t.right))
    return scl_fn(scl_fc(scl_fn(scl_normalize(t.left)), scl_fn(scl_normalize(t.right))))
