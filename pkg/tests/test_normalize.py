import random

import pytest
from hypothesis import given

import leftseq as L
from leftseq import (AndFull, Not, NormalFormError, classify_fnf,
                     classify_snf, fe, fel_fc, fel_fn, fel_normalize, parse,
                     scl_fc, scl_fn, scl_normalize, se)
from leftseq.normalize import (FTERM, LTERM_NEG, LTERM_POS, NOT_NORMAL,
                               STAR_CONJ, STAR_DISJ, TSTAR, TTERM)

from helpers import (fel_fterm, fel_lterm, fel_star, fel_tterm, scl_fterm,
                     scl_lterm, scl_star, scl_tterm, st_terms)


class TestClassifyFnf:
    def test_normal_form_of_an_atom(self):
        assert classify_fnf(parse("T & (a & T)")) == TSTAR

    def test_bare_atom_is_not_normal(self):
        assert classify_fnf(parse("a")) == NOT_NORMAL

    def test_block_categories(self):
        assert classify_fnf(parse("T")) == TTERM
        assert classify_fnf(parse("a | T")) == TTERM
        assert classify_fnf(parse("a & (b & F)")) == FTERM
        assert classify_fnf(parse("a & T")) == LTERM_POS
        assert classify_fnf(parse("!a & T")) == LTERM_NEG
        assert classify_fnf(parse("(a & T) & (b & T)")) == STAR_CONJ
        assert classify_fnf(parse("(a & T) | (b & T)")) == STAR_DISJ

    def test_not_normal_shapes(self):
        assert classify_fnf(parse("!(a & T)")) == NOT_NORMAL
        assert classify_fnf(parse("(a & T) & T")) == NOT_NORMAL
        assert classify_fnf(parse("F & (a & T)")) == NOT_NORMAL

    def test_wrong_language(self):
        with pytest.raises(ValueError):
            classify_fnf(parse("a && b"))

    @given(st_terms("FT"))
    def test_categories_mutually_exclusive(self, t):
        # at most one block predicate can claim a term
        from leftseq.normalize import (_fel_is_fterm, _fel_is_tterm,
                                       _fel_lterm_polarity)
        claims = [_fel_is_tterm(t), _fel_is_fterm(t),
                  _fel_lterm_polarity(t) is not None]
        assert sum(claims) <= 1


class TestClassifySnf:
    def test_normal_form_of_an_atom(self):
        assert classify_snf(parse("T && ((a && T) || F)")) == TSTAR

    def test_block_categories(self):
        assert classify_snf(parse("T")) == TTERM
        assert classify_snf(parse("(a && T) || T")) == TTERM
        assert classify_snf(parse("(a || F) && F")) == FTERM
        assert classify_snf(parse("(a && T) || F")) == LTERM_POS
        assert classify_snf(parse("(!a && T) || F")) == LTERM_NEG
        left = "((a && T) || F) && ((b && T) || F)"
        assert classify_snf(parse(left)) == STAR_CONJ
        assert classify_snf(parse("((a && T) || F) || ((b && T) || F)")) == STAR_DISJ

    def test_bare_atom_is_not_normal(self):
        assert classify_snf(parse("a")) == NOT_NORMAL

    def test_wrong_language(self):
        with pytest.raises(ValueError):
            classify_snf(parse("a & b"))


class TestFelNegation:
    def test_constants(self):
        assert fel_fn(parse("T")) == parse("F")
        assert fel_fn(parse("F")) == parse("T")

    def test_flips_determinative_atom(self):
        got = fel_fn(parse("T & (a & T)"))
        assert got == parse("T & (!a & T)")
        # semantic oracle: agrees with the normal form of the negated term
        assert fe(got) == fe(Not(parse("T & (a & T)")))

    def test_category_mapping(self):
        rng = random.Random(0)
        for _ in range(50):
            tt, ft = fel_tterm(rng), fel_fterm(rng)
            assert classify_fnf(fel_fn(tt)) == FTERM
            assert classify_fnf(fel_fn(ft)) == TTERM
            ts = AndFull(fel_tterm(rng), fel_star(rng, 2))
            assert classify_fnf(fel_fn(ts)) == TSTAR

    def test_semantics(self):
        rng = random.Random(1)
        for _ in range(50):
            p = AndFull(fel_tterm(rng), fel_star(rng, 2))
            assert fe(fel_fn(p)) == fe(Not(p))

    def test_rejects_not_normal(self):
        with pytest.raises(NormalFormError):
            fel_fn(parse("a"))


class TestFelConjunction:
    def test_true_unit(self):
        q = parse("T & (a & T)")
        assert fel_fc(parse("T"), q) == q

    def test_false_against_true(self):
        # F & T: the second conjunct is negated into an always-false term
        assert fel_fc(parse("F"), parse("T")) == parse("F")

    def test_two_trivial_star_terms(self):
        got = fel_fc(parse("T & (a & T)"), parse("T & (b & T)"))
        assert got == parse("T & ((a & T) & (b & T))")
        assert fe(got) == fe(parse("(T & (a & T)) & (T & (b & T))"))
        assert classify_fnf(got) == TSTAR

    def test_category_contract(self):
        rng = random.Random(2)
        for _ in range(60):
            tt = fel_tterm(rng)
            ft = fel_fterm(rng)
            ts = AndFull(fel_tterm(rng), fel_star(rng, 2))
            other = rng.choice([fel_tterm(rng), fel_fterm(rng),
                                AndFull(fel_tterm(rng), fel_star(rng, 2))])
            assert classify_fnf(fel_fc(tt, other)) == classify_fnf(other)
            assert classify_fnf(fel_fc(ft, other)) == FTERM
            assert classify_fnf(fel_fc(ts, ft)) == FTERM
            assert classify_fnf(fel_fc(ts, tt)) == TSTAR
            other_ts = AndFull(fel_tterm(rng), fel_star(rng, 2))
            assert classify_fnf(fel_fc(ts, other_ts)) == TSTAR

    def test_semantics(self):
        rng = random.Random(3)
        for _ in range(60):
            blocks = [fel_tterm(rng), fel_fterm(rng),
                      AndFull(fel_tterm(rng), fel_star(rng, 2))]
            p, q = rng.choice(blocks), rng.choice(blocks)
            assert fe(fel_fc(p, q)) == fe(AndFull(p, q))

    def test_rejects_not_normal(self):
        with pytest.raises(NormalFormError):
            fel_fc(parse("a"), parse("T"))


class TestFelNormalize:
    def test_atom(self):
        assert fel_normalize(parse("a")) == parse("T & (a & T)")

    def test_constants(self):
        assert fel_normalize(parse("T")) == parse("T")
        assert fel_normalize(parse("F")) == parse("F")

    def test_negated_atom(self):
        got = fel_normalize(parse("!a"))
        assert got == parse("T & (!a & T)")
        assert fe(got) == fe(parse("!a"))

    def test_wrong_language(self):
        with pytest.raises(ValueError):
            fel_normalize(parse("a && b"))

    @given(st_terms("FT"))
    def test_preserves_semantics_and_lands_in_grammar(self, t):
        nf = fel_normalize(t)
        assert fe(nf) == fe(t)
        assert classify_fnf(nf) in (TTERM, FTERM, TSTAR)

    @given(st_terms("FT"))
    def test_idempotent(self, t):
        nf = fel_normalize(t)
        assert fel_normalize(nf) == nf

    @given(st_terms("FT", max_leaves=5), st_terms("FT", max_leaves=5))
    def test_canonical(self, s, t):
        assert (fe(s) == fe(t)) == (fel_normalize(s) == fel_normalize(t))

    @given(st_terms("FT", max_leaves=5), st_terms("FT", max_leaves=5))
    def test_disjunction_via_duality(self, p, q):
        assert fel_normalize(L.OrFull(p, q)) == fel_normalize(Not(AndFull(Not(p), Not(q))))


class TestSclNegation:
    def test_flips_determinative_atom(self):
        got = scl_fn(parse("T && ((a && T) || F)"))
        assert got == parse("T && ((!a && T) || F)")
        assert se(got) == se(Not(parse("T && ((a && T) || F)")))

    def test_category_mapping(self):
        rng = random.Random(4)
        for _ in range(40):
            assert classify_snf(scl_fn(scl_tterm(rng, 2))) == FTERM
            assert classify_snf(scl_fn(scl_fterm(rng, 2))) == TTERM
            ts = L.AndSC(scl_tterm(rng), scl_star(rng, 2))
            assert classify_snf(scl_fn(ts)) == TSTAR
            assert se(scl_fn(ts)) == se(Not(ts))


class TestSclConjunction:
    def test_false_absorbs(self):
        for q in ("T", "F", "T && ((a && T) || F)"):
            assert scl_fc(parse("F"), parse(q)) == parse("F")
        fterm = parse("(a || F) && F")
        assert scl_fc(fterm, parse("T")) == fterm

    def test_category_contract(self):
        rng = random.Random(5)
        for _ in range(40):
            tt = scl_tterm(rng, 2)
            ft = scl_fterm(rng, 2)
            ts = L.AndSC(scl_tterm(rng), scl_star(rng, 2))
            other = rng.choice([scl_tterm(rng, 2), scl_fterm(rng, 2),
                                L.AndSC(scl_tterm(rng), scl_star(rng, 2))])
            assert classify_snf(scl_fc(tt, other)) == classify_snf(other)
            assert classify_snf(scl_fc(ft, other)) == FTERM
            assert classify_snf(scl_fc(ts, ft)) == FTERM
            assert classify_snf(scl_fc(ts, tt)) == TSTAR
            other_ts = L.AndSC(scl_tterm(rng), scl_star(rng, 2))
            assert classify_snf(scl_fc(ts, other_ts)) == TSTAR

    def test_semantics(self):
        rng = random.Random(6)
        for _ in range(60):
            blocks = [scl_tterm(rng, 2), scl_fterm(rng, 2),
                      L.AndSC(scl_tterm(rng), scl_star(rng, 2))]
            p, q = rng.choice(blocks), rng.choice(blocks)
            assert se(scl_fc(p, q)) == se(L.AndSC(p, q))


class TestSclNormalize:
    def test_atom(self):
        assert scl_normalize(parse("a")) == parse("T && ((a && T) || F)")

    def test_wrong_language(self):
        with pytest.raises(ValueError):
            scl_normalize(parse("a | b"))

    @given(st_terms("ST"))
    def test_preserves_semantics_and_lands_in_grammar(self, t):
        nf = scl_normalize(t)
        assert se(nf) == se(t)
        assert classify_snf(nf) in (TTERM, FTERM, TSTAR)

    @given(st_terms("ST"))
    def test_idempotent(self, t):
        nf = scl_normalize(t)
        assert scl_normalize(nf) == nf

    @given(st_terms("ST", max_leaves=5), st_terms("ST", max_leaves=5))
    def test_canonical(self, s, t):
        assert (se(s) == se(t)) == (scl_normalize(s) == scl_normalize(t))

    @given(st_terms("ST", max_leaves=5), st_terms("ST", max_leaves=5))
    def test_disjunction_via_duality(self, p, q):
        assert scl_normalize(L.OrSC(p, q)) == scl_normalize(Not(L.AndSC(Not(p), Not(q))))
