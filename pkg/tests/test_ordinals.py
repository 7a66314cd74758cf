"""CNF ordinal arithmetic, the text syntax, and the graded level family."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fhc import iterated
from fhc.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    build_t,
    format_ordinal,
    from_int,
    omega_pow,
    ord_add,
    ord_compare,
    parse_ordinal,
    peel_last,
)


def small_ordinals(depth=2):
    if depth == 0:
        return st.integers(0, 3).map(from_int)
    exps = st.lists(
        st.tuples(small_ordinals(depth - 1), st.integers(1, 3)),
        max_size=3,
    )

    def build(pairs):
        pairs = sorted(
            {tuple(p) for p in pairs}, key=lambda p: p[0], reverse=True
        )
        dedup, seen = [], set()
        for exp, coef in pairs:
            if exp not in seen:
                seen.add(exp)
                dedup.append((exp, coef))
        return Ordinal(tuple(dedup))

    return exps.map(build)


class TestOrdinal:
    def test_canonical_invariant_enforced(self):
        with pytest.raises(ValueError):
            Ordinal(((ZERO, 1), (ONE, 1)))
        with pytest.raises(ValueError):
            Ordinal(((ONE, 0),))

    def test_compare_examples(self):
        assert ord_compare(ZERO, ZERO) == 0
        assert ord_compare(OMEGA, from_int(3)) == 1
        assert ord_compare(parse_ordinal("w^2+1"), parse_ordinal("w^2*2")) == -1

    def test_total_order_dunders(self):
        assert ZERO < ONE < OMEGA < omega_pow(OMEGA)

    @settings(max_examples=100, deadline=None)
    @given(small_ordinals(), small_ordinals(), small_ordinals())
    def test_compare_is_total_order(self, a, b, c):
        assert ord_compare(a, b) == -ord_compare(b, a)
        if a <= b <= c:
            assert a <= c


class TestPeelLast:
    def test_one(self):
        assert peel_last(ONE) == (ZERO, ZERO)

    def test_omega(self):
        assert peel_last(OMEGA) == (ZERO, ONE)

    def test_drops_trailing_term(self):
        assert peel_last(parse_ordinal("w^2*2+w")) == (parse_ordinal("w^2*2"), ONE)

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            peel_last(ZERO)

    @settings(max_examples=100, deadline=None)
    @given(small_ordinals())
    def test_reconstruction(self, a):
        if a.is_zero():
            return
        beta, gamma = peel_last(a)
        assert ord_add(beta, omega_pow(gamma)) == a


class TestSyntax:
    @pytest.mark.parametrize(
        "text",
        ["0", "3", "w", "w*2", "w^2*2+w+3", "w^w", "w^w*2", "w^(w+1)", "w^w^2"],
    )
    def test_round_trip(self, text):
        assert format_ordinal(parse_ordinal(text)) == text

    @pytest.mark.parametrize("bad", ["w+w", "3+w", "1+1", "w*0", "0+1", "", "w^"])
    def test_non_canonical_rejected(self, bad):
        with pytest.raises(ValueError):
            parse_ordinal(bad)

    @settings(max_examples=100, deadline=None)
    @given(small_ordinals())
    def test_format_parse_identity(self, a):
        assert parse_ordinal(format_ordinal(a)) == a


class TestBuildT:
    def test_zero_is_bare_color(self):
        assert build_t(ZERO, 1, 3, 2) == iterated.color_forest(1)

    def test_one_minimizes_to_chain(self):
        t = build_t(ONE, 0, 0, 2)
        m = iterated.iminimize(t)
        chain = iterated.dot_p(iterated.color_forest(0), iterated.color_forest(1), 0)
        assert iterated.colim_equiv(t, chain, 0)
        assert m == iterated.canonical(m)

    def test_omega_is_lifted_successor_one_grade_up(self):
        tw = build_t(OMEGA, 0, 0, 2)
        assert iterated.colim_equiv(tw, iterated.s_lift(build_t(ONE, 0, 0, 2)), 0)
        for m in range(5):
            tm = build_t(from_int(m), 0, 0, 2)
            assert iterated.colim_leq(tm, tw, 0)
            assert not iterated.colim_leq(tw, tm, 0)

    def test_always_join_irreducible_after_minimize(self):
        for text in ["1", "3", "w", "w+1", "w*2", "w^2"]:
            for i in (0, 1):
                t = build_t(parse_ordinal(text), i, 0, 2)
                assert len(iterated.iminimize(t).trees) == 1, (text, i)

    def test_infinite_alphabet_rejected(self):
        with pytest.raises(ValueError, match="finite alphabet"):
            build_t(ONE, 0, 0, None)

    def test_color_range_checked(self):
        with pytest.raises(ValueError):
            build_t(ONE, 2, 0, 2)

    def test_strict_monotonicity_small(self):
        ords = [parse_ordinal(t) for t in ["0", "1", "2", "w", "w+1"]]
        for a, b in itertools.combinations(ords, 2):
            lo, hi = build_t(a, 0, 0, 2), build_t(b, 0, 0, 2)
            assert iterated.colim_leq(lo, hi, 0)
            assert not iterated.colim_leq(hi, lo, 0)

    def test_polarities_incomparable(self):
        for text in ["1", "w", "w*2"]:
            a = build_t(parse_ordinal(text), 0, 0, 2)
            b = build_t(parse_ordinal(text), 1, 0, 2)
            assert not iterated.colim_leq(a, b, 0)
            assert not iterated.colim_leq(b, a, 0)

    def test_k3_successor_spans_all_colors(self):
        t = build_t(ONE, 0, 0, 3)
        assert iterated.colim_equiv(
            iterated.r_drop(iterated.lift(t, 1)), iterated.color_forest(0, 1, 2), 0
        )

    def test_witness_jump_height_tracks_nesting(self):
        # the symbolic complete member of a level sits as many jumps up as
        # the level index nests
        from fhc.terms import encode, jump_height, s_to_g

        for text in ["1", "2", "5", "w", "w+1", "w*2", "w^2", "w^2+w"]:
            t = build_t(parse_ordinal(text), 0, 0, 2)
            assert jump_height(s_to_g(encode(t, 0))) == t.level, text
