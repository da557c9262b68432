import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzelbraid.laurent import ONE, ZERO, LaurentParseError, LaurentPoly2, ZPoly


def poly(*terms):
    out = LaurentPoly2()
    for c, z, a in terms:
        out = out + LaurentPoly2.term(c, z, a)
    return out


HOPF = poly((1, 1, -1), (1, -1, -1), (-1, -1, -3))  # (z+z^-1)a^-1 - z^-1 a^-3


class TestAddMul:
    def test_additive_inverse_cancels(self):
        p = LaurentPoly2.term(1, 1, -1)
        assert (p + (-p)).is_zero()

    def test_one_plus_one(self):
        assert (ONE + ONE) == LaurentPoly2.term(2, 0, 0)

    def test_term_cancellation_in_sum(self):
        # ((z+z^-1)a^-1 - z^-1 a^-3) + z^-1 a^-3 leaves the a^-1 layer only
        assert HOPF + LaurentPoly2.term(1, -1, -3) == poly((1, 1, -1), (1, -1, -1))

    def test_mul_identity(self):
        assert HOPF * ONE == HOPF

    def test_mul_inverse_monomials(self):
        assert LaurentPoly2.term(1, -1, 0) * LaurentPoly2.term(1, 1, 0) == ONE

    def test_hopf_square_a_span(self):
        sq = HOPF * HOPF
        prof = sq.a_profile()
        assert (prof.e, prof.E) == (-6, -2)


class TestProfile:
    def test_hopf_profile(self):
        prof = HOPF.a_profile()
        assert prof.E == -1 and prof.e == -3
        assert prof.p_h == ZPoly({1: 1, -1: 1})
        assert prof.p_l == ZPoly({-1: -1})

    def test_unit_profile(self):
        prof = ONE.a_profile()
        assert prof.E == prof.e == 0
        assert prof.p_h == prof.p_l == ZPoly.one()

    def test_trefoil_like_profile(self):
        p = poly((1, 2, -2), (2, 0, -2), (-1, 0, -4))  # (z^2+2)a^-2 - a^-4
        prof = p.a_profile()
        assert prof.E == -2 and prof.e == -4

    def test_zero_polynomial_has_no_profile(self):
        with pytest.raises(ValueError, match="empty polynomial has no profile"):
            ZERO.a_profile()


class TestSerialization:
    def test_zero(self):
        assert ZERO.serialize() == "0"
        assert LaurentPoly2.parse("0") == ZERO

    def test_unknot(self):
        assert ONE.serialize() == "1"
        assert LaurentPoly2.parse("1") == ONE

    def test_canonical_term_order(self):
        assert HOPF.serialize() == "-1*z^-1*a^-3 + 1*z^-1*a^-1 + 1*z^1*a^-1"

    def test_parse_error_reports_position(self):
        with pytest.raises(LaurentParseError):
            LaurentPoly2.parse("1*z^-1*a^-3 + bogus")

    def test_triples_roundtrip(self):
        assert LaurentPoly2.from_triples(HOPF.to_triples()) == HOPF


ints = st.integers(min_value=-40, max_value=40)
exps = st.integers(min_value=-6, max_value=6)


@st.composite
def polys(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    out = LaurentPoly2()
    for _ in range(n):
        out = out + LaurentPoly2.term(draw(ints), draw(exps), draw(exps))
    return out


@settings(max_examples=120, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=120, deadline=None)
@given(polys(), polys())
def test_profile_degree_additivity(p, q):
    if p.is_zero() or q.is_zero():
        return
    # over the integers leading z-polynomials never annihilate
    assert (p * q).a_profile().E == p.a_profile().E + q.a_profile().E
    assert (p * q).a_profile().e == p.a_profile().e + q.a_profile().e


@settings(max_examples=150, deadline=None)
@given(polys())
def test_parse_serialize_roundtrip(p):
    assert LaurentPoly2.parse(p.serialize()) == p


@settings(max_examples=100, deadline=None)
@given(polys())
def test_mirror_substitution_is_involutive(p):
    assert p.subst_a_neg_inv().subst_a_neg_inv() == p
