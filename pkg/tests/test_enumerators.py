import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codent import catalog
from codent.codes import GenMatrix, enumerate_code
from codent.cyclotomic import Cyclo8
from codent.enumerators import (
    SWEPoly,
    act,
    coefficient_matrix,
    evaluate,
    is_invariant,
    monomial_from_text,
    swe,
)
from codent.errors import DomainError, EnumerationOverflow
from codent.linalg import CMatrix, det
from codent.ring import F2_Z4, classify


def brute_swe(c1, c2):
    """Direct count of class compositions over all codeword pairs."""
    counts = Counter()
    for u in c1.words:
        for v in c2.words:
            e = [0] * 6
            for x, y in zip(u, v):
                e[classify((int(x), int(y)), F2_Z4).index] += 1
            counts[tuple(e)] += 1
    return SWEPoly(6, dict(counts))


def mono(text, coeff=1):
    return SWEPoly.monomial(monomial_from_text(text), coeff)


def test_swe_matches_direct_count(deg8):
    e8, q8 = catalog.codeset("E8"), catalog.codeset("Q8")
    assert deg8["W_E8_Q8"] == brute_swe(e8, q8)


@pytest.mark.parametrize("name", ["W_E8_Q8", "W_E8_K8"])
def test_degree8_equals_printed(deg8, name):
    assert deg8[name] == catalog.printed_poly(name)


def test_printed_coefficients(deg8):
    w, k = deg8["W_E8_Q8"], deg8["W_E8_K8"]
    assert w.coefficient(monomial_from_text("a^8")) == 1
    assert w.coefficient(monomial_from_text("b^8")) == 32
    assert w.coefficient(monomial_from_text("a^3b^4c")) == 96
    assert w.coefficient(monomial_from_text("ab^2cd^2e^2")) == 576
    assert w.coefficient(monomial_from_text("ab^2ce^2f^2")) == 576
    assert k.coefficient(monomial_from_text("b^8")) == 128
    assert k.coefficient(monomial_from_text("e^8")) == 128
    assert k.coefficient(monomial_from_text("b^4e^4")) == 1792
    assert k.coefficient(monomial_from_text("a^6c^2")) == 28


def test_zero_codes():
    z2 = enumerate_code(GenMatrix(2, 5, ((0,) * 5,)))
    z4 = enumerate_code(GenMatrix(4, 5, ((0,) * 5,)))
    assert swe([z2, z4], F2_Z4) == mono("a^5")


def test_swe_argument_checks():
    with pytest.raises(DomainError):
        swe([catalog.codeset("Q8"), catalog.codeset("E8")], F2_Z4)
    with pytest.raises(EnumerationOverflow):
        swe([catalog.codeset("E8"), catalog.codeset("Q8")], F2_Z4, pairs_limit=100)


def test_masses(deg8, deg16):
    ones = [1] * 6
    for f in deg8.values():
        assert evaluate(f, ones) == 16 * 256
    for f in deg16.values():
        assert evaluate(f, ones) == 256 * 65536
    assert evaluate(mono("a^7"), ones) == 1


def test_multiplicativity(deg8, deg16):
    assert deg16["W_E8_Q8^2"] == deg8["W_E8_Q8"] ** 2
    assert deg16["W_E8_K8^2"] == deg8["W_E8_K8"] ** 2
    assert deg16["W_E8+E8_Q8+K8"] == deg8["W_E8_Q8"] * deg8["W_E8_K8"]


def test_degree8_invariance(deg8, h_gens):
    for f in deg8.values():
        assert is_invariant(f, list(h_gens.values()))


def test_single_monomial_not_invariant(h_gens):
    a8 = mono("a^8")
    moved = act(h_gens["phi_chi"], a8)
    assert len(moved) > 1
    assert not is_invariant(a8, [h_gens["phi_chi"]])


def test_act_composes_as_a_right_action(h_gens, deg8):
    # (A.f)(x) = f(Ax), so A.(B.f) = (BA).f
    f = deg8["W_E8_K8"]
    A, B = h_gens["phi_chi"], h_gens["phi_eta_s1"]
    assert act(A, act(B, f)) == act(B @ A, f)
    g = mono("a^2b") + mono("c^3", 2)
    assert act(A, act(B, g)) == act(B @ A, g)


def test_act_evaluate_compatibility(h_gens, deg8):
    rng = random.Random(7)
    f = deg8["W_E8_Q8"]
    for g in h_gens.values():
        moved = act(g, f)
        for _ in range(100):
            v = [Cyclo8(*(rng.randint(-3, 3) for _ in range(4))) / rng.randint(1, 3) for _ in range(6)]
            assert evaluate(moved, v) == evaluate(f, g.apply(v))


def test_coefficient_matrix_degree8(deg8):
    m = coefficient_matrix([deg8["W_E8_Q8"], deg8["W_E8_K8"]], catalog.DEGREE8_MONOMIALS)
    assert m == CMatrix.from_rows([[1, 32], [1, 128]])
    assert det(m) == 96
    a5 = monomial_from_text("a^5")
    assert coefficient_matrix([mono("a^5")], [a5]) == CMatrix.from_rows([[1]])


def test_coefficient_matrix_degree16(deg16):
    m = coefficient_matrix(list(deg16.values()), catalog.DEGREE16_MONOMIALS)
    assert det(m) != 0


def test_text_roundtrip(deg8):
    for f in deg8.values():
        assert SWEPoly.parse(f.to_text()) == f
        assert SWEPoly.from_json(f.to_json()) == f


def test_parse_cyclotomic_coefficients():
    f = SWEPoly.parse("(1/2*z + z^3)*a^2 - 3*b*c + 1/4*d^2")
    assert f.coefficient(monomial_from_text("a^2")) == Cyclo8(0, Fraction(1, 2), 0, 1)
    assert f.coefficient(monomial_from_text("bc")) == -3
    assert SWEPoly.parse(f.to_text()) == f


def test_monomial_from_text():
    assert monomial_from_text("ac^3d^3f^9") == (1, 0, 3, 3, 0, 9)
    assert monomial_from_text("a*b^2") == (1, 2, 0, 0, 0, 0)


polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(-5, 5), max_size=5
).map(lambda d: SWEPoly(3, d))


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_polynomial_ring_laws(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f) == SWEPoly(3)


@settings(max_examples=100, deadline=None)
@given(polys, st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_act_evaluate_random_matrices(f, point, entries):
    m = CMatrix(3, 3, [Cyclo8(x) for x in entries])
    assert evaluate(act(m, f), point) == evaluate(f, m.apply(point))
