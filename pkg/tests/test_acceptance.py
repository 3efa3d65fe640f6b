"""Acceptance criteria 1-9, one test each.

Run ``pytest tests/test_acceptance.py -v`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or ``python tests/test_acceptance.py``.
Set CODENT_SKIP_G=1 to skip the 589824-element closure.
"""

import inspect
import os
import random
import sys
import time

import numpy as np
import pytest

from codent import catalog
from codent.closure import close_group
from codent.codes import enumerate_code, is_self_dual, is_type2
from codent.cyclotomic import ONE, Cyclo8
from codent.enumerators import act, coefficient_matrix, evaluate, is_invariant
from codent.groups import symmetrize
from codent.linalg import CMatrix, det
from codent.molien import expand_formula, fixed_space_dim, molien_series, closed_form
from codent.ring import F2_Z4

RESULTS = {}
SKIP_G = os.environ.get("CODENT_SKIP_G", "") not in ("", "0")

MOLIEN = {0: 1, 8: 2, 16: 6, 24: 20, 32: 46, 40: 96, 48: 195}
SIZES = {"E8": 16, "Q8": 256, "K8": 256, "D16": 256, "K16": 65536}


def record(n, title):
    """Store a PASS/FAIL line for criterion ``n`` around the wrapped test."""

    def wrap(fn):
        def test(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                note = fn(*args, **kwargs)
            except BaseException as exc:
                if isinstance(exc, pytest.skip.Exception):
                    RESULTS[n] = f"SKIP  criterion {n}: {title} ({exc})"
                else:
                    RESULTS[n] = f"FAIL  criterion {n}: {title} ({type(exc).__name__}: {exc})"
                raise
            dt = time.perf_counter() - t0
            RESULTS[n] = f"PASS  criterion {n}: {title} [{dt:.1f}s]" + (f" {note}" if note else "")

        test.__name__ = fn.__name__
        test.__signature__ = inspect.signature(fn)
        return test

    return wrap


@pytest.fixture(scope="module")
def H_timed():
    t0 = time.perf_counter()
    group = close_group(list(catalog.h_generators().values()))
    return group, time.perf_counter() - t0


@pytest.fixture(scope="module")
def H_group(H_timed):
    return H_timed[0]


@pytest.fixture(scope="module")
def w8():
    return catalog.degree8_enumerators()


@pytest.fixture(scope="module")
def w16():
    return catalog.degree16_enumerators()


@record(1, "generator fidelity")
def test_criterion_1_generator_fidelity():
    built = {**catalog.g_generators(), **catalog.h_generators()}
    for name in catalog.PRINTED_MATRICES:
        assert built[name] == catalog.printed_matrix(name), name
    assert built["zeta"] == CMatrix.scalar(8, Cyclo8(0, 1))
    assert built["phi_zeta"] == CMatrix.scalar(6, Cyclo8(0, 1))
    return f"{len(catalog.PRINTED_MATRICES)} printed matrices exact"


@record(2, "group orders")
def test_criterion_2_group_orders(H_timed):
    H, h_time = H_timed
    assert H.order == 294912
    note = f"|H| = 294912 ({h_time:.1f}s)"
    if SKIP_G:
        return note + "; G skipped (CODENT_SKIP_G)"
    t0 = time.perf_counter()
    G = close_group(list(catalog.g_generators().values()))
    assert G.order == 589824
    return note + f", |G| = 589824 ({time.perf_counter() - t0:.1f}s)"


@record(3, "code certification")
def test_criterion_3_codes():
    for name, size in SIZES.items():
        c = catalog.codeset(name)
        assert len(c) == size, name
        assert is_self_dual(c) and is_type2(c), name
    for bparts, qparts in catalog.degree16_recipes().values():
        for parts in (bparts, qparts):
            c = enumerate_code(catalog.summed_code(parts))
            assert is_self_dual(c) and is_type2(c), parts


@record(4, "degree-8 enumerators")
def test_criterion_4_degree8(w8):
    for name, f in w8.items():
        assert f == catalog.printed_poly(name), name


@record(5, "invariance")
def test_criterion_5_invariance(w8, w16):
    gens = list(catalog.h_generators().values())
    for name, f in {**w8, **w16}.items():
        assert is_invariant(f, gens), name


@record(6, "independence")
def test_criterion_6_independence(w8, w16):
    m8 = coefficient_matrix([w8["W_E8_Q8"], w8["W_E8_K8"]], catalog.DEGREE8_MONOMIALS)
    assert m8 == CMatrix.from_rows([[1, 32], [1, 128]])
    assert det(m8) == 96
    d16 = det(coefficient_matrix(list(w16.values()), catalog.DEGREE16_MONOMIALS))
    assert d16 != 0
    return f"det8 = 96, det16 = {d16}"


@record(7, "Molien series")
def test_criterion_7_molien(H_group):
    s48 = molien_series(H_group, 48).as_ints()
    for k in range(49):
        assert s48[k] == MOLIEN.get(k, 0), k
    assert molien_series(H_group, 56).as_ints() == expand_formula(closed_form(), 56).as_ints()


@record(8, "cross-validation")
def test_criterion_8_cross_validation(H_group, w8, w16):
    gens = list(catalog.h_generators().values())
    s = molien_series(H_group, 8).as_ints()
    assert fixed_space_dim(gens, 8) == 2 == s[8]
    assert fixed_space_dim(gens, 1) == 0 == s[1]
    ones = [1] * 6
    for name, f in w8.items():
        assert evaluate(f, ones) == 16 * 256, name
    for name, (bparts, qparts) in catalog.degree16_recipes().items():
        mass = len(enumerate_code(catalog.summed_code(bparts))) * len(enumerate_code(catalog.summed_code(qparts)))
        assert evaluate(w16[name], ones) == mass, name
    assert w8["W_E8_Q8"] * w8["W_E8_Q8"] == w16["W_E8_Q8^2"]


@record(9, "property suites")
def test_criterion_9_properties(w8):
    rng = random.Random(2024)

    def rnd():
        return Cyclo8(*(rng.randint(-9, 9) for _ in range(4))) / rng.randint(1, 6)

    for _ in range(10_000):
        a, b, c = rnd(), rnd(), rnd()
        assert (a * b) * c == a * (b * c) and a * b == b * a
        assert a * (b + c) == a * b + a * c and (a + b) + c == a + (b + c)
        if a:
            assert a * a.inverse() == ONE

    hg = catalog.h_generators()
    for f in w8.values():
        for g in hg.values():
            moved = act(g, f)
            for _ in range(100):
                v = [rnd() for _ in range(6)]
                assert evaluate(moved, v) == evaluate(f, g.apply(v))

    sub = [hg["phi_chi"], hg["phi_eta_s1"], hg["phi_xi_u2"]]
    base = close_group(sub, workers=1)
    for k in (2, 4):
        assert np.array_equal(close_group(sub, workers=k).packed, base.packed)

    gg = catalog.g_generators()
    for a, ma in gg.items():
        for b, mb in gg.items():
            assert symmetrize(ma @ mb, F2_Z4) == hg["phi_" + a] @ hg["phi_" + b]


def summary_lines():
    return [RESULTS.get(n, f"----  criterion {n}: not run") for n in range(1, 10)]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
