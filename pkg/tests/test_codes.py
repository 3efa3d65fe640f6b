import itertools

import numpy as np
import pytest

from codent import catalog
from codent.codes import (
    CATALOG,
    GenMatrix,
    direct_sum,
    enumerate_code,
    is_self_dual,
    is_type2,
)
from codent.errors import DomainError, EnumerationOverflow

SIZES = {"E8": 16, "Q8": 256, "K8": 256, "D16": 256, "K16": 65536}


def brute_span(g):
    """Every Z_m combination of the rows; fine for a handful of rows."""
    rows = np.asarray(g.rows, dtype=np.int64)
    out = set()
    for coeffs in itertools.product(range(g.modulus), repeat=len(rows)):
        out.add(tuple(int(x) for x in (np.asarray(coeffs) @ rows) % g.modulus))
    return out


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_sizes(name):
    assert len(catalog.codeset(name)) == SIZES[name]


@pytest.mark.parametrize("name", ["E8", "Q8", "K8"])
def test_enumeration_matches_brute_force(name):
    g = catalog.code(name)
    words = {tuple(int(x) for x in w) for w in catalog.codeset(name).words}
    assert words == brute_span(g)


@pytest.mark.parametrize("name", ["E8", "Q8", "K8", "D16"])
def test_enumeration_methods_agree(name):
    g = catalog.code(name)
    a = enumerate_code(g, method="incremental")
    b = enumerate_code(g, method="closure")
    assert np.array_equal(a.words, b.words)


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_codes_are_type2(name):
    c = catalog.codeset(name)
    assert is_self_dual(c)
    assert is_type2(c)


def test_binary_weights_divisible_by_four():
    c = catalog.codeset("E8")
    assert set(int(x) for x in c.words.sum(axis=1) % 4) == {0}


def test_k8_norms():
    c = catalog.codeset("K8")
    assert np.all(c.norms() % 8 == 0)


def test_k16_structure():
    # one row of additive order 4, fourteen of order 2
    g = catalog.code("K16")
    orders = sorted(2 if all(2 * x % 4 == 0 for x in r) else 4 for r in g.rows)
    assert orders == [2] * 14 + [4]


def test_small_negative_examples():
    half = enumerate_code(GenMatrix(2, 2, ((1, 0),)))
    assert not is_self_dual(half)
    rep = enumerate_code(GenMatrix(2, 2, ((1, 1),)))
    assert is_self_dual(rep)
    assert not is_type2(rep)


def test_direct_sum_sizes():
    ee = enumerate_code(direct_sum(catalog.code("E8"), catalog.code("E8")))
    assert ee.n == 16 and len(ee) == 256 and is_type2(ee)
    qk = enumerate_code(direct_sum(catalog.code("Q8"), catalog.code("K8")))
    assert qk.n == 16 and len(qk) == 65536 and is_type2(qk)


def test_direct_sum_with_zero_code():
    e8 = catalog.code("E8")
    zero = GenMatrix(2, 3, ((0, 0, 0),))
    s = enumerate_code(direct_sum(e8, zero))
    assert s.n == 11
    assert np.array_equal(s.words[:, :8], catalog.codeset("E8").words)
    assert not s.words[:, 8:].any()


def test_direct_sum_rejects_mixed_moduli():
    with pytest.raises(DomainError):
        direct_sum(catalog.code("E8"), catalog.code("Q8"))


def test_genmatrix_validation():
    with pytest.raises(DomainError):
        GenMatrix(4, 2, ((1, 4),))
    with pytest.raises(DomainError):
        GenMatrix(3, 1, ((1,),))
    g = catalog.code("Q8")
    assert GenMatrix.from_json(g.to_json()) == g


def test_enumeration_limit():
    with pytest.raises(EnumerationOverflow):
        enumerate_code(catalog.code("K16"), limit=1000)
