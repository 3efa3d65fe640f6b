import numpy as np
import pytest

from codent import catalog
from codent.closure import close_group, common_scale, pack, unpack
from codent.cyclotomic import root_of_unity
from codent.errors import ClosureOverflow, ShapeError
from codent.linalg import CMatrix

z = root_of_unity(1)


def test_cyclic_scalar_group():
    g = close_group([CMatrix.scalar(3, z)])
    assert g.order == 8
    assert CMatrix.identity(3) in g


def test_pack_roundtrip(h_gens):
    for m in h_gens.values():
        s = common_scale([m])
        assert unpack(pack(m, s), s) == m


def test_small_dihedral():
    r = CMatrix.from_rows([[0, -1], [1, 0]])
    f = CMatrix.from_rows([[1, 0], [0, -1]])
    g = close_group([r, f])
    assert g.order == 8
    assert all((a @ b) in g for a in g for b in g)


def test_limit_raises():
    with pytest.raises(ClosureOverflow):
        close_group([CMatrix.scalar(2, z)], limit=4)


def test_rejects_mixed_shapes():
    with pytest.raises(ShapeError):
        close_group([CMatrix.identity(2), CMatrix.identity(3)])


def _subgroup(h_gens):
    return [h_gens["phi_chi"], h_gens["phi_eta_s1"], h_gens["phi_xi_u2"]]


@pytest.mark.parametrize("workers, strategy", [(1, "dfs"), (2, "bfs"), (4, "bfs"), (3, "dfs")])
def test_determinism_across_threads_and_strategy(h_gens, workers, strategy):
    base = close_group(_subgroup(h_gens), workers=1, strategy="bfs")
    other = close_group(_subgroup(h_gens), workers=workers, strategy=strategy, chunk=64)
    assert other.order == base.order
    assert np.array_equal(other.packed, base.packed)


def test_env_var_caps_threads(monkeypatch, h_gens):
    from codent.closure import default_workers

    monkeypatch.setenv("CODENT_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.delenv("CODENT_THREADS")
    assert default_workers() == 1


def test_H_order(H):
    assert H.order == catalog.GROUP_ORDERS["H"] == 294912


def test_H_contains_generators_and_is_closed(H, h_gens):
    for m in h_gens.values():
        assert m in H
    assert H.is_closed(sample=200, rng=np.random.default_rng(0))

