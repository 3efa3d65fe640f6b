"""Finite matrix group closure over Q(z8) in a packed integer layout.

A matrix M (n x n) is stored as the (4n, n) integer array whose entry
[4i + r, j] is s * (coefficient of z^r in M[i, j]) for a common scale s.
Left multiplication by a fixed generator G is then one real matrix
product with the (4n, 4n) regular representation of G, which BLAS does
exactly as long as the integers stay far below 2^53.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .cyclotomic import Cyclo8
from .errors import ClosureOverflow, InternalError, ShapeError
from .linalg import CMatrix

__all__ = ["GroupClosure", "close_group", "default_workers", "pack", "unpack", "regular", "common_scale"]

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 2_000_000
CHUNK = 16384


def common_scale(mats):
    s = 1
    for m in mats:
        for e in m.entries:
            s = lcm(s, e.denominator)
    return s


def pack(m, scale):
    n = m.rows
    out = np.zeros((4 * n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            e = m[i, j]
            if e:
                if scale % e.denominator:
                    raise ValueError(f"scale {scale} does not clear denominator {e.denominator}")
                f = scale // e.denominator
                out[4 * i:4 * i + 4, j] = [x * f for x in e.numerators]
    return out


def unpack(arr, scale):
    arr = np.asarray(arr)
    n = arr.shape[1]
    return CMatrix(n, n, [Cyclo8.from_ints(arr[4 * i:4 * i + 4, j].tolist(), scale)
                          for i in range(n) for j in range(n)])


def _mul_by_z(v):
    # coefficients of v * z for v in the basis 1, z, z^2, z^3
    return np.array([-v[3], v[0], v[1], v[2]])


def regular(m, scale):
    """(4n, 4n) array R with pack(M X) = R @ pack(X) / scale."""
    p = pack(m, scale)
    n = m.rows
    out = np.zeros((4 * n, 4 * n), dtype=np.int64)
    for i in range(n):
        for k in range(n):
            v = p[4 * i:4 * i + 4, k]
            for s in range(4):
                out[4 * i:4 * i + 4, 4 * k + s] = v
                v = _mul_by_z(v)
    return out


@dataclass
class GroupClosure:
    """Elements of a finite matrix group, packed and sorted by key."""

    generators: list
    scale: int
    packed: np.ndarray  # (order, 4n, n), small integers
    dim: int
    _index: dict = field(default=None, repr=False)

    @property
    def order(self):
        return len(self.packed)

    def __len__(self):
        return self.order

    def matrix(self, i):
        return unpack(self.packed[i], self.scale)

    def __iter__(self):
        for i in range(self.order):
            yield self.matrix(i)

    def key(self, m):
        return _key_of(pack(m, self.scale), self.packed.dtype)

    def keys(self):
        flat = np.ascontiguousarray(self.packed).reshape(self.order, -1)
        return [bytes(r) for r in flat]

    def __contains__(self, m):
        if not isinstance(m, CMatrix) or m.rows != self.dim:
            return False
        try:
            k = self.key(m)
        except ValueError:
            return False
        if self._index is None:
            self._index = {k2: i for i, k2 in enumerate(self.keys())}
        return k in self._index

    def is_closed(self, sample=None, rng=None):
        """Check g * x in the group for every generator g and (sampled) element x."""
        idx = range(self.order) if sample is None else \
            (rng or np.random.default_rng(0)).choice(self.order, size=min(sample, self.order), replace=False)
        if self._index is None:
            self._index = {k2: i for i, k2 in enumerate(self.keys())}
        regs = [regular(g, self.scale).astype(np.float64) for g in self.generators]
        for i in idx:
            x = self.packed[i].astype(np.float64)
            for r in regs:
                y = np.rint(r @ x).astype(np.int64)
                if np.any(y % self.scale):
                    return False
                if _key_of(y // self.scale, self.packed.dtype) not in self._index:
                    return False
        return True


def _key_of(arr, dtype):
    return bytes(np.ascontiguousarray(arr.astype(dtype)).reshape(-1))


class _NeedsRescale(Exception):
    pass


def _products(regs, chunk, scale):
    """All generator images of a chunk (F, 4n, n) -> (len(regs) * F, 4n, n) int64."""
    F, m, n = chunk.shape
    x = chunk.transpose(1, 0, 2).reshape(m, F * n).astype(np.float64)
    outs = []
    for r in regs:
        y = r @ x
        yi = np.rint(y).astype(np.int64)
        if np.any(yi % scale):
            raise _NeedsRescale
        outs.append((yi // scale).reshape(m, F, n).transpose(1, 0, 2))
    return np.concatenate(outs)


def _close(generators, scale, limit, workers, strategy, chunk):
    n = generators[0].rows
    regs = [regular(g, scale).astype(np.float64) for g in generators]
    if max(np.abs(r).max() for r in regs) * scale * 4 * n >= 2**52:
        raise InternalError("scale too large for exact float64 products")
    dtype = np.int8 if scale <= 127 else np.int16
    ident = pack(CMatrix.identity(n), scale)
    seen = {_key_of(ident, dtype)}
    found = [ident[None].astype(dtype)]
    pending = [ident[None]]
    pool = ThreadPoolExecutor(max_workers=workers) if workers and workers > 1 else None
    try:
        while pending:
            if strategy == "bfs":
                layer = np.concatenate(pending)
                pending = []
            elif strategy == "dfs":
                layer = pending.pop()
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            chunks = [layer[i:i + chunk] for i in range(0, len(layer), chunk)]
            if pool is not None:
                results = list(pool.map(lambda c: _products(regs, c, scale), chunks))
            else:
                results = (_products(regs, c, scale) for c in chunks)
            new_layer = []
            for cand in results:
                if np.abs(cand).max() > np.iinfo(dtype).max:
                    raise _NeedsRescale
                small = np.ascontiguousarray(cand.astype(dtype))
                flat = small.reshape(len(small), -1)
                view = flat.view(np.dtype((np.void, flat.shape[1])))
                _, first = np.unique(view, return_index=True)
                first.sort()
                keep = []
                for i in first:
                    k = flat[i].tobytes()
                    if k not in seen:
                        seen.add(k)
                        keep.append(i)
                if len(seen) > limit:
                    raise ClosureOverflow(f"group has more than {limit} elements")
                if keep:
                    fresh = small[keep]
                    found.append(fresh)
                    new_layer.append(fresh.astype(np.int64))
            if new_layer:
                pending.append(np.concatenate(new_layer))
            log.debug("closure: %d elements, %d pending", len(seen), sum(len(p) for p in pending))
    finally:
        if pool is not None:
            pool.shutdown()
    packed = np.concatenate(found)
    flat = packed.reshape(len(packed), -1)
    order = np.lexsort(flat.T[::-1])
    return packed[order]


def default_workers():
    """Thread count from CODENT_THREADS, else 1."""
    raw = os.environ.get("CODENT_THREADS", "")
    return max(1, int(raw)) if raw.strip() else 1


def close_group(generators, limit=DEFAULT_LIMIT, workers=None, strategy="bfs", chunk=CHUNK):
    """Closure of the generators under left multiplication.

    ``workers`` defaults to :func:`default_workers`. The element order of
    the result does not depend on ``workers`` or ``strategy``.
    """
    if workers is None:
        workers = default_workers()
    generators = list(generators)
    if not generators:
        raise ShapeError("need at least one generator")
    n = generators[0].rows
    for g in generators:
        if not isinstance(g, CMatrix) or g.rows != n or g.cols != n:
            raise ShapeError("generators must be square matrices of one size")
    scale = common_scale(generators)
    while True:
        try:
            packed = _close(generators, scale, limit, workers, strategy, chunk)
            break
        except _NeedsRescale:
            log.info("closure: raising packing scale from %d to %d", scale, 2 * scale)
            scale *= 2
    return GroupClosure(generators, scale, packed, n)
