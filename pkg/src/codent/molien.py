"""Molien series of a finite matrix group and direct invariant-space dimensions."""

from __future__ import annotations

import json
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .cyclotomic import ONE, ZERO, Cyclo8
from .data import read_text
from .enumerators import SWEPoly, act
from .errors import DimensionOverflow, InternalError, ShapeError
from .linalg import TPoly, certified_nullspace, char_det

__all__ = [
    "RationalSeries",
    "RationalFormula",
    "molien_series",
    "expand_formula",
    "fixed_space_dim",
    "power_trace_buckets",
    "series_inverse",
    "closed_form",
]

log = logging.getLogger(__name__)

DEFAULT_ORDER = 56
MAX_MONOMIALS = 20349


@dataclass(frozen=True)
class RationalSeries:
    coefficients: tuple

    @property
    def N(self):
        return len(self.coefficients) - 1

    def __getitem__(self, k):
        return self.coefficients[k]

    def as_ints(self):
        out = []
        for c in self.coefficients:
            if Fraction(c).denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            out.append(int(c))
        return out

    def to_json(self):
        return {"order": self.N, "coefficients": [str(c) for c in self.coefficients]}


@dataclass(frozen=True)
class RationalFormula:
    """numerator / denominator, both integer polynomials in t (index = power)."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    @classmethod
    def from_factors(cls, numerator, factors):
        """Denominator given as a product of (1 - t^k)^m for (k, m) in factors."""
        den = [1]
        for k, m in factors:
            for _ in range(m):
                nxt = [0] * (len(den) + k)
                for i, c in enumerate(den):
                    nxt[i] += c
                    nxt[i + k] -= c
                den = nxt
        return cls(tuple(numerator), tuple(den))

    @classmethod
    def from_json(cls, data):
        num = data["numerator"]
        if isinstance(num, dict):
            deg = max(int(k) for k in num)
            num = [num.get(str(i), 0) for i in range(deg + 1)]
        if "denominator_factors" in data:
            return cls.from_factors(num, [tuple(f) for f in data["denominator_factors"]])
        return cls(tuple(num), tuple(data["denominator"]))


def closed_form():
    """The closed-form dimension series shipped with the fixtures."""
    return RationalFormula.from_json(json.loads(read_text("molien_closed_form.json")))


def expand_formula(f, N):
    num = [Fraction(c) for c in f.numerator]
    den = [Fraction(c) for c in f.denominator]
    out = []
    for m in range(N + 1):
        acc = num[m] if m < len(num) else Fraction(0)
        for k in range(1, min(m, len(den) - 1) + 1):
            acc -= den[k] * out[m - k]
        out.append(acc / den[0])
    return RationalSeries(tuple(out))


def series_inverse(p, N):
    """Coefficients of 1/p(t) up to t^N, p(0) = 1."""
    cs = p.coefficients
    if cs[0] != ONE:
        raise ValueError("series_inverse expects constant term 1")
    out = [ONE]
    for m in range(1, N + 1):
        acc = ZERO
        for k in range(1, min(m, len(cs) - 1) + 1):
            if cs[k]:
                acc = acc - cs[k] * out[m - k]
        out.append(acc)
    return out


def _regular_batch(P):
    """(F, 4n, n) packed -> (F, 4n, 4n) regular representations."""
    F, m, n = P.shape
    v = P.reshape(F, n, 4, n)  # [elem, row block i, coefficient r, column k]
    blocks = [v]
    for _ in range(3):
        w = blocks[-1]
        blocks.append(np.stack([-w[:, :, 3], w[:, :, 0], w[:, :, 1], w[:, :, 2]], axis=2))
    R = np.stack(blocks, axis=-1)  # [elem, i, r, k, s]
    return R.reshape(F, 4 * n, 4 * n)


def _power_traces(packed, scale, chunk=8192):
    """Row per element: scaled coefficients of tr(M^k), k = 1..n, as int64 (F, 4n)."""
    F, m, n = packed.shape
    out = np.zeros((F, 4 * n), dtype=np.int64)
    diag_rows = np.array([4 * i + r for i in range(n) for r in range(4)])
    diag_cols = np.array([i for i in range(n) for r in range(4)])
    for start in range(0, F, chunk):
        P = packed[start:start + chunk].astype(np.float64)
        R = _regular_batch(P)
        Q = P
        for k in range(n):
            if k:
                Q = np.rint(R @ Q)
                if np.any(np.fmod(Q, scale)):
                    raise InternalError("group element power left the packing lattice")
                Q = Q / scale
            d = Q[:, diag_rows, diag_cols].reshape(len(P), n, 4).sum(axis=1)
            out[start:start + len(P), 4 * k:4 * k + 4] = np.rint(d).astype(np.int64)
    return out


def _newton_char_det(traces, scale, n):
    """det(I - tM) from power sums p_k = tr(M^k)."""
    p = [Cyclo8.from_ints(traces[4 * k:4 * k + 4], scale) for k in range(n)]
    e = [ONE]
    for k in range(1, n + 1):
        acc = ZERO
        for i in range(1, k + 1):
            term = e[k - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc / k)
    return TPoly([x if k % 2 == 0 else -x for k, x in enumerate(e)])


def power_trace_buckets(group):
    """Map char_det polynomial -> (count, representative index)."""
    traces = _power_traces(group.packed, group.scale)
    uniq, first, counts = np.unique(traces, axis=0, return_index=True, return_counts=True)
    buckets = {}
    for row, idx, cnt in zip(uniq, first, counts):
        poly = _newton_char_det(row.tolist(), group.scale, group.dim)
        c, rep = buckets.get(poly, (0, int(idx)))
        buckets[poly] = (c + int(cnt), rep)
    return buckets


def _finish(total, order):
    out = []
    for k, c in enumerate(total):
        if not c.is_rational():
            raise InternalError(f"Molien coefficient at t^{k} is not rational: {c}")
        q = c.to_fraction() / order
        out.append(q)
    return out


def molien_series(group, N=DEFAULT_ORDER, verify_buckets=True):
    """(1/|G|) sum_g 1/det(I - t g), truncated at t^N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    buckets = power_trace_buckets(group)
    log.info("molien: %d elements in %d char-poly buckets", group.order, len(buckets))
    total = [ZERO] * (N + 1)
    for poly, (count, rep) in sorted(buckets.items(), key=lambda kv: kv[1][1]):
        if verify_buckets and char_det(group.matrix(rep)) != poly:
            raise InternalError("power-trace char poly disagrees with direct char_det")
        inv = series_inverse(poly, N)
        total = [a + b * count for a, b in zip(total, inv)]
    coeffs = _finish(total, group.order)
    for k, c in enumerate(coeffs):
        if c.denominator != 1 or c < 0:
            raise InternalError(f"Molien coefficient at t^{k} is {c}, not a dimension")
    return RationalSeries(tuple(coeffs))


def molien_partial(group, indices, N, bucketed=True):
    """Sum of 1/det(I - t g) over a subset of elements (no 1/|G|)."""
    total = [ZERO] * (N + 1)
    if bucketed:
        sub = group.packed[np.asarray(indices)]
        traces = _power_traces(sub, group.scale)
        uniq, counts = np.unique(traces, axis=0, return_counts=True)
        for row, cnt in zip(uniq, counts):
            inv = series_inverse(_newton_char_det(row.tolist(), group.scale, group.dim), N)
            total = [a + b * int(cnt) for a, b in zip(total, inv)]
    else:
        for i in indices:
            inv = series_inverse(char_det(group.matrix(int(i))), N)
            total = [a + b for a, b in zip(total, inv)]
    return total


# -- invariant subspace dimension ---------------------------------------------

def _monomial_image(m, e):
    n = m.rows
    ne = [0] * n
    c = ONE
    for i, k in enumerate(e):
        if k:
            j = next(j for j, x in enumerate(m.row(i)) if x)
            ne[j] += k
            c = c * m[i, j] ** k
    return tuple(ne), c


def _compositions(n, d):
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _compositions(n - 1, d - a):
            yield (a,) + rest


def _monomial_invariant_basis(mono_gens, nvars, degree):
    """Orbit sums fixed by every monomial generator."""
    seen = set()
    basis = []
    for start in _compositions(nvars, degree):
        if start in seen:
            continue
        vals = {start: ONE}
        queue = deque([start])
        ok = True
        while queue:
            e = queue.popleft()
            for g in mono_gens:
                e2, c = _monomial_image(g, e)
                v = c * vals[e]
                if e2 not in vals:
                    vals[e2] = v
                    queue.append(e2)
                elif vals[e2] != v:
                    ok = False
        seen.update(vals)
        if ok:
            basis.append(SWEPoly(nvars, vals))
    return basis


def fixed_space_dim(generators, degree, max_monomials=MAX_MONOMIALS, return_basis=False):
    """Dimension of the degree-d polynomials fixed by every generator."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    generators = list(generators)
    if not generators:
        raise ShapeError("need at least one generator")
    nvars = generators[0].rows
    if any(g.rows != nvars or g.cols != nvars for g in generators):
        raise ShapeError("generators must be square matrices of one size")
    size = comb(degree + nvars - 1, nvars - 1)
    if size > max_monomials:
        raise DimensionOverflow(f"{size} monomials of degree {degree} exceed {max_monomials}")

    mono = [g for g in generators if g.is_monomial()]
    dense = [g for g in generators if not g.is_monomial()]
    basis = _monomial_invariant_basis(mono, nvars, degree)
    log.info("fixed space: degree %d, %d monomial-group invariants", degree, len(basis))
    for g in dense:
        if not basis:
            break
        diffs = [act(g, b) - b for b in basis]
        monos = sorted({e for d in diffs for e in d.terms})
        pos = {e: i for i, e in enumerate(monos)}
        rows = [[ZERO] * len(basis) for _ in monos]
        for k, d in enumerate(diffs):
            for e, c in d.terms.items():
                rows[pos[e]][k] = Cyclo8.coerce(c)
        kernel = certified_nullspace(rows, len(basis))
        new_basis = []
        for vec in kernel:
            f = SWEPoly(nvars)
            for x, b in zip(vec, basis):
                if x:
                    f = f + b.scale(x)
            new_basis.append(f)
        basis = new_basis
    return (len(basis), basis) if return_basis else len(basis)
