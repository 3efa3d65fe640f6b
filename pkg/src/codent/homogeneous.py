"""Exact linear substitution into homogeneous polynomials, multi-modularly.

Coefficients live in Z[z8] after clearing denominators. For a prime
p = 1 (mod 8) the ring Z[z8]/p splits as four copies of F_p (one per
embedding z -> w^(2t+1)), so all arithmetic runs channelwise in int64.
Enough primes are taken to cover an a-priori bound on the result, and
the exact integers are recovered by inverting the embeddings and CRT.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, lcm, prod

import numpy as np

from .cyclotomic import Cyclo8

__all__ = ["MonomialBasis", "substitute_homogeneous", "modular_primes"]

_PRIME_BITS = 30


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def modular_primes(count):
    """Largest ``count`` primes below 2^30 that are 1 mod 8, with an 8th root of unity each."""
    out = []
    p = (1 << _PRIME_BITS) - 7  # = 1 mod 8
    while len(out) < count:
        if _is_prime(p):
            for a in range(2, 200):
                w = pow(a, (p - 1) // 8, p)
                if pow(w, 4, p) == p - 1:
                    out.append((p, w))
                    break
        p -= 8
    return tuple(out)


class MonomialBasis:
    """Monomials of one degree in ``nvars`` variables, with fast ranking."""

    def __init__(self, nvars, degree):
        self.nvars = nvars
        self.degree = degree
        self.base = degree + 1
        exps = _compositions(nvars, degree)
        self.exps = exps
        self.keys = self.pack(exps)
        order = np.argsort(self.keys)
        self._sorted_keys = self.keys[order]
        self._order = order

    def __len__(self):
        return len(self.exps)

    def pack(self, exps):
        exps = np.asarray(exps, dtype=np.int64).reshape(-1, self.nvars)
        weights = self.base ** np.arange(self.nvars, dtype=np.int64)
        return exps @ weights

    def index(self, exps):
        keys = self.pack(exps)
        pos = np.searchsorted(self._sorted_keys, keys)
        if np.any(pos >= len(self._sorted_keys)) or np.any(self._sorted_keys[np.minimum(pos, len(self) - 1)] != keys):
            raise KeyError("exponent vector of the wrong degree")
        return self._order[pos]


def _compositions(nvars, degree):
    # graded-lex order: first variable's exponent descending
    if nvars == 1:
        return np.array([[degree]], dtype=np.int64)
    blocks = []
    for a in range(degree, -1, -1):
        rest = _compositions(nvars - 1, degree - a)
        blocks.append(np.hstack([np.full((len(rest), 1), a, dtype=np.int64), rest]))
    return np.vstack(blocks)


@lru_cache(maxsize=64)
def _basis(nvars, degree):
    return MonomialBasis(nvars, degree)


@lru_cache(maxsize=64)
def _shift(nvars, degree):
    """shift[j][i] = index in degree+1 of monomial i (degree) times x_j."""
    src = _basis(nvars, degree)
    dst = _basis(nvars, degree + 1)
    out = []
    for j in range(nvars):
        e = src.exps.copy()
        e[:, j] += 1
        out.append(dst.index(e))
    return out


class _Channels:
    """The 4*len(primes) embeddings of Z[z8] into prime fields."""

    def __init__(self, nprimes):
        self.primes = modular_primes(nprimes)
        mods, emb = [], []
        for p, w in self.primes:
            for t in range(4):
                mods.append(p)
                emb.append([pow(w, (2 * t + 1) * r, p) for r in range(4)])
        self.mod = np.array(mods, dtype=np.int64)
        self.emb = np.array(emb, dtype=np.int64)  # (K, 4)
        self.K = len(mods)

    def encode(self, ints):
        """(N, 4) Python-int array-like -> (N, K) channel residues."""
        rows = [list(r) for r in ints]
        out = np.zeros((len(rows), self.K), dtype=np.int64)
        for ci, (p, _) in enumerate(self.primes):
            red = np.array([[x % p for x in r] for r in rows], dtype=np.int64).reshape(-1, 4)
            block = np.zeros((len(rows), 4), dtype=np.int64)
            for r in range(4):
                block = (block + red[:, r:r + 1] * self.emb[4 * ci:4 * ci + 4, r][None, :]) % p
            out[:, 4 * ci:4 * ci + 4] = block
        return out

    def decode(self, vals):
        """(N, K) residues -> list of 4-tuples of integers (symmetric CRT lift)."""
        n = vals.shape[0]
        per_prime = []
        for ci, (p, w) in enumerate(self.primes):
            v = vals[:, 4 * ci:4 * ci + 4]
            inv4 = pow(4, -1, p)
            comps = np.zeros((n, 4), dtype=np.int64)
            for r in range(4):
                acc = np.zeros(n, dtype=np.int64)
                for t in range(4):
                    c = pow(w, (-(2 * t + 1) * r) % 8, p)
                    acc = (acc + v[:, t] * c) % p
                comps[:, r] = acc * inv4 % p
            per_prime.append((p, comps))
        modulus = prod(p for p, _ in self.primes)
        out = []
        coeffs = []
        for p, _ in per_prime:
            m = modulus // p
            coeffs.append(m * pow(m, -1, p))
        half = modulus // 2
        for i in range(n):
            row = []
            for r in range(4):
                x = sum(int(comps[i, r]) * c for (p, comps), c in zip(per_prime, coeffs)) % modulus
                if x > half:
                    x -= modulus
                row.append(x)
            out.append(tuple(row))
        return out


def _int_parts(values):
    """Common denominator and integer numerators for Cyclo8 values."""
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return den, [[n * (den // v.denominator) for n in v.numerators] for v in values]


def _l1(nums):
    return sum(abs(x) for x in nums)


def substitute_homogeneous(terms, rows, degree):
    """Expand sum_e c_e prod_i L_i^{e_i} exactly.

    ``terms`` maps exponent tuples (all of total ``degree``) to Cyclo8,
    ``rows`` is the list of linear forms L_i, each a list of Cyclo8 of
    length nvars. Returns a dict exponent tuple -> nonzero Cyclo8.
    """
    nvars = len(rows)
    if not terms:
        return {}
    coeff_vals = list(terms.values())
    exps = list(terms.keys())
    df, cnums = _int_parts(coeff_vals)
    flat = [x for r in rows for x in r]
    dm, mnums = _int_parts(flat)
    mnums = [mnums[i * nvars:(i + 1) * nvars] for i in range(nvars)]

    # |component| of every output coefficient is at most this bound
    row_l1 = [sum(_l1(c) for c in r) for r in mnums]
    bound = 0
    for e, c in zip(exps, cnums):
        t = _l1(c)
        for i, k in enumerate(e):
            t *= row_l1[i] ** k
        bound += t
    nprimes = 1
    while prod(p for p, _ in modular_primes(nprimes)) <= 2 * bound + 1:
        nprimes += 1
    ch = _Channels(nprimes)

    cvals = ch.encode(cnums)
    lin = [ch.encode(r) for r in mnums]  # each (nvars, K)
    lin_nz = [[j for j in range(nvars) if any(mnums[i][j])] for i in range(nvars)]
    mod = ch.mod

    def mul_linear(W, i, k):
        out = np.zeros((comb(k + 1 + nvars - 1, nvars - 1), ch.K), dtype=np.int64)
        shifts = _shift(nvars, k)
        for j in lin_nz[i]:
            idx = shifts[j]
            out[idx] = (out[idx] + W * lin[i][j][None, :] % mod) % mod
        return out

    order = sorted(range(len(exps)), key=lambda t: exps[t])

    def node(i, members, r):
        if i == nvars - 1:
            # single remaining variable, exponent r
            (t,) = members
            W = cvals[t][None, :]
            for k in range(r):
                W = mul_linear(W, i, k)
            return W
        groups = {}
        for t in members:
            groups.setdefault(exps[t][i], []).append(t)
        amax = max(groups)
        W = node(i + 1, groups[amax], r - amax)
        for a in range(amax - 1, -1, -1):
            W = mul_linear(W, i, r - a - 1)
            if a in groups:
                W = (W + node(i + 1, groups[a], r - a)) % mod
        return W

    dense = node(0, order, degree)
    nz = np.flatnonzero(np.any(dense != 0, axis=1))
    ints = ch.decode(dense[nz])
    scale = dm**degree * df
    basis = _basis(nvars, degree)
    out = {}
    for idx, nums in zip(nz, ints):
        if any(nums):
            out[tuple(int(x) for x in basis.exps[idx])] = Cyclo8.from_ints(nums, scale)
    return out
