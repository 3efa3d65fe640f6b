"""Generator matrices acting on C[x_a | a in R] and the symmetrization map."""

from __future__ import annotations

from fractions import Fraction
from math import log2

from .cyclotomic import ONE, ZERO, Cyclo8, inv_sqrt_pow2, root_of_unity
from .errors import DomainError, NotSymmetrizable, ShapeError, UnsupportedSpec
from .linalg import CMatrix
from .ring import (
    act_on_R,
    classes,
    classify,
    enumerate_R,
    int_det,
    lambda_member,
    lift_quadratic,
    negate,
    omega_member,
)

__all__ = [
    "build_chi",
    "build_xi",
    "build_eta",
    "build_zeta",
    "symmetrize",
    "is_unitary",
    "e8th",
]


def e8th(x):
    """e(x) for x in (1/8)Z; anything else leaves Q(z8)."""
    x = Fraction(x)
    k = x * 8
    if k.denominator != 1:
        raise UnsupportedSpec(f"e({x}) is not an 8th root of unity")
    return root_of_unity(int(k))


def build_chi(spec):
    g, alpha, alphas = spec.g, spec.alpha, spec.alphas
    size = 2**g * alpha**g
    for a in alphas:
        size *= a
    m = log2(size)
    if 2 ** int(m) != size:
        raise UnsupportedSpec(f"(2^g alpha^g prod alpha_i)^(-1/2) with base {size} is outside Q(z8)")
    pref = root_of_unity(g) * inv_sqrt_pow2(int(m))
    elems = enumerate_R(spec)
    entries = []
    for a in elems:
        for b in elems:
            pairing = sum(Fraction(a[i], alphas[i]) * b[i] for i in range(g))
            entries.append(pref * e8th(pairing / (2 * alpha)))
    n = len(elems)
    return CMatrix(n, n, entries)


def _sqrt_det(d):
    # branch: sqrt(-1) = z^2
    if d == 1:
        return ONE
    if d == -1:
        return root_of_unity(2)
    raise DomainError(f"det(U) = {d} is not a unit")


def build_xi(U, spec):
    if not omega_member(U, spec):
        raise DomainError(f"{U} is not in Omega(D)")
    s = _sqrt_det(int_det([list(r) for r in U]))
    elems = enumerate_R(spec)
    pos = {a: i for i, a in enumerate(elems)}
    n = len(elems)
    entries = [ZERO] * (n * n)
    for i, a in enumerate(elems):
        entries[i * n + pos[act_on_R(U, a, spec)]] = s
    return CMatrix(n, n, entries)


def build_eta(S, spec):
    if not lambda_member(S, spec):
        raise DomainError(f"{S} is not in Lambda(D)")
    vals = [e8th(lift_quadratic(S, a) / (4 * spec.alpha)) for a in enumerate_R(spec)]
    return CMatrix.diag(vals)


def build_zeta(n):
    return CMatrix.scalar(n, root_of_unity(1))


def symmetrize(gmat, spec):
    """phi(g): row of a class representative, summed over each column class."""
    elems = enumerate_R(spec)
    n = len(elems)
    if gmat.rows != n or gmat.cols != n:
        raise ShapeError(f"expected a {n}x{n} matrix")
    reps = classes(spec)
    m = len(reps)
    col_class = [classify(d, spec).index for d in elems]
    pos = {a: i for i, a in enumerate(elems)}

    def class_row(a):
        out = [ZERO] * m
        for j, x in enumerate(gmat.row(pos[a])):
            if x:
                out[col_class[j]] = out[col_class[j]] + x
        return out

    entries = []
    for rep in reps:
        row = class_row(rep)
        other = negate(rep, spec)
        if other != rep and class_row(other) != row:
            raise NotSymmetrizable(f"row sums for {rep} and {other} disagree")
        entries.extend(row)
    return CMatrix(m, m, entries)


def is_unitary(m):
    """M * conj(M)^T == I, conjugation being z -> z^-1."""
    return m @ m.conjugate_transpose() == CMatrix.identity(m.rows)
