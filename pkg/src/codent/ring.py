"""The ambient ring R = Z_{2k_1} x ... x Z_{2k_g} and its quotient by +-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import DomainError, ShapeError

__all__ = [
    "RingSpec",
    "ClassIndex",
    "enumerate_R",
    "classify",
    "classes",
    "negate",
    "omega_member",
    "omega_congruence_member",
    "lambda_member",
    "lambda_sd_integral",
]


@dataclass(frozen=True)
class RingSpec:
    ks: tuple
    alpha: int = field(init=False)
    alphas: tuple = field(init=False)

    def __post_init__(self):
        ks = tuple(int(k) for k in self.ks)
        if not ks or any(k <= 0 for k in ks):
            raise DomainError("ks must be a nonempty list of positive integers")
        for a, b in zip(ks, ks[1:]):
            if b % a:
                raise DomainError(f"k_i must divide k_(i+1): {a} does not divide {b}")
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "alpha", ks[0])
        object.__setattr__(self, "alphas", tuple(k // ks[0] for k in ks))

    @property
    def g(self):
        return len(self.ks)

    @property
    def moduli(self):
        return tuple(2 * k for k in self.ks)

    @property
    def size(self):
        out = 1
        for m in self.moduli:
            out *= m
        return out

    def to_json(self):
        return {"ks": list(self.ks)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["ks"]))


F2_Z4 = RingSpec((1, 2))


@dataclass(frozen=True)
class ClassIndex:
    rep: tuple
    index: int


def enumerate_R(spec):
    """Elements of R in lexicographic order, first component outermost."""
    return [tuple(a) for a in product(*(range(m) for m in spec.moduli))]


def negate(a, spec):
    return tuple((-x) % m for x, m in zip(a, spec.moduli))


def _check_element(a, spec):
    if len(a) != spec.g or any(not 0 <= x < m for x, m in zip(a, spec.moduli)):
        raise DomainError(f"{a} is not a reduced element of R{spec.moduli}")


def classes(spec):
    """Canonical representatives of R/+-, lexicographically ordered."""
    reps = sorted({min(a, negate(a, spec)) for a in enumerate_R(spec)})
    return reps


_CLASS_CACHE = {}


def _class_table(spec):
    table = _CLASS_CACHE.get(spec)
    if table is None:
        reps = classes(spec)
        pos = {r: i for i, r in enumerate(reps)}
        table = {a: ClassIndex(min(a, negate(a, spec)), pos[min(a, negate(a, spec))])
                 for a in enumerate_R(spec)}
        _CLASS_CACHE[spec] = table
    return table


def classify(a, spec):
    a = tuple(a)
    _check_element(a, spec)
    return _class_table(spec)[a]


def _square_int(U, g):
    U = [list(r) for r in U]
    if len(U) != g or any(len(r) != g for r in U):
        raise ShapeError(f"expected a {g}x{g} matrix")
    return U


def int_det(U):
    """Determinant of a small integer matrix by rational elimination."""
    n = len(U)
    a = [list(map(Fraction, r)) for r in U]
    d = Fraction(1)
    sign = 1
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        d *= a[c][c]
    return int(sign * d)


def omega_member(U, spec):
    """U in GL(g, Z) with D^-1 U D integral."""
    U = _square_int(U, spec.g)
    if any(Fraction(x).denominator != 1 for r in U for x in r):
        return False
    if abs(int_det(U)) != 1:
        return False
    al = spec.alphas
    return all(Fraction(U[i][j] * al[j], al[i]).denominator == 1
               for i in range(spec.g) for j in range(spec.g))


def omega_congruence_member(U, spec):
    """Congruence form: below-diagonal entry (i, j), i > j, divisible by alpha_i/alpha_j.

    The row/column order is the one under which U acts on R by b = U a.
    """
    U = _square_int(U, spec.g)
    if any(Fraction(x).denominator != 1 for r in U for x in r):
        return False
    if abs(int_det(U)) != 1:
        return False
    al = spec.alphas
    return all(int(U[i][j]) % (al[i] // al[j]) == 0
               for i in range(spec.g) for j in range(i))


def lambda_member(S, spec):
    """Symmetric rational S with S_ij in (1/k_i)Z for i <= j."""
    S = _square_int(S, spec.g)
    S = [[Fraction(x) for x in r] for r in S]
    g = spec.g
    if any(S[i][j] != S[j][i] for i in range(g) for j in range(g)):
        return False
    return all((S[i][j] * spec.ks[i]).denominator == 1 for i in range(g) for j in range(i, g))


def lambda_sd_integral(S, spec):
    """Alternative form: symmetric and S*D integral."""
    S = _square_int(S, spec.g)
    S = [[Fraction(x) for x in r] for r in S]
    g = spec.g
    if any(S[i][j] != S[j][i] for i in range(g) for j in range(g)):
        return False
    return all((S[i][j] * spec.alphas[j]).denominator == 1 for i in range(g) for j in range(g))


def act_on_R(U, a, spec):
    """U . a reduced componentwise."""
    return tuple(sum(int(U[i][j]) * a[j] for j in range(spec.g)) % spec.moduli[i]
                 for i in range(spec.g))


def lift_quadratic(S, a):
    """S[a] = a^T S a with a lifted to integers in [0, 2k_i)."""
    g = len(a)
    return sum(Fraction(S[i][j]) * a[i] * a[j] for i in range(g) for j in range(g))
