"""Symmetrized weight enumerators and the linear action on polynomials."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from itertools import product

import numpy as np

from .cyclotomic import ZERO, Cyclo8
from .errors import DomainError, EnumerationOverflow, ShapeError
from .homogeneous import substitute_homogeneous
from .linalg import CMatrix
from .ring import classes, classify, enumerate_R

__all__ = [
    "SWEPoly",
    "swe",
    "act",
    "is_invariant",
    "evaluate",
    "coefficient_matrix",
    "VARIABLES",
]

VARIABLES = "abcdef"
DEFAULT_PAIRS_LIMIT = 2**28


def _coerce_coeff(c):
    if isinstance(c, Cyclo8):
        return int(c.numerators[0]) if c.is_rational() and c.denominator == 1 else c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SWEPoly:
    """Sparse polynomial: exponent tuple -> coefficient (int, Fraction or Cyclo8)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ShapeError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if c:
                clean[e] = _coerce_coeff(c)
        self.terms = clean

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: _grlex_key(t[0])))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def degrees(self):
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree=None):
        ds = self.degrees()
        if degree is None:
            return len(ds) <= 1
        return ds <= {degree}

    def homogeneous_parts(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return parts

    def total_mass(self):
        total = 0
        for c in self.terms.values():
            total = total + c
        return total

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SWEPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ShapeError("polynomials in different numbers of variables")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SWEPoly(self.nvars, out)

    def __neg__(self):
        return SWEPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return SWEPoly(self.nvars, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SWEPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SWEPoly(self.nvars, out)

    def __pow__(self, k):
        result = SWEPoly(self.nvars, {(0,) * self.nvars: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SWEPoly):
            return NotImplemented
        if self.nvars != other.nvars or self.terms.keys() != other.terms.keys():
            return False
        return all(Cyclo8.coerce(c) == Cyclo8.coerce(other.terms[e]) for e, c in self.terms.items())

    __hash__ = None

    # -- text / json -----------------------------------------------------
    def to_text(self, names=VARIABLES):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self:
            mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}"
                            for i, k in enumerate(e) if k)
            if isinstance(c, Cyclo8):
                cs = f"({c})"
            else:
                cs = str(c)
            if not mono:
                pieces.append(cs)
            elif cs == "1":
                pieces.append(mono)
            elif cs == "-1":
                pieces.append("-" + mono)
            else:
                pieces.append(f"{cs}*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    @classmethod
    def parse(cls, text, names=VARIABLES):
        """Parse ``96*a^3*b^4*c + ...`` with rational or (cyclotomic) coefficients."""
        nvars = len(names)
        s = text.replace(" ", "").replace("\n", "")
        if s[0] not in "+-":
            s = "+" + s
        terms = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            i += 1
            coeff = Fraction(1)
            if s[i] == "(":
                j = s.index(")", i)
                coeff = Cyclo8.parse(s[i + 1:j])
                i = j + 1
                if i < len(s) and s[i] == "*":
                    i += 1
            else:
                m = re.match(r"(\d+(?:/\d+)?)\*?", s[i:])
                if m:
                    coeff = Fraction(m.group(1))
                    i += m.end()
            m = re.match(r"([a-z](?:\^\d+)?(?:\*[a-z](?:\^\d+)?)*)?", s[i:])
            e = [0] * nvars
            if m.group(1):
                for f in m.group(1).split("*"):
                    v, _, k = f.partition("^")
                    e[names.index(v)] += int(k) if k else 1
            i += m.end()
            if i < len(s) and s[i] not in "+-":
                raise ValueError(f"unexpected {s[i]!r} in polynomial text")
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coeff * sign
        return cls(nvars, terms)

    def to_json(self):
        rows = []
        for e, c in self:
            if isinstance(c, Cyclo8):
                cj = c.to_json()
            elif isinstance(c, Fraction):
                cj = [c.numerator, c.denominator]
            else:
                cj = c
            rows.append({"exp": list(e), "coeff": cj})
        return {"nvars": self.nvars, "terms": rows}

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            if isinstance(c, int):
                val = c
            elif len(c) == 4:
                val = Cyclo8.from_json(c)
            else:
                val = Fraction(c[0], c[1])
            terms[tuple(t["exp"])] = val
        return cls(int(data["nvars"]), terms)

    def __repr__(self):
        return f"SWEPoly({len(self.terms)} terms, nvars={self.nvars})"


def _grlex_key(e):
    # a^8 before b^8 ...: sort by variable powers descending from a
    return tuple(-x for x in e)


# -- symmetrized weight enumerator -------------------------------------------

def swe(codes, spec, pairs_limit=DEFAULT_PAIRS_LIMIT):
    """Sum over code tuples of prod_abar x_abar^{n_abar}."""
    codes = list(codes)
    if len(codes) != spec.g:
        raise DomainError(f"need {spec.g} codes for this ring, got {len(codes)}")
    n = codes[0].n
    for i, c in enumerate(codes):
        if c.n != n:
            raise DomainError("codes have different lengths")
        if c.modulus != spec.moduli[i]:
            raise DomainError(f"code {i} is over Z_{c.modulus}, ring needs Z_{spec.moduli[i]}")
    total = 1
    for c in codes:
        total *= len(c)
    if total > pairs_limit:
        raise EnumerationOverflow(f"{total} code tuples exceed the limit {pairs_limit}")

    reps = classes(spec)
    nv = len(reps)
    base = n + 1
    # class of a ring element, as a table over its coordinates
    cls = np.zeros(spec.moduli, dtype=np.int64)
    for a in enumerate_R(spec):
        cls[a] = classify(a, spec).index
    weights = base ** np.arange(nv - 1, dtype=np.int64)
    wt = np.append(weights, 0)  # last class count is implied by the length
    counts = np.zeros(base ** (nv - 1), dtype=np.int64)

    last = codes[-1].words.astype(np.int64)
    heads = [c.words.astype(np.int64) for c in codes[:-1]]
    for prefix in product(*(range(len(h)) for h in heads)):
        # sub[i] maps the last code's symbol at coordinate i to a key weight
        if heads:
            sub = wt[cls[tuple(heads[k][prefix[k]] for k in range(len(heads)))]]
        else:
            sub = np.broadcast_to(wt[cls], (n, spec.moduli[0]))
        key = np.zeros(len(last), dtype=np.int64)
        for i in range(n):
            key += sub[i][last[:, i]]
        counts += np.bincount(key, minlength=len(counts))

    terms = {}
    for key in np.flatnonzero(counts):
        e = []
        k = int(key)
        for _ in range(nv - 1):
            k, r = divmod(k, base)
            e.append(r)
        e.append(n - sum(e))
        terms[tuple(e)] = int(counts[key])
    return SWEPoly(nv, terms)


# -- group action --------------------------------------------------------------

def _monomial_act(m, f):
    n = m.rows
    target = []
    for i in range(n):
        j = next(j for j, x in enumerate(m.row(i)) if x)
        target.append((j, m[i, j]))
    out = {}
    for e, c in f.terms.items():
        ne = [0] * n
        coeff = Cyclo8.coerce(c)
        for i, k in enumerate(e):
            if k:
                j, s = target[i]
                ne[j] += k
                coeff = coeff * s**k
        ne = tuple(ne)
        out[ne] = out.get(ne, ZERO) + coeff
    return SWEPoly(n, out)


def act(m, f):
    """(A.f)(x) = f(sum_j A_1j x_j, ..., sum_j A_nj x_j)."""
    if not isinstance(m, CMatrix) or m.rows != m.cols or m.rows != f.nvars:
        raise ShapeError(f"matrix does not act on {f.nvars} variables")
    if m.is_monomial():
        return _monomial_act(m, f)
    rows = [list(m.row(i)) for i in range(m.rows)]
    out = {}
    for deg, part in f.homogeneous_parts().items():
        coeffs = {e: Cyclo8.coerce(c) for e, c in part.items()}
        out.update(substitute_homogeneous(coeffs, rows, deg))
    return SWEPoly(f.nvars, out)


def is_invariant(f, generators):
    return all(act(g, f) == f for g in generators)


def evaluate(f, point):
    if len(point) != f.nvars:
        raise ShapeError(f"point has {len(point)} coordinates, polynomial has {f.nvars} variables")
    pt = [Cyclo8.coerce(x) for x in point]
    powers = [dict() for _ in pt]

    def pw(i, k):
        if k not in powers[i]:
            powers[i][k] = pt[i] ** k
        return powers[i][k]

    acc = ZERO
    for e, c in f.terms.items():
        t = Cyclo8.coerce(c)
        for i, k in enumerate(e):
            if k:
                t = t * pw(i, k)
        acc = acc + t
    return acc


def coefficient_matrix(polys, monomials):
    """Rows: polynomials; columns: requested monomials (missing -> 0)."""
    return CMatrix.from_rows([[Cyclo8.coerce(p.coefficient(m)) for m in monomials] for p in polys])


def monomial_from_text(text, names=VARIABLES):
    """``ac^3d^3f^9`` or ``a*c^3*d^3*f^9`` -> exponent tuple."""
    e = [0] * len(names)
    for v, k in re.findall(r"([a-z])(?:\^?(\d+))?", text.replace("*", "")):
        e[names.index(v)] += int(k) if k else 1
    return tuple(e)

