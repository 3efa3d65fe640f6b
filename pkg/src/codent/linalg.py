"""Dense exact matrices over Q(z8).

Everything here is plain Python on :class:`Cyclo8` entries. The bulk work
(group closure, Molien traces) goes through the packed integer layout in
:mod:`codent.closure` instead.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclotomic import ONE, ZERO, Cyclo8
from .errors import ShapeError

__all__ = [
    "CMatrix",
    "TPoly",
    "mat_mul",
    "det",
    "char_det",
    "nullspace",
    "rank",
    "canonical_key",
    "certified_nullspace",
    "entry_str",
]


class CMatrix:
    """Immutable dense matrix with Cyclo8 entries, row-major."""

    __slots__ = ("rows", "cols", "entries", "_key")

    def __init__(self, rows, cols, entries):
        entries = tuple(Cyclo8.coerce(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise ShapeError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._key = None

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged or empty row list")
        return cls(len(rows), len(rows[0]), [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls.scalar(n, ONE)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def scalar(cls, n, value):
        value = Cyclo8.coerce(value)
        return cls(n, n, [value if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values):
        values = [Cyclo8.coerce(v) for v in values]
        n = len(values)
        return cls(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return CMatrix(self.cols, self.rows,
                       [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def conjugate_transpose(self):
        return CMatrix(self.cols, self.rows,
                       [self[i, j].conjugate() for j in range(self.cols) for i in range(self.rows)])

    def is_monomial(self):
        """True when every row and every column holds exactly one nonzero entry."""
        if not self.is_square:
            return False
        seen = set()
        for i in range(self.rows):
            nz = [j for j, e in enumerate(self.row(i)) if e]
            if len(nz) != 1 or nz[0] in seen:
                return False
            seen.add(nz[0])
        return True

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, scalar):
        s = Cyclo8.coerce(scalar)
        return CMatrix(self.rows, self.cols, [e * s for e in self.entries])

    __rmul__ = __mul__

    def __neg__(self):
        return CMatrix(self.rows, self.cols, [-e for e in self.entries])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch in addition")
        return CMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, k):
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result, base = CMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash(canonical_key(self))

    def apply(self, vec):
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ShapeError("vector length does not match column count")
        vec = [Cyclo8.coerce(v) for v in vec]
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, v in zip(self.row(i), vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    # -- serialization -------------------------------------------------------
    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [e.to_json() for e in self.entries]}

    @classmethod
    def from_json(cls, data):
        return cls(data["rows"], data["cols"], [Cyclo8.from_json(e) for e in data["entries"]])

    def to_text(self):
        """Bracket layout used when printing matrices, one row per line."""
        cells = [[entry_str(e) for e in self.row(i)] for i in range(self.rows)]
        width = max(len(c) for r in cells for c in r)
        lines = ["[ " + " & ".join(c.rjust(width) for c in r) + " ]" for r in cells]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text):
        rows = []
        for line in text.strip().splitlines():
            line = line.strip().strip("[]").strip()
            if not line:
                continue
            rows.append([Cyclo8.parse(c) for c in line.split("&")])
        return cls.from_rows(rows)

    def __repr__(self):
        return f"CMatrix({self.rows}x{self.cols})"


def entry_str(x):
    """Format with descending powers of z, e.g. ``1/4*z^3 + 1/4*z``."""
    x = Cyclo8.coerce(x)
    parts = []
    for r in (3, 2, 1, 0):
        c = x.coeffs[r]
        if c == 0:
            continue
        mag = abs(c)
        if r == 0:
            body = str(mag)
        else:
            zp = "z" if r == 1 else f"z^{r}"
            body = zp if mag == 1 else f"{mag}*{zp}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def mat_mul(a, b):
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [[b[k, j] for k in range(b.rows)] for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        nz = [(k, x) for k, x in enumerate(arow) if x]
        for j in range(b.cols):
            col = bcols[j]
            acc = ZERO
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            out.append(acc)
    return CMatrix(a.rows, b.cols, out)


def _echelon(rows, ncols):
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def det(m):
    if not m.is_square:
        raise ShapeError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_rows()
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        piv = a[c][c]
        result = result * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[c])]
    return result


class TPoly:
    """Polynomial in t with Cyclo8 coefficients, index = power of t."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        cs = [Cyclo8.coerce(c) for c in coefficients]
        while cs and not cs[-1]:
            cs.pop()
        self.coefficients = tuple(cs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __getitem__(self, k):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else ZERO

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __mul__(self, other):
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return TPoly(out)

    def __pow__(self, k):
        result = TPoly([ONE])
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        terms = [f"({c})*t^{k}" for k, c in enumerate(self.coefficients) if c]
        return "TPoly(" + (" + ".join(terms) or "0") + ")"


def char_det(m):
    """det(I - t*M) via Faddeev-LeVerrier."""
    if not m.is_square:
        raise ShapeError("char_det of a non-square matrix")
    n = m.rows
    # det(xI - M) = x^n + c1 x^(n-1) + ... + cn  and  det(I - tM) = sum_k c_k t^k
    coeffs = [ONE]
    mk = CMatrix.zeros(n, n)
    ident = CMatrix.identity(n)
    ck = ONE
    for k in range(1, n + 1):
        mk = m @ (mk + ident * ck)
        trace = ZERO
        for i in range(n):
            trace = trace + mk[i, i]
        ck = trace * Fraction(-1, k)
        coeffs.append(ck)
    return TPoly(coeffs)


def nullspace(m):
    """Basis of the right kernel as lists of Cyclo8."""
    rows = m.to_rows()
    pivots = _echelon(rows, m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [ZERO] * m.cols
        v[fcol] = ONE
        for r, pc in enumerate(pivots):
            x = rows[r][fcol]
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def rank(m):
    rows = m.to_rows()
    return len(_echelon(rows, m.cols))


def canonical_key(m):
    """Injective byte encoding of a matrix."""
    body = [m.rows, m.cols] + [[list(e.numerators), e.denominator] for e in m.entries]
    return json.dumps(body, separators=(",", ":")).encode()


def _to_field(x, p, w):
    num = sum(n * pow(w, r, p) for r, n in enumerate(x.numerators)) % p
    return num * pow(x.denominator, -1, p) % p


def certified_nullspace(rows, ncols):
    """Exact right kernel of a tall matrix, given as a list of rows.

    A prime-field image picks a maximal set of independent rows (rows that
    are independent mod p are independent over Q(z8)); the kernel of that
    small block is computed exactly and then checked against every row.
    Falls back to full elimination when the check fails.
    """
    import numpy as np

    from .homogeneous import modular_primes

    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    p, w = modular_primes(1)[0]
    dens = {x.denominator for r in rows for x in r if x}
    if any(d % p == 0 for d in dens):
        return nullspace(CMatrix.from_rows(rows))
    a = np.array([[_to_field(x, p, w) if x else 0 for x in r] for r in rows], dtype=np.int64)
    order = list(range(len(rows)))
    chosen = []
    r0 = 0
    for c in range(ncols):
        if r0 == len(order):
            break
        nz = np.flatnonzero(a[r0:, c])
        if not len(nz):
            continue
        piv = r0 + int(nz[0])
        a[[r0, piv]] = a[[piv, r0]]
        order[r0], order[piv] = order[piv], order[r0]
        inv = pow(int(a[r0, c]), -1, p)
        a[r0] = a[r0] * inv % p
        below = a[r0 + 1:, c].copy()
        a[r0 + 1:] = (a[r0 + 1:] - below[:, None] * a[r0][None, :]) % p
        chosen.append(order[r0])
        r0 += 1
    block = [rows[i] for i in sorted(chosen)]
    basis = nullspace(CMatrix.from_rows(block)) if block else \
        [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    for v in basis:
        for r in rows:
            acc = ZERO
            for x, y in zip(r, v):
                if x and y:
                    acc = acc + x * y
            if acc:
                return nullspace(CMatrix.from_rows(rows))
    return basis
