"""Linear codes over Z_{2k}: enumeration, duality checks, direct sums."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .data import read_text
from .errors import DomainError, EnumerationOverflow

__all__ = [
    "GenMatrix",
    "CodeSet",
    "enumerate_code",
    "is_self_dual",
    "is_type2",
    "direct_sum",
    "load_code",
    "catalog_code",
    "CATALOG",
]

DEFAULT_LIMIT = 2**26
CATALOG = ("E8", "Q8", "K8", "D16", "K16")


@dataclass(frozen=True)
class GenMatrix:
    modulus: int
    n: int
    rows: tuple

    def __post_init__(self):
        if self.modulus <= 0 or self.modulus % 2:
            raise DomainError(f"modulus must be a positive even integer, got {self.modulus}")
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for r in rows:
            if len(r) != self.n:
                raise DomainError(f"row of length {len(r)} in a length-{self.n} code")
            if any(not 0 <= x < self.modulus for x in r):
                raise DomainError(f"row {r} has entries outside Z_{self.modulus}")
        object.__setattr__(self, "rows", rows)

    def to_json(self):
        return {"modulus": self.modulus, "n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["modulus"]), int(data["n"]), tuple(map(tuple, data["rows"])))


@dataclass(frozen=True, eq=False)
class CodeSet:
    """All codewords of a code, as a sorted (size, n) uint8 array."""

    modulus: int
    n: int
    words: np.ndarray
    source: GenMatrix

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        w = np.asarray(word, dtype=np.uint8)
        return bool(np.any(np.all(self.words == w, axis=1)))

    def inner_products(self):
        w = self.words.astype(np.int64)
        return (w @ w.T) % self.modulus

    def norms(self):
        w = self.words.astype(np.int64)
        return np.einsum("ij,ij->i", w, w)


def _span_incremental(g, limit):
    m = g.modulus
    words = np.zeros((1, g.n), dtype=np.int64)
    for row in g.rows:
        r = np.asarray(row, dtype=np.int64)
        mult = np.arange(m, dtype=np.int64)[:, None] * r[None, :] % m
        mult = np.unique(mult, axis=0)  # distinct multiples of this row
        if len(words) * len(mult) > 8 * limit:
            raise EnumerationOverflow(f"span exceeds limit {limit}")
        words = (words[:, None, :] + mult[None, :, :]).reshape(-1, g.n) % m
        words = np.unique(words, axis=0)
        if len(words) > limit:
            raise EnumerationOverflow(f"span exceeds limit {limit}")
    return words


def _span_closure(g, limit):
    # breadth-first additive closure from the generator rows
    m = g.modulus
    gens = np.asarray(g.rows, dtype=np.int64).reshape(-1, g.n) % m
    seen = {bytes(np.zeros(g.n, dtype=np.uint8))}
    frontier = np.zeros((1, g.n), dtype=np.int64)
    found = [frontier]
    while len(frontier):
        cand = (frontier[:, None, :] + gens[None, :, :]).reshape(-1, g.n) % m
        cand = np.unique(cand, axis=0)
        new = []
        for w in cand:
            key = bytes(w.astype(np.uint8))
            if key not in seen:
                seen.add(key)
                new.append(w)
        if len(seen) > limit:
            raise EnumerationOverflow(f"span exceeds limit {limit}")
        frontier = np.array(new, dtype=np.int64).reshape(-1, g.n)
        found.append(frontier)
    return np.unique(np.concatenate(found), axis=0)


def enumerate_code(g, limit=DEFAULT_LIMIT, method="incremental"):
    """Full additive span of the generator rows, sorted lexicographically."""
    if method == "incremental":
        words = _span_incremental(g, limit)
    elif method == "closure":
        words = _span_closure(g, limit)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    words = words.astype(np.uint8)
    words.setflags(write=False)
    return CodeSet(g.modulus, g.n, words, g)


def _size_is_self_dual(c):
    return len(c) ** 2 == c.modulus**c.n


def is_self_dual(c):
    if not _size_is_self_dual(c):
        return False
    if len(c) > 4096:
        # orthogonality of a spanning set suffices for the whole code
        rows = np.asarray(c.source.rows, dtype=np.int64).reshape(-1, c.n)
        return bool(np.all((rows @ rows.T) % c.modulus == 0) and
                    np.all((c.words.astype(np.int64) @ rows.T) % c.modulus == 0))
    return bool(np.all(c.inner_products() == 0))


def is_type2(c):
    """Self-dual with every Euclidean norm divisible by 2 * modulus."""
    if not is_self_dual(c):
        return False
    return bool(np.all(c.norms() % (2 * c.modulus) == 0))


def direct_sum(a, b):
    if a.modulus != b.modulus:
        raise DomainError(f"cannot sum codes over Z_{a.modulus} and Z_{b.modulus}")
    rows = [tuple(r) + (0,) * b.n for r in a.rows] + [(0,) * a.n + tuple(r) for r in b.rows]
    return GenMatrix(a.modulus, a.n + b.n, tuple(rows))


def load_code(path):
    with open(path) as f:
        return GenMatrix.from_json(json.load(f))


def catalog_code(name):
    """Generator matrix of one of E8, Q8, K8, D16, K16."""
    key = name.upper()
    if key not in CATALOG:
        raise KeyError(f"unknown catalog code {name!r}; have {CATALOG}")
    text = read_text("codes", f"{key.lower()}.json")
    return GenMatrix.from_json(json.loads(text))
