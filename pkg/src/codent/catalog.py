"""The concrete instance: R = F2 x Z4, its generators, codes and enumerators."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from .codes import CATALOG, catalog_code, direct_sum, enumerate_code
from .data import read_text
from .enumerators import SWEPoly, monomial_from_text, swe
from .groups import build_chi, build_eta, build_xi, build_zeta, symmetrize
from .linalg import CMatrix
from .ring import F2_Z4

__all__ = [
    "F2_Z4",
    "parameters",
    "g_generators",
    "h_generators",
    "printed_matrix",
    "PRINTED_MATRICES",
    "printed_poly",
    "code",
    "codeset",
    "degree8_enumerators",
    "degree16_recipes",
    "degree16_enumerators",
    "DEGREE8_MONOMIALS",
    "DEGREE16_MONOMIALS",
    "GROUP_ORDERS",
]

GENERATOR_NAMES = ("chi", "xi_u1", "xi_u2", "eta_s1", "eta_s2", "zeta")
PRINTED_MATRICES = ("chi", "xi_u1", "xi_u2", "eta_s1", "eta_s2",
                    "phi_chi", "phi_xi_u1", "phi_xi_u2", "phi_eta_s1", "phi_eta_s2")
GROUP_ORDERS = {"G": 589824, "H": 294912}

DEGREE8_MONOMIALS = tuple(monomial_from_text(m) for m in ("a^8", "b^8"))
DEGREE16_MONOMIALS = tuple(monomial_from_text(m) for m in (
    "ac^3d^3f^9", "a^2c^2d^4f^8", "c^4d^4f^8", "d^8f^8", "ab^2cd^2e^2f^8", "b^4e^4f^8"))


@lru_cache(maxsize=None)
def parameters():
    """u1, u2 (integer) and s1, s2 (rational) as nested tuples."""
    raw = json.loads(read_text("parameters.json"))
    out = {}
    for k, rows in raw.items():
        conv = int if k.startswith("u") else Fraction
        out[k] = tuple(tuple(conv(x) for x in r) for r in rows)
    return out


@lru_cache(maxsize=None)
def g_generators(spec=F2_Z4):
    p = parameters()
    n = spec.size
    return {
        "chi": build_chi(spec),
        "xi_u1": build_xi(p["u1"], spec),
        "xi_u2": build_xi(p["u2"], spec),
        "eta_s1": build_eta(p["s1"], spec),
        "eta_s2": build_eta(p["s2"], spec),
        "zeta": build_zeta(n),
    }


@lru_cache(maxsize=None)
def h_generators(spec=F2_Z4):
    return {f"phi_{k}": symmetrize(m, spec) for k, m in g_generators(spec).items()}


def printed_matrix(name):
    if name not in PRINTED_MATRICES:
        raise KeyError(name)
    return CMatrix.from_text(read_text("matrices", f"{name}.txt"))


def printed_poly(name):
    return SWEPoly.parse(read_text("polys", f"{name}.txt"))


def code(name, overrides=None):
    """Generator matrix; ``overrides`` maps names to replacement GenMatrix objects."""
    if overrides and name.upper() in overrides:
        return overrides[name.upper()]
    return catalog_code(name)


def codeset(name, overrides=None):
    if overrides:
        return enumerate_code(code(name, overrides))
    return _cached_codeset(name.upper())


@lru_cache(maxsize=None)
def _cached_codeset(name):
    return enumerate_code(catalog_code(name))


def degree8_enumerators(overrides=None, spec=F2_Z4):
    e8 = codeset("E8", overrides)
    return {
        "W_E8_Q8": swe([e8, codeset("Q8", overrides)], spec),
        "W_E8_K8": swe([e8, codeset("K8", overrides)], spec),
    }


def degree16_recipes():
    """Name -> (binary summands, quaternary summands) for the six degree-16 enumerators."""
    return {
        "W_E8_Q8^2": (("E8", "E8"), ("Q8", "Q8")),
        "W_E8_K8^2": (("E8", "E8"), ("K8", "K8")),
        "W_E8+E8_Q8+K8": (("E8", "E8"), ("Q8", "K8")),
        "W_E8+E8_K16": (("E8", "E8"), ("K16",)),
        "W_D16_Q8+Q8": (("D16",), ("Q8", "Q8")),
        "W_D16_Q8+K8": (("D16",), ("Q8", "K8")),
    }


def summed_code(names, overrides=None):
    g = code(names[0], overrides)
    for nm in names[1:]:
        g = direct_sum(g, code(nm, overrides))
    return g


def degree16_enumerators(overrides=None, spec=F2_Z4, pairs_limit=None):
    """All six computed directly from the summed codes."""
    out = {}
    kw = {} if pairs_limit is None else {"pairs_limit": pairs_limit}
    for name, (bin_parts, quat_parts) in degree16_recipes().items():
        c1 = enumerate_code(summed_code(bin_parts, overrides))
        c2 = enumerate_code(summed_code(quat_parts, overrides))
        out[name] = swe([c1, c2], spec, **kw)
    return out


def code_sizes(names=CATALOG):
    return {n: len(codeset(n)) for n in names}
