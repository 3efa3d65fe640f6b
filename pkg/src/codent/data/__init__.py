"""Frozen fixtures: generator parameters, printed matrices, codes, polynomials."""

from importlib import resources


def read_text(*parts):
    node = resources.files(__name__)
    for p in parts:
        node = node.joinpath(p)
    return node.read_text()
