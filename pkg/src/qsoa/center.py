"""Centralizer of A inside a bounded span of PBW monomials.

A bounded check of triviality of the center, not a proof: candidates are the
weight-zero monomials ``F^a Y^b K^c X^d E^e`` inside the given box, and the
result is the space of their combinations commuting with E, F, K, X, Y.
"""

from dataclasses import dataclass
from itertools import product

from .errors import SpanTooLarge
from .linalg import nullspace
from .pbw import PbwElement, commutator, generator

__all__ = ["CentralizerQuery", "CentralizerResult", "candidate_monomials", "centralizer_basis"]

DEFAULT_MAX_SPAN = 200
_GENS = ("E", "F", "K", "X", "Y")


@dataclass(frozen=True)
class CentralizerQuery:
    p: object
    bounds: tuple = (2, 2, 2, 2, 2)
    max_span: int = DEFAULT_MAX_SPAN


@dataclass
class CentralizerResult:
    dimension: int
    basis: list
    bounds: tuple
    candidates: int
    label: str = "centralizer within bounds"

    def to_json(self):
        return {
            "dimension": self.dimension,
            "bounds": list(self.bounds),
            "basis": [str(b) for b in self.basis],
            "candidates": self.candidates,
            "label": self.label,
        }


def candidate_monomials(bounds):
    """Weight-zero monomials (``2a + b = d + 2e``) within the bounds, lowest degree first."""
    A, B, C, D, E = bounds
    out = [
        (a, b, c, d, e)
        for a, b, c, d, e in product(
            range(A + 1), range(B + 1), range(-C, C + 1), range(D + 1), range(E + 1)
        )
        if 2 * a + b == d + 2 * e
    ]
    out.sort(key=lambda m: (m[0] + m[1] + abs(m[2]) + m[3] + m[4], m))
    return out


def centralizer_basis(query):
    cands = candidate_monomials(query.bounds)
    if len(cands) > query.max_span:
        raise SpanTooLarge(f"{len(cands)} candidate monomials exceed the limit {query.max_span}")
    gens = [generator(g) for g in _GENS]
    images = [
        [commutator(g, PbwElement.monomial(*m), query.p) for g in gens] for m in cands
    ]
    keys = sorted({(gi, mono) for col in images for gi, img in enumerate(col) for mono in img.terms})
    rows = [[images[col][gi].coefficient(*mono) for col in range(len(cands))] for gi, mono in keys]
    vecs = nullspace(rows, len(cands)) if rows else [
        [1 if k == c else 0 for k in range(len(cands))] for c in range(len(cands))
    ]
    basis = [PbwElement(dict(zip(cands, v))) for v in vecs]
    for b in basis:
        for g in gens:
            if not commutator(g, b, query.p).is_zero():
                raise AssertionError("centralizer vector fails re-verification")
    return CentralizerResult(len(basis), basis, tuple(query.bounds), len(cands))
