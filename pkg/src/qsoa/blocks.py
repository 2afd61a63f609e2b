"""Exact alpha-root sets, the upward shift N, the sets S(r) and T(r), and the
bounded semisimplicity test.

``alpha_{r,m}`` is a sum of ``m - 1`` values of one Laurent polynomial ``g``
along a q-geometric progression, so as a function of ``m`` it is a Laurent
polynomial in ``q^-m``.  Its integer roots are then found exactly by
:func:`~qsoa.scalar.integer_power_roots`; nothing here scans with a cutoff.
"""

from dataclasses import dataclass, field

import networkx as nx

from .errors import ZeroDeformation
from .scalar import LaurentPoly, ONE, geometric_partial_sum, integer_power_roots, q, qpow
from .verma import Weight, alpha

__all__ = [
    "alpha_generator",
    "alpha_polynomial",
    "upward_polynomial",
    "alpha_root_set",
    "max_up_shift",
    "block_S",
    "block_T",
    "BlockReport",
    "block_report",
    "SemisimplicityReport",
    "semisimplicity_check",
]

_QD = q - qpow(-1)


def _require_nonzero(p):
    if p.is_zero():
        raise ZeroDeformation("p = 0: every n is a root of alpha")


def alpha_generator(p):
    """``g(T) = h(T) <T>`` with ``c_{0,t} = h(q t)``, so ``alpha_{r,m} = sum_j g(q^{1-j} r)``."""
    t = LaurentPoly({1: ONE / _QD**2, -1: ONE / _QD**2}, "T")
    h = LaurentPoly({}, "T")
    for c in reversed(p.coeffs):
        h = h * t + c
    return h * LaurentPoly({1: ONE / _QD, -1: -ONE / _QD}, "T")


def alpha_polynomial(p, r):
    """``P(U)`` with ``alpha_{r,n+1} = P(q^-n)`` for every ``n >= 0``."""
    r = Weight.coerce(r).value
    return geometric_partial_sum(alpha_generator(p), q * r)


def upward_polynomial(p, r):
    """``P(U)`` with ``alpha_{q^n r, n+1} = P(q^-n)`` for every ``n >= 0``."""
    r = Weight.coerce(r).value
    # alpha_{q^n r, n+1} = sum_{k=1}^{n} g(q^{k+1} r) = sum_{j<n} g~(q^-j (q^2 r)^-1), g~(T) = g(1/T)
    return geometric_partial_sum(alpha_generator(p).reflect(), (q * q * r).inverse())


def alpha_root_set(p, r):
    """``{n >= 1 : alpha_{r,n+1} = 0}``, exactly."""
    _require_nonzero(p)
    return {n for n in integer_power_roots(alpha_polynomial(p, r)) if n >= 1}


def max_up_shift(p, r):
    """Largest ``n >= 0`` with ``alpha_{q^n r, n+1} = 0``."""
    _require_nonzero(p)
    return max(n for n in integer_power_roots(upward_polynomial(p, r)) | {0} if n >= 0)


def block_S(p, r):
    """``{r0} u {q^-m r0 : alpha_{r0,m+1} = 0}`` with ``r0 = q^N r``."""
    r = Weight.coerce(r)
    r0 = r.shift(max_up_shift(p, r))
    return {r0} | {r0.shift(-m) for m in alpha_root_set(p, r0)}


@dataclass
class BlockReport:
    r: Weight
    r0: Weight
    N: int
    S: set
    T: set
    edges: list = field(default_factory=list)
    outside: list = field(default_factory=list)

    def to_json(self):
        key = lambda w: str(w)  # noqa: E731
        return {
            "r": str(self.r),
            "r0": str(self.r0),
            "N": self.N,
            "S": sorted((str(w) for w in self.S)),
            "T": sorted((str(w) for w in self.T)),
            "edges": sorted(
                ({"from": key(a), "to": key(b), "reason": why} for a, b, why in self.edges),
                key=lambda e: (e["from"], e["to"], e["reason"]),
            ),
        }


def block_report(p, r):
    """S(r), and T(r) as the component of r in the subquotient graph on S(r)."""
    from .repn import composition_series

    r = Weight.coerce(r)
    N = max_up_shift(p, r)
    S = block_S(p, r)
    graph = nx.Graph()
    graph.add_nodes_from(S)
    edges, outside = [], []
    for y in sorted(S, key=str):
        for f in composition_series(p, y).factors:
            if f.weight == y:
                continue
            why = f"V({f.weight}) is a subquotient of Z({y})"
            if f.weight in S:
                if not graph.has_edge(y, f.weight):
                    edges.append((y, f.weight, why))
                graph.add_edge(y, f.weight)
            else:
                outside.append((y, f.weight, why))
    T = set(nx.node_connected_component(graph, r)) if r in graph else {r}
    return BlockReport(r, r.shift(N), N, S, T, edges, outside)


def block_T(p, r):
    return block_report(p, r).T


@dataclass
class SemisimplicityReport:
    verdict: str
    n_max: int
    counts: dict
    witnesses: list
    note: str = (
        "bounded verification: only r = ±q^n with n <= n_max were checked; "
        "the criterion quantifies over all n"
    )

    @property
    def passed(self):
        return self.verdict == "PASS"

    def to_json(self):
        return {
            "verdict": self.verdict,
            "n_max": self.n_max,
            "note": self.note,
            "witnesses": [
                {"eps": e, "n": n, "m_roots": ms} for e, n, ms in self.witnesses
            ],
        }


def semisimplicity_check(p, n_max):
    """Count roots ``m in [2, n+1]`` of ``alpha_{r,m}`` for ``r = ±q^n``, ``n <= n_max``."""
    _require_nonzero(p)
    counts, witnesses = {}, []
    for eps in (1, -1):
        for n in range(n_max + 1):
            r = qpow(n) * eps
            ms = sorted(k + 1 for k in alpha_root_set(p, r) if k <= n)
            counts[(eps, n)] = len(ms)
            if len(ms) > 1:
                witnesses.append((eps, n, ms))
    # independent re-evaluation of every counted root
    for (eps, n), c in counts.items():
        r = qpow(n) * eps
        direct = sum(1 for m in range(2, n + 2) if alpha(p, r, m).is_zero())
        if direct != c:
            raise AssertionError(f"root count mismatch at eps={eps}, n={n}")
    return SemisimplicityReport("FAIL" if witnesses else "PASS", n_max, counts, witnesses)
