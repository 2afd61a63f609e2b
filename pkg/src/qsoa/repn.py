"""Finite-dimensional simple modules, composition series of Verma modules and
the C0 = 0 counterexample.

Matrices are built from the structure equations and then checked against
every defining relation; nothing about a constructed module is assumed.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .blocks import alpha_root_set
from .errors import (
    ConstructionInconsistent,
    DimensionMismatch,
    InfiniteDimensional,
    ZeroDeformation,
)
from .linalg import diag, identity, is_zero_matrix, matmul, matrix_strings, nullspace, zeros
from .pbw import P_ZERO
from .scalar import ONE, bracket, q, qpow
from .verma import VermaElement, Weight, act, alpha, d_const, maximal_vectors

__all__ = [
    "ModuleMatrices",
    "RelationReport",
    "finite_dim_test",
    "build_simple",
    "verify_module_relations",
    "joint_kernel_dimension",
    "Factor",
    "CompositionSeries",
    "composition_series",
    "c0_zero_counterexample",
    "c0_zero_verma_report",
]

GENERATORS = ("E", "F", "K", "Kinv", "X", "Y")
_QD = q - qpow(-1)


@dataclass
class ModuleMatrices:
    basis_labels: list
    mats: dict

    @property
    def dim(self):
        return len(self.basis_labels)

    def __getitem__(self, g):
        return self.mats[g]

    def k_eigenvalues(self):
        return [self.mats["K"][i, i] for i in range(self.dim)]

    def to_json(self):
        return {
            "dim": self.dim,
            "basis": [list(lab) if isinstance(lab, tuple) else lab for lab in self.basis_labels],
            "matrices": {g: matrix_strings(self.mats[g]) for g in GENERATORS},
        }


def _require_nonzero(p):
    if p.is_zero():
        raise ZeroDeformation("the C0 = 0 regime is handled by the c0_zero operations")


def finite_dim_test(p, r):
    """``(i, dim)`` if V(r) is finite dimensional, else None.

    ``r = eps q^n`` with ``n >= 0`` and ``i`` the least index in ``[1, n+1]``
    with ``alpha_{r,i+1} = 0``; then ``dim V(r) = sum_{j<i} (n - j + 1)``.
    """
    _require_nonzero(p)
    r = Weight.coerce(r)
    if r.classification is None or r.classification[1] < 0:
        return None
    n = r.classification[1]
    for i in range(1, n + 2):
        if alpha(p, r, i + 1).is_zero():
            if not maximal_vectors(p, r, i):
                raise ConstructionInconsistent(
                    f"alpha_{{r,{i + 1}}} = 0 but Z({r}) has no maximal vector at index {i}"
                )
            return i, sum(n - j + 1 for j in range(i))
    return None


def build_simple(p, r):
    """Matrices of V(r) on the basis ``F^l v_{t_j}``, ``j < i``, ``l <= n - j``."""
    r = Weight.coerce(r)
    found = finite_dim_test(p, r)
    if found is None:
        raise InfiniteDimensional(f"V({r}) is infinite dimensional")
    i_max, dim = found
    eps, n = r.classification
    rv = r.value
    labels = [(j, l) for j in range(i_max) for l in range(n - j + 1)]
    index = {lab: k for k, lab in enumerate(labels)}
    t = [rv * qpow(-j) for j in range(i_max + 1)]
    d = {k: d_const(p, r, k) for k in range(2, i_max + 1)}

    mats = {g: zeros(dim) for g in GENERATORS}

    def put(g, src, dst, c):
        if dst in index and c:
            mats[g][index[dst], index[src]] = mats[g][index[dst], index[src]] + c

    def y_image(j, l):
        """``Y F^l v_{t_j} = F^l v_{t_{j+1}} - d_{r,j+1} F^{l+1} v_{t_{j-1}}`` (label -> coeff)."""
        out = {}
        if j + 1 < i_max:
            out[(j + 1, l)] = ONE
        if j >= 1:
            out[(j - 1, l + 1)] = -d[j + 1]
        return out

    for (j, l) in labels:
        src = (j, l)
        wt = t[j] * qpow(-2 * l)
        mats["K"][index[src], index[src]] = wt
        mats["Kinv"][index[src], index[src]] = wt.inverse()
        put("F", src, (j, l + 1), ONE)
        if l >= 1:
            put("E", src, (j, l - 1), bracket(qpow(l)) * bracket(qpow(1 - l) * t[j]))
        for dst, c in y_image(j, l).items():
            put("Y", src, dst, c)
        # X F^l v = F^l X v - q^{l-1} <q^l> t_j^-1 F^{l-1} Y v
        if j >= 1:
            a = alpha(p, r, j + 1)
            if a:
                put("X", src, (j - 1, l), -a / bracket(qpow(2 - j) * rv))
        if l >= 1:
            c = -qpow(l - 1) * bracket(qpow(l)) * t[j].inverse()
            for (jj, ll), cy in y_image(j, l - 1).items():
                put("X", src, (jj, ll), c * cy)
    module = ModuleMatrices(labels, mats)
    report = verify_module_relations(module, p)
    if not report.all_passed:
        raise ConstructionInconsistent(f"relations failed: {report.failed()}")
    return module


@dataclass
class RelationReport:
    results: list

    @property
    def all_passed(self):
        return all(ok for _, ok, _ in self.results)

    def failed(self):
        return [name for name, ok, _ in self.results if not ok]

    def to_json(self):
        return {name: ok for name, ok, _ in self.results}


def _casimir_matrix(m):
    s = ONE / _QD**2
    return matmul(m["F"], m["E"]) + m["K"] * (q * s) + m["Kinv"] * (qpow(-1) * s)


def verify_module_relations(m, p):
    """Check every defining relation of A on the matrices; residuals are kept."""
    n = m.dim
    for g in GENERATORS:
        if m.mats[g].shape != (n, n):
            raise DimensionMismatch(f"{g} has shape {m.mats[g].shape}, expected {(n, n)}")
    E, F, K, L, X, Y = (m.mats[g] for g in GENERATORS)
    mul = matmul
    eye = identity(n)
    cas = _casimir_matrix(m.mats)
    pc = zeros(n)
    for c in reversed(p.coeffs):
        pc = mul(pc, cas) + eye * c
    checks = [
        ("K Kinv = 1", mul(K, L) - eye),
        ("Kinv K = 1", mul(L, K) - eye),
        ("K E Kinv = q^2 E", mul(mul(K, E), L) - E * qpow(2)),
        ("K F Kinv = q^-2 F", mul(mul(K, F), L) - F * qpow(-2)),
        ("[E,F] = <K>", mul(E, F) - mul(F, E) - (K - L) * (ONE / _QD)),
        ("E X = q X E", mul(E, X) - mul(X, E) * q),
        ("E Y = X + q^-1 Y E", mul(E, Y) - X - mul(Y, E) * qpow(-1)),
        ("F X = Y Kinv + X F", mul(F, X) - mul(Y, L) - mul(X, F)),
        ("F Y = Y F", mul(F, Y) - mul(Y, F)),
        ("K X Kinv = q X", mul(mul(K, X), L) - X * q),
        ("K Y Kinv = q^-1 Y", mul(mul(K, Y), L) - Y * qpow(-1)),
        ("q Y X - X Y = p(C)", mul(Y, X) * q - mul(X, Y) - pc),
    ]
    return RelationReport([(name, is_zero_matrix(res), res) for name, res in checks])


def joint_kernel_dimension(m, gens=("E", "X")):
    """Dimension of the common kernel of the given generator matrices."""
    rows = []
    for g in gens:
        rows.extend(list(row) for row in m.mats[g])
    return len(nullspace(rows, m.dim))


@dataclass(frozen=True)
class Factor:
    weight: Weight
    dim: int | None
    source: str

    def to_json(self):
        return {"highest_weight": str(self.weight), "dim": self.dim}


@dataclass
class CompositionSeries:
    r: Weight
    factors: list
    chain: list
    flags: list = field(default_factory=list)

    def to_json(self):
        return [f.to_json() for f in self.factors]


def _dim_of(p, t):
    found = finite_dim_test(p, t)
    return None if found is None else found[1]


def composition_series(p, r, max_steps=64):
    """Factors of Z(r) in chain order.

    Weights ``eps q^n`` with ``n >= 0`` follow the integer-case filtration:
    while there is a root ``x <= n + 1`` the factors are ``V(t)`` and
    ``V((q^3 t')^-1)`` with ``t' = q^-x t``.  Once the top is infinite
    dimensional (and for every other weight) the next Verma submodule is the
    one generated by the highest maximal vector, found among the alpha-roots
    and confirmed by the kernel solver.
    """
    _require_nonzero(p)
    r = Weight.coerce(r)
    factors, chain, flags = [], [], []
    current = r
    for _ in range(max_steps):
        chain.append(current)
        roots = sorted(alpha_root_set(p, current))
        cls = current.classification
        integer = cls is not None and cls[1] >= 0
        factors.append(Factor(current, _dim_of(p, current), "top"))
        if integer:
            small = [x for x in roots if x <= cls[1] + 1]
            if small:
                x = small[0]
                if not maximal_vectors(p, current, x):
                    flags.append(f"no maximal vector of weight q^-{x} {current} in Z({current})")
                nxt = current.shift(-x)
                dual = Weight((qpow(3) * nxt.value).inverse())
                factors.append(Factor(dual, _dim_of(p, dual), "W/Z"))
                current = nxt
                continue
        nxt = None
        for x in roots:
            if maximal_vectors(p, current, x):
                nxt = current.shift(-x)
                break
            if not integer:
                flags.append(f"root {x} of alpha at {current} has no maximal vector")
        if nxt is None:
            break
        current = nxt
    else:
        raise ConstructionInconsistent("composition series did not terminate")
    return CompositionSeries(r, factors, chain, flags)


def c0_zero_counterexample():
    """The 3-dimensional module for ``p = 0`` and its submodule lattice.

    Basis ``v_1, v_0, v_-1`` with ``K v_i = q^i v_i``.  Because K has distinct
    eigenvalues, every submodule is spanned by a subset of the basis lines.
    """
    labels = [1, 0, -1]
    idx = {v: k for k, v in enumerate(labels)}
    mats = {g: zeros(3) for g in GENERATORS}
    mats["K"] = diag([q, ONE, qpow(-1)])
    mats["Kinv"] = diag([qpow(-1), ONE, q])
    mats["F"][idx[-1], idx[1]] = ONE
    mats["E"][idx[1], idx[-1]] = ONE
    mats["Y"][idx[0], idx[1]] = ONE
    mats["X"][idx[0], idx[-1]] = -qpow(-1)
    module = ModuleMatrices(labels, mats)
    lattice = []
    for size in range(4):
        for subset in combinations(range(3), size):
            inside = set(subset)
            if all(
                not mats[g][a, b]
                for g in GENERATORS
                for b in inside
                for a in range(3)
                if a not in inside
            ):
                lattice.append(frozenset(labels[k] for k in subset))
    v0 = frozenset({0})
    complement = any(
        len(s) == 2 and not (s & v0) for s in lattice
    )
    report = {
        "relations": verify_module_relations(module, P_ZERO),
        "lattice": lattice,
        "complement_to_v0": complement,
        "verdict": "semisimple" if complement else "not semisimple",
    }
    return module, report


def c0_zero_verma_report(r, n_max, p=P_ZERO):
    """Check the C0 = 0 picture of Z(r) for indices up to ``n_max``.

    ``Y^n v_r`` should be A-maximal, and X and Y should kill every ``F^k v_r``
    modulo ``Z(q^-1 r) = span{F^i Y^j : j >= 1}``.
    """
    r = Weight.coerce(r)
    maximal = {}
    for n in range(n_max + 1):
        vecs = maximal_vectors(p, r, n)
        maximal[n] = bool(vecs) and vecs[0] == VermaElement({(0, n): ONE}, r)
    quotient = {}
    for k in range(n_max + 1):
        v = VermaElement({(k, 0): ONE}, r)
        ok = True
        for g in ("X", "Y"):
            img = act(g, v, p)
            ok = ok and all(j >= 1 for (_, j) in img.terms)
        quotient[k] = ok
    return {
        "r": str(r),
        "n_max": n_max,
        "y_powers_maximal": maximal,
        "quotient_killed_by_x_y": quotient,
        "all_passed": all(maximal.values()) and all(quotient.values()),
    }
