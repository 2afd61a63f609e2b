"""The Verma module Z(r) and its structure constants.

Vectors of ``Z(r)`` are combinations of ``F^i Y^j v_r``.  The action of an
algebra element is computed through the PBW engine: multiply, drop every
monomial that ends in ``X`` or ``E`` (they kill ``v_r``) and replace ``K^c``
by ``r^c``.  The closed forms for ``alpha``, ``d`` and the structure vectors
are kept separate from this path so the two can check each other.
"""

from functools import lru_cache

from .errors import DenominatorVanishes, ZeroArgument
from .linalg import nullspace
from .pbw import coeff_str, monomial_word, reduction_system, word_monomial
from .scalar import ONE, ZERO, Scalar, bracket, classify_signed_power, q, qpow

__all__ = [
    "Weight",
    "VermaElement",
    "act",
    "act_element",
    "c_scalar",
    "c0_scalar",
    "alpha",
    "d_const",
    "structure_vector",
    "weight_basis",
    "maximal_vectors",
    "sl2_maximal_vectors",
]

_QD2 = (q - qpow(-1)) ** 2
_GEN_WORD = {"E": "E", "F": "F", "K": "K", "Kinv": "L", "L": "L", "X": "X", "Y": "Y"}


class Weight:
    """A nonzero scalar ``r`` used as a highest weight."""

    __slots__ = ("value", "classification")

    def __init__(self, value):
        value = Scalar.coerce(value)
        if value.is_zero():
            raise ZeroArgument("weight must be nonzero")
        self.value = value
        self.classification = classify_signed_power(value)

    @staticmethod
    def coerce(r):
        return r if isinstance(r, Weight) else Weight(r)

    def shift(self, k):
        """The weight ``q^k r``."""
        return Weight(self.value * qpow(k))

    def __eq__(self, other):
        if isinstance(other, Weight):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Weight({self.value})"

    def describe(self):
        if self.classification is None:
            return "not of the form ±q^n"
        eps, n = self.classification
        return f"{'+' if eps > 0 else '-'}q^{n}"


class VermaElement:
    """``sum c_ij F^i Y^j v_r`` in Z(r)."""

    __slots__ = ("terms", "r")

    def __init__(self, terms, r):
        clean = {}
        for k, c in terms.items():
            c = Scalar.coerce(c)
            if c:
                clean[(int(k[0]), int(k[1]))] = c
        self.terms = clean
        self.r = Weight.coerce(r)

    @classmethod
    def highest(cls, r):
        return cls({(0, 0): ONE}, r)

    @classmethod
    def basis_vector(cls, i, j, r):
        return cls({(i, j): ONE}, r)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return VermaElement(out, self.r)

    def __neg__(self):
        return VermaElement({k: -c for k, c in self.terms.items()}, self.r)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        s = Scalar.coerce(s)
        return VermaElement({k: c * s for k, c in self.terms.items()}, self.r)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, VermaElement):
            return self.r == other.r and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def coefficient(self, i, j):
        return self.terms.get((i, j), ZERO)

    def weight_indices(self):
        return {2 * i + j for (i, j) in self.terms}

    def y_degree(self):
        return max((j for (_, j) in self.terms), default=-1)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-k[1], k[0])):
            c = self.terms[(i, j)]
            mon = " ".join(
                s for s in (
                    "" if i == 0 else ("F" if i == 1 else f"F^{i}"),
                    "" if j == 0 else ("Y" if j == 1 else f"Y^{j}"),
                ) if s
            )
            body = f"{mon} v" if mon else "v"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff_str(c)} * {body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"VermaElement({self})"


@lru_cache(maxsize=None)
def _word_on_basis(word, i, j, p):
    """PBW terms of ``word * F^i Y^j`` that survive on v_r, as {(a, b, c): coeff}."""
    nf = reduction_system(p).normal_form_word(word + "F" * i + "Y" * j)
    out = {}
    for w, c in nf.items():
        a, b, k, d, e = word_monomial(w)
        if d or e:
            continue
        out[(a, b, k)] = out.get((a, b, k), ZERO) + c
    return out


def _act_word(word, v, p):
    r = v.r.value
    out = {}
    for (i, j), c in v.terms.items():
        for (a, b, k), coeff in _word_on_basis(word, i, j, p).items():
            out[(a, b)] = out.get((a, b), ZERO) + c * coeff * r**k
    return VermaElement(out, v.r)


def act(g, v, p):
    """Action of a generator ``E, F, K, Kinv, X, Y`` on a VermaElement."""
    try:
        word = _GEN_WORD[g]
    except KeyError:
        raise ValueError(f"unknown generator {g!r}") from None
    return _act_word(word, v, p)


def act_element(x, v, p):
    """Action of an arbitrary PbwElement on a VermaElement."""
    out = VermaElement({}, v.r)
    for m, c in x.terms.items():
        out = out + _act_word(monomial_word(m), v, p) * c
    return out


def c_scalar(r):
    """``c_r = (q r + q^-1 r^-1) / (q - q^-1)^2``: the Casimir on Z_C(r)."""
    r = Weight.coerce(r).value
    return (q * r + (q * r).inverse()) / _QD2


def c0_scalar(p, r):
    return p(c_scalar(r))


def alpha(p, r, m):
    """``alpha_{r,m} = sum_{j=0}^{m-2} <q^{1-j} r> c_{0, q^{-j} r}`` (0 for m <= 1)."""
    r = Weight.coerce(r).value
    total = ZERO
    for j in range(m - 1):
        t = qpow(-j) * r
        total = total + bracket(q * t) * c0_scalar(p, t)
    return total


def d_const(p, r, m):
    """``d_{r,m} = alpha_{r,m} / (<q^{2-m} r> <q^{3-m} r>)``."""
    rv = Weight.coerce(r).value
    b2 = bracket(qpow(2 - m) * rv)
    b3 = bracket(qpow(3 - m) * rv)
    for b, k in ((b2, 2 - m), (b3, 3 - m)):
        if b.is_zero():
            raise DenominatorVanishes(
                f"<q^{k} r> vanishes for r = {rv}, m = {m}", which=f"<q^{k} r>"
            )
    return alpha(p, rv, m) / (b2 * b3)


def structure_vector(p, r, n):
    """``v_{t_n}`` from ``v_{t_k} = Y v_{t_{k-1}} + d_{r,k} F v_{t_{k-2}}``."""
    r = Weight.coerce(r)
    prev2 = None
    prev = VermaElement.highest(r)
    for k in range(1, n + 1):
        nxt = {(i, j + 1): c for (i, j), c in prev.terms.items()}
        if k >= 2:
            d = d_const(p, r, k)
            if d:
                for (i, j), c in prev2.terms.items():
                    nxt[(i + 1, j)] = nxt.get((i + 1, j), ZERO) + d * c
        prev2, prev = prev, VermaElement(nxt, r)
    return prev


def weight_basis(n):
    """Basis ``F^i Y^j`` of the weight space ``q^-n r``, by decreasing j."""
    return [(i, n - 2 * i) for i in range(n // 2 + 1)]


def _kernel(p, r, n, gens):
    r = Weight.coerce(r)
    basis = weight_basis(n)
    images = [
        [act(g, VermaElement.basis_vector(i, j, r), p) for g in gens] for (i, j) in basis
    ]
    rows = []
    for gi, g in enumerate(gens):
        target = weight_basis(n - (2 if g == "E" else 1)) if n > 0 else []
        for key in target:
            rows.append([images[col][gi].coefficient(*key) for col in range(len(basis))])
    if not rows:
        return [VermaElement({basis[0]: ONE}, r)]
    vecs = nullspace(rows, len(basis))
    return [VermaElement(dict(zip(basis, v)), r) for v in vecs]


def maximal_vectors(p, r, n):
    """Basis of the vectors of weight ``q^-n r`` killed by E and X (monic in Y)."""
    out = _kernel(p, r, n, ("E", "X"))
    if len(out) > 1:
        raise AssertionError("maximal vectors are unique up to scalars")
    return out


def sl2_maximal_vectors(p, r, n):
    """Basis of the vectors of weight ``q^-n r`` killed by E."""
    return _kernel(p, r, n, ("E",))
