"""Elements of the algebra A in the PBW basis ``F^a Y^b K^c X^d E^e``.

Every product is computed by concatenating words and reducing them with the
rewrite system of :mod:`qsoa.rewrite`; the deformation ``C0 = p(C)`` enters
only through the right-hand side of the ``XY`` rule, so each center
polynomial ``p`` gets its own (cached) reduction system.
"""

from dataclasses import dataclass
from functools import lru_cache

from .rewrite import free_add, paper_system
from .scalar import ONE, ZERO, LaurentPoly, Scalar, q, qpow

__all__ = [
    "CenterPolynomial",
    "PbwElement",
    "monomial_word",
    "word_monomial",
    "reduction_system",
    "multiply",
    "commutator",
    "casimir_element",
    "c0_element",
    "xi_projection",
    "anti_involution",
    "generator",
    "P_ZERO",
    "P_ONE",
    "P_T",
    "P_EX",
]


@dataclass(frozen=True)
class CenterPolynomial:
    """``p(t) = sum coeffs[i] t^i`` with Scalar coefficients (trailing zeros stripped)."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [Scalar.coerce(x) for x in self.coeffs]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text):
        from .parsing import parse_center_coefficients

        return cls(tuple(parse_center_coefficients(text)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, t):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def scaled(self, s):
        return CenterPolynomial(tuple(c * s for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("C" if i == 1 else f"C^{i}")
            if not mon:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mon)
            else:
                parts.append(f"({c})*{mon}")
        return " + ".join(parts)


P_ZERO = CenterPolynomial(())
P_ONE = CenterPolynomial((ONE,))
P_T = CenterPolynomial((ZERO, ONE))
_QD = q - qpow(-1)
# (q - q^-1)^3 C - (q - q^-1)(q^-2 + q^2)
P_EX = CenterPolynomial((-_QD * (qpow(-2) + qpow(2)), _QD**3))


def monomial_word(m):
    a, b, c, d, e = m
    k = "K" * c if c >= 0 else "L" * (-c)
    return "F" * a + "Y" * b + k + "X" * d + "E" * e


_ORDER = "FYKXE"


@lru_cache(maxsize=None)
def word_monomial(w):
    """Inverse of :func:`monomial_word` for irreducible words."""
    counts = [0, 0, 0, 0, 0]
    stage = 0
    kind = None
    for ch in w:
        if ch == "L":
            slot = 2
            if kind == "K":
                raise ValueError(f"{w!r} is not a PBW word")
            kind = "L"
        else:
            slot = _ORDER.index(ch)
            if ch == "K":
                if kind == "L":
                    raise ValueError(f"{w!r} is not a PBW word")
                kind = "K"
        if slot < stage:
            raise ValueError(f"{w!r} is not a PBW word")
        stage = slot
        counts[slot] += 1
    if kind == "L":
        counts[2] = -counts[2]
    return tuple(counts)


class PbwElement:
    """Finite linear combination of PBW monomials ``(a, b, c, d, e)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, a=0, b=0, c=0, d=0, e=0, coeff=ONE):
        return cls({(a, b, c, d, e): coeff})

    @classmethod
    def scalar(cls, s):
        return cls({(0, 0, 0, 0, 0): s})

    @classmethod
    def from_free(cls, elem):
        out = {}
        for w, c in elem.items():
            m = word_monomial(w)
            out[m] = out.get(m, ZERO) + c
        return cls(out)

    def to_free(self):
        return {monomial_word(m): c for m, c in self.terms.items()}

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, PbwElement):
            other = PbwElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return PbwElement(out)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PbwElement):
            other = PbwElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return PbwElement.scalar(other) - self

    def __mul__(self, s):
        # scalar multiplication only; algebra products need p, see multiply()
        if isinstance(s, PbwElement):
            raise TypeError("use multiply(x, y, p) for algebra products")
        s = Scalar.coerce(s)
        return PbwElement({m: c * s for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PbwElement):
            return self.terms == other.terms
        c = Scalar.coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self == PbwElement.scalar(c)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, a=0, b=0, c=0, d=0, e=0):
        return self.terms.get((a, b, c, d, e), ZERO)

    def weight(self):
        """Set of K-conjugation weights (exponents of q) present."""
        return {2 * e + d - 2 * a - b for (a, b, _, d, e) in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mon = _monomial_str(m)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{coeff_str(c)} * {mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"PbwElement({self})"


def coeff_str(c):
    """Scalar text, parenthesised unless it is a single signed term."""
    s = str(c)
    return f"({s})" if any(ch in s[1:] for ch in "+-/") else s


def _monomial_str(m):
    out = []
    for letter, n in zip("FYKXE", m):
        if n == 0:
            continue
        out.append(letter if n == 1 else f"{letter}^{n}")
    return " ".join(out)


def generator(name):
    """``E``, ``F``, ``K``, ``Kinv`` (or ``L``), ``X`` or ``Y`` as a PbwElement."""
    table = {
        "E": (0, 0, 0, 0, 1),
        "F": (1, 0, 0, 0, 0),
        "K": (0, 0, 1, 0, 0),
        "Kinv": (0, 0, -1, 0, 0),
        "L": (0, 0, -1, 0, 0),
        "X": (0, 0, 0, 1, 0),
        "Y": (0, 1, 0, 0, 0),
    }
    return PbwElement({table[name]: ONE})


_BASE = paper_system({}, name="undeformed")


def _product(sys, x, y):
    out = {}
    for m1, c1 in x.terms.items():
        w1 = monomial_word(m1)
        for m2, c2 in y.terms.items():
            free_add(out, sys.normal_form_word(w1 + monomial_word(m2)), c1 * c2)
    return PbwElement.from_free(out)


@lru_cache(maxsize=None)
def casimir_element():
    """``FE + (qK + q^-1 K^-1) / (q - q^-1)^2``."""
    d2 = _QD**2
    return PbwElement({
        (1, 0, 0, 0, 1): ONE,
        (0, 0, 1, 0, 0): q / d2,
        (0, 0, -1, 0, 0): qpow(-1) / d2,
    })


@lru_cache(maxsize=None)
def c0_element(p):
    """``p(C)`` in PBW form (computed in the undeformed system; C has no X, Y)."""
    c = casimir_element()
    acc = PbwElement()
    for coeff in reversed(p.coeffs):
        acc = _product(_BASE, acc, c) + PbwElement.scalar(coeff)
    return acc


@lru_cache(maxsize=None)
def reduction_system(p):
    """The rewrite system of A for ``C0 = p(C)``."""
    return paper_system(c0_element(p).to_free(), name=f"p={p}")


def multiply(x, y, p):
    """Product ``x y`` in A, in PBW form."""
    return _product(reduction_system(p), x, y)


def commutator(x, y, p):
    return multiply(x, y, p) - multiply(y, x, p)


def xi_projection(x):
    """The purely-Cartan part of ``x`` as a Laurent polynomial in K."""
    return LaurentPoly(
        {c: v for (a, b, c, d, e), v in x.terms.items() if a == b == d == e == 0},
        "K",
    )


def anti_involution(x, p):
    """The anti-involution ``E -> -FK, F -> -K^-1 E, K -> K, X <-> Y``."""
    sys = reduction_system(p)
    out = {}
    for (a, b, c, d, e), coeff in x.terms.items():
        k = "K" * c if c >= 0 else "L" * (-c)
        w = "FK" * e + "Y" * d + k + "X" * b + "LE" * a
        sign = -coeff if (a + e) % 2 else coeff
        free_add(out, sys.normal_form_word(w), sign)
    return PbwElement.from_free(out)
