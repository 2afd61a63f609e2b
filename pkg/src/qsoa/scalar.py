"""Exact arithmetic in the rational function field Q(q).

A :class:`Scalar` is a reduced fraction of two integer polynomials in ``q``.
Polynomials are backed by FLINT's ``fmpz_poly``; every result is brought to
canonical form (coprime, denominator with positive leading coefficient), so
equality and hashing are structural.

The module also carries the small amount of Laurent-polynomial machinery the
rest of the package needs: the quantum bracket, closed-form geometric partial
sums, and an exact finder for roots of the form ``U = q^-m``.
"""

from fractions import Fraction
from itertools import combinations

from flint import fmpz_poly

from .errors import IdenticallyZero, NonzeroConstantTerm, ZeroArgument

__all__ = [
    "Scalar",
    "LaurentPoly",
    "q",
    "ZERO",
    "ONE",
    "qpow",
    "bracket",
    "geometric_partial_sum",
    "integer_power_roots",
    "classify_signed_power",
]

_P0 = fmpz_poly([0])
_P1 = fmpz_poly([1])


def _monomial(coeff, exp):
    return fmpz_poly([0] * exp + [coeff])


class Scalar:
    """An element of Q(q) in lowest terms.

    Construct from an ``int``, a ``Fraction`` or a pair of ``fmpz_poly``.
    Instances are immutable and hashable.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _canonical=False):
        if den is None:
            if isinstance(num, Scalar):
                self.num, self.den, self._hash = num.num, num.den, num._hash
                return
            if isinstance(num, Fraction):
                num, den = fmpz_poly([num.numerator]), fmpz_poly([num.denominator])
            elif isinstance(num, int):
                num, den = fmpz_poly([num]), _P1
                _canonical = True
            elif isinstance(num, fmpz_poly):
                den = _P1
                _canonical = True
            else:
                raise TypeError(f"cannot build a Scalar from {type(num).__name__}")
        elif not isinstance(num, fmpz_poly):
            num, den = fmpz_poly(num), fmpz_poly(den)
        if not _canonical:
            if den.is_zero():
                raise ZeroArgument("zero denominator")
            if num.is_zero():
                num, den = _P0, _P1
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num // g, den // g
                if den.leading_coefficient() < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, num, den):
        s = object.__new__(cls)
        s.num, s.den, s._hash = num, den, None
        return s

    @staticmethod
    def coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        return NotImplemented

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def is_polynomial(self):
        return self.den.degree() == 0

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num + other.num, _P1)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return Scalar(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        d1 = self.den // g
        d2 = other.den // g
        return Scalar(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num * other.num, _P1)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num, other.den) if g1.is_one() else (self.num // g1, other.den // g1)
        n2, d1 = (other.num, self.den) if g2.is_one() else (other.num // g2, self.den // g2)
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroArgument("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._raw(num, den)

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return Scalar._raw(self.num**n, self.den**n)

    # -- comparison and hashing -----------------------------------------------

    def __eq__(self, other):
        other = Scalar.coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            num = tuple(int(c) for c in self.num.coeffs())
            den = tuple(int(c) for c in self.den.coeffs())
            if den == (1,) and len(num) <= 1:
                h = hash(num[0] if num else 0)
            else:
                h = hash((num, den))
            self._hash = h
        return h

    # -- Laurent view ---------------------------------------------------------

    def monomial_form(self):
        """Return ``(c, k)`` with ``self == c * q**k`` and ``c`` rational, or None."""
        if self.num.is_zero():
            return None
        nz_n = [(i, int(c)) for i, c in enumerate(self.num.coeffs()) if c != 0]
        nz_d = [(i, int(c)) for i, c in enumerate(self.den.coeffs()) if c != 0]
        if len(nz_n) != 1 or len(nz_d) != 1:
            return None
        (i, a), (j, b) = nz_n[0], nz_d[0]
        return Fraction(a, b), i - j

    def laurent_coeffs(self):
        """Exponent -> rational coefficient if the denominator is c*q^k, else None."""
        nz_d = [(i, int(c)) for i, c in enumerate(self.den.coeffs()) if c != 0]
        if len(nz_d) != 1:
            return None
        shift, d = nz_d[0]
        return {
            i - shift: Fraction(int(c), d)
            for i, c in enumerate(self.num.coeffs())
            if c != 0
        }

    def subs_q_power(self, k):
        """Substitute ``q -> q^k`` for a nonzero integer ``k``."""
        if k == 0:
            raise ValueError("k must be nonzero")
        return _subs_poly(self.num, k) / _subs_poly(self.den, k)

    # -- text -----------------------------------------------------------------

    def __str__(self):
        num = _poly_str(self.num)
        if self.den.is_one():
            return num
        if self.num.length() - _count_zero(self.num) > 1:
            num = f"({num})"
        den = _poly_str(self.den)
        nz = [c for c in self.den.coeffs() if c != 0]
        if len(nz) > 1 or (nz[0] != 1 and self.den.degree() > 0):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar('{self}')"

    def __format__(self, spec):
        return format(str(self), spec)


def _count_zero(p):
    return sum(1 for c in p.coeffs() if c == 0)


def _subs_poly(p, k):
    out = ZERO
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            out = out + Scalar(int(c)) * qpow(i * k)
    return out


def _poly_str(p):
    coeffs = p.coeffs()
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            power = "q" if i == 1 else f"q^{i}"
            body = power if a == 1 else f"{a}*{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


ZERO = Scalar._raw(_P0, _P1)
ONE = Scalar._raw(_P1, _P1)
q = Scalar._raw(fmpz_poly([0, 1]), _P1)

_QPOW_CACHE = {}


def qpow(k):
    """``q**k`` for any integer ``k`` (cached)."""
    s = _QPOW_CACHE.get(k)
    if s is None:
        if k >= 0:
            s = Scalar._raw(_monomial(1, k), _P1)
        else:
            s = Scalar._raw(_P1, _monomial(1, -k))
        if len(_QPOW_CACHE) < 4096:
            _QPOW_CACHE[k] = s
    return s


def bracket(a):
    """The quantum bracket ``(a - a^-1) / (q - q^-1)``."""
    a = Scalar.coerce(a)
    if a.is_zero():
        raise ZeroArgument("bracket of zero")
    return (a - a.inverse()) / _QDIFF


_QDIFF = q - q.inverse()


def classify_signed_power(r):
    """Return ``(eps, n)`` with ``r == eps * q**n``, or None if r is not of that form."""
    r = Scalar.coerce(r)
    if r.is_zero():
        raise ZeroArgument("weight must be nonzero")
    mf = r.monomial_form()
    if mf is None:
        return None
    c, k = mf
    if c == 1:
        return 1, k
    if c == -1:
        return -1, k
    return None


class LaurentPoly:
    """Finite Laurent polynomial with :class:`Scalar` coefficients.

    ``symbol`` only labels the formal variable (``"K"``, ``"T"`` or ``"U"``);
    arithmetic between different symbols is refused.
    """

    __slots__ = ("coeffs", "symbol")

    def __init__(self, coeffs=None, symbol="T"):
        clean = {}
        for e, c in (coeffs or {}).items():
            c = Scalar.coerce(c)
            if c:
                clean[int(e)] = c
        self.coeffs = clean
        self.symbol = symbol

    @classmethod
    def monomial(cls, exp, coeff=ONE, symbol="T"):
        return cls({exp: coeff}, symbol)

    @classmethod
    def constant(cls, c, symbol="T"):
        return cls({0: c}, symbol)

    def _check(self, other):
        if isinstance(other, LaurentPoly):
            if other.symbol != self.symbol:
                raise ValueError(f"symbol mismatch: {self.symbol} vs {other.symbol}")
            return other
        return LaurentPoly.constant(other, self.symbol)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, ZERO) + c
        return LaurentPoly(out, self.symbol)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, self.symbol)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = Scalar.coerce(other)
            return LaurentPoly(
                {e: c * other for e, c in self.coeffs.items()}, self.symbol
            )
        other = self._check(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, ZERO) + c1 * c2
        return LaurentPoly(out, self.symbol)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not supported")
        out = LaurentPoly.constant(ONE, self.symbol)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.symbol == other.symbol and self.coeffs == other.coeffs
        c = Scalar.coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.coeffs == ({0: c} if c else {})

    def __hash__(self):
        return hash((self.symbol, frozenset(self.coeffs.items())))

    def __call__(self, x):
        """Evaluate at a nonzero Scalar."""
        x = Scalar.coerce(x)
        total = ZERO
        for e, c in self.coeffs.items():
            total = total + c * x**e
        return total

    def coefficient(self, e):
        return self.coeffs.get(e, ZERO)

    def reflect(self):
        """The Laurent polynomial ``f(T^-1)``."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()}, self.symbol)

    def rescale(self, s):
        """The Laurent polynomial ``f(s T)``."""
        s = Scalar.coerce(s)
        return LaurentPoly({e: c * s**e for e, c in self.coeffs.items()}, self.symbol)

    def with_symbol(self, symbol):
        return LaurentPoly(self.coeffs, symbol)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                mon = ""
            elif e == 1:
                mon = self.symbol
            else:
                mon = f"{self.symbol}^{e}"
            cs = str(c)
            if mon and c == 1:
                parts.append(mon)
            elif mon:
                parts.append(f"({cs})*{mon}")
            else:
                parts.append(f"({cs})" if parts else cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def geometric_partial_sum(phi, s):
    """Closed form of ``M -> sum_{j=0}^{M-1} phi(q^-j s)`` as a Laurent polynomial in ``U = q^-M``.

    ``phi`` must have zero constant term (otherwise the sum grows linearly in
    ``M`` and has no such closed form).
    """
    s = Scalar.coerce(s)
    if s.is_zero():
        raise ZeroArgument("s must be nonzero")
    if phi.coefficient(0):
        raise NonzeroConstantTerm("phi has a nonzero constant term")
    out = {}
    for i, c in phi.coeffs.items():
        # c s^i (1 - U^i) / (1 - q^-i)
        w = c * s**i / (ONE - qpow(-i))
        out[0] = out.get(0, ZERO) + w
        out[i] = out.get(i, ZERO) - w
    return LaurentPoly(out, "U")


def _clear_denominators(P):
    """Integer polynomial table ``{(i, j): c}`` proportional to ``P(U)`` with ``q^j U^i`` terms."""
    den = _P1
    for c in P.coeffs.values():
        g = den.gcd(c.den)
        den = den * (c.den // g)
    table = {}
    for i, c in P.coeffs.items():
        poly = c.num * (den // c.den)
        for j, a in enumerate(poly.coeffs()):
            if a != 0:
                table[(i, j)] = int(a)
    return table


def integer_power_roots(P):
    """All integers ``m`` with ``P(q^-m) == 0``, found exactly.

    After clearing denominators, ``P(q^-m)`` is a sum of terms ``c q^(j - i m)``.
    A cancellation needs two terms with distinct ``i`` to share an exponent, so
    ``m`` must be one of the finitely many ratios ``(j1 - j2) / (i1 - i2)``;
    each such candidate is checked by exact substitution.
    """
    if P.is_zero():
        raise IdenticallyZero("polynomial is identically zero")
    table = _clear_denominators(P)
    keys = list(table)
    candidates = set()
    for (i1, j1), (i2, j2) in combinations(keys, 2):
        if i1 != i2 and (j1 - j2) % (i1 - i2) == 0:
            candidates.add((j1 - j2) // (i1 - i2))
    roots = set()
    for m in candidates:
        acc = {}
        for (i, j), c in table.items():
            e = j - i * m
            acc[e] = acc.get(e, 0) + c
        if not any(acc.values()):
            roots.add(m)
    return roots


def exponent_spread(P):
    """Spread of q-exponents after clearing denominators (the a priori root bound)."""
    table = _clear_denominators(P)
    js = [j for (_, j) in table]
    return max(js) - min(js) if js else 0
