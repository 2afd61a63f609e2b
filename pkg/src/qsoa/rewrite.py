"""Rewriting in the free algebra on E, F, K, L, X, Y over Q(q).

Words are plain strings over ``"EFKLXY"`` with ``L`` standing for ``K^-1``.
An element of the free algebra (a :data:`FreeElement`) is a ``dict`` mapping
words to nonzero :class:`~qsoa.scalar.Scalar` coefficients; the empty word is
the unit.

:func:`paper_system` builds the sixteen-rule reduction system whose
irreducible words are exactly ``F^a Y^b K^c X^d E^e`` (``L^c`` for negative
``c``).  Normal forms are memoised per system and per strategy.
"""

from dataclasses import dataclass, field

from .errors import StepLimitExceeded
from .scalar import ONE, Scalar, q, qpow

ALPHABET = "EFKLXY"
LEX_ORDER = "FYLKXE"
_LEX_RANK = {ch: i for i, ch in enumerate(LEX_ORDER)}

DEFAULT_STEP_BUDGET = 10**7

PAPER_AMBIGUITIES = (
    "LYF", "KYF", "XYF", "EYF", "EXF", "XLF", "XKF", "KLY",
    "XLY", "ELY", "XKY", "EKY", "EXY", "XKL", "EXL", "EXK",
)


def word_key(w):
    """Sort key realising the PBW ordering: XY-count, then length, then lex F<Y<L<K<X<E."""
    return (
        sum(1 for ch in w if ch in "XY"),
        len(w),
        tuple(_LEX_RANK[ch] for ch in w),
    )


def order_compare(w1, w2):
    """-1, 0 or 1 as ``w1`` is less than, equal to or greater than ``w2``."""
    k1, k2 = word_key(w1), word_key(w2)
    return (k1 > k2) - (k1 < k2)


def free_add(target, other, scale=ONE):
    """In-place ``target += scale * other`` on FreeElement dicts; returns target."""
    for w, c in other.items():
        v = target.get(w)
        v = c * scale if v is None else v + c * scale
        if v:
            target[w] = v
        else:
            target.pop(w, None)
    return target


def free_element(terms):
    """Build a FreeElement from ``(word, coeff)`` pairs, merging and dropping zeros."""
    out = {}
    for w, c in terms:
        free_add(out, {w: Scalar.coerce(c)})
    return out


def weight(w):
    wt = {"E": 2, "F": -2, "X": 1, "Y": -1, "K": 0, "L": 0}
    return sum(wt[ch] for ch in w)


@dataclass(eq=False)
class ReductionSystem:
    """An ordered rule table ``lhs -> FreeElement``.

    ``c0_expansion`` is recorded for reference; it is already substituted into
    the right-hand side of ``XY`` by :func:`paper_system`.
    """

    rules: dict
    c0_expansion: dict = field(default_factory=dict)
    name: str = "custom"

    def __post_init__(self):
        self.rules = {lhs: dict(rhs) for lhs, rhs in self.rules.items()}
        self._lhs_by_len = sorted({len(k) for k in self.rules})
        self._cache = {"leftmost": {}, "rightmost": {}}

    def _find(self, w, strategy):
        n = len(w)
        rng = range(n) if strategy == "leftmost" else range(n - 1, -1, -1)
        for i in rng:
            for ln in self._lhs_by_len:
                if i + ln <= n and w[i:i + ln] in self.rules:
                    return i, ln
        return None

    def is_irreducible(self, w):
        return self._find(w, "leftmost") is None

    def rewrite_at(self, w, pos, length):
        """One reduction step at ``w[pos:pos+length]``; returns a FreeElement."""
        rhs = self.rules[w[pos:pos + length]]
        pre, suf = w[:pos], w[pos + length:]
        return {pre + u + suf: c for u, c in rhs.items()}

    def normal_form_word(self, w, strategy="leftmost", max_steps=DEFAULT_STEP_BUDGET):
        cache = self._cache[strategy]
        hit = cache.get(w)
        if hit is not None:
            return hit
        stack = [w]
        steps = 0
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            steps += 1
            if steps > max_steps:
                raise StepLimitExceeded(f"more than {max_steps} rewrite steps")
            found = self._find(top, strategy)
            if found is None:
                cache[top] = {top: ONE}
                stack.pop()
                continue
            children = self.rewrite_at(top, *found)
            missing = [u for u in children if u not in cache]
            if missing:
                stack.extend(missing)
                continue
            result = {}
            for u, c in children.items():
                free_add(result, cache[u], c)
            cache[top] = result
            stack.pop()
        return cache[w]

    def normal_form(self, elem, strategy="leftmost", max_steps=DEFAULT_STEP_BUDGET):
        if isinstance(elem, str):
            elem = {elem: ONE}
        out = {}
        for w, c in elem.items():
            free_add(out, self.normal_form_word(w, strategy, max_steps), c)
        return out

    def overlaps(self):
        """Mechanically detected ambiguities as ``(word, (pos1, len1), (pos2, len2))``."""
        found = []
        seen = set()
        lhss = list(self.rules)
        for u in lhss:
            for v in lhss:
                # v overlapping a proper suffix of u
                for k in range(1, len(u)):
                    if k + len(v) > len(u) and u[k:] == v[: len(u) - k]:
                        w = u + v[len(u) - k:]
                        key = (w, 0, len(u), k, len(v))
                        if key not in seen:
                            seen.add(key)
                            found.append((w, (0, len(u)), (k, len(v))))
                # v strictly inside u
                if u != v and len(v) < len(u):
                    for k in range(len(u) - len(v) + 1):
                        if u[k:k + len(v)] == v:
                            key = (u, 0, len(u), k, len(v))
                            if key not in seen:
                                seen.add(key)
                                found.append((u, (0, len(u)), (k, len(v))))
        return found


def normal_form(elem, sys, strategy="leftmost", max_steps=DEFAULT_STEP_BUDGET):
    """Reduce ``elem`` (a word or FreeElement) to irreducible words under ``sys``."""
    return sys.normal_form(elem, strategy, max_steps)


def paper_rules(c0_expansion=None):
    """The sixteen rules, with ``C0`` (a FreeElement in irreducible words) substituted."""
    c0 = dict(c0_expansion or {})
    qi = qpow(-1)
    inv_diff = (q - qi).inverse()
    xy = {"YX": q}
    free_add(xy, c0, -ONE)
    return {
        "EK": {"KE": qpow(-2)},
        "KF": {"FK": qpow(-2)},
        "LK": {"": ONE},
        "KL": {"": ONE},
        "EF": free_element([("FE", ONE), ("K", inv_diff), ("L", -inv_diff)]),
        "EX": {"XE": q},
        "EY": {"X": ONE, "YE": qi},
        "XF": {"FX": ONE, "YL": -ONE},
        "YF": {"FY": ONE},
        "XY": xy,
        "EL": {"LE": qpow(2)},
        "LF": {"FL": qpow(2)},
        "XK": {"KX": qi},
        "KY": {"YK": qi},
        "XL": {"LX": q},
        "LY": {"YL": q},
    }


def paper_system(c0_expansion=None, name="paper"):
    return ReductionSystem(paper_rules(c0_expansion), dict(c0_expansion or {}), name)


@dataclass
class Ambiguity:
    word: str
    resolved: bool
    left: dict
    right: dict
    in_paper_list: bool = False

    @property
    def involves_xy(self):
        return "X" in self.word or "Y" in self.word


@dataclass
class ConfluenceReport:
    paper: list
    detected: list

    @property
    def paper_resolved(self):
        return sum(a.resolved for a in self.paper)

    @property
    def all_resolved(self):
        return all(a.resolved for a in self.paper) and all(a.resolved for a in self.detected)

    def detected_words(self):
        return sorted({a.word for a in self.detected})

    def unresolved(self):
        return [a for a in self.paper + self.detected if not a.resolved]


def _resolve(sys, w, first, second, max_steps):
    left = sys.normal_form(sys.rewrite_at(w, *first), max_steps=max_steps)
    right = sys.normal_form(sys.rewrite_at(w, *second), max_steps=max_steps)
    return left, right


def verify_confluence(sys, words=PAPER_AMBIGUITIES, max_steps=DEFAULT_STEP_BUDGET):
    """Check every listed length-3 ambiguity and every mechanically detected overlap.

    For a listed word ``abc`` the two reductions rewrite ``ab`` first or ``bc``
    first and then normalise fully.  Listed words whose factors are not both
    rule left-hand sides are reported as unresolved.
    """
    paper = []
    for w in words:
        first, second = (0, 2), (1, 2)
        if w[:2] not in sys.rules or w[1:3] not in sys.rules:
            paper.append(Ambiguity(w, False, {}, {}, True))
            continue
        left, right = _resolve(sys, w, first, second, max_steps)
        paper.append(Ambiguity(w, left == right, left, right, True))
    listed = set(words)
    detected = []
    for w, first, second in sys.overlaps():
        left, right = _resolve(sys, w, first, second, max_steps)
        detected.append(Ambiguity(w, left == right, left, right, w in listed))
    return ConfluenceReport(paper, detected)


def free_str(elem):
    """Readable text for a FreeElement (words sorted by the PBW order)."""
    if not elem:
        return "0"
    parts = []
    for w in sorted(elem, key=word_key):
        c = elem[w]
        word = w or "1"
        if c == 1:
            parts.append(word)
        elif c == -1:
            parts.append(f"-{word}")
        else:
            parts.append(f"({c})*{word}")
    return " + ".join(parts).replace("+ -", "- ")
