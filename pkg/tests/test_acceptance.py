"""Acceptance criteria, one test each.

Every test prints a single line ``[criterion N] PASS|FAIL ...`` with its
runtime and pinned limit, then asserts.  Sub-checks are evaluated in full
before the verdict so a failing line names every failing part.
"""

import random
import time

from oracles import P_T2, lemma52_e, lemma52_x, p_first_root, random_generic_weight, random_p, random_scalar
from qsoa.blocks import alpha_root_set, semisimplicity_check
from qsoa.center import CentralizerQuery, centralizer_basis
from qsoa.pbw import P_EX, P_T, P_ZERO, CenterPolynomial, monomial_word, reduction_system
from qsoa.repn import (
    build_simple,
    c0_zero_counterexample,
    c0_zero_verma_report,
    finite_dim_test,
    verify_module_relations,
)
from qsoa.rewrite import PAPER_AMBIGUITIES, verify_confluence
from qsoa.scalar import ONE, ZERO, Scalar, bracket, q, qpow
from qsoa.verma import (
    VermaElement,
    _kernel,
    act,
    alpha,
    c0_scalar,
    c_scalar,
    d_const,
    maximal_vectors,
    sl2_maximal_vectors,
    structure_vector,
)

QD = q - qpow(-1)


class Checks:
    def __init__(self):
        self.items = []

    def __call__(self, name, ok):
        self.items.append((name, bool(ok)))

    @property
    def failed(self):
        return [n for n, ok in self.items if not ok]


def report(capsys, number, title, limit, body):
    checks = Checks()
    start = time.perf_counter()
    body(checks)
    elapsed = time.perf_counter() - start
    in_time = elapsed < limit
    failed = checks.failed + ([] if in_time else [f"runtime {elapsed:.1f}s >= {limit}s"])
    verdict = "FAIL" if failed else "PASS"
    detail = f" failed: {'; '.join(failed)}" if failed else ""
    line = (
        f"[criterion {number:>2}] {verdict} {title} "
        f"({len(checks.items)} checks, {elapsed:.2f}s, limit {limit}s){detail}"
    )
    with capsys.disabled():
        print("\n" + line)
    assert not failed, line


def test_criterion_01_confluence(capsys):
    def body(check):
        for name, p in (("0", P_ZERO), ("t", P_T), ("p_ex", P_EX)):
            rep = verify_confluence(reduction_system(p))
            check(f"p={name}: 16/16 listed resolved", rep.paper_resolved == 16 == len(rep.paper))
            check(f"p={name}: every detected overlap resolved", rep.all_resolved)
            detected = set(rep.detected_words())
            extra = sorted(detected - set(PAPER_AMBIGUITIES))
            check(
                f"p={name}: detector finds exactly the listed 16 (extra: {','.join(extra) or 'none'})",
                detected == set(PAPER_AMBIGUITIES),
            )

    report(capsys, 1, "confluence", 5, body)


def test_criterion_02_pbw_freeness(capsys):
    def body(check):
        monos = [
            (a, b, c, d, e)
            for a in range(5)
            for b in range(5)
            for c in range(-4, 5)
            for d in range(5)
            for e in range(5)
            if a + b + abs(c) + d + e <= 4
        ]
        words = [monomial_word(m) for m in monos]
        check("distinct monomials give distinct words", len(set(words)) == len(words))
        for name, p in (("0", P_ZERO), ("t", P_T), ("p_ex", P_EX)):
            sys_ = reduction_system(p)
            fixed = all(sys_.normal_form_word(w) == {w: ONE} for w in words)
            check(f"p={name}: normal form fixes all {len(words)} monomials", fixed)
            rng = random.Random(len(name))
            combos_ok = True
            for _ in range(50):
                chosen = rng.sample(words, rng.randint(1, 6))
                elem = {w: random_scalar(rng) for w in chosen}
                combos_ok &= sys_.normal_form(elem) == elem
            check(f"p={name}: nontrivial combinations normalize to themselves", combos_ok)

    report(capsys, 2, "PBW freeness", 30, body)


def test_criterion_03_identities(capsys):
    def body(check):
        rng = random.Random(303)
        n_inst = 120
        ok31 = ok32a = ok32b = True
        for _ in range(n_inst):
            a, b = random_scalar(rng), random_scalar(rng)
            ok31 &= a * bracket(b) - b * bracket(a) == bracket(a.inverse() * b)
            ok32a &= bracket(a.inverse()) == -bracket(a)
            ok32b &= qpow(-1) * bracket(b) + b == bracket(q * b)
        check("bracket identity a<b> - b<a> = <b/a>", ok31)
        check("<1/a> = -<a>", ok32a)
        check("q^-1 <b> + b = <qb>", ok32b)
        ok34 = True
        for _ in range(n_inst):
            p, r, n = random_p(rng), random_generic_weight(rng), rng.randint(2, 7)
            lhs = bracket(qpow(1 - n) * r) * d_const(p, r, n + 1)
            rhs = bracket(qpow(3 - n) * r) * d_const(p, r, n) + c0_scalar(p, qpow(1 - n) * r)
            ok34 &= lhs == rhs
        check("d recurrence", ok34)
        ok81 = True
        for _ in range(n_inst):
            p, r = random_p(rng), random_generic_weight(rng)
            n, m = rng.randint(0, 8), rng.randint(0, 8)
            rn = qpow(n) * r
            ok81 &= alpha(p, rn, n + m + 1) == alpha(p, rn, n + 1) + alpha(p, r, m + 1)
        check("alpha additivity", ok81)

    report(capsys, 3, "bracket and alpha identities", 10, body)


def test_criterion_04_commutation_formulas(capsys):
    def body(check):
        for pname, p in (("0", P_ZERO), ("t", P_T), ("p_ex", P_EX)):
            for rname, r in (("2", Scalar(2)), ("q^3", q**3), ("-q^2", -(q**2))):
                ok = True
                for n in range(6):
                    for m in range(6):
                        v = VermaElement.basis_vector(n, m, r)
                        ok &= act("X", v, p) == lemma52_x(p, r, n, m)
                        ok &= act("E", v, p) == lemma52_e(p, r, n, m)
                check(f"p={pname}, r={rname}", ok)

    report(capsys, 4, "commutation formulas vs Verma action", 60, body)


def test_criterion_05_structure_equations(capsys):
    def body(check):
        rng = random.Random(505)
        for pname, p in (("t", P_T), ("p_ex", P_EX), ("t^2", P_T2)):
            r = random_generic_weight(rng)
            ok = True
            for n in range(2, 9):
                lhs = act("X", structure_vector(p, r, n - 1), p)
                rhs = structure_vector(p, r, n - 2) * (-alpha(p, r, n) / bracket(qpow(3 - n) * r))
                ok &= lhs == rhs
            check(f"X v_(n-1) = -alpha/<..> v_(n-2), p={pname}", ok)
            shape = True
            for n in range(9):
                v = structure_vector(p, r, n)
                shape &= v.coefficient(0, n) == ONE and all(2 * i + j == n for i, j in v.terms)
                shape &= act("E", v, p).is_zero()
            check(f"structure vectors monic, homogeneous, E-killed, p={pname}", shape)
        worst = 0
        samples = 0
        weights = [Scalar(2), q**3, -(q**2), ONE, q, -q, qpow(-2), Scalar(3) / (q + 1)]
        for p in (P_T, P_EX, P_T2):
            for r in weights:
                for n in range(11):
                    worst = max(worst, len(_kernel(p, r, n, ("E", "X"))))
                    samples += 1
        for _ in range(20):
            r = random_generic_weight(rng)
            n = rng.randint(1, 10)
            p = p_first_root(r, n)
            worst = max(worst, len(_kernel(p, r, n, ("E", "X"))))
            samples += 1
        check(f"maximal-vector kernel dim <= 1 on {samples} weight spaces (max {worst})", worst <= 1)

    report(capsys, 5, "structure equations and uniqueness", 120, body)


def test_criterion_06_worked_example(capsys):
    def body(check):
        roots = alpha_root_set(P_EX, q)
        check(f"alpha_root_set(p_ex, q) = {{1, 4}} (got {sorted(roots)})", roots == {1, 4})
        finite = []
        for eps in (1, -1):
            for n in range(16):
                r = qpow(n) * eps
                found = finite_dim_test(P_EX, r)
                if found is not None:
                    finite.append((r, found[1]))
        check("only finite-dimensional simple is V(q), dim 2", finite == [(q, 2)])
        m = build_simple(P_EX, q)
        check("V(q) matrices satisfy every relation", verify_module_relations(m, P_EX).all_passed)
        check("semisimplicity_check(p_ex, 15) = PASS", semisimplicity_check(P_EX, 15).verdict == "PASS")

    report(capsys, 6, "worked example", 120, body)


def test_criterion_07_symmetric_root(capsys):
    def body(check):
        for pname, p in (("t", P_T), ("t^2", P_T2), ("p_ex", P_EX)):
            ok = all(
                alpha(p, qpow(n) * eps, 2 * n + 4).is_zero() for eps in (1, -1) for n in range(11)
            )
            check(f"alpha_(eps q^n, 2n+4) = 0, n <= 10, p={pname}", ok)

    report(capsys, 7, "alpha vanishes at 2n+4", 30, body)


def test_criterion_08_c0_zero_counterexample(capsys):
    def body(check):
        module, rep = c0_zero_counterexample()
        check("relations hold with p = 0", rep["relations"].all_passed)
        check(
            "lattice is {0, span(v0), V}",
            set(rep["lattice"]) == {frozenset(), frozenset({0}), frozenset({1, 0, -1})},
        )
        check("no complement to span(v0)", rep["complement_to_v0"] is False)

    report(capsys, 8, "C0 = 0 counterexample module", 5, body)


def _eq_11_1(p, eps):
    e = Scalar(eps)
    c, c0, c0m = c_scalar(e), c0_scalar(p, e), c0_scalar(p, qpow(-1) * e)
    b = e * ((q + qpow(-1)) * c0 + c0m)
    return b, c0 * (c - c0) * b + c0 * (c0 - p(c0))


def test_criterion_09_counterexamples(capsys):
    def body(check):
        # (1) p = t: a Y-leading sl2-maximal vector at index n+2 in Z(eps q^n) forces alpha_{r,n+3} = 0
        implication = True
        controls = True
        for eps in (1, -1):
            for n in range(6):
                r = qpow(n) * eps
                vecs = sl2_maximal_vectors(P_T, r, n + 2)
                has_y = any(v.coefficient(0, n + 2) for v in vecs)
                implication &= (not has_y) or alpha(P_T, r, n + 3).is_zero()
                implication &= alpha(P_T, r, n + 2) == alpha(P_T, r, n + 3)
                # control: force alpha_{r,n+3} = 0 and the Y-leading vector appears
                if n <= 3:
                    p = p_first_root(r, n + 2)
                    vecs = sl2_maximal_vectors(p, r, n + 2)
                    controls &= alpha(p, r, n + 3).is_zero()
                    controls &= any(v.coefficient(0, n + 2) for v in vecs)
        check("p=t: Y-leading sl2-maximal vector at index n+2 only if alpha_{r,n+3} = 0, n <= 5", implication)
        check("control: with alpha_{r,n+3} forced to 0 the vector exists", controls)
        # (2) p = 2t
        beta = Scalar(2)
        p = CenterPolynomial((ZERO, beta))
        for eps in (1, -1):
            e = Scalar(eps)
            check(f"eps={eps}: no maximal vector at index 3 in Z(eps)", maximal_vectors(p, e, 3) == [])
            b, lhs = _eq_11_1(p, e)
            check(f"eps={eps}: obstruction nonzero", not lhs.is_zero())
            c = c_scalar(e)
            bracket_term = (q + qpow(-1)) * c_scalar(ONE) + c_scalar(qpow(-1)) + ONE
            check(
                f"eps={eps}: obstruction = beta^2 (1-beta) c^2 ((q^6-1) 2/(q^2 (q^2-1) (q-q^-1)^2))",
                lhs == beta**2 * (1 - beta) * c * c * bracket_term
                and bracket_term * qpow(2) * (q * q - 1) * QD**2 == 2 * (qpow(6) - 1),
            )
            v = VermaElement({(0, 3): ONE, (1, 1): -b}, e)
            xv = act("X", v, p)
            check(
                f"eps={eps}: X v' = (obstruction / (c - c0)) F v",
                xv == VermaElement({(1, 0): lhs / (c - c0_scalar(p, e))}, e),
            )

    report(capsys, 9, "section 11 counterexamples", 60, body)


def test_criterion_10_center(capsys):
    def body(check):
        res = centralizer_basis(CentralizerQuery(P_EX, (2, 2, 2, 2, 2)))
        check(f"dimension exactly 1 (got {res.dimension})", res.dimension == 1)
        check("scalars contained", any(b.terms == {(0, 0, 0, 0, 0): ONE} for b in res.basis))

    report(capsys, 10, "bounded center", 300, body)


def test_criterion_11_c0_zero_vermas(capsys):
    def body(check):
        for name, r in (("2", Scalar(2)), ("q^3", q**3)):
            rep = c0_zero_verma_report(r, 6)
            check(f"r={name}: Y^n v_r A-maximal, n <= 6", all(rep["y_powers_maximal"].values()))
            check(f"r={name}: X, Y kill F^k v_r mod Z(q^-1 r), k <= 6", all(rep["quotient_killed_by_x_y"].values()))

    report(capsys, 11, "C0 = 0 Verma modules", 30, body)
