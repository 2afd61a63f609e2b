import random

import pytest

from oracles import p_first_root
from qsoa.errors import DimensionMismatch, InfiniteDimensional, ZeroDeformation
from qsoa.pbw import P_EX, P_T, P_ZERO, CenterPolynomial
from qsoa.repn import (
    ModuleMatrices,
    build_simple,
    c0_zero_counterexample,
    c0_zero_verma_report,
    composition_series,
    finite_dim_test,
    joint_kernel_dimension,
    verify_module_relations,
)
from qsoa.scalar import ONE, Scalar, q, qpow
from qsoa.verma import Weight, alpha, maximal_vectors


def test_finite_dim_examples():
    assert finite_dim_test(P_EX, q) == (1, 2)
    assert finite_dim_test(P_EX, Scalar(2)) is None
    assert finite_dim_test(P_EX, -q) is None
    assert finite_dim_test(P_EX, qpow(-2)) is None
    with pytest.raises(ZeroDeformation):
        finite_dim_test(P_ZERO, q)


def test_v_q_for_p_ex():
    m = build_simple(P_EX, q)
    assert m.dim == 2
    assert m.k_eigenvalues() == [q, qpow(-1)]
    assert not any(m["X"].flat) and not any(m["Y"].flat)
    assert verify_module_relations(m, P_EX).all_passed
    assert joint_kernel_dimension(m) == 1


def test_trivial_module():
    p = CenterPolynomial((-(q + qpow(-1)) / (q - qpow(-1)) ** 2, ONE))  # p(c_1) = 0
    assert finite_dim_test(p, ONE) == (1, 1)
    m = build_simple(p, ONE)
    assert m.dim == 1 and m["K"][0, 0] == ONE
    assert all(not m[g][0, 0] for g in ("E", "F", "X", "Y"))


def test_build_simple_infinite():
    with pytest.raises(InfiniteDimensional):
        build_simple(P_EX, -q)


@pytest.mark.parametrize("eps", [1, -1])
@pytest.mark.parametrize("n", range(4))
def test_build_simple_all_first_roots(eps, n):
    r = qpow(n) * eps
    for i in range(1, n + 2):
        p = p_first_root(r, i)
        assert finite_dim_test(p, r) == (i, sum(n - j + 1 for j in range(i)))
        m = build_simple(p, r)
        rep = verify_module_relations(m, p)
        assert rep.all_passed, rep.failed()
        assert joint_kernel_dimension(m) == 1
        assert len(set(m.k_eigenvalues())) == len(set(n - 2 * l - j for j in range(i) for l in range(n - j + 1)))


def test_perturbed_matrix_fails():
    p = p_first_root(q**2, 2)
    m = build_simple(p, q**2)
    mats = {g: a.copy() for g, a in m.mats.items()}
    mats["X"][0, 1] = mats["X"][0, 1] + 1
    rep = verify_module_relations(ModuleMatrices(m.basis_labels, mats), p)
    assert not rep.all_passed
    assert set(rep.failed()) & {"E X = q X E", "q Y X - X Y = p(C)"}


def test_dimension_mismatch():
    m = build_simple(P_EX, q)
    mats = dict(m.mats)
    mats["E"] = mats["E"][:1, :]
    with pytest.raises(DimensionMismatch):
        verify_module_relations(ModuleMatrices(m.basis_labels, mats), P_EX)


def test_counterexample():
    module, rep = c0_zero_counterexample()
    assert rep["relations"].all_passed
    assert set(rep["lattice"]) == {frozenset(), frozenset({0}), frozenset({1, 0, -1})}
    assert rep["complement_to_v0"] is False
    assert rep["verdict"] == "not semisimple"
    assert not verify_module_relations(module, P_T).all_passed


@pytest.mark.parametrize("r", [Scalar(2), q**3])
def test_c0_zero_verma(r):
    assert c0_zero_verma_report(r, 6)["all_passed"]


def test_c0_zero_negative_control():
    rep = c0_zero_verma_report(Scalar(2), 2, p=P_T)
    assert rep["y_powers_maximal"][1] is False


def test_composition_series_p_ex_q():
    cs = composition_series(P_EX, q)
    assert [f.weight for f in cs.factors] == [Weight(q), Weight(qpow(-3)), Weight(ONE), Weight(qpow(-4))]
    assert [f.dim for f in cs.factors] == [2, None, None, None]
    assert cs.flags == []


def test_composition_series_generic_simple():
    cs = composition_series(P_EX, Scalar(2))
    assert [f.weight for f in cs.factors] == [Weight(Scalar(2))]


def test_composition_series_factors_are_alpha_roots():
    rng = random.Random(1)
    for _ in range(6):
        r = Scalar(rng.randint(2, 9)) * qpow(rng.randint(-2, 2))
        k = rng.randint(1, 4)
        p = p_first_root(r, k)
        cs = composition_series(p, r)
        chain = cs.chain
        for a, b in zip(chain, chain[1:]):
            shift = (a.value / b.value).monomial_form()
            assert shift is not None and shift[0] == 1 and shift[1] >= 1
            x = shift[1]
            assert alpha(p, a, x + 1).is_zero()
            assert maximal_vectors(p, a, x)


def test_chain_weights_decrease_for_integer_weights():
    for r in (q, q**2, -(q**3), ONE):
        cs = composition_series(P_T, r)
        for a, b in zip(cs.chain, cs.chain[1:]):
            e = (b.value / a.value).monomial_form()
            assert e[0] == 1 and e[1] < 0
