import random

import pytest
from hypothesis import given, strategies as st

from qsoa.errors import StepLimitExceeded
from qsoa.pbw import P_EX, P_T, P_ZERO, reduction_system
from qsoa.rewrite import (
    PAPER_AMBIGUITIES,
    ReductionSystem,
    order_compare,
    paper_rules,
    paper_system,
    verify_confluence,
    weight,
)
from qsoa.scalar import ONE, q, qpow

words = st.text(alphabet="EFKLXY", max_size=8)


def test_sixteen_rules():
    assert len(paper_rules()) == 16


@pytest.mark.parametrize(
    "w1, w2, expected", [("XY", "YX", 1), ("KL", "K", 1), ("EE", "X", -1), ("FE", "FE", 0)]
)
def test_order_compare(w1, w2, expected):
    assert order_compare(w1, w2) == expected


def test_every_rule_decreases():
    for lhs, rhs in paper_rules({"FE": ONE, "K": q}).items():
        for w in rhs:
            assert order_compare(lhs, w) > 0, (lhs, w)


def test_rule_examples():
    sys = paper_system()
    assert sys.normal_form_word("KL") == {"": ONE}
    inv = (q - qpow(-1)).inverse()
    assert sys.normal_form_word("EF") == {"FE": ONE, "K": inv, "L": -inv}
    assert sys.normal_form_word("XY") == {"YX": q}


@pytest.mark.parametrize("p", [P_ZERO, P_T, P_EX], ids=["0", "t", "p_ex"])
def test_paper_system_confluent(p):
    rep = verify_confluence(reduction_system(p))
    assert rep.paper_resolved == 16
    assert rep.all_resolved


def test_detected_overlaps_cover_listed():
    rep = verify_confluence(paper_system())
    assert set(PAPER_AMBIGUITIES) <= set(rep.detected_words())


def test_broken_xy_rule_leaves_xyf_unresolved():
    rules = paper_rules()
    rules["XY"] = {"YX": ONE}
    rep = verify_confluence(ReductionSystem(rules))
    bad = {a.word for a in rep.unresolved()}
    assert "XYF" in bad


def test_kl_subsystem():
    sys = ReductionSystem({"KL": {"": ONE}, "LK": {"": ONE}})
    rep = verify_confluence(sys, words=())
    assert sorted(rep.detected_words()) == ["KLK", "LKL"]
    assert rep.all_resolved


def test_step_budget():
    sys = ReductionSystem({"AB": {"BA": ONE}, "BA": {"AB": ONE}})
    with pytest.raises(StepLimitExceeded):
        sys.normal_form_word("AB", max_steps=50)


@given(words)
def test_idempotent_and_irreducible(w):
    sys = reduction_system(P_EX)
    nf = sys.normal_form_word(w)
    assert all(sys.is_irreducible(u) for u in nf)
    assert sys.normal_form(nf) == nf


@given(words)
def test_weight_homogeneous(w):
    nf = reduction_system(P_T).normal_form_word(w)
    assert all(weight(u) == weight(w) for u in nf)


def test_strategy_independence():
    rng = random.Random(11)
    sys = reduction_system(P_EX)
    for _ in range(200):
        w = "".join(rng.choice("EFKLXY") for _ in range(rng.randint(0, 8)))
        assert sys.normal_form_word(w, "leftmost") == sys.normal_form_word(w, "rightmost")
