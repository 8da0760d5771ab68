from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import v
from mforge import catalog
from mforge.cartan import cartan_matrix
from mforge.core import MinusculeSystem
from mforge.errors import DimensionMismatch
from mforge.ops import (
    LinearOperator,
    ad_power,
    build_operators,
    check_all,
    check_generator_identities,
    check_presentation,
    commutator,
    compose,
)

DIM = 4
entries = st.dictionaries(
    st.integers(0, DIM - 1),
    st.dictionaries(st.integers(0, DIM - 1), st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=3),
    max_size=DIM,
)
operators = entries.map(lambda cols: LinearOperator(DIM, cols))


def dense_mul(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(DIM)) for j in range(DIM)] for i in range(DIM)]


@given(operators, operators)
def test_compose_matches_dense_product(x, y):
    assert compose(x, y).dense() == dense_mul(x.dense(), y.dense())


@given(operators, operators, operators)
def test_jacobi_identity(x, y, z):
    total = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
    assert total.is_zero()


@given(operators)
def test_self_commutator_vanishes_and_canonical_form(x):
    assert commutator(x, x) == LinearOperator.zero(DIM)
    assert (x - x).columns == {}
    assert x.transpose().transpose() == x
    assert x + LinearOperator.zero(DIM) == x


def test_fraction_normalisation():
    op = LinearOperator(2, {0: {1: Fraction(4, 2), 0: 0}})
    assert op.columns == {0: ((1, 2),)}
    assert op.is_integral()
    assert not LinearOperator(2, {0: {0: Fraction(1, 2)}}).is_integral()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(LinearOperator.identity(2), LinearOperator.identity(3))
    with pytest.raises(DimensionMismatch):
        LinearOperator.identity(2) + LinearOperator.identity(3)


def test_generator_examples(e7):
    fam = build_operators(e7)
    idx = e7.index
    low = idx[v(0, 7, -1)]
    h6 = fam.H["alpha6"]
    assert h6.column(low) == {low: 1}
    assert fam.E["alpha1"].column(idx[v(0, 2)]) == {idx[v(0, 1)]: 1}
    for label, a in e7.delta:
        for x in e7.psi:
            if sum(p * q for p, q in zip(x, a)) == 0:
                assert fam.H[label].column(idx[x]) == {}


def test_commutator_e_f_is_h(e7):
    fam = build_operators(e7)
    assert commutator(fam.E["alpha1"], fam.F["alpha1"]) == fam.H["alpha1"]


@pytest.mark.parametrize("name,params", list(catalog.instances(max_n=6)))
def test_structure_of_generators(name, params):
    sys = catalog.build(name, **params)
    fam = build_operators(sys)
    for label in fam.labels:
        E, F, H = fam.E[label], fam.F[label], fam.H[label]
        assert E.transpose() == F
        assert commutator(E, F) == H
        assert compose(E, E).is_zero()
        assert all(x == 1 for x in E.coefficients())
        assert all(j in dict(col) for j, col in H.columns.items()) and all(len(c) == 1 for c in H.columns.values())
        assert set(H.coefficients()) <= {-1, 1}


@pytest.mark.parametrize("name,params", [("hesse", {}), ("cross-c", {"n": 4}), ("hypercube", {"n": 5})])
def test_serre_brackets_stay_integral(name, params):
    fam = build_operators(catalog.build(name, **params))
    A = cartan_matrix(fam.system.delta)
    for i in fam.labels:
        for j in fam.labels:
            if i == j:
                continue
            for k in range(0, 2 - A[i, j]):
                assert ad_power(fam.E[i], fam.E[j], k).is_integral()
                assert ad_power(fam.F[i], fam.F[j], k).is_integral()


def test_identity_examples():
    fam = build_operators(catalog.hypercube(4))
    report = check_generator_identities(fam)
    selfs = [x for x in report.verdicts if x.relation == "h-e-self"]
    assert selfs and all(x.passed for x in selfs)
    A = cartan_matrix(fam.system.delta)
    commuting = [x for x in report.verdicts if x.relation == "e-f-commute"]
    assert {x.labels for x in commuting} == {(a, b) for a in A.labels for b in A.labels if a != b and A[a, b] == 0}
    assert all(x.passed for x in commuting)


def test_presentation_on_affine_systems(e7_affine):
    assert check_presentation(build_operators(e7_affine)).ok
    assert check_presentation(build_operators(catalog.cross_c(5))).ok


def test_h_commute_on_any_family():
    report = check_presentation(build_operators(catalog.halfcube(5, "-")))
    hh = [x for x in report.verdicts if x.relation == "[h,h]=0"]
    assert len(hh) == 36 and all(x.passed for x in hh)


def test_failure_reports_counterexample(e7_affine):
    broken = MinusculeSystem._unchecked([x for x in e7_affine.psi if x != v(0, 2)], e7_affine.delta)
    report = check_all(build_operators(broken))
    assert not report.ok
    first = report.failures[0]
    assert first.counterexample in broken.psi
    data = report.as_json()
    assert data["format"] == 1 and data["pass"] is False and data["failed"] == len(report.failures)


def test_dense_layout():
    op = LinearOperator(3, {0: {2: 5}})
    assert op.dense() == [[0, 0, 0], [0, 0, 0], [5, 0, 0]]
