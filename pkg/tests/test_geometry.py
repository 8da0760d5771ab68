import itertools

import pytest

from conftest import v
from mforge import catalog
from mforge.catalog import K0, K7
from mforge.core import norm2, sub
from mforge.errors import EqualVertices, NotALineDistance, NotOnPolytope, WrongSystem
from mforge.geometry import (
    LineLabel,
    bifid,
    bifid_reflection,
    commutator_support_check,
    cubic_incidence_table,
    decode,
    incidence_table,
    intersection_number,
    line_labels,
    support_check,
)
from mforge.ops import build_operators
from mforge.weyl import reflect

ALPHA7 = (-2, -2, -2, -2, 2, 2, 2, 2)


def test_intersection_examples():
    assert intersection_number(v(0, 1), v(0, 2)) == 0
    assert intersection_number(v(3, 5), v(3, 5, -1)) == 2
    assert intersection_number(v(0, 1), v(2, 3, -1)) == 0


def test_intersection_errors():
    with pytest.raises(NotOnPolytope):
        intersection_number((0,) * 8, v(0, 1))
    with pytest.raises(EqualVertices):
        intersection_number(v(0, 1), v(0, 1))


def test_not_a_line_distance(monkeypatch):
    from mforge import geometry

    monkeypatch.setattr(geometry, "EDGE_SQDIST", 48)
    with pytest.raises(NotALineDistance):
        geometry.intersection_number(v(0, 1), v(0, 2))


def test_decode():
    assert decode(v(2, 5, -1)) == (-1, 2, 5)
    with pytest.raises(NotOnPolytope):
        decode((1,) * 8)


def test_labels():
    labels = line_labels()
    assert len(labels) == 27 and len(set(labels.values())) == 27
    assert labels[LineLabel("E", (1,))] == v(0, 1)
    assert labels[LineLabel("F", (2, 3))] == v(2, 3, -1)
    assert str(LineLabel("F", (2, 3))) == "F23"
    assert set(labels.values()) == set(catalog.schlafli(8).psi)


def _classical_meets(p: LineLabel, q: LineLabel) -> bool:
    """Meeting rule of the 27 lines, stated on labels alone."""
    kinds = {p.kind, q.kind}
    if kinds == {"E"} or kinds == {"G"}:
        return False
    if kinds == {"E", "G"}:
        return p.indices != q.indices
    if kinds == {"F"}:
        return not set(p.indices) & set(q.indices)
    f, other = (p, q) if p.kind == "F" else (q, p)
    return other.indices[0] in f.indices


def test_skew_pairs_against_label_rule():
    labels = line_labels()
    skew = 0
    for (p, x), (q, y) in itertools.combinations(labels.items(), 2):
        number = intersection_number(x, y)
        assert number in (0, 1)
        assert (number == 1) == _classical_meets(p, q)
        assert (number == 0) == (norm2(sub(x, y)) == 32)
        skew += number == 0
    assert skew == 216


def test_each_line_skew_to_sixteen():
    table = cubic_incidence_table()
    counts = [0] * 27
    for (i, j), x in table.pairs.items():
        if x == 0:
            counts[i] += 1
            counts[j] += 1
    assert counts == [16] * 27


def test_negation_transports_table(e6_plus):
    pts = list(e6_plus.psi)
    a = incidence_table(pts)
    b = incidence_table([tuple(-c for c in p) for p in pts])
    assert a.pairs == b.pairs


def test_intersection_is_weyl_invariant(e7):
    pts = e7.psi[:12]
    for a in e7.delta.vectors:
        for x, y in itertools.combinations(pts, 2):
            assert intersection_number(reflect(a, x), reflect(a, y)) == intersection_number(x, y)


def test_full_table_json():
    data = incidence_table().as_json()
    assert data["format"] == 1 and len(data["lines"]) == 56
    assert len(data["intersections"]) == 56 * 55 // 2
    assert {x for _, _, x in data["intersections"]} == {0, 1, 2}


def test_bifid_examples():
    assert bifid(K0, v(0, 1)) == v(2, 3, -1)
    assert bifid(K0, v(0, 5)) == v(0, 5)
    assert bifid(K7, v(4, 5, -1)) == v(6, 7)
    with pytest.raises(NotOnPolytope):
        bifid(K0, (0,) * 8)


def test_bifid_is_reflection(e7):
    for x in e7.psi:
        assert bifid_reflection(x) == reflect(ALPHA7, x)


def test_composed_bifids_equal_reflection(e7):
    for x in e7.psi:
        assert bifid(K7, bifid(K0, x)) == reflect(ALPHA7, x)


def test_support(e7, e6_plus, e6_minus):
    for sys in (e7, e6_plus, e6_minus):
        assert support_check(build_operators(sys))
    assert commutator_support_check(build_operators(e7))


def test_support_wrong_system(e7_affine):
    with pytest.raises(WrongSystem):
        support_check(build_operators(e7_affine))
    with pytest.raises(WrongSystem):
        support_check(build_operators(catalog.hypercube(4, affine=False)))
