import itertools
from collections import deque

import pytest

from conftest import v
from mforge import catalog
from mforge.analysis import (
    INCONCLUSIVE,
    IRREDUCIBLE,
    crystal_graph,
    extreme_vectors,
    irreducibility_certificate,
    is_connected,
    weight,
    weight_poset,
)
from mforge.core import SimpleSystem, add, make_system, sub
from mforge.errors import DependentSimpleSystem, NotFiniteType, NotInPsi

FINITE = [(n, p) for n, p in catalog.instances(max_n=6)
          if "affine" not in n and p.get("affine", True) is False or n in ("schlafli", "hypercube-slice")]


def test_weight_examples(e7, e6_plus):
    w = weight(e7, v(0, 7, -1))
    assert w.fundamental() == "alpha6"
    w = weight(e6_plus, v(1, 7))
    assert w["alpha1"] == 1 and all(w[l] == 0 for l in ("alpha2", "alpha3", "alpha4", "alpha5", "alpha7"))
    top = catalog.schlafli(24)
    assert weight(top, top.psi[0]).is_zero()
    with pytest.raises(NotInPsi):
        weight(e7, (0,) * 8)


def test_extreme_examples(e7):
    assert extreme_vectors(e7) == ([v(0, 7, -1)], [v(0, 7)])
    for n in (3, 5):
        assert extreme_vectors(catalog.hypercube(n, affine=False)) == ([(2,) * n], [(-2,) * n])
    for n in (4, 5, 6):
        assert extreme_vectors(catalog.halfcube(n, "+", affine=False))[0] == [(2,) * n]
        assert extreme_vectors(catalog.halfcube(n, "-", affine=False))[0] == [(2,) * (n - 1) + (-2,)]


@pytest.mark.parametrize("name,params", FINITE)
def test_certificate_on_finite_entries(name, params):
    sys = catalog.build(name, **params)
    cert = irreducibility_certificate(sys)
    highest, lowest = extreme_vectors(sys)
    if len(sys) == 1:
        assert cert.verdict == INCONCLUSIVE and cert.reason == "TrivialModule"
    else:
        assert cert.verdict == IRREDUCIBLE
        assert len(highest) == 1 == len(lowest)
        assert cert.weights_distinct and cert.graph_connected


def test_e6_modules_differ(e6_plus, e6_minus):
    a = irreducibility_certificate(e6_plus).highest_weight
    b = irreducibility_certificate(e6_minus).highest_weight
    assert a.fundamental() == "alpha1" and b.fundamental() == "alpha5"


def test_certificate_needs_finite_type(e7_affine):
    with pytest.raises(NotFiniteType):
        irreducibility_certificate(e7_affine)


def test_certificate_is_inconclusive_on_a_sum():
    delta = SimpleSystem.from_pairs([("a", (2, -2, 0))])
    sys = make_system([(1, -1, 0), (-1, 1, 0), (0, 0, 1), (0, 0, -1)], delta)
    cert = irreducibility_certificate(sys)
    assert cert.verdict == INCONCLUSIVE and not cert.irreducible


def _crystal_oracle(sys):
    return {(x, add(x, a), l) for x in sys.psi for l, a in sys.delta if add(x, a) in sys}


def test_crystal_e7(e7):
    g = crystal_graph(e7)
    assert set(g.edges) == _crystal_oracle(e7)
    assert len(g.edges) == 84
    assert is_connected(e7)
    assert crystal_graph(catalog.schlafli(-24)).edges == ()


@pytest.mark.parametrize("name,params", list(catalog.instances(max_n=5)))
def test_parallel_edges_iff_same_label(name, params):
    g = crystal_graph(catalog.build(name, **params))
    for (u1, w1, l1), (u2, w2, l2) in itertools.combinations(g.edges, 2):
        assert (sub(w1, u1) == sub(w2, u2)) == (l1 == l2)


def test_dot_export():
    g = crystal_graph(catalog.cross_c(2, affine=False))
    text = g.to_dot()
    assert text.startswith("digraph crystal {")
    assert '"(-4, 0)" -> "(0, -4)" [label="alpha1"];' in text
    assert text.count("->") == len(g.edges)
    assert text.count(";") == len(g.edges) + len(g.vertices)


def _reachable(sys):
    out = {}
    for x in sys.psi:
        seen, queue = {x}, deque([x])
        while queue:
            y = queue.popleft()
            for a in sys.delta.vectors:
                z = add(y, a)
                if z in sys and z not in seen:
                    seen.add(z)
                    queue.append(z)
        out[x] = seen
    return out


@pytest.mark.parametrize("name,params", [("hesse", {"affine": False}), ("schlafli", {"level": 8}),
                                         ("hypercube", {"n": 4, "affine": False}),
                                         ("halfcube", {"n": 5, "parity": "-", "affine": False}),
                                         ("hypercube-slice", {"n": 5, "k": 2}),
                                         ("cross-c", {"n": 4, "affine": False})])
def test_poset_matches_e_step_reachability(name, params):
    sys = catalog.build(name, **params)
    poset = weight_poset(sys)
    reach = _reachable(sys)
    for i, x in enumerate(sys.psi):
        for j, y in enumerate(sys.psi):
            assert poset.leq(i, j) == (y in reach[x])
    highest, lowest = extreme_vectors(sys)
    assert poset.maximum() == highest[0] and poset.minimum() == lowest[0]


def test_b3_poset_is_distributive_lattice():
    poset = weight_poset(catalog.hypercube(3, affine=False))
    assert len(poset.vertices) == 8 and poset.is_lattice and poset.is_distributive()


def test_non_lattice_detected():
    # two incomparable maxima
    delta = SimpleSystem.from_pairs([("a", (2, -2, 0)), ("b", (0, 0, 2))])
    sys = make_system([(1, -1, 0), (-1, 1, 0)], delta)
    poset = weight_poset(sys)
    assert poset.is_lattice and poset.is_distributive()
    delta = SimpleSystem.from_pairs([("a", (2, 0)), ("b", (0, 2))])
    sys = make_system([(1, 0), (-1, 0), (0, 1), (0, -1)], delta)
    poset = weight_poset(sys)
    assert not poset.is_lattice and not poset.is_distributive()
    assert poset.maximum() is None


def test_poset_needs_independent_roots(e7_affine):
    with pytest.raises(DependentSimpleSystem):
        weight_poset(e7_affine)
