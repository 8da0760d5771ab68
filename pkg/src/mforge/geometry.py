"""Hesse-polytope vertices as lines on Del Pezzo surfaces.

Two distinct vertices at squared distance 32(x + 1) correspond to lines
with intersection number x. Only squared distances are used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cartan import cartan_matrix, classify_cartan
from .catalog import K0, K7, hesse_psi, hesse_vertex
from .core import FORMAT_VERSION, IntVector, norm2, sub
from .errors import EqualVertices, NotALineDistance, NotOnPolytope, WrongSystem
from .ops import GeneratorFamily, LinearOperator, commutator

EDGE_SQDIST = 32


@lru_cache(maxsize=None)
def _hesse_set() -> frozenset[IntVector]:
    return frozenset(hesse_psi())


def decode(v: IntVector) -> tuple[int, int, int]:
    """(sign, i, j) with v = sign * v_ij and i < j."""
    v = tuple(v)
    if v not in _hesse_set():
        raise NotOnPolytope(f"{v} is not a Hesse vertex")
    sign = 1 if max(v) == 3 else -1
    i, j = (k for k, x in enumerate(v) if x == 3 * sign)
    return sign, i, j


def intersection_number(v1: IntVector, v2: IntVector) -> int:
    for v in (v1, v2):
        decode(v)
    if tuple(v1) == tuple(v2):
        raise EqualVertices("a line has no intersection number with itself here")
    d = norm2(sub(v1, v2))
    if d % EDGE_SQDIST:
        raise NotALineDistance(f"squared distance {d} is not a multiple of {EDGE_SQDIST}")
    return d // EDGE_SQDIST - 1


@dataclass(frozen=True, order=True)
class LineLabel:
    kind: str  # "E", "F" or "G"
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return self.kind + "".join(str(i) for i in self.indices)


def line_labels() -> dict[LineLabel, IntVector]:
    """E_i -> v_0i, F_ij -> -v_ij, G_i -> v_i7 for 1 <= i < j <= 6."""
    out = {}
    for i in range(1, 7):
        out[LineLabel("E", (i,))] = hesse_vertex(0, i)
    for i, j in itertools.combinations(range(1, 7), 2):
        out[LineLabel("F", (i, j))] = hesse_vertex(i, j, -1)
    for i in range(1, 7):
        out[LineLabel("G", (i,))] = hesse_vertex(i, 7)
    return out


def bifid(half: frozenset[int], v: IntVector) -> IntVector:
    """+-v_ij -> -+v_{half minus ij} when {i, j} lies inside ``half``; otherwise v."""
    sign, i, j = decode(v)
    if {i, j} <= half:
        k, l = sorted(half - {i, j})
        return hesse_vertex(k, l, -sign)
    return tuple(v)


def containing_half(v: IntVector) -> frozenset[int] | None:
    _, i, j = decode(v)
    for half in (K0, K7):
        if {i, j} <= half:
            return half
    return None


def bifid_reflection(v: IntVector) -> IntVector:
    """bifid in whichever half contains v; fixes v when its indices straddle the halves."""
    half = containing_half(v)
    return tuple(v) if half is None else bifid(half, v)


@dataclass(frozen=True)
class IncidenceTable:
    vertices: tuple[IntVector, ...]
    names: tuple[str, ...]
    pairs: dict[tuple[int, int], int]

    def as_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "lines": list(self.names),
            "intersections": [[i, j, x] for (i, j), x in sorted(self.pairs.items())],
        }


def vertex_name(v: IntVector) -> str:
    sign, i, j = decode(v)
    return f"{'+' if sign > 0 else '-'}v{i}{j}"


def incidence_table(vertices=None, names=None) -> IncidenceTable:
    """Intersection numbers for all unordered pairs; defaults to the 56 Hesse vertices."""
    if vertices is None:
        vertices = sorted(_hesse_set())
    vertices = tuple(tuple(v) for v in vertices)
    if names is None:
        names = [vertex_name(v) for v in vertices]
    pairs = {
        (i, j): intersection_number(vertices[i], vertices[j])
        for i, j in itertools.combinations(range(len(vertices)), 2)
    }
    return IncidenceTable(vertices, tuple(names), pairs)


def cubic_incidence_table() -> IncidenceTable:
    """The 27 lines, in E, F, G order, with their intersection numbers."""
    labels = sorted(line_labels().items())
    return incidence_table([v for _, v in labels], [str(l) for l, _ in labels])


def _supported_near(fam: GeneratorFamily, op: LinearOperator) -> bool:
    psi = fam.system.psi
    for j, col in op.columns.items():
        for i, _ in col:
            if i != j and norm2(sub(psi[i], psi[j])) != EDGE_SQDIST:
                return False
    return True


def _check_family(fam: GeneratorFamily) -> None:
    if not set(fam.system.psi) <= _hesse_set():
        raise WrongSystem("vertices are not Hesse-polytope vertices")
    kind = classify_cartan(cartan_matrix(fam.system.delta))
    if kind not in ("E_7", "E_6"):
        raise WrongSystem(f"expected an E_7 or E_6 system, got {kind}")


def support_check(fam: GeneratorFamily) -> bool:
    """Every generator moves b_v only onto b_v and vertices at squared distance 32."""
    _check_family(fam)
    return all(_supported_near(fam, op) for _, op in fam.generators())


def commutator_support_check(fam: GeneratorFamily) -> bool:
    """The same support property for every bracket [X, Y] of two generators."""
    _check_family(fam)
    gens = [op for _, op in fam.generators()]
    return all(_supported_near(fam, commutator(x, y)) for x, y in itertools.combinations(gens, 2))
