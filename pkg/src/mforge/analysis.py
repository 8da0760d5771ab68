"""Weights, extreme vectors, irreducibility certificates, crystal graphs and the weight poset."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .cartan import cartan_matrix, classify_cartan, is_finite_type
from .core import IntVector, MinusculeSystem, add, c_value, dot, rank, sub
from .errors import DependentSimpleSystem, NotFiniteType, NotInPsi


@dataclass(frozen=True)
class Weight:
    labels: tuple[str, ...]
    values: tuple[int, ...]

    def __getitem__(self, label: str) -> int:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.labels, self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def fundamental(self) -> str | None:
        """The label i when this is the indicator weight omega_i, else None."""
        hits = [l for l, x in zip(self.labels, self.values) if x]
        if len(hits) == 1 and self[hits[0]] == 1:
            return hits[0]
        return None


def weight(system: MinusculeSystem, v: IntVector) -> Weight:
    v = tuple(v)
    if v not in system:
        raise NotInPsi(f"{v} is not a vertex of the system")
    return Weight(system.delta.labels, tuple(c_value(v, a) for a in system.delta.vectors))


def extreme_vectors(system: MinusculeSystem) -> tuple[list[IntVector], list[IntVector]]:
    """(highest, lowest): vertices killed by every E_a, resp. every F_a."""
    roots = system.delta.vectors
    highest = [v for v in system.psi if all(add(v, a) not in system for a in roots)]
    lowest = [v for v in system.psi if all(sub(v, a) not in system for a in roots)]
    return highest, lowest


def _neighbours(system: MinusculeSystem, v: IntVector):
    for a in system.delta.vectors:
        for w in (add(v, a), sub(v, a)):
            if w in system:
                yield w


def is_connected(system: MinusculeSystem) -> bool:
    start = system.psi[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in _neighbours(system, v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(system)


IRREDUCIBLE = "Irreducible"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class IrreducibilityCertificate:
    highest_weight_vertices: tuple[IntVector, ...]
    weights_distinct: bool
    graph_connected: bool
    verdict: str
    reason: str | None = None
    highest_weight: Weight | None = None

    @property
    def irreducible(self) -> bool:
        return self.verdict == IRREDUCIBLE

    def as_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "reason": self.reason,
            "highest_weight_vertices": [list(v) for v in self.highest_weight_vertices],
            "weights_distinct": self.weights_distinct,
            "graph_connected": self.graph_connected,
        }
        if self.highest_weight is not None:
            out["highest_weight"] = self.highest_weight.as_dict()
        return out


def irreducibility_certificate(system: MinusculeSystem) -> IrreducibilityCertificate:
    """Certify irreducibility from multiplicity-freeness plus connectivity.

    Distinct weights force every submodule to be spanned by basis
    vectors, and a connected E/F graph then leaves only 0 and the whole
    space. A failed condition gives Inconclusive, never "reducible".
    """
    kind = classify_cartan(cartan_matrix(system.delta))
    if not is_finite_type(kind):
        raise NotFiniteType(f"criterion needs a finite type, got {kind}")
    highest, _ = extreme_vectors(system)
    weights = [weight(system, v) for v in system.psi]
    distinct = len(set(weights)) == len(weights)
    connected = is_connected(system)
    top = weight(system, highest[0]) if len(highest) == 1 else None

    def cert(verdict, reason=None):
        return IrreducibilityCertificate(tuple(highest), distinct, connected, verdict, reason, top)

    if len(system) == 1 and weights[0].is_zero():
        return cert(INCONCLUSIVE, "TrivialModule")
    if len(highest) != 1:
        return cert(INCONCLUSIVE, f"{len(highest)} highest weight vertices")
    if not distinct:
        return cert(INCONCLUSIVE, "repeated weights")
    if not connected:
        return cert(INCONCLUSIVE, "vertex graph is disconnected")
    return cert(IRREDUCIBLE)


# -- crystal graph ----------------------------------------------------------


@dataclass(frozen=True)
class CrystalGraph:
    vertices: tuple[IntVector, ...]
    edges: tuple[tuple[IntVector, IntVector, str], ...]

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for v in self.vertices:
            lines.append(f'  "{_node(v)}";')
        for u, v, label in self.edges:
            lines.append(f'  "{_node(u)}" -> "{_node(v)}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [{"source": list(u), "target": list(v), "label": l} for u, v, l in self.edges],
        }


def _node(v: IntVector) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def crystal_graph(system: MinusculeSystem) -> CrystalGraph:
    """Edge v -> v + a labelled a whenever v + a is a vertex."""
    edges = []
    for v in system.psi:
        for label, a in system.delta:
            w = add(v, a)
            if w in system:
                edges.append((v, w, label))
    return CrystalGraph(system.psi, tuple(edges))


# -- weight poset -----------------------------------------------------------


def _solve_coordinates(delta_vectors, x) -> tuple[Fraction, ...] | None:
    """Coefficients lam with sum lam_a a = x, or None when x is outside the span."""
    r = len(delta_vectors)
    gram = [[Fraction(dot(a, b)) for b in delta_vectors] for a in delta_vectors]
    rhs = [Fraction(dot(a, x)) for a in delta_vectors]
    m = [row + [y] for row, y in zip(gram, rhs)]
    for col in range(r):
        pivot = next(i for i in range(col, r) if m[i][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [y / p for y in m[col]]
        for i in range(r):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [y - f * z for y, z in zip(m[i], m[col])]
    lam = tuple(m[i][r] for i in range(r))
    back = [sum(l * a[k] for l, a in zip(lam, delta_vectors)) for k in range(len(x))]
    if back != list(x):
        return None
    return lam


@dataclass
class WeightPoset:
    vertices: tuple[IntVector, ...]
    # up[i] / down[i]: bitmask of all j with vertices[i] <= / >= vertices[j]
    up: list[int]
    down: list[int]
    meet: list[list[int | None]]
    join: list[list[int | None]]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @property
    def is_lattice(self) -> bool:
        return all(x is not None for row in self.meet for x in row) and all(
            x is not None for row in self.join for x in row
        )

    def is_distributive(self) -> bool:
        """Both distributive laws over every triple (requires a lattice)."""
        if not self.is_lattice:
            return False
        n = len(self.vertices)
        meet, join = self.meet, self.join
        for x in range(n):
            mx, jx = meet[x], join[x]
            for y in range(n):
                mxy, jxy = mx[y], jx[y]
                jy, my = join[y], meet[y]
                for z in range(n):
                    if mx[jy[z]] != join[mxy][mx[z]]:
                        return False
                    if jx[my[z]] != meet[jxy][jx[z]]:
                        return False
        return True

    def maximum(self) -> IntVector | None:
        n = len(self.vertices)
        full = (1 << n) - 1
        for i in range(n):
            if self.down[i] == full:
                return self.vertices[i]
        return None

    def minimum(self) -> IntVector | None:
        n = len(self.vertices)
        full = (1 << n) - 1
        for i in range(n):
            if self.up[i] == full:
                return self.vertices[i]
        return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _bound_table(n: int, lower: list[int]) -> list[list[int | None]]:
    """For each pair, the greatest element of lower[i] & lower[j], if there is one.

    With ``lower`` = down-sets this is the meet table; with up-sets, the join.
    """
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            common = lower[i] & lower[j]
            best = None
            for m in _bits(common):
                if common & ~lower[m] == 0:
                    best = m
                    break
            table[i][j] = table[j][i] = best
    return table


def weight_poset(system: MinusculeSystem) -> WeightPoset:
    """v <= w iff w - v is a nonnegative combination of the simple roots."""
    roots = system.delta.vectors
    if rank(roots) < len(roots):
        raise DependentSimpleSystem("simple roots are linearly dependent; drop the affine root first")
    base = system.psi[0]
    coords = [_solve_coordinates(roots, sub(v, base)) for v in system.psi]
    n = len(system)
    up = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if coords[i] is None or coords[j] is None:
                continue
            if all(y >= x for x, y in zip(coords[i], coords[j])):
                up[i] |= 1 << j
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    meet = _bound_table(n, down)
    join = _bound_table(n, up)
    return WeightPoset(system.psi, up, down, meet, join)
