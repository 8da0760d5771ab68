"""Reflections and orbit enumeration for the Weyl group acting on psi.

The group is never enumerated; everything is a breadth-first closure
under the simple reflections.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable

from .core import IntVector, MinusculeSystem, dot, norm2, scale, sub
from .errors import NotMinusculeValue, SeedNotInPsi, ZeroRoot


def reflect(a: IntVector, v: IntVector) -> IntVector:
    """s_a(v) = v - (2(v.a)/(a.a)) a, kept integral.

    On a vertex of a minuscule system this is v - c(v, a) a.
    """
    aa = dot(a, a)
    if aa == 0:
        raise ZeroRoot("cannot reflect in the zero vector")
    q, r = divmod(2 * dot(v, a), aa)
    if r:
        raise NotMinusculeValue(Fraction(2 * dot(v, a), aa), v, a)
    return sub(v, scale(q, a))


def reflection_permutations(system: MinusculeSystem) -> list[list[int]]:
    """Each simple reflection as a permutation of basis indices."""
    idx = system.index
    return [[idx[reflect(a, v)] for v in system.psi] for a in system.delta.vectors]


def _closure(seeds: Iterable[Hashable], step) -> list:
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in step(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def orbit(system: MinusculeSystem, seed: IntVector) -> list[IntVector]:
    seed = tuple(seed)
    if seed not in system:
        raise SeedNotInPsi(f"{seed} is not a vertex of the system")
    roots = system.delta.vectors
    return _closure([seed], lambda v: (reflect(a, v) for a in roots))


def vertex_orbits(system: MinusculeSystem) -> list[list[IntVector]]:
    left = set(system.psi)
    out = []
    for v in system.psi:
        if v in left:
            orb = orbit(system, v)
            left.difference_update(orb)
            out.append(orb)
    return out


@dataclass(frozen=True)
class PairOrbit:
    representative: tuple[IntVector, IntVector]
    pairs: tuple[tuple[IntVector, IntVector], ...]
    sqdist: int

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[PairOrbit, ...]

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]

    def as_json(self) -> dict:
        return {
            "orbits": [
                {
                    "size": len(o),
                    "sqdist": o.sqdist,
                    "representative": [list(o.representative[0]), list(o.representative[1])],
                }
                for o in self.orbits
            ]
        }


def orbits_on_pairs(system: MinusculeSystem) -> OrbitPartition:
    """Orbits of the diagonal action on ordered pairs of vertices."""
    perms = reflection_permutations(system)
    n = len(system)
    left = {(i, j) for i in range(n) for j in range(n)}
    orbits = []
    for start in sorted(left):
        if start not in left:
            continue
        orb = _closure([start], lambda p: ((s[p[0]], s[p[1]]) for s in perms))
        left.difference_update(orb)
        pairs = tuple((system.psi[i], system.psi[j]) for i, j in orb)
        dists = {norm2(sub(u, v)) for u, v in pairs}
        # the action is isometric, so one orbit has one distance
        assert len(dists) == 1
        orbits.append(PairOrbit(pairs[0], pairs, dists.pop()))
    return OrbitPartition(tuple(sorted(orbits, key=lambda o: o.representative)))


@dataclass(frozen=True)
class EdgeRootStats:
    edge_count: int
    roots: tuple[IntVector, ...]
    multiplicity: dict[IntVector, int]

    @property
    def uniform(self) -> bool:
        return len(set(self.multiplicity.values())) <= 1

    @property
    def undirected_count(self) -> int:
        return self.edge_count // 2

    def as_json(self) -> dict:
        mults = sorted(set(self.multiplicity.values()))
        return {
            "edges": self.edge_count,
            "undirected_edges": self.undirected_count,
            "roots": len(self.roots),
            "multiplicities": mults,
            "uniform": self.uniform,
        }


def edge_root_system(system: MinusculeSystem, sqdist: int) -> EdgeRootStats:
    """Directed vertex pairs at squared distance sqdist and their difference vectors."""
    if sqdist <= 0:
        raise ValueError("sqdist must be positive")
    diffs = Counter(
        sub(u, v) for u in system.psi for v in system.psi if norm2(sub(u, v)) == sqdist
    )
    return EdgeRootStats(sum(diffs.values()), tuple(sorted(diffs)), dict(diffs))


def is_reflection_closed(roots: Iterable[IntVector]) -> bool:
    """Closed under negation and under s_a for every a in the set."""
    roots = set(roots)
    for a in roots:
        if tuple(-x for x in a) not in roots:
            return False
        for b in roots:
            try:
                if reflect(a, b) not in roots:
                    return False
            except NotMinusculeValue:
                return False
    return True
