"""Cartan matrices of simple systems and Dynkin-type recognition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .core import SimpleSystem, dot
from .errors import GcmViolation, NonIntegerEntry

UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CartanMatrix:
    labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    # d_a = (a.a)/2; d_a * A[a][b] is the symmetric matrix of dot products
    symmetrizer: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, key: tuple[str, str]) -> int:
        a, b = key
        return self.entries[self.labels.index(a)][self.labels.index(b)]

    def gcm_problems(self) -> list[str]:
        """Every failure of the generalized-Cartan-matrix axioms, as text."""
        problems = []
        n = len(self.labels)
        for i in range(n):
            if self.entries[i][i] != 2:
                problems.append(f"diagonal entry at {self.labels[i]} is {self.entries[i][i]}")
            for j in range(n):
                if i == j:
                    continue
                if self.entries[i][j] > 0:
                    problems.append(f"A[{self.labels[i]}][{self.labels[j]}] = {self.entries[i][j]} > 0")
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                    problems.append(f"zero pattern not symmetric at ({self.labels[i]}, {self.labels[j]})")
        return problems

    def is_symmetrized(self) -> bool:
        d, A = self.symmetrizer, self.entries
        n = len(A)
        return all(d[i] * A[i][j] == d[j] * A[j][i] for i in range(n) for j in range(n))

    def as_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "entries": [list(row) for row in self.entries],
            "symmetrizer": [str(x) for x in self.symmetrizer],
        }


def cartan_matrix(delta: SimpleSystem) -> CartanMatrix:
    """A[a][b] = 2(a.b)/(a.a), with d_a = (a.a)/2 attached as symmetrizer."""
    rows = []
    for la, a in delta:
        aa = dot(a, a)
        row = []
        for lb, b in delta:
            q, r = divmod(2 * dot(a, b), aa)
            if r:
                raise NonIntegerEntry(f"A[{la}][{lb}] = {Fraction(2 * dot(a, b), aa)} is not an integer")
            row.append(q)
        rows.append(tuple(row))
    A = CartanMatrix(
        delta.labels,
        tuple(rows),
        tuple(Fraction(dot(a, a), 2) for a in delta.vectors),
    )
    problems = A.gcm_problems()
    if problems:
        raise GcmViolation(problems)
    return A


# -- classification ---------------------------------------------------------


def _from_bonds(n: int, bonds) -> tuple[tuple[int, ...], ...]:
    """Build a Cartan matrix from bonds (long, short, m).

    A simple bond has m = 1. For a multiple bond the short end gets
    A[short][long] = -m and the long end A[long][short] = -1.
    """
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, m in bonds:
        A[j][i] = -m
        A[i][j] = -1
    return tuple(tuple(r) for r in A)


def _chain(nodes):
    return [(nodes[k], nodes[k + 1], 1) for k in range(len(nodes) - 1)]


def _star(arms):
    """Centre node 0 with simply laced arms of the given lengths."""
    bonds, nxt = [], 1
    for length in arms:
        prev = 0
        for _ in range(length):
            bonds.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
    return nxt, bonds


def _finite(family: str, r: int):
    if family == "A" and r >= 1:
        return _from_bonds(r, _chain(list(range(r))))
    if family == "B" and r >= 2:
        return _from_bonds(r, _chain(list(range(r - 1))) + [(r - 2, r - 1, 2)])
    if family == "C" and r >= 3:
        return _from_bonds(r, _chain(list(range(r - 1))) + [(r - 1, r - 2, 2)])
    if family == "D" and r >= 4:
        return _from_bonds(*_star((1, 1, r - 3)))
    if family == "E" and r in (6, 7, 8):
        return _from_bonds(*_star((1, 2, r - 4)))
    if family == "F" and r == 4:
        return _from_bonds(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)])
    if family == "G" and r == 2:
        return _from_bonds(2, [(0, 1, 3)])
    return None


def _affine(family: str, l: int):
    """Untwisted affine X_l^(1); the matrix has l + 1 rows."""
    n = l + 1
    if family == "A" and l == 1:
        return ((2, -2), (-2, 2))
    if family == "A" and l >= 2:
        return _from_bonds(n, _chain(list(range(n))) + [(n - 1, 0, 1)])
    if family == "B" and l >= 3:
        # fork 0, 1 -> 2, chain to l, short root at the end
        bonds = [(0, 2, 1), (1, 2, 1)] + _chain(list(range(2, l))) + [(l - 1, l, 2)]
        return _from_bonds(n, bonds)
    if family == "C" and l >= 2:
        return _from_bonds(n, [(0, 1, 2)] + _chain(list(range(1, l))) + [(l, l - 1, 2)])
    if family == "D" and l >= 4:
        bonds = [(0, 2, 1), (1, 2, 1)] + _chain(list(range(2, l - 1))) + [(l - 2, l - 1, 1), (l - 2, l, 1)]
        return _from_bonds(n, bonds)
    if family == "E" and l == 6:
        return _from_bonds(*_star((2, 2, 2)))
    if family == "E" and l == 7:
        return _from_bonds(*_star((1, 3, 3)))
    if family == "E" and l == 8:
        return _from_bonds(*_star((1, 2, 5)))
    if family == "F" and l == 4:
        return _from_bonds(5, [(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1)])
    if family == "G" and l == 2:
        return _from_bonds(3, [(0, 1, 1), (1, 2, 3)])
    return None


@lru_cache(maxsize=None)
def _candidates(size: int) -> tuple[tuple[str, tuple], ...]:
    out = []
    for fam in "ABCDEFG":
        A = _finite(fam, size)
        if A is not None:
            out.append((f"{fam}_{size}", A))
    for fam in "ABCDEFG":
        A = _affine(fam, size - 1)
        if A is not None:
            out.append((f"{fam}_{size - 1}^(1)", A))
    return tuple(out)


def _graph(entries) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(len(entries)))
    for i, row in enumerate(entries):
        for j, x in enumerate(row):
            if i != j and x:
                g.add_edge(i, j, w=x)
    return g


def _components(entries) -> list[list[int]]:
    g = _graph(entries).to_undirected()
    return sorted(sorted(c) for c in nx.connected_components(g))


def _classify_connected(entries) -> str:
    g = _graph(entries)
    for name, cand in _candidates(len(entries)):
        matcher = DiGraphMatcher(g, _graph(cand), edge_match=lambda e1, e2: e1["w"] == e2["w"])
        if matcher.is_isomorphic():
            return name
    return UNKNOWN


def classify_cartan(A: CartanMatrix) -> str:
    """Name the Dynkin type of A, ignoring how the nodes are labelled.

    A connected diagram gives one of the finite types ("E_7") or an
    untwisted affine type ("E_7^(1)"); a disconnected one gives its
    components joined with "+". Anything else is "Unknown".
    """
    parts = []
    for comp in _components(A.entries):
        sub = tuple(tuple(A.entries[i][j] for j in comp) for i in comp)
        name = _classify_connected(sub)
        if name == UNKNOWN:
            return UNKNOWN
        parts.append(name)
    return "+".join(sorted(parts))


def is_finite_type(label: str) -> bool:
    return label != UNKNOWN and "^" not in label


def standard_cartan(label: str) -> tuple[tuple[int, ...], ...]:
    """The reference matrix for a connected type label such as 'D_5' or 'C_3^(1)'."""
    fam, _, rest = label.partition("_")
    if rest.endswith("^(1)"):
        A = _affine(fam, int(rest[:-4]))
    else:
        A = _finite(fam, int(rest))
    if A is None:
        raise ValueError(f"no such type {label!r}")
    return A
