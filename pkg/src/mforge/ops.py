"""Exact sparse operators on V_psi and the relation checks they must satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .cartan import CartanMatrix, cartan_matrix
from .core import FORMAT_VERSION, IntVector, MinusculeSystem, add, c_value, sub
from .errors import DimensionMismatch

Number = int | Fraction


def _norm(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class LinearOperator:
    """A column-sparse endomorphism of a space with basis 0..dim-1.

    ``columns[j]`` is the image of basis vector j as a sorted tuple of
    (row, coefficient) pairs with no zero coefficients, so two operators
    are equal exactly when their column maps are.
    """

    __slots__ = ("dim", "columns")

    def __init__(self, dim: int, columns: Mapping[int, Mapping[int, Number]] | None = None):
        self.dim = dim
        cols = {}
        for j, col in (columns or {}).items():
            entries = tuple(sorted((i, _norm(x)) for i, x in col.items() if x != 0))
            if entries:
                cols[j] = entries
        self.columns: dict[int, tuple[tuple[int, Number], ...]] = cols

    @classmethod
    def zero(cls, dim: int) -> "LinearOperator":
        return cls(dim)

    @classmethod
    def identity(cls, dim: int) -> "LinearOperator":
        return cls(dim, {j: {j: 1} for j in range(dim)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.dim == other.dim and self.columns == other.columns

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.columns.items()))))

    def __repr__(self) -> str:
        return f"LinearOperator(dim={self.dim}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns.values())

    def is_zero(self) -> bool:
        return not self.columns

    def column(self, j: int) -> dict[int, Number]:
        """Image of basis vector j as {row: coefficient}."""
        return dict(self.columns.get(j, ()))

    def coefficients(self) -> Iterable[Number]:
        for col in self.columns.values():
            for _, x in col:
                yield x

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.coefficients())

    def _check(self, other: "LinearOperator") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"operator dims {self.dim} and {other.dim}")

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        self._check(other)
        out: dict[int, dict[int, Number]] = {}
        for op in (self, other):
            for j, col in op.columns.items():
                target = out.setdefault(j, {})
                for i, x in col:
                    target[i] = target.get(i, 0) + x
        return LinearOperator(self.dim, out)

    def __neg__(self) -> "LinearOperator":
        return self.scale(-1)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return self + (-other)

    def scale(self, k: Number) -> "LinearOperator":
        return LinearOperator(self.dim, {j: {i: k * x for i, x in col} for j, col in self.columns.items()})

    def __rmul__(self, k: Number) -> "LinearOperator":
        return self.scale(k)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return compose(self, other)

    def transpose(self) -> "LinearOperator":
        out: dict[int, dict[int, Number]] = {}
        for j, col in self.columns.items():
            for i, x in col:
                out.setdefault(i, {})[j] = x
        return LinearOperator(self.dim, out)

    def dense(self) -> list[list[Number]]:
        """Row-major dense matrix: entry [i][j] is the b_i coefficient of X(b_j)."""
        m: list[list[Number]] = [[0] * self.dim for _ in range(self.dim)]
        for j, col in self.columns.items():
            for i, x in col:
                m[i][j] = x
        return m

    def first_difference(self, other: "LinearOperator") -> int | None:
        """Lowest basis index on which the two operators disagree."""
        self._check(other)
        for j in sorted(set(self.columns) | set(other.columns)):
            if self.columns.get(j) != other.columns.get(j):
                return j
        return None


def compose(t: LinearOperator, u: LinearOperator) -> LinearOperator:
    """t o u, i.e. apply u first."""
    t._check(u)
    out: dict[int, dict[int, Number]] = {}
    for j, col in u.columns.items():
        target: dict[int, Number] = {}
        for k, y in col:
            for i, x in t.columns.get(k, ()):
                target[i] = target.get(i, 0) + x * y
        out[j] = target
    return LinearOperator(t.dim, out)


def commutator(t: LinearOperator, u: LinearOperator) -> LinearOperator:
    return compose(t, u) - compose(u, t)


@dataclass(frozen=True)
class GeneratorFamily:
    system: MinusculeSystem
    E: dict[str, LinearOperator] = field(compare=False)
    F: dict[str, LinearOperator] = field(compare=False)
    H: dict[str, LinearOperator] = field(compare=False)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.system.delta.labels

    @property
    def dim(self) -> int:
        return len(self.system)

    def operator(self, kind: str, label: str) -> LinearOperator:
        return {"E": self.E, "F": self.F, "H": self.H}[kind][label]

    def generators(self):
        """Yield (name, operator) for every E, F and H in label order."""
        for kind, ops in (("E", self.E), ("F", self.F), ("H", self.H)):
            for label in self.labels:
                yield f"{kind}:{label}", ops[label]


def build_operators(system: MinusculeSystem) -> GeneratorFamily:
    n = len(system)
    idx = system.index
    E, F, H = {}, {}, {}
    for label, a in system.delta:
        e_cols, f_cols, h_cols = {}, {}, {}
        for j, v in enumerate(system.psi):
            up = idx.get(add(v, a))
            if up is not None:
                e_cols[j] = {up: 1}
            down = idx.get(sub(v, a))
            if down is not None:
                f_cols[j] = {down: 1}
            h_cols[j] = {j: c_value(v, a)}
        E[label] = LinearOperator(n, e_cols)
        F[label] = LinearOperator(n, f_cols)
        H[label] = LinearOperator(n, h_cols)
    return GeneratorFamily(system, E, F, H)


# -- relation reports -------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    relation: str
    labels: tuple[str, ...]
    passed: bool
    counterexample: IntVector | None = None

    def as_json(self) -> dict:
        out = {"relation": self.relation, "labels": list(self.labels), "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = list(self.counterexample)
        return out


@dataclass(frozen=True)
class RelationReport:
    verdicts: tuple[Verdict, ...]

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def __add__(self, other: "RelationReport") -> "RelationReport":
        return RelationReport(self.verdicts + other.verdicts)

    def as_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "checked": len(self.verdicts),
            "failed": len(self.failures),
            "pass": self.ok,
            "verdicts": [v.as_json() for v in self.verdicts],
        }


def _verdict(fam: GeneratorFamily, relation: str, labels, lhs: LinearOperator, rhs: LinearOperator) -> Verdict:
    j = lhs.first_difference(rhs)
    if j is None:
        return Verdict(relation, tuple(labels), True)
    return Verdict(relation, tuple(labels), False, fam.system.psi[j])


def check_generator_identities(fam: GeneratorFamily, A: CartanMatrix | None = None) -> RelationReport:
    """Verify the twelve composition identities among E, F, H.

    Identities carrying a side condition on A[a][b] (negative, zero,
    or -1) are only checked on pairs that meet it.
    """
    A = A or cartan_matrix(fam.system.delta)
    E, F, H = fam.E, fam.F, fam.H
    Z = LinearOperator.zero(fam.dim)
    out = []
    for a in fam.labels:
        out.append(_verdict(fam, "h-e-self", (a,), H[a] @ E[a], E[a]))
        out.append(_verdict(fam, "h-e-self", (a,), E[a], -(E[a] @ H[a])))
        out.append(_verdict(fam, "h-f-self", (a,), H[a] @ F[a], -F[a]))
        out.append(_verdict(fam, "h-f-self", (a,), -F[a], -(F[a] @ H[a])))
        out.append(_verdict(fam, "e-square", (a,), E[a] @ E[a], Z))
        out.append(_verdict(fam, "f-square", (a,), F[a] @ F[a], Z))
        for b in fam.labels:
            ab = A[a, b]
            pair = (a, b)
            out.append(_verdict(fam, "h-e-shift", pair, H[a] @ E[b], E[b] @ H[a] + ab * E[b]))
            out.append(_verdict(fam, "h-f-shift", pair, H[a] @ F[b], F[b] @ H[a] - ab * F[b]))
            if a == b:
                continue
            if ab < 0:
                out.append(_verdict(fam, "e-f-vanish", pair, E[a] @ F[b], Z))
                out.append(_verdict(fam, "e-f-vanish", pair, F[b] @ E[a], Z))
            if ab == 0:
                out.append(_verdict(fam, "e-f-commute", pair, E[a] @ F[b], F[b] @ E[a]))
                out.append(_verdict(fam, "e-commute", pair, E[a] @ E[b], E[b] @ E[a]))
                out.append(_verdict(fam, "f-commute", pair, F[a] @ F[b], F[b] @ F[a]))
            if ab == -1:
                out.append(_verdict(fam, "e-braid-vanish", pair, E[a] @ E[b] @ E[a], Z))
                out.append(_verdict(fam, "f-braid-vanish", pair, F[a] @ F[b] @ F[a], Z))
    return RelationReport(tuple(out))


def ad_power(x: LinearOperator, y: LinearOperator, k: int) -> LinearOperator:
    """[x, [x, ... [x, y]]] with k brackets, stopping early once it vanishes."""
    out = y
    for _ in range(k):
        if out.is_zero():
            break
        out = commutator(x, out)
    return out


def check_presentation(fam: GeneratorFamily, A: CartanMatrix | None = None) -> RelationReport:
    """Verify the defining relations of the derived Kac-Moody algebra of A."""
    A = A or cartan_matrix(fam.system.delta)
    E, F, H = fam.E, fam.F, fam.H
    Z = LinearOperator.zero(fam.dim)
    out = []
    for i in fam.labels:
        for j in fam.labels:
            aij = A[i, j]
            pair = (i, j)
            out.append(_verdict(fam, "[h,h]=0", pair, commutator(H[i], H[j]), Z))
            out.append(_verdict(fam, "[h,e]=Ae", pair, commutator(H[i], E[j]), aij * E[j]))
            out.append(_verdict(fam, "[h,f]=-Af", pair, commutator(H[i], F[j]), -aij * F[j]))
            out.append(_verdict(fam, "[e,f]=dh", pair, commutator(E[i], F[j]), H[i] if i == j else Z))
            if i != j:
                out.append(_verdict(fam, "serre-e", pair, ad_power(E[i], E[j], 1 - aij), Z))
                out.append(_verdict(fam, "serre-f", pair, ad_power(F[i], F[j], 1 - aij), Z))
    return RelationReport(tuple(out))


def check_all(fam: GeneratorFamily) -> RelationReport:
    A = cartan_matrix(fam.system.delta)
    return check_generator_identities(fam, A) + check_presentation(fam, A)

