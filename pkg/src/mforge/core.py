"""Integer vectors, simple systems and minuscule-system validation.

Vectors are plain tuples of Python ints, so arithmetic is exact and
unbounded, and the lexicographic tuple order gives the canonical basis
ordering of a system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateVertex,
    EmptyPsi,
    InvalidSimpleSystem,
    InvalidSystem,
    NotMinusculeValue,
    SystemFormatError,
    UnknownLabel,
    ZeroRoot,
)

IntVector = tuple[int, ...]

FORMAT_VERSION = 1


def vec(coords: Iterable[int]) -> IntVector:
    out = tuple(coords)
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"coordinates must be integers, got {x!r}")
    return out


def _check_dims(u: IntVector, v: IntVector) -> None:
    if len(u) != len(v):
        raise DimensionMismatch(f"dimension {len(u)} vs {len(v)}")


def dot(u: IntVector, v: IntVector) -> int:
    _check_dims(u, v)
    return sum(x * y for x, y in zip(u, v))


def add(u: IntVector, v: IntVector) -> IntVector:
    _check_dims(u, v)
    return tuple(x + y for x, y in zip(u, v))


def sub(u: IntVector, v: IntVector) -> IntVector:
    _check_dims(u, v)
    return tuple(x - y for x, y in zip(u, v))


def neg(u: IntVector) -> IntVector:
    return tuple(-x for x in u)


def scale(k: int, u: IntVector) -> IntVector:
    return tuple(k * x for x in u)


def norm2(u: IntVector) -> int:
    return sum(x * x for x in u)


def unit(dim: int, i: int) -> IntVector:
    """The standard basis vector with a 1 in position i (0-based)."""
    return tuple(1 if k == i else 0 for k in range(dim))


def c_value(v: IntVector, a: IntVector) -> int:
    """Return c in {-1, 0, 1} with 2(v.a) = c(a.a).

    Raises NotMinusculeValue carrying the offending ratio otherwise.
    """
    aa = dot(a, a)
    if aa == 0:
        raise ZeroRoot("simple root must be nonzero")
    twice = 2 * dot(v, a)
    if twice == 0:
        return 0
    if twice == aa:
        return 1
    if twice == -aa:
        return -1
    raise NotMinusculeValue(Fraction(twice, aa), v, a)


@dataclass(frozen=True)
class SimpleSystem:
    """An ordered, labelled family of nonzero integer vectors."""

    labels: tuple[str, ...]
    vectors: tuple[IntVector, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.vectors):
            raise InvalidSimpleSystem("labels and vectors differ in length")
        if not self.labels:
            raise InvalidSimpleSystem("a simple system needs at least one root")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidSimpleSystem(f"duplicate labels in {self.labels}")
        dims = {len(a) for a in self.vectors}
        if len(dims) != 1:
            raise InvalidSimpleSystem(f"roots of mixed dimensions {sorted(dims)}")
        for label, a in zip(self.labels, self.vectors):
            if not any(a):
                raise InvalidSimpleSystem(f"root {label} is zero")
        if len(set(self.vectors)) != len(self.vectors):
            raise InvalidSimpleSystem("the same vector appears under two labels")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, Iterable[int]]]) -> "SimpleSystem":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(vec(p[1]) for p in pairs))

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[tuple[str, IntVector]]:
        return iter(zip(self.labels, self.vectors))

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def vector(self, label: str) -> IntVector:
        try:
            return self.vectors[self.labels.index(label)]
        except ValueError:
            raise UnknownLabel(label) from None

    def restrict(self, keep: Iterable[str]) -> "SimpleSystem":
        """Sub-system on the given labels, preserving the original order."""
        keep = set(keep)
        unknown = keep - set(self.labels)
        if unknown:
            raise UnknownLabel(", ".join(sorted(unknown)))
        return SimpleSystem.from_pairs((l, a) for l, a in self if l in keep)

    def extend(self, label: str, a: Iterable[int]) -> "SimpleSystem":
        return SimpleSystem(self.labels + (label,), self.vectors + (vec(a),))


@dataclass(frozen=True)
class Violation:
    vertex: IntVector
    label: str
    reason: str

    def as_json(self) -> dict:
        return {"vertex": list(self.vertex), "label": self.label, "reason": self.reason}


@dataclass(frozen=True)
class MinusculeSystem:
    """A pair (psi, delta) that has passed validation.

    Build these through validate_system or make_system; psi is stored
    in lexicographic order and ``index`` maps each vertex to its basis
    position.
    """

    psi: tuple[IntVector, ...]
    delta: SimpleSystem
    index: Mapping[IntVector, int] = field(compare=False, repr=False)

    @classmethod
    def _unchecked(cls, psi: Iterable[IntVector], delta: SimpleSystem) -> "MinusculeSystem":
        ordered = tuple(sorted(set(psi)))
        return cls(ordered, delta, {v: i for i, v in enumerate(ordered)})

    @property
    def dim(self) -> int:
        return self.delta.dim

    def __len__(self) -> int:
        return len(self.psi)

    def __contains__(self, v: object) -> bool:
        return v in self.index

    def c(self, v: IntVector, label: str) -> int:
        return c_value(v, self.delta.vector(label))


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    system: MinusculeSystem | None

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "valid": self.ok,
            "violations": [x.as_json() for x in self.violations],
        }


def _pair_violations(v: IntVector, label: str, a: IntVector, members) -> list[Violation]:
    try:
        c = c_value(v, a)
    except NotMinusculeValue as exc:
        return [Violation(v, label, f"2(v.a)/(a.a) = {exc.value} is not in {{-1, 0, 1}}")]
    up = add(v, a) in members
    down = sub(v, a) in members
    out = []
    if up and c != -1:
        out.append(Violation(v, label, f"c = {c} but v+a is in psi"))
    if not up and c == -1:
        out.append(Violation(v, label, "c = -1 but v+a is not in psi"))
    if down and c != 1:
        out.append(Violation(v, label, f"c = {c} but v-a is in psi"))
    if not down and c == 1:
        out.append(Violation(v, label, "c = +1 but v-a is not in psi"))
    return out


def validate_system(psi: Iterable[Iterable[int]], delta: SimpleSystem) -> ValidationReport:
    """Check both minuscule axioms for every (v, a) and report all failures.

    Never raises on a bad pair; the report lists every violating
    (vertex, label, reason) in canonical order, and carries the sealed
    system when there are none.
    """
    points = [vec(v) for v in psi]
    if not points:
        raise EmptyPsi("psi must contain at least one vertex")
    bad_dims = [v for v in points if len(v) != delta.dim]
    if bad_dims:
        raise DimensionMismatch(f"vertex {bad_dims[0]} has dimension {len(bad_dims[0])}, expected {delta.dim}")
    members = set(points)
    if len(members) != len(points):
        raise DuplicateVertex("psi contains duplicate vertices")
    violations = []
    for v in sorted(members):
        for label, a in delta:
            violations.extend(_pair_violations(v, label, a, members))
    if violations:
        return ValidationReport(tuple(violations), None)
    return ValidationReport((), MinusculeSystem._unchecked(members, delta))


def make_system(psi: Iterable[Iterable[int]], delta: SimpleSystem) -> MinusculeSystem:
    """Like validate_system but raises InvalidSystem instead of returning a report."""
    report = validate_system(psi, delta)
    if not report.ok:
        raise InvalidSystem(report)
    return report.system


# -- JSON system format -----------------------------------------------------


def system_to_json(psi: Iterable[IntVector], delta: SimpleSystem) -> dict:
    return {
        "format": FORMAT_VERSION,
        "dim": delta.dim,
        "psi": [list(v) for v in sorted(set(psi))],
        "delta": [{"label": l, "vector": list(a)} for l, a in delta],
    }


def dumps_system(system: MinusculeSystem) -> str:
    return json.dumps(system_to_json(system.psi, system.delta), indent=2) + "\n"


def system_from_json(data: object) -> tuple[list[IntVector], SimpleSystem]:
    """Parse the JSON system format into (psi, delta) without validating it."""
    if not isinstance(data, dict):
        raise SystemFormatError("top level must be an object")
    missing = {"dim", "psi", "delta"} - set(data)
    if missing:
        raise SystemFormatError(f"missing key(s): {', '.join(sorted(missing))}")
    fmt = data.get("format", FORMAT_VERSION)
    if fmt != FORMAT_VERSION:
        raise SystemFormatError(f"unsupported format version {fmt!r}")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SystemFormatError("dim must be a positive integer")
    try:
        psi = [vec(v) for v in data["psi"]]
        pairs = [(r["label"], vec(r["vector"])) for r in data["delta"]]
    except (TypeError, KeyError) as exc:
        raise SystemFormatError(f"malformed entry: {exc}") from None
    for v in psi + [a for _, a in pairs]:
        if len(v) != dim:
            raise SystemFormatError(f"vector {list(v)} does not have dimension {dim}")
    try:
        delta = SimpleSystem.from_pairs(pairs)
    except InvalidSimpleSystem as exc:
        raise SystemFormatError(str(exc)) from None
    return psi, delta


def loads_system(text: str) -> tuple[list[IntVector], SimpleSystem]:
    return system_from_json(json.loads(text))


def dependent(vectors: Sequence[IntVector]) -> bool:
    """True when the vectors are linearly dependent over the rationals."""
    return rank(vectors) < len(vectors)


def rank(vectors: Sequence[IntVector]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r
