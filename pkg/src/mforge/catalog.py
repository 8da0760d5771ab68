"""Minuscule systems from the Hesse polytope, hypercube and cross polytope.

Coordinates are the integer ones used throughout: Hesse vertices are
v_ij = 4(e_i + e_j) - (1, ..., 1) in R^8, hypercube vertices are
(+-2, ..., +-2) and cross-polytope vertices are +-4 e_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from .core import (
    IntVector,
    MinusculeSystem,
    SimpleSystem,
    add,
    c_value,
    dot,
    make_system,
    neg,
    scale,
    sub,
    unit,
    validate_system,
)
from .errors import (
    EmptyRestriction,
    EmptySimpleSlice,
    EmptySlice,
    NotSubsets,
    ParameterOutOfRange,
    UnknownEntry,
    UnknownLabel,
)

AFFINE_EXTRA = "alpha-aff"

K0 = frozenset({0, 1, 2, 3})
K7 = frozenset({4, 5, 6, 7})


def eps(dim: int, i: int, k: int = 1) -> IntVector:
    return scale(k, unit(dim, i))


def ones(dim: int) -> IntVector:
    return (1,) * dim


def hesse_vertex(i: int, j: int, sign: int = 1) -> IntVector:
    """sign * v_ij, where v_ij = 4(e_i + e_j) - sum(e)."""
    if i == j or not (0 <= i < 8 and 0 <= j < 8):
        raise ParameterOutOfRange(f"need distinct indices in 0..7, got {i}, {j}")
    v = tuple(3 if k in (i, j) else -1 for k in range(8))
    return v if sign > 0 else neg(v)


def hesse_psi() -> list[IntVector]:
    return [hesse_vertex(i, j, s) for i, j in itertools.combinations(range(8), 2) for s in (1, -1)]


def hesse_delta() -> SimpleSystem:
    pairs = [(f"alpha{i}", sub(eps(8, i, 4), eps(8, i + 1, 4))) for i in range(7)]
    pairs.append(("alpha7", (-2, -2, -2, -2, 2, 2, 2, 2)))
    return SimpleSystem.from_pairs(pairs)


def hypercube_psi(n: int) -> list[IntVector]:
    return list(itertools.product((2, -2), repeat=n))


def hypercube_delta(n: int) -> SimpleSystem:
    pairs = [("alpha0", scale(-4, add(unit(n, 0), unit(n, 1))))]
    pairs += [(f"alpha{i}", sub(eps(n, i - 1, 4), eps(n, i, 4))) for i in range(1, n)]
    pairs.append((f"alpha{n}", eps(n, n - 1, 4)))
    return SimpleSystem.from_pairs(pairs)


def halfcube_psi(n: int, parity: str) -> list[IntVector]:
    want = 0 if parity == "+" else 1
    return [v for v in hypercube_psi(n) if v.count(-2) % 2 == want]


def d_delta(n: int) -> SimpleSystem:
    """alpha0..alpha_{n-1} of the hypercube system plus alpha_n' = 4(e_{n-2} + e_{n-1})."""
    base = hypercube_delta(n).restrict(f"alpha{i}" for i in range(n))
    return base.extend(f"alpha{n}p", add(eps(n, n - 2, 4), eps(n, n - 1, 4)))


def cross_psi(n: int) -> list[IntVector]:
    return [eps(n, i, s) for i in range(n) for s in (4, -4)]


def c_delta(n: int) -> SimpleSystem:
    pairs = [("alpha0pp", eps(n, 0, -8))]
    pairs += [(f"alpha{i}", sub(eps(n, i - 1, 4), eps(n, i, 4))) for i in range(1, n)]
    pairs.append((f"alpha{n}pp", eps(n, n - 1, 8)))
    return SimpleSystem.from_pairs(pairs)


# -- generic constructions --------------------------------------------------


@dataclass(frozen=True)
class SliceSpec:
    normal: IntVector
    level: int


def restrict(system: MinusculeSystem, keep: Iterable[str]) -> MinusculeSystem:
    """Same psi with delta cut down to ``keep``; always a minuscule system again."""
    keep = list(keep)
    if not keep:
        raise EmptyRestriction("must keep at least one simple root")
    out = MinusculeSystem._unchecked(system.psi, system.delta.restrict(keep))
    assert validate_system(out.psi, out.delta).ok
    return out


def drop(system: MinusculeSystem, labels: Iterable[str]) -> MinusculeSystem:
    labels = set(labels)
    unknown = labels - set(system.delta.labels)
    if unknown:
        raise UnknownLabel(", ".join(sorted(unknown)))
    return restrict(system, [l for l in system.delta.labels if l not in labels])


def slice_system(system: MinusculeSystem, spec: SliceSpec) -> MinusculeSystem:
    """The vertices at v.n = level, with the roots orthogonal to n."""
    psi = [v for v in system.psi if dot(v, spec.normal) == spec.level]
    if not psi:
        raise EmptySlice(f"no vertex has v.n = {spec.level}")
    roots = [(l, a) for l, a in system.delta if dot(a, spec.normal) == 0]
    if not roots:
        raise EmptySimpleSlice("no simple root is orthogonal to the normal")
    return make_system(psi, SimpleSystem.from_pairs(roots))


def subsystem_check(system: MinusculeSystem, psi_sub: Iterable[IntVector], labels: Iterable[str]) -> bool:
    """True when psi_sub is closed under the moves v -> v -+ a demanded by c(v, a) = +-1."""
    psi_sub = {tuple(v) for v in psi_sub}
    labels = list(labels)
    if not psi_sub or not labels:
        raise NotSubsets("both subsets must be nonempty")
    if not psi_sub <= set(system.psi):
        raise NotSubsets("psi_sub is not contained in psi")
    if not set(labels) <= set(system.delta.labels):
        raise NotSubsets("labels are not contained in delta")
    for v in psi_sub:
        for label in labels:
            a = system.delta.vector(label)
            c = c_value(v, a)
            if c == -1 and add(v, a) not in psi_sub:
                return False
            if c == 1 and sub(v, a) not in psi_sub:
                return False
    return True


def partition_by_slices(system: MinusculeSystem, normal: IntVector) -> list[tuple[int, MinusculeSystem]]:
    """Group psi by v.normal, highest level first, each part over the roots orthogonal to normal."""
    roots = [(l, a) for l, a in system.delta if dot(a, normal) == 0]
    if not roots:
        raise EmptySimpleSlice("no simple root is orthogonal to the normal")
    delta = SimpleSystem.from_pairs(roots)
    levels = sorted({dot(v, normal) for v in system.psi}, reverse=True)
    return [(level, make_system([v for v in system.psi if dot(v, normal) == level], delta)) for level in levels]


# -- named catalog entries --------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterOutOfRange(msg)


def hesse(affine: bool = True) -> MinusculeSystem:
    sys = make_system(hesse_psi(), hesse_delta())
    return sys if affine else drop(sys, ["alpha0"])


SCHLAFLI_LEVELS = (24, 8, -8, -24)


def schlafli(level: int = 8) -> MinusculeSystem:
    _need(level in SCHLAFLI_LEVELS, f"level must be one of {SCHLAFLI_LEVELS}")
    return slice_system(hesse(), SliceSpec(hesse_vertex(0, 7), level))


def schlafli_affine(level: int = 8) -> MinusculeSystem:
    # 4(e_0 - e_7): the opposite sign gives A[alpha7][alpha-aff] = +1, not a GCM
    base = schlafli(level)
    return make_system(base.psi, base.delta.extend(AFFINE_EXTRA, sub(eps(8, 0, 4), eps(8, 7, 4))))


def hypercube(n: int, affine: bool = True) -> MinusculeSystem:
    _need(n >= 3, "hypercube needs n >= 3")
    sys = make_system(hypercube_psi(n), hypercube_delta(n))
    return sys if affine else drop(sys, ["alpha0"])


def hypercube_slice(n: int, k: int) -> MinusculeSystem:
    """Vertices with exactly k entries equal to -2 (level 2n - 4k along (1, ..., 1))."""
    _need(n >= 3, "hypercube needs n >= 3")
    _need(0 <= k <= n, "need 0 <= k <= n")
    return slice_system(hypercube(n), SliceSpec(ones(n), 2 * n - 4 * k))


def hypercube_slice_affine(n: int, k: int) -> MinusculeSystem:
    base = hypercube_slice(n, k)
    return make_system(base.psi, base.delta.extend(AFFINE_EXTRA, sub(eps(n, n - 1, 4), eps(n, 0, 4))))


def halfcube(n: int, parity: str = "+", affine: bool = True) -> MinusculeSystem:
    _need(n >= 4, "half-cube needs n >= 4")
    _need(parity in ("+", "-"), "parity must be '+' or '-'")
    sys = make_system(halfcube_psi(n, parity), d_delta(n))
    return sys if affine else drop(sys, ["alpha0"])


def cross_d(n: int, affine: bool = True) -> MinusculeSystem:
    _need(n >= 4, "cross polytope with D-type roots needs n >= 4")
    sys = make_system(cross_psi(n), d_delta(n))
    return sys if affine else drop(sys, ["alpha0"])


def cross_c(n: int, affine: bool = True) -> MinusculeSystem:
    _need(n >= 2, "cross polytope with C-type roots needs n >= 2")
    sys = make_system(cross_psi(n), c_delta(n))
    return sys if affine else drop(sys, ["alpha0pp"])


@dataclass(frozen=True)
class Expected:
    type: str
    dim: int
    highest: IntVector | None = None
    lowest: IntVector | None = None


def _two_j(n: int, sign: int = 1) -> IntVector:
    return (2 * sign,) * n


def _expect_hesse(affine=True):
    if affine:
        return Expected("E_7^(1)", 56)
    return Expected("E_7", 56, hesse_vertex(0, 7, -1), hesse_vertex(0, 7))


def _expect_schlafli(level=8):
    ends = {
        24: (hesse_vertex(0, 7), hesse_vertex(0, 7)),
        8: (hesse_vertex(1, 7), hesse_vertex(0, 6)),
        -8: (hesse_vertex(0, 6, -1), hesse_vertex(1, 7, -1)),
        -24: (hesse_vertex(0, 7, -1), hesse_vertex(0, 7, -1)),
    }[level]
    return Expected("E_6", 27 if abs(level) == 8 else 1, *ends)


def _expect_schlafli_affine(level=8):
    return Expected("E_6^(1)", 27 if abs(level) == 8 else 1)


def _expect_hypercube(n, affine=True):
    if affine:
        return Expected(f"B_{n}^(1)", 2**n)
    return Expected(f"B_{n}", 2**n, _two_j(n), _two_j(n, -1))


def _expect_slice(n, k):
    highest = (2,) * (n - k) + (-2,) * k
    lowest = (-2,) * k + (2,) * (n - k)
    return Expected(f"A_{n - 1}", comb(n, k), highest, lowest)


def _expect_slice_affine(n, k):
    return Expected(f"A_{n - 1}^(1)", comb(n, k))


def _expect_halfcube(n, parity="+", affine=True):
    if affine:
        return Expected(f"D_{n}^(1)", 2 ** (n - 1))
    highest = _two_j(n) if parity == "+" else sub(_two_j(n), eps(n, n - 1, 4))
    # which of -2j and -2j + 4e_{n-1} is lowest depends on n; left to detection
    return Expected(f"D_{n}", 2 ** (n - 1), highest, None)


def _expect_cross_d(n, affine=True):
    if affine:
        return Expected(f"D_{n}^(1)", 2 * n)
    return Expected(f"D_{n}", 2 * n, eps(n, 0, 4), eps(n, 0, -4))


def _expect_cross_c(n, affine=True):
    if affine:
        return Expected(f"C_{n}^(1)", 2 * n)
    # C_2 and B_2 are the same diagram; the classifier reports B_2
    return Expected(f"C_{n}" if n > 2 else "B_2", 2 * n, eps(n, 0, 4), eps(n, 0, -4))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    params: tuple[str, ...]
    ranges: str
    builder: Callable[..., MinusculeSystem]
    expect: Callable[..., Expected]


ENTRIES: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("hesse", "56 vertices of the Hesse polytope; E_7^(1), or E_7 without alpha0",
                     ("affine",), "none", hesse, _expect_hesse),
        CatalogEntry("schlafli", "27/1-vertex slices of the Hesse polytope along v_07; E_6",
                     ("level",), "level in {24, 8, -8, -24}", schlafli, _expect_schlafli),
        CatalogEntry("schlafli-affine", "Schlafli slices with 4(e_0 - e_7) adjoined; E_6^(1)",
                     ("level",), "level in {24, 8, -8, -24}", schlafli_affine, _expect_schlafli_affine),
        CatalogEntry("hypercube", "2^n hypercube vertices; B_n^(1), or the B_n spin module without alpha0",
                     ("n", "affine"), "n >= 3", hypercube, _expect_hypercube),
        CatalogEntry("hypercube-slice", "hypercube vertices with k entries -2; A_{n-1}, dimension C(n, k)",
                     ("n", "k"), "n >= 3, 0 <= k <= n", hypercube_slice, _expect_slice),
        CatalogEntry("hypercube-slice-affine", "hypercube slice with 4(e_{n-1} - e_0) adjoined; A_{n-1}^(1)",
                     ("n", "k"), "n >= 3, 0 <= k <= n", hypercube_slice_affine, _expect_slice_affine),
        CatalogEntry("halfcube", "even (+) or odd (-) half of the hypercube; D_n^(1), or a D_n spin module",
                     ("n", "parity", "affine"), "n >= 4, parity in {+, -}", halfcube, _expect_halfcube),
        CatalogEntry("cross-d", "2n cross-polytope vertices with D-type roots; D_n^(1), or D_n natural",
                     ("n", "affine"), "n >= 4", cross_d, _expect_cross_d),
        CatalogEntry("cross-c", "2n cross-polytope vertices with C-type roots; C_n^(1), or C_n natural",
                     ("n", "affine"), "n >= 2", cross_c, _expect_cross_c),
    ]
}


def _entry(name: str) -> CatalogEntry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}; try one of {', '.join(ENTRIES)}") from None


def _params(entry: CatalogEntry, params: dict) -> dict:
    extra = set(params) - set(entry.params)
    if extra:
        raise ParameterOutOfRange(f"{entry.name} does not take {', '.join(sorted(extra))}")
    if "n" in entry.params and "n" not in params:
        raise ParameterOutOfRange(f"{entry.name} needs n")
    if "k" in entry.params and "k" not in params:
        raise ParameterOutOfRange(f"{entry.name} needs k")
    return params


def build(name: str, **params) -> MinusculeSystem:
    entry = _entry(name)
    return entry.builder(**_params(entry, params))


def expected(name: str, **params) -> Expected:
    entry = _entry(name)
    return entry.expect(**_params(entry, params))


def instances(max_n: int = 8):
    """Every (name, params) in the standard verification grid, ranks up to max_n."""
    for affine in (True, False):
        yield "hesse", {"affine": affine}
    for level in SCHLAFLI_LEVELS:
        yield "schlafli", {"level": level}
        yield "schlafli-affine", {"level": level}
    for n in range(3, max_n + 1):
        for affine in (True, False):
            yield "hypercube", {"n": n, "affine": affine}
        for k in range(n + 1):
            yield "hypercube-slice", {"n": n, "k": k}
            yield "hypercube-slice-affine", {"n": n, "k": k}
    for n in range(4, max_n + 1):
        for parity in "+-":
            for affine in (True, False):
                yield "halfcube", {"n": n, "parity": parity, "affine": affine}
        for affine in (True, False):
            yield "cross-d", {"n": n, "affine": affine}
    for n in range(2, max_n + 1):
        for affine in (True, False):
            yield "cross-c", {"n": n, "affine": affine}


def describe(name: str, params: dict) -> str:
    if not params:
        return name
    return name + "(" + ", ".join(f"{k}={v}" for k, v in params.items()) + ")"
