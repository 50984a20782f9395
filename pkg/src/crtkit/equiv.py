"""Equivalence relations on ``{0, ..., n-1}`` and the set-level CRT.

For relations alpha, beta on M let ``sigma(x) = (alpha(x), beta(x))`` map M
into ``M/alpha x M/beta``.  Then the kernel of sigma is ``alpha & beta``, and
sigma is onto exactly when the composite ``alpha o beta`` is all of M x M.
:func:`verify_theorem5` checks both claims over every pair of relations on
small sets.

A relation is stored as ``class_of``: the smallest member of each
element's block.  With that canonical form, equal relations compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BaseMismatch, BoundExceeded, NotAPartition, OutOfRange

MAX_THEOREM5_SIZE = 6


@dataclass(frozen=True)
class FiniteSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("set size must be non-negative")

    def __iter__(self):
        return iter(range(self.size))

    def __contains__(self, x):
        return isinstance(x, int) and 0 <= x < self.size


@dataclass(frozen=True)
class EquivRelation:
    base: FiniteSet
    class_of: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.class_of)
        if len(c) != self.base.size:
            raise NotAPartition(f"{len(c)} class ids for a set of size {self.base.size}")
        for x, r in enumerate(c):
            if not (0 <= r <= x and c[r] == r):
                raise NotAPartition(f"class id {r} of {x} is not a minimal representative")
        object.__setattr__(self, "class_of", c)

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, r in enumerate(self.class_of):
            out.setdefault(r, []).append(x)
        return list(out.values())

    def classes(self) -> list[int]:
        return sorted(set(self.class_of))

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for x in self.base for y in self.base if self.related(x, y))


@dataclass(frozen=True)
class BinRelation:
    base: FiniteSet
    pairs: frozenset[tuple[int, int]]

    def is_total(self) -> bool:
        """True iff the relation is all of M x M."""
        return len(self.pairs) == self.base.size ** 2


def _from_labels(labels: Sequence[int]) -> EquivRelation:
    first: dict[int, int] = {}
    for x, label in enumerate(labels):
        first.setdefault(label, x)
    return EquivRelation(FiniteSet(len(labels)), tuple(first[label] for label in labels))


def from_partition(base: FiniteSet, blocks: Sequence[Sequence[int]]) -> EquivRelation:
    labels = [None] * base.size
    for b, block in enumerate(blocks):
        if not block:
            raise NotAPartition("empty block")
        for x in block:
            if x not in base:
                raise NotAPartition(f"{x!r} is not an element of a set of size {base.size}")
            if labels[x] is not None:
                raise NotAPartition(f"{x} lies in two blocks")
            labels[x] = b
    missing = [x for x, label in enumerate(labels) if label is None]
    if missing:
        raise NotAPartition(f"elements {missing} are in no block")
    return _from_labels(labels)


def identity(base: FiniteSet) -> EquivRelation:
    return EquivRelation(base, tuple(base))


def total(base: FiniteSet) -> EquivRelation:
    return EquivRelation(base, (0,) * base.size)


def _same_base(a: EquivRelation, b: EquivRelation) -> FiniteSet:
    if a.base != b.base:
        raise BaseMismatch(f"sets of size {a.base.size} and {b.base.size}")
    return a.base


def intersect(a: EquivRelation, b: EquivRelation) -> EquivRelation:
    base = _same_base(a, b)
    return EquivRelation(
        base,
        tuple(min(y for y in base if a.related(x, y) and b.related(x, y)) for x in base),
    )


def compose(a: EquivRelation, b: EquivRelation) -> BinRelation:
    """``(x, z)`` is in the result iff some ``y`` has ``x ~a y`` and ``y ~b z``."""
    base = _same_base(a, b)
    pairs = set()
    for x in base:
        for y in base:
            if a.related(x, y):
                pairs.update((x, z) for z in base if b.related(y, z))
    return BinRelation(base, frozenset(pairs))


def sigma_classes(a: EquivRelation, b: EquivRelation, x: int) -> tuple[int, int]:
    _same_base(a, b)
    if x not in a.base:
        raise OutOfRange(f"{x} not in a set of size {a.base.size}")
    return a.class_of[x], b.class_of[x]


def kernel_of_sigma(a: EquivRelation, b: EquivRelation) -> EquivRelation:
    """``x ~ y`` iff ``sigma(x) == sigma(y)``."""
    base = _same_base(a, b)
    return _from_labels([sigma_classes(a, b, x) for x in base])


def sigma_onto(a: EquivRelation, b: EquivRelation) -> bool:
    base = _same_base(a, b)
    image = {sigma_classes(a, b, x) for x in base}
    return all((i, j) in image for i in a.classes() for j in b.classes())


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All ``a`` of length n with ``a[0] == 0`` and ``a[i] <= 1 + max(a[:i])``."""
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from extend(prefix, max(top, v))
            prefix.pop()

    yield from extend([0], 0)


def all_relations(n: int) -> list[EquivRelation]:
    return [_from_labels(rgs) for rgs in restricted_growth_strings(n)]


@dataclass(frozen=True)
class Theorem5Report:
    size: int
    pairs_checked: int
    kernel_ok: bool
    onto_ok: bool

    @property
    def ok(self) -> bool:
        return self.kernel_ok and self.onto_ok

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "pairs_checked": self.pairs_checked,
            "kernel_ok": self.kernel_ok,
            "onto_ok": self.onto_ok,
        }


def verify_theorem5(n: int) -> Theorem5Report:
    """Check the kernel identity and the onto criterion for every pair of
    equivalence relations on an n-element set (``Bell(n)**2`` pairs)."""
    if n < 0:
        raise ValueError("set size must be non-negative")
    if n > MAX_THEOREM5_SIZE:
        raise BoundExceeded(f"exhaustive check limited to n <= {MAX_THEOREM5_SIZE}")
    relations = all_relations(n)
    checked = 0
    kernel_ok = onto_ok = True
    for a in relations:
        for b in relations:
            checked += 1
            kernel_ok &= kernel_of_sigma(a, b) == intersect(a, b)
            onto_ok &= sigma_onto(a, b) == compose(a, b).is_total()
    return Theorem5Report(n, checked, kernel_ok, onto_ok)
