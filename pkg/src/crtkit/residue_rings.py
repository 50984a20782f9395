"""Residue class rings Z_n, their finite products, and the reduction map

    sigma(x) = (x mod m_1, ..., x mod m_r)

from Z_m to Z_{m_1} x ... x Z_{m_r}, with exhaustive (or seeded, sampled)
checks that it is a ring isomorphism, and that on units it is a group
isomorphism onto the product of unit groups.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from .crt import solve_garner, validate_system
from .errors import BoundExceeded, HypothesisViolated, OutOfRange, RingMismatch
from .integer_core import gcd

DEFAULT_EXHAUSTIVE_BOUND = 10**6
FULL_PAIRS_LIMIT = 10**3
SAMPLED_PAIRS = 10**5
DEFAULT_SEED = 0


@dataclass(frozen=True)
class ResidueRing:
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")

    def __call__(self, value: int) -> ResidueElement:
        return ResidueElement(self, value % self.modulus)

    @property
    def zero(self) -> ResidueElement:
        return self(0)

    @property
    def one(self) -> ResidueElement:
        return self(1)

    def elements(self):
        return [ResidueElement(self, v) for v in range(self.modulus)]

    def units(self):
        return [ResidueElement(self, v) for v in range(self.modulus) if gcd(v, self.modulus) == 1]


@dataclass(frozen=True)
class ResidueElement:
    ring: ResidueRing
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise OutOfRange(f"{self.value} is not a canonical element of Z_{self.ring.modulus}")

    def __add__(self, other):
        return ring_add(self, other)

    def __sub__(self, other):
        return ring_sub(self, other)

    def __mul__(self, other):
        return ring_mul(self, other)

    def __neg__(self):
        return ring_neg(self)

    def __int__(self):
        return self.value


def _same_ring(x: ResidueElement, y: ResidueElement) -> ResidueRing:
    if x.ring != y.ring:
        raise RingMismatch(f"Z_{x.ring.modulus} vs Z_{y.ring.modulus}")
    return x.ring


def ring_add(x: ResidueElement, y: ResidueElement) -> ResidueElement:
    return _same_ring(x, y)(x.value + y.value)


def ring_mul(x: ResidueElement, y: ResidueElement) -> ResidueElement:
    return _same_ring(x, y)(x.value * y.value)


def ring_neg(x: ResidueElement) -> ResidueElement:
    return x.ring(-x.value)


def ring_sub(x: ResidueElement, y: ResidueElement) -> ResidueElement:
    return ring_add(x, ring_neg(y))


@dataclass(frozen=True)
class ProductRing:
    factors: tuple[ResidueRing, ...]

    @classmethod
    def of(cls, moduli: Sequence[int]) -> ProductRing:
        return cls(tuple(ResidueRing(m) for m in moduli))

    def _check(self, t) -> None:
        if len(t) != len(self.factors) or any(e.ring != r for e, r in zip(t, self.factors)):
            raise RingMismatch("tuple does not belong to this product ring")

    def add(self, s, t) -> tuple[ResidueElement, ...]:
        self._check(s)
        self._check(t)
        return tuple(ring_add(a, b) for a, b in zip(s, t))

    def mul(self, s, t) -> tuple[ResidueElement, ...]:
        self._check(s)
        self._check(t)
        return tuple(ring_mul(a, b) for a, b in zip(s, t))

    @property
    def size(self) -> int:
        n = 1
        for r in self.factors:
            n *= r.modulus
        return n


@dataclass(frozen=True)
class IsoReport:
    checked: int
    bijective: bool
    additive: Optional[bool]
    multiplicative: bool
    # (|units(Z_pq)|, |units(Z_p)|, |units(Z_q)|) for unit-group reports
    unit_counts: Optional[tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.bijective and self.additive is not False and self.multiplicative

    def to_json(self) -> dict:
        out = asdict(self)
        if self.unit_counts is None:
            del out["unit_counts"]
        else:
            out["unit_counts"] = list(self.unit_counts)
        return out


def _product(moduli: Sequence[int]) -> int:
    m = 1
    for mi in moduli:
        m *= mi
    return m


def sigma(moduli: Sequence[int], x: int) -> tuple[ResidueElement, ...]:
    m = _product(moduli)
    if not 0 <= x < m:
        raise OutOfRange(f"{x} not in [0, {m})")
    return tuple(ResidueRing(mi)(x) for mi in moduli)


def sigma_inverse(moduli: Sequence[int], t: Sequence) -> int:
    """The unique ``x`` in ``[0, m)`` with ``sigma(x) == t``.

    Entries of ``t`` may be :class:`ResidueElement` or plain ints.
    """
    if len(t) != len(moduli):
        raise RingMismatch(f"tuple of length {len(t)} for {len(moduli)} moduli")
    values = []
    for e, mi in zip(t, moduli):
        if isinstance(e, ResidueElement):
            if e.ring.modulus != mi:
                raise RingMismatch(f"component in Z_{e.ring.modulus}, expected Z_{mi}")
            e = e.value
        values.append(e)
    return solve_garner(validate_system(moduli, values)).u


def _sigma_table(moduli: Sequence[int]) -> np.ndarray:
    # row x holds sigma(x), computed by sigma() itself
    m = _product(moduli)
    rows = [[e.value for e in sigma(moduli, x)] for x in range(m)]
    return np.array(rows, dtype=np.int64).reshape(m, len(moduli))


def _pairs(n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    if n <= FULL_PAIRS_LIMIT:
        xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        return xs.ravel(), ys.ravel()
    return rng.integers(0, n, SAMPLED_PAIRS), rng.integers(0, n, SAMPLED_PAIRS)


def verify_ring_iso(
    moduli: Sequence[int],
    bound: int = DEFAULT_EXHAUSTIVE_BOUND,
    seed: int = DEFAULT_SEED,
) -> IsoReport:
    """Check that sigma is a bijective ring homomorphism Z_m -> prod Z_{m_i}.

    Bijectivity is checked on every element.  Both homomorphism laws are
    checked on all pairs when ``m <= 1000`` and on a seeded sample of
    ``10**5`` pairs otherwise.
    """
    s = validate_system(moduli, [0] * len(moduli))
    m = s.modulus
    if m > bound:
        raise BoundExceeded(f"ring of size {m} exceeds exhaustive bound {bound}")
    mods = np.array(s.moduli, dtype=np.int64).reshape(1, -1)
    table = _sigma_table(s.moduli)
    image = {tuple(row) for row in table.tolist()}
    in_codomain = bool(np.all((table >= 0) & (table < mods)))
    bijective = in_codomain and len(image) == m == _product(s.moduli)

    xs, ys = _pairs(m, np.random.default_rng(seed))
    additive = bool(np.array_equal(table[(xs + ys) % m], (table[xs] + table[ys]) % mods))
    multiplicative = bool(np.array_equal(table[(xs * ys) % m], (table[xs] * table[ys]) % mods))
    return IsoReport(m, bijective, additive, multiplicative)


def verify_unit_group_iso(
    p: int,
    q: int,
    bound: int = DEFAULT_EXHAUSTIVE_BOUND,
    seed: int = DEFAULT_SEED,
) -> IsoReport:
    """Check that sigma restricted to units(Z_pq) is a multiplicative bijection
    onto units(Z_p) x units(Z_q).

    Requires ``p > 1``, ``q > 1`` and ``gcd(p, q) == 1``.  ``additive`` is
    reported as ``None``: units are not closed under addition.
    """
    if not (p > 1 and q > 1 and gcd(p, q) == 1):
        raise HypothesisViolated(f"need 1 < p, 1 < q and gcd(p, q) = 1; got p={p}, q={q}")
    n = p * q
    if n > bound:
        raise BoundExceeded(f"ring of size {n} exceeds exhaustive bound {bound}")
    table = _sigma_table((p, q))
    units = [x for x in range(n) if gcd(x, n) == 1]
    units_p = {x for x in range(p) if gcd(x, p) == 1}
    units_q = {x for x in range(q) if gcd(x, q) == 1}
    images = [tuple(row) for row in table[units].tolist()]
    into_units = all(a in units_p and b in units_q for a, b in images)
    bijective = (
        into_units
        and len(set(images)) == len(units)
        and len(units) == len(units_p) * len(units_q)
    )

    u = np.array(units, dtype=np.int64)
    mods = np.array([p, q], dtype=np.int64).reshape(1, 2)
    i, j = _pairs(len(units), np.random.default_rng(seed))
    multiplicative = bool(
        np.array_equal(table[(u[i] * u[j]) % n], (table[u[i]] * table[u[j]]) % mods)
    )
    return IsoReport(len(units), bijective, None, multiplicative, (len(units), len(units_p), len(units_q)))
