"""Chinese Remainder Theorem solvers.

Each constructive route to the simultaneous solution is its own strategy
over a validated :class:`CongruenceSystem`:

* :func:`solve_search` -- scan every candidate in ``[0, m)`` (oracle only);
* :func:`solve_euler` -- idempotent constants ``M_i`` with ``u = sum u_i M_i mod m``,
  built either from Euler's totient or from one modular inverse each;
* :func:`solve_garner` -- mixed-radix digits from pairwise inverses ``c_ij``;
* :func:`solve_fold` -- repeated two-modulus combination via :func:`solve_pair`;
* :func:`solve_generic` -- Garner over any :class:`~crtkit.euclidean.EuclideanDomain`.

Strategies accept an optional ``probe`` (see :class:`OperandProbe`) that is
called at each internal multiplication/accumulation checkpoint; the
benchmark uses it to measure operand sizes.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    InvariantViolation,
    LengthMismatch,
    NonPositiveModulus,
    NotASolution,
    NotCoprime,
    NotPairwiseCoprime,
    SearchBoundExceeded,
)
from .euclidean import EuclideanDomain, are_coprime, eu_ext_gcd
from .integer_core import euler_phi, ext_gcd, gcd, mod_inverse, mod_pow

DEFAULT_SEARCH_BOUND = 1 << 24
_SCAN_CHUNK = 1 << 20

Probe = Callable[[str, int], None]


class OperandProbe:
    """Records the largest bit length seen at each named checkpoint."""

    def __init__(self):
        self.max_bits: dict[str, int] = {}

    def __call__(self, label: str, value: int) -> None:
        bits = abs(value).bit_length()
        if bits > self.max_bits.get(label, -1):
            self.max_bits[label] = bits

    def overall(self, exclude: Sequence[str] = ()) -> int:
        return max((b for k, b in self.max_bits.items() if k not in exclude), default=0)


@dataclass(frozen=True)
class CongruenceSystem:
    """Pairwise coprime moduli ``m_i >= 1`` with residues normalized into ``[0, m_i)``."""

    moduli: tuple[int, ...]
    residues: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(self.moduli)
        residues = tuple(self.residues)
        if len(moduli) != len(residues):
            raise LengthMismatch(f"{len(moduli)} moduli but {len(residues)} residues")
        for m in moduli:
            if m < 1:
                raise NonPositiveModulus(f"modulus {m} is not positive")
        for i in range(len(moduli)):
            for j in range(i + 1, len(moduli)):
                if gcd(moduli[i], moduli[j]) != 1:
                    raise NotPairwiseCoprime(moduli[i], moduli[j], i, j)
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "residues", tuple(u % m for u, m in zip(residues, moduli)))

    @property
    def modulus(self) -> int:
        m = 1
        for mi in self.moduli:
            m *= mi
        return m

    def __len__(self):
        return len(self.moduli)


def validate_system(moduli: Sequence[int], residues: Sequence[int]) -> CongruenceSystem:
    return CongruenceSystem(tuple(moduli), tuple(residues))


@dataclass(frozen=True)
class CrtSolution:
    u: int
    modulus: int
    range_start: int = 0

    def __post_init__(self):
        if not self.range_start <= self.u < self.range_start + self.modulus:
            raise ValueError(
                f"u={self.u} outside [{self.range_start}, {self.range_start + self.modulus})"
            )


class EulerVariant(str, enum.Enum):
    TOTIENT = "totient"
    EXTGCD = "extgcd"


@dataclass(frozen=True)
class EulerConstants:
    constants: tuple[int, ...]
    variant: EulerVariant


@dataclass(frozen=True)
class GarnerPrecomp:
    """Moduli plus ``table[j][i] = c_ij`` for ``i < j`` (0-based)."""

    moduli: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    def c(self, i: int, j: int) -> int:
        return self.table[j][i]


@dataclass(frozen=True)
class MixedRadixDigits:
    digits: tuple[int, ...]


def scan_solutions(s: CongruenceSystem, bound: int = DEFAULT_SEARCH_BOUND) -> list[int]:
    """Every ``x`` in ``[0, m)`` satisfying all congruences, by exhaustive scan."""
    m = s.modulus
    if m > bound:
        raise SearchBoundExceeded(f"modulus {m} exceeds search bound {bound}")
    hits: list[int] = []
    for start in range(0, m, _SCAN_CHUNK):
        candidates = np.arange(start, min(start + _SCAN_CHUNK, m), dtype=np.int64)
        mask = np.ones(candidates.shape, dtype=bool)
        for mi, ui in zip(s.moduli, s.residues):
            mask &= candidates % mi == ui
        hits.extend(int(x) for x in candidates[mask])
    return hits


def solve_search(s: CongruenceSystem, bound: int = DEFAULT_SEARCH_BOUND) -> CrtSolution:
    """The single candidate in ``[0, m)`` meeting every congruence, found by scanning.

    Raises :class:`InvariantViolation` if the scan finds anything other than
    exactly one hit.
    """
    hits = scan_solutions(s, bound)
    if len(hits) != 1:
        raise InvariantViolation(f"scan over [0, {s.modulus}) found {len(hits)} solutions")
    return CrtSolution(hits[0], s.modulus)


def euler_constants(
    s: CongruenceSystem,
    variant: EulerVariant | str = EulerVariant.TOTIENT,
    probe: Optional[Probe] = None,
) -> EulerConstants:
    """Constants with ``M_i = 1 (mod m_i)`` and ``M_i = 0 (mod m_j)``, reduced mod m.

    ``totient`` takes ``(m/m_i)**phi(m_i)``; ``extgcd`` takes
    ``(m/m_i) * ((m/m_i)^-1 mod m_i)`` and needs no factorization.
    """
    variant = EulerVariant(variant)
    m = s.modulus
    out = []
    for mi in s.moduli:
        cofactor = m // mi
        if variant is EulerVariant.TOTIENT:
            M = mod_pow(cofactor, euler_phi(mi), m)
            if probe is not None:
                probe("constant", M)
        else:
            inv = mod_inverse(cofactor % mi, mi)
            M = cofactor * inv
            if probe is not None:
                probe("constant", M)
            M %= m
        out.append(M)
    return EulerConstants(tuple(out), variant)


def raw_euler_constant_bits(s: CongruenceSystem) -> list[int]:
    """Estimated bit lengths of the unreduced ``(m/m_i)**phi(m_i)``.

    These numbers are far too large to materialize; the estimate is
    ``floor(phi(m_i) * log2(m/m_i)) + 1``.
    """
    m = s.modulus
    return [int(euler_phi(mi) * math.log2(m // mi)) + 1 for mi in s.moduli]


def solve_euler(
    s: CongruenceSystem,
    variant: EulerVariant | str = EulerVariant.TOTIENT,
    probe: Optional[Probe] = None,
) -> CrtSolution:
    consts = euler_constants(s, variant, probe)
    acc = 0
    for ui, Mi in zip(s.residues, consts.constants):
        term = ui * Mi
        acc += term
        if probe is not None:
            probe("product", term)
            probe("accumulate", acc)
    return CrtSolution(acc % s.modulus, s.modulus)


def garner_precompute(moduli: Sequence[int]) -> GarnerPrecomp:
    moduli = tuple(moduli)
    table = []
    for j, mj in enumerate(moduli):
        row = []
        for i in range(j):
            try:
                row.append(mod_inverse(moduli[i], mj))
            except NotCoprime:
                raise NotPairwiseCoprime(moduli[i], mj, i, j) from None
        table.append(tuple(row))
    return GarnerPrecomp(moduli, tuple(table))


def garner_digits(
    pre: GarnerPrecomp, residues: Sequence[int], probe: Optional[Probe] = None
) -> MixedRadixDigits:
    """Mixed-radix digits ``v_j = (...((u_j - v_1) c_1j - v_2) c_2j ... - v_{j-1}) c_{j-1,j} mod m_j``.

    Reducing after every multiplication keeps each operand below
    ``m_i * max(m)``.
    """
    if len(residues) != len(pre.moduli):
        raise LengthMismatch(f"{len(pre.moduli)} moduli but {len(residues)} residues")
    digits: list[int] = []
    for j, (mj, uj) in enumerate(zip(pre.moduli, residues)):
        t = uj % mj
        for i in range(j):
            t = (t - digits[i]) * pre.table[j][i]
            if probe is not None:
                probe("digit", t)
            t %= mj
        digits.append(t)
    return MixedRadixDigits(tuple(digits))


def mixed_radix_value(moduli: Sequence[int], digits: Sequence[int], probe: Optional[Probe] = None) -> int:
    """Horner evaluation of ``v_1 + v_2 m_1 + v_3 m_1 m_2 + ...``; stays below ``prod(moduli)``."""
    u = 0
    for mi, vi in zip(reversed(moduli), reversed(digits)):
        u = u * mi + vi
        if probe is not None:
            probe("recombine", u)
    return u


def solve_garner(
    s: CongruenceSystem,
    pre: Optional[GarnerPrecomp] = None,
    probe: Optional[Probe] = None,
) -> CrtSolution:
    if pre is None:
        pre = garner_precompute(s.moduli)
    digits = garner_digits(pre, s.residues, probe)
    return CrtSolution(mixed_radix_value(s.moduli, digits.digits, probe), s.modulus)


def solve_pair(m_a: int, m_b: int, u: int, v: int, probe: Optional[Probe] = None) -> CrtSolution:
    """The ``x`` in ``[0, m_a*m_b)`` with ``x = u (mod m_a)`` and ``x = v (mod m_b)``."""
    if m_a < 1 or m_b < 1:
        raise NonPositiveModulus(f"moduli must be positive, got {m_a}, {m_b}")
    g, s, _ = ext_gcd(m_a, m_b)
    if g != 1:
        raise NotCoprime(f"gcd({m_a}, {m_b}) = {g}")
    u %= m_a
    k = (v - u) * s
    if probe is not None:
        probe("pair-product", k)
    x = u + m_a * (k % m_b)
    if probe is not None:
        probe("pair-combine", x)
    return CrtSolution(x, m_a * m_b)


def solve_fold(s: CongruenceSystem, probe: Optional[Probe] = None) -> CrtSolution:
    u, m = 0, 1
    for mi, ui in zip(s.moduli, s.residues):
        step = solve_pair(m, mi, u, ui, probe)
        u, m = step.u, step.modulus
    return CrtSolution(u, m)


def shift_to_range(sol: CrtSolution, a: int) -> CrtSolution:
    """Representative of ``sol.u`` modulo ``sol.modulus`` in ``[a, a + m)``."""
    return CrtSolution(a + (sol.u - a) % sol.modulus, sol.modulus, a)


def congruence_witnesses(sol: CrtSolution, s: CongruenceSystem) -> list[int]:
    """Quotients ``x_i`` with ``u == residues[i] + x_i * moduli[i]`` for every i."""
    out = []
    for i, (mi, ui) in enumerate(zip(s.moduli, s.residues)):
        x, r = divmod(sol.u - ui, mi)
        if r:
            raise NotASolution(f"{sol.u} is not {ui} modulo {mi} (congruence {i})")
        out.append(x)
    return out


def solve_generic(d: EuclideanDomain, moduli: Sequence, residues: Sequence):
    """Garner's algorithm over an arbitrary Euclidean domain.

    Returns the remainder modulo ``prod(moduli)`` that is congruent to each
    residue.  Unit moduli are allowed and impose nothing.
    """
    if len(moduli) != len(residues):
        raise LengthMismatch(f"{len(moduli)} moduli but {len(residues)} residues")
    for mi in moduli:
        if d.is_zero(mi):
            raise DivisionByZero("zero modulus")
    moduli = [d.canonical(mi) for mi in moduli]
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if not are_coprime(d, moduli[i], moduli[j]):
                raise NotPairwiseCoprime(moduli[i], moduli[j], i, j)
    digits = []
    for j, (mj, uj) in enumerate(zip(moduli, residues)):
        t = d.rem(uj, mj)
        for i in range(j):
            _, c, _ = eu_ext_gcd(d, moduli[i], mj)
            t = d.rem(d.mul(d.sub(t, digits[i]), c), mj)
        digits.append(t)
    u = d.zero
    for mi, vi in zip(reversed(moduli), reversed(digits)):
        u = d.add(d.mul(u, mi), vi)
    return d.rem(u, d.product(moduli))
