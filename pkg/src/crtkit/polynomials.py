"""Univariate polynomials over a prime field, in two representations.

``DensePoly`` keeps every coefficient, lowest degree first, with no trailing
zeros (the zero polynomial has no coefficients).  ``SparsePoly`` keeps only
the nonzero terms as ``(exponent, coefficient)`` pairs with strictly
increasing exponents.  Both constructors normalize their input, so every
instance satisfies its invariant.

The JSON wire form is shared by both and lists exponents explicitly::

    {"p": "5", "terms": [[0, "4"], [2, "1"]]}      # x^2 + 4
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Union

from .errors import DivisionByZero, FieldMismatch, InvalidInput
from .euclidean import EuclideanDomain
from .integer_core import is_prime, mod_inverse, mod_pow, parse_int

NEG_INF = -math.inf


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InvalidInput(f"field characteristic must be prime, got {self.p!r}")

    def inverse(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return mod_inverse(a, self.p)

    def __str__(self):
        return f"GF({self.p})"


def _format(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in sorted(terms, reverse=True):
        if e == 0:
            parts.append(str(c))
        else:
            mono = "x" if e == 1 else f"x^{e}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts)


@dataclass(frozen=True)
class DensePoly:
    field: PrimeField
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.field.p
        coeffs = [c % p for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> DensePoly:
        return cls(field, (c,))

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __neg__(self):
        return poly_neg(self)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __str__(self):
        return _format([(e, c) for e, c in enumerate(self.coeffs) if c])


@dataclass(frozen=True)
class SparsePoly:
    field: PrimeField
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        p = self.field.p
        acc: dict[int, int] = {}
        for e, c in self.terms:
            if not isinstance(e, int) or e < 0:
                raise InvalidInput(f"exponent must be a non-negative integer, got {e!r}")
            acc[e] = (acc.get(e, 0) + c) % p
        terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        object.__setattr__(self, "terms", terms)

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else NEG_INF

    @property
    def leading(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __neg__(self):
        return poly_neg(self)

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __str__(self):
        return _format(self.terms)


Poly = Union[DensePoly, SparsePoly]


def to_sparse(a: DensePoly) -> SparsePoly:
    return SparsePoly(a.field, tuple((e, c) for e, c in enumerate(a.coeffs) if c))


def to_dense(a: SparsePoly) -> DensePoly:
    if not a.terms:
        return DensePoly(a.field)
    coeffs = [0] * (a.terms[-1][0] + 1)
    for e, c in a.terms:
        coeffs[e] = c
    return DensePoly(a.field, tuple(coeffs))


def _check(a: Poly, b: Poly) -> None:
    if type(a) is not type(b):
        raise TypeError(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def poly_add(a: Poly, b: Poly) -> Poly:
    _check(a, b)
    if isinstance(a, DensePoly):
        return DensePoly(a.field, tuple(x + y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=0)))
    return SparsePoly(a.field, a.terms + b.terms)


def poly_neg(a: Poly) -> Poly:
    if isinstance(a, DensePoly):
        return DensePoly(a.field, tuple(-c for c in a.coeffs))
    return SparsePoly(a.field, tuple((e, -c) for e, c in a.terms))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    _check(a, b)
    p = a.field.p
    if isinstance(a, DensePoly):
        if a.is_zero() or b.is_zero():
            return DensePoly(a.field)
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return DensePoly(a.field, tuple(c % p for c in out))
    acc: dict[int, int] = {}
    for e1, c1 in a.terms:
        for e2, c2 in b.terms:
            acc[e1 + e2] = (acc.get(e1 + e2, 0) + c1 * c2) % p
    return SparsePoly(a.field, tuple(acc.items()))


def poly_eval(a: Poly, x: int) -> int:
    """Value at ``x``: Horner for dense, term-by-term powers for sparse."""
    p = a.field.p
    if isinstance(a, DensePoly):
        acc = 0
        for c in reversed(a.coeffs):
            acc = (acc * x + c) % p
        return acc
    return sum(c * mod_pow(x, e, p) for e, c in a.terms) % p


def poly_divmod(a: DensePoly, b: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Long division: ``a == q*b + r`` with ``deg r < deg b``."""
    _check(a, b)
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    field = a.field
    p = field.p
    inv_lc = field.inverse(b.leading)
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    quot = [0] * max(len(rem) - db, 0)
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = rem[shift + db] * inv_lc % p
        if c:
            quot[shift] = c
            for i, bc in enumerate(b.coeffs):
                rem[shift + i] = (rem[shift + i] - c * bc) % p
    return DensePoly(field, tuple(quot)), DensePoly(field, tuple(rem[:db]))


def poly_to_json(a: Poly) -> dict:
    terms = a.terms if isinstance(a, SparsePoly) else to_sparse(a).terms
    return {"p": str(a.field.p), "terms": [[e, str(c)] for e, c in terms]}


def poly_from_json(obj, field: PrimeField | None = None, sparse: bool = False) -> Poly:
    """Decode the wire form; with ``field`` given, its ``p`` must match."""
    if not isinstance(obj, dict) or set(obj) != {"p", "terms"}:
        raise InvalidInput(f"polynomial must be an object with keys p and terms, got {obj!r}")
    decoded = PrimeField(parse_int(obj["p"]))
    if field is not None and decoded != field:
        raise FieldMismatch(f"polynomial over {decoded}, expected {field}")
    terms = []
    last = -1
    for item in obj["terms"]:
        if not (isinstance(item, list) and len(item) == 2):
            raise InvalidInput(f"term must be [exponent, coefficient], got {item!r}")
        e, c = item
        if not isinstance(e, int) or isinstance(e, bool) or e <= last:
            raise InvalidInput("exponents must be strictly increasing non-negative integers")
        last = e
        terms.append((e, parse_int(c)))
    poly = SparsePoly(decoded, tuple(terms))
    return poly if sparse else to_dense(poly)


@lru_cache(maxsize=None)
def gfp_poly_domain(field: PrimeField) -> EuclideanDomain:
    """GF(p)[X] as a Euclidean domain: norm is degree, canonical means monic."""
    zero = DensePoly(field)
    one = DensePoly.constant(field, 1)

    def normalize(a: DensePoly):
        if a.is_zero():
            return zero, one
        lc = a.leading
        return poly_mul(a, DensePoly.constant(field, field.inverse(lc))), DensePoly.constant(field, lc)

    def unit_inverse(u: DensePoly) -> DensePoly:
        if u.degree != 0:
            raise ValueError(f"{u} is not a unit of {field}[x]")
        return DensePoly.constant(field, field.inverse(u.leading))

    def norm(a: DensePoly) -> int:
        if a.is_zero():
            raise ValueError("norm is undefined at zero")
        return a.degree

    return EuclideanDomain(
        name=f"gfp-poly:{field.p}",
        zero=zero,
        one=one,
        add=poly_add,
        neg=poly_neg,
        mul=poly_mul,
        divmod=poly_divmod,
        norm=norm,
        normalize=normalize,
        unit_inverse=unit_inverse,
    )
