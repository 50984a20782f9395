"""Euclidean domains as runtime values.

A :class:`EuclideanDomain` bundles the ring operations, division with
remainder, a norm and a choice of canonical associates.  The generic gcd,
extended gcd and coprimality test below work for any instance; two are
provided, the integers (:data:`INTEGERS`) and GF(p)[X]
(:func:`crtkit.polynomials.gfp_poly_domain`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .errors import DivisionByZero, InvalidInput

Element = Any


@dataclass(frozen=True)
class EuclideanDomain:
    """Operations of a Euclidean domain.

    ``divmod(a, b)`` returns ``(q, r)`` with ``a == q*b + r`` and either
    ``r == zero`` or ``norm(r) < norm(b)``.  ``normalize(x)`` returns
    ``(canonical, unit)`` with ``x == unit * canonical``; ``normalize(zero)``
    is ``(zero, one)``.
    """

    name: str
    zero: Element
    one: Element
    add: Callable[[Element, Element], Element]
    neg: Callable[[Element], Element]
    mul: Callable[[Element, Element], Element]
    divmod: Callable[[Element, Element], tuple[Element, Element]]
    norm: Callable[[Element], int]
    normalize: Callable[[Element], tuple[Element, Element]]
    unit_inverse: Callable[[Element], Element]

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def rem(self, a: Element, b: Element) -> Element:
        return self.divmod(a, b)[1]

    def canonical(self, a: Element) -> Element:
        return self.normalize(a)[0]

    def is_zero(self, a: Element) -> bool:
        return a == self.zero

    def is_unit(self, a: Element) -> bool:
        return not self.is_zero(a) and self.canonical(a) == self.one

    def product(self, items) -> Element:
        result = self.one
        for x in items:
            result = self.mul(result, x)
        return result


def eu_gcd(d: EuclideanDomain, a: Element, b: Element) -> Element:
    """Canonical gcd by the Euclidean algorithm; ``eu_gcd(d, 0, 0) == 0``."""
    while not d.is_zero(b):
        a, b = b, d.rem(a, b)
    return d.canonical(a)


def eu_ext_gcd(d: EuclideanDomain, a: Element, b: Element) -> tuple[Element, Element, Element]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g`` and ``g`` canonical."""
    old_r, r = a, b
    old_x, x = d.one, d.zero
    old_y, y = d.zero, d.one
    while not d.is_zero(r):
        q, rem = d.divmod(old_r, r)
        old_r, r = r, rem
        old_x, x = x, d.sub(old_x, d.mul(q, x))
        old_y, y = y, d.sub(old_y, d.mul(q, y))
    g, unit = d.normalize(old_r)
    inv = d.unit_inverse(unit)
    return g, d.mul(old_x, inv), d.mul(old_y, inv)


def are_coprime(d: EuclideanDomain, a: Element, b: Element) -> bool:
    return d.is_unit(eu_gcd(d, a, b))


def _int_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DivisionByZero("integer division by zero")
    return divmod(a, b)


def _int_normalize(a: int) -> tuple[int, int]:
    return (a, 1) if a >= 0 else (-a, -1)


def _int_unit_inverse(u: int) -> int:
    if u not in (1, -1):
        raise ValueError(f"{u} is not a unit of Z")
    return u


INTEGERS = EuclideanDomain(
    name="int",
    zero=0,
    one=1,
    add=lambda a, b: a + b,
    neg=lambda a: -a,
    mul=lambda a, b: a * b,
    divmod=_int_divmod,
    norm=abs,
    normalize=_int_normalize,
    unit_inverse=_int_unit_inverse,
)


def domain_from_name(name: str) -> EuclideanDomain:
    """Resolve a CLI domain selector: ``"int"`` or ``"gfp-poly:<p>"``."""
    if name == "int":
        return INTEGERS
    prefix = "gfp-poly:"
    if name.startswith(prefix):
        from .polynomials import PrimeField, gfp_poly_domain

        text = name[len(prefix):]
        if not text.isdigit():
            raise InvalidInput(f"bad field characteristic in domain {name!r}")
        return gfp_poly_domain(PrimeField(int(text)))
    raise InvalidInput(f"unknown domain {name!r}")
