"""Exact arithmetic in Z_n."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from agmat.errors import ModulusError, ModulusMismatchError

MIN_MODULUS = 2


def _check_modulus(n: int, lower: int = MIN_MODULUS) -> int:
    n = operator.index(n)
    if n < lower:
        raise ModulusError(f"modulus must be >= {lower}, got {n}")
    return n


@dataclass(frozen=True, order=True)
class ZMod:
    """A residue together with its modulus."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.modulus}")

    def _same(self, other: ZMod) -> None:
        if not isinstance(other, ZMod):
            raise TypeError(f"expected ZMod, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatchError(f"moduli differ: {self.modulus} vs {other.modulus}")

    def __add__(self, other: ZMod) -> ZMod:
        return add_mod(self, other)

    def __mul__(self, other: ZMod) -> ZMod:
        return mul_mod(self, other)

    def __neg__(self) -> ZMod:
        return norm(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def norm(x: int, n: int) -> ZMod:
    """Canonical residue of any integer ``x`` (negatives included) modulo ``n``."""
    n = _check_modulus(n)
    return ZMod(operator.index(x) % n, n)


def add_mod(a: ZMod, b: ZMod) -> ZMod:
    a._same(b)
    return ZMod((a.value + b.value) % a.modulus, a.modulus)


def mul_mod(a: ZMod, b: ZMod) -> ZMod:
    a._same(b)
    return ZMod((a.value * b.value) % a.modulus, a.modulus)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers; gcd(0, 0) == 0."""
    if a < 0 or b < 0:
        raise ValueError("gcd is defined here for nonnegative integers only")
    return math.gcd(a, b)


def is_unit(x: ZMod) -> bool:
    return math.gcd(x.value, x.modulus) == 1


def is_prime(n: int) -> bool:
    """Trial division; intended for n up to about 10**6."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
