"""The scalar groupoid G_n(t, u) on Z_n with x*y = (t*x + u*y) mod n."""

from __future__ import annotations

import functools
import math
import operator
from dataclasses import dataclass

import numpy as np

from agmat.errors import BoundError, ModulusError, ModulusMismatchError
from agmat.modring import ZMod

MIN_GROUPOID_MODULUS = 3
DEFAULT_TABLE_BOUND = 4096

TYPE_TAGS = ("TypeI", "TypeII", "TypeIII", "GeneralG", "Degenerate", "Other")


@dataclass(frozen=True, order=True)
class ParamGroupoid:
    n: int
    t: int
    u: int

    def __post_init__(self) -> None:
        if self.n < MIN_GROUPOID_MODULUS:
            raise ModulusError(f"groupoid modulus must be >= {MIN_GROUPOID_MODULUS}, got {self.n}")
        if not (0 <= self.t < self.n and 0 <= self.u < self.n):
            raise ValueError("t and u must be reduced mod n; use make_groupoid")

    def __call__(self, x: int, y: int) -> int:
        """Multiply two plain integers (reduced on the way out)."""
        return (self.t * x + self.u * y) % self.n

    def __str__(self) -> str:
        return f"G_{self.n}({self.t},{self.u})"


def _as_int(name: str, value: object) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, got bool")
    try:
        return operator.index(value)  # type: ignore[arg-type]
    except TypeError:
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}") from None


def make_groupoid(n: int, t: int, u: int) -> ParamGroupoid:
    """Build G_n(t, u), reducing t and u modulo n.

    Raises TypeError for non-integer arguments and ModulusError when n < 3.
    """
    n, t, u = _as_int("n", n), _as_int("t", t), _as_int("u", u)
    if n < MIN_GROUPOID_MODULUS:
        raise ModulusError(f"groupoid modulus must be >= {MIN_GROUPOID_MODULUS}, got {n}")
    return ParamGroupoid(n, t % n, u % n)


def op(g: ParamGroupoid, x: ZMod, y: ZMod) -> ZMod:
    for v in (x, y):
        if v.modulus != g.n:
            raise ModulusMismatchError(f"operand mod {v.modulus} used in {g}")
    return ZMod((g.t * x.value + g.u * y.value) % g.n, g.n)


def entry_dtype(n: int) -> np.dtype:
    """Smallest unsigned integer type that can hold n - 1."""
    for dt in (np.uint8, np.uint16, np.uint32):
        if n - 1 <= np.iinfo(dt).max:
            return np.dtype(dt)
    return np.dtype(np.uint64)


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """Materialized operation table; ``entries[x, y] == g(x, y)``. Read-only."""

    groupoid: ParamGroupoid
    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.groupoid.n

    def __getitem__(self, xy: tuple[int, int]) -> int:
        return int(self.entries[xy])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()


def cayley_table(g: ParamGroupoid, bound: int = DEFAULT_TABLE_BOUND) -> CayleyTable:
    if g.n > bound:
        raise BoundError(f"Cayley table for n={g.n} exceeds the bound {bound}")
    return _cached_table(g)


@functools.lru_cache(maxsize=512)
def _cached_table(g: ParamGroupoid) -> CayleyTable:
    x = np.arange(g.n, dtype=np.int64)
    entries = ((g.t * x)[:, None] + (g.u * x)[None, :]) % g.n
    entries = entries.astype(entry_dtype(g.n))
    entries.flags.writeable = False
    return CayleyTable(g, entries)


@dataclass(frozen=True)
class TypeClass:
    tag: str
    t_nonzero: bool
    u_nonzero: bool
    distinct: bool
    coprime: bool

    def __str__(self) -> str:
        return self.tag


def classify_type(g: ParamGroupoid) -> TypeClass:
    """Tag the parameter pair.

    Rules in order: Degenerate for (0, 0); TypeIII when exactly one of t, u is
    zero; TypeII when t == u != 0; TypeI when t, u are nonzero, distinct and
    coprime; Other when nonzero, distinct and not coprime. "GeneralG" is the
    same condition as TypeI and is therefore never produced.
    """
    t_nz, u_nz = g.t != 0, g.u != 0
    distinct = g.t != g.u
    coprime = math.gcd(g.t, g.u) == 1
    if not t_nz and not u_nz:
        tag = "Degenerate"
    elif t_nz != u_nz:
        tag = "TypeIII"
    elif not distinct:
        tag = "TypeII"
    elif coprime:
        tag = "TypeI"
    else:
        tag = "Other"
    return TypeClass(tag, t_nz, u_nz, distinct, coprime)
