"""p x q residue matrices under the entrywise operation M*N = t*M + u*N (mod n).

Row vectors are the 1 x q case and column vectors the p x 1 case.

Matrix file format::

    p q n
    a11 a12 ... a1q
    ...
    ap1 ap2 ... apq

Entries may be negative or out of range; they are reduced mod n on ingest.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from agmat.errors import BoundError, MatrixFormatError, ModulusError, ModulusMismatchError, ShapeMismatchError
from agmat.groupoid import MIN_GROUPOID_MODULUS, ParamGroupoid, entry_dtype
from agmat.modring import ZMod

MAX_ENTRIES = 10**6
# Largest matrix groupoid (n ** (p*q) elements) for which a full table is built.
MAX_STATES = 10**5


@dataclass(frozen=True)
class MatZ:
    rows: int
    cols: int
    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"matrix shape must be positive, got {self.rows}x{self.cols}")
        if self.modulus < MIN_GROUPOID_MODULUS:
            raise ModulusError(f"matrix modulus must be >= {MIN_GROUPOID_MODULUS}, got {self.modulus}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeMismatchError("entries do not match the declared shape")
        if any(not 0 <= e < self.modulus for r in self.entries for e in r):
            raise ValueError("entries must be reduced mod the modulus")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], modulus: int) -> MatZ:
        """Build a matrix from nested integers, reducing each entry mod ``modulus``."""
        if modulus < MIN_GROUPOID_MODULUS:
            raise ModulusError(f"matrix modulus must be >= {MIN_GROUPOID_MODULUS}, got {modulus}")
        entries = tuple(tuple(operator.index(e) % modulus for e in r) for r in rows)
        if not entries:
            raise ValueError("matrix needs at least one row")
        return cls(len(entries), len(entries[0]), modulus, entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


def _check_operands(g: ParamGroupoid, a: MatZ, b: MatZ) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shapes differ: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    for m in (a, b):
        if m.modulus != g.n:
            raise ModulusMismatchError(f"matrix mod {m.modulus} used in {g}")


def mat_op(g: ParamGroupoid, a: MatZ, b: MatZ) -> MatZ:
    _check_operands(g, a, b)
    t, u, n = g.t, g.u, g.n
    entries = tuple(
        tuple((t * x + u * y) % n for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    )
    return MatZ(a.rows, a.cols, n, entries)


def scalar_matrix(v: ZMod, p: int, q: int) -> MatZ:
    if p < 1 or q < 1:
        raise ValueError(f"matrix shape must be positive, got {p}x{q}")
    return MatZ(p, q, v.modulus, tuple((v.value,) * q for _ in range(p)))


def zero_matrix(p: int, q: int, n: int) -> MatZ:
    return MatZ(p, q, n, tuple((0,) * q for _ in range(p)))


def negate_scaled(t: int, x: MatZ) -> MatZ:
    """Entrywise (-t * x) mod n; the inverse of ``x`` in an AG-group G_n(t, 1)."""
    return MatZ.from_rows([[-t * e for e in r] for r in x.entries], x.modulus)


def random_matrix(rng: np.random.Generator, p: int, q: int, n: int) -> MatZ:
    return MatZ.from_rows(rng.integers(0, n, size=(p, q)).tolist(), n)


# -- file format -------------------------------------------------------------


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    for tok in line.split():
        try:
            out.append(int(tok, 10))
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: {tok!r} is not an integer") from None
    return out


def parse_matrix(text: bytes | str) -> MatZ:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MatrixFormatError(f"not UTF-8 text: {exc}") from None
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty input")
    lineno, header = lines[0]
    try:
        dims = _ints(header, lineno)
    except MatrixFormatError:
        raise MatrixFormatError(f"line {lineno}: malformed header {header.strip()!r}") from None
    if len(dims) != 3:
        raise MatrixFormatError(f"line {lineno}: header must be 'p q n', got {header.strip()!r}")
    p, q, n = dims
    if p < 1 or q < 1:
        raise MatrixFormatError(f"line {lineno}: shape must be positive, got {p}x{q}")
    if p * q > MAX_ENTRIES:
        raise MatrixFormatError(f"line {lineno}: {p}x{q} exceeds {MAX_ENTRIES} entries")
    if n < MIN_GROUPOID_MODULUS:
        raise ModulusError(f"line {lineno}: modulus must be >= {MIN_GROUPOID_MODULUS}, got {n}")
    body = lines[1:]
    if len(body) != p:
        raise MatrixFormatError(f"expected {p} rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        r = _ints(ln, lineno)
        if len(r) != q:
            raise MatrixFormatError(f"line {lineno}: row length mismatch, expected {q} entries, got {len(r)}")
        rows.append(r)
    return MatZ.from_rows(rows, n)


def serialize_matrix(a: MatZ) -> bytes:
    out = [f"{a.rows} {a.cols} {a.modulus}\n"]
    out.extend(" ".join(map(str, r)) + "\n" for r in a.entries)
    return "".join(out).encode("ascii")


# -- the matrix groupoid as a finite magma ------------------------------------


def state_count(n: int, p: int, q: int) -> int:
    return n ** (p * q)


def element_array(n: int, p: int, q: int) -> np.ndarray:
    """All p x q matrices mod n as an (n**(p*q), p, q) array, lexicographic by row-major entries."""
    m = state_count(n, p, q)
    if m > MAX_STATES:
        raise BoundError(f"{p}x{q} matrices mod {n} give {m} elements, above {MAX_STATES}")
    k = p * q
    idx = np.arange(m, dtype=np.int64)
    digits = (idx[:, None] // n ** np.arange(k - 1, -1, -1, dtype=np.int64)[None, :]) % n
    return digits.reshape(m, p, q)


def encode(arr: np.ndarray, n: int) -> np.ndarray:
    """Inverse of element_array: map (..., p, q) matrices to their element indices."""
    p, q = arr.shape[-2:]
    k = p * q
    weights = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return arr.reshape(*arr.shape[:-2], k).astype(np.int64) @ weights


def decode(index: int, n: int, p: int, q: int) -> MatZ:
    k = p * q
    digits = [(index // n ** (k - 1 - i)) % n for i in range(k)]
    return MatZ(p, q, n, tuple(tuple(digits[i * q:(i + 1) * q]) for i in range(p)))


def matrix_table(g: ParamGroupoid, p: int, q: int) -> np.ndarray:
    """Operation table of the p x q matrix groupoid over element indices."""
    elems = element_array(g.n, p, q)
    prod = (g.t * elems[:, None] + g.u * elems[None, :]) % g.n
    table = encode(prod, g.n)
    table = table.astype(entry_dtype(len(elems)))
    table.flags.writeable = False
    return table


def batch_op(g: ParamGroupoid, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise operation on stacked (..., p, q) matrix arrays."""
    return (g.t * a + g.u * b) % g.n
