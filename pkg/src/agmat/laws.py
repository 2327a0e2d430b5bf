"""Laws checked against a finite magma, and the counterexample search.

A law is a function ``fn(mul, eq, *xs) -> (violation, lhs, rhs)``. ``mul`` and
``eq`` are elementwise, so the same definition evaluates a whole grid of
operation-table indices at once or a stack of sampled matrices. Implication
laws report a violation only where the hypothesis holds; vacuous truth counts
as holding.

Searches return the lexicographically first violating tuple, so results do not
depend on chunking or thread count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

# Elements evaluated per numpy block in the exhaustive sweep.
BLOCK = 1 << 21


def _left_invertive(mul, eq, a, b, c):
    lhs, rhs = mul(mul(a, b), c), mul(mul(c, b), a)
    return ~eq(lhs, rhs), lhs, rhs


def _associative(mul, eq, a, b, c):
    lhs, rhs = mul(mul(a, b), c), mul(a, mul(b, c))
    return ~eq(lhs, rhs), lhs, rhs


def _commutative(mul, eq, a, b):
    lhs, rhs = mul(a, b), mul(b, a)
    return ~eq(lhs, rhs), lhs, rhs


def _idempotent(mul, eq, a):
    lhs = mul(a, a)
    return ~eq(lhs, a), lhs, a


def _t3_left(mul, eq, a, b, c):
    # a*b = a*c  =>  b*a = c*a
    lhs, rhs = mul(b, a), mul(c, a)
    return eq(mul(a, b), mul(a, c)) & ~eq(lhs, rhs), lhs, rhs


def _t3_right(mul, eq, a, b, c):
    # b*a = c*a  =>  a*b = a*c
    lhs, rhs = mul(a, b), mul(a, c)
    return eq(mul(b, a), mul(c, a)) & ~eq(lhs, rhs), lhs, rhs


def _transitively_commutative(mul, eq, a, b, c):
    lhs, rhs = mul(a, c), mul(c, a)
    hyp = eq(mul(a, b), mul(b, a)) & eq(mul(b, c), mul(c, b))
    return hyp & ~eq(lhs, rhs), lhs, rhs


def _left_cancellative(mul, eq, a, x, y):
    return eq(mul(a, x), mul(a, y)) & ~eq(x, y), x, y


def _right_cancellative(mul, eq, a, x, y):
    return eq(mul(x, a), mul(y, a)) & ~eq(x, y), x, y


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    fn: Callable[..., tuple[Any, Any, Any]]


LAWS: dict[str, Law] = {
    law.name: law
    for law in (
        Law("left_invertive", 3, _left_invertive),
        Law("associative", 3, _associative),
        Law("commutative", 2, _commutative),
        Law("idempotent", 1, _idempotent),
        Law("T3_l", 3, _t3_left),
        Law("T3_r", 3, _t3_right),
        Law("transitively_commutative", 3, _transitively_commutative),
        Law("left_cancellative", 3, _left_cancellative),
        Law("right_cancellative", 3, _right_cancellative),
    )
}
LAW_NAMES = tuple(LAWS)


@dataclass(frozen=True)
class Witness:
    """Elements at which ``law`` fails, with the two sides that differ.

    For cancellation laws the sides are the two elements forced equal.
    """

    law: str
    elements: tuple[int, ...]
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {"law": self.law, "elements": list(self.elements), "lhs": self.lhs, "rhs": self.rhs}


def _first_violation(law: Law, viol, lhs, rhs, offset: int, grid_shape) -> Witness | None:
    viol = np.broadcast_to(viol, grid_shape)
    hits = np.flatnonzero(viol)
    if hits.size == 0:
        return None
    pos = np.unravel_index(int(hits[0]), grid_shape)
    elems = (int(pos[0]) + offset,) + tuple(int(i) for i in pos[1:])
    lhs = int(np.broadcast_to(lhs, grid_shape)[pos])
    rhs = int(np.broadcast_to(rhs, grid_shape)[pos])
    return Witness(law.name, elems, lhs, rhs)


def _first_duplicate(lines: np.ndarray, m: int) -> tuple[int, int, int] | None:
    """First (a, x, y) with lines[a, x] == lines[a, y] and x < y, or None."""
    ar = np.arange(m)
    ok = (np.sort(lines, axis=1) == ar).all(axis=1)
    if ok.all():
        return None
    a = int(np.flatnonzero(~ok)[0])
    row = lines[a].astype(np.int64)
    counts = np.bincount(row, minlength=m)
    x = int(np.flatnonzero(counts[row] > 1)[0])
    y = int(np.flatnonzero(row == row[x])[1])
    return a, x, y


def search(table: np.ndarray, name: str) -> Witness | None:
    """Exhaustively search a square operation table for a violation of law ``name``."""
    law = LAWS[name]
    m = table.shape[0]
    # cancellation holds iff every row (column) is a permutation
    if name == "left_cancellative":
        hit = _first_duplicate(table, m)
        return None if hit is None else Witness(name, hit, hit[1], hit[2])
    if name == "right_cancellative":
        hit = _first_duplicate(table.T, m)
        return None if hit is None else Witness(name, hit, hit[1], hit[2])

    def mul(x, y):
        return table[x, y]

    ar = np.arange(m)
    if law.arity == 1:
        return _first_violation(law, *law.fn(mul, np.equal, ar), 0, (m,))
    if law.arity == 2:
        return _first_violation(law, *law.fn(mul, np.equal, ar[:, None], ar[None, :]), 0, (m, m))
    step = max(1, BLOCK // (m * m))
    b, c = ar[None, :, None], ar[None, None, :]
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        a = ar[lo:hi, None, None]
        w = _first_violation(law, *law.fn(mul, np.equal, a, b, c), lo, (hi - lo, m, m))
        if w is not None:
            return w
    return None


def sample_search(table: np.ndarray, name: str, samples: int, rng: np.random.Generator) -> Witness | None:
    """Search ``samples`` uniformly drawn tuples; first violation in draw order."""
    law = LAWS[name]
    m = table.shape[0]

    def mul(x, y):
        return table[x, y]

    done = 0
    while done < samples:
        k = min(samples - done, BLOCK)
        xs = rng.integers(0, m, size=(law.arity, k))
        viol, lhs, rhs = law.fn(mul, np.equal, *xs)
        viol = np.broadcast_to(viol, (k,))
        hits = np.flatnonzero(viol)
        if hits.size:
            i = int(hits[0])
            return Witness(
                name,
                tuple(int(x[i]) for x in xs),
                int(np.broadcast_to(lhs, (k,))[i]),
                int(np.broadcast_to(rhs, (k,))[i]),
            )
        done += k
    return None


# -- independent re-evaluation -------------------------------------------------
# Plain-Python restatements of the laws. They take a scalar ``mul`` and do not
# touch any operation table, so they certify witnesses by a separate route.

_RAW: dict[str, Callable[..., tuple[bool, Any, Any]]] = {
    "left_invertive": lambda m, a, b, c: (True, m(m(a, b), c), m(m(c, b), a)),
    "associative": lambda m, a, b, c: (True, m(m(a, b), c), m(a, m(b, c))),
    "commutative": lambda m, a, b: (True, m(a, b), m(b, a)),
    "idempotent": lambda m, a: (True, m(a, a), a),
    "T3_l": lambda m, a, b, c: (m(a, b) == m(a, c), m(b, a), m(c, a)),
    "T3_r": lambda m, a, b, c: (m(b, a) == m(c, a), m(a, b), m(a, c)),
    "transitively_commutative": lambda m, a, b, c: (
        m(a, b) == m(b, a) and m(b, c) == m(c, b),
        m(a, c),
        m(c, a),
    ),
    "left_cancellative": lambda m, a, x, y: (m(a, x) == m(a, y), x, y),
    "right_cancellative": lambda m, a, x, y: (m(x, a) == m(y, a), x, y),
}


def recheck(w: Witness, mul: Callable[[Any, Any], Any], value: Callable[[int], Any] = lambda i: i) -> bool:
    """True iff ``w`` is a genuine violation under ``mul``.

    ``value`` maps the witness's element indices to operands of ``mul``
    (identity for residues; index-to-matrix decoding for matrix groupoids).
    """
    args = [value(e) for e in w.elements]
    hyp, lhs, rhs = _RAW[w.law](mul, *args)
    return bool(hyp) and lhs != rhs and lhs == value(w.lhs) and rhs == value(w.rhs)
