"""Property checkers for G_n(t, u) and the per-groupoid property report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from agmat import matrix as mx
from agmat.errors import InconsistencyError
from agmat.groupoid import CayleyTable, ParamGroupoid, TypeClass, cayley_table, classify_type
from agmat.laws import LAW_NAMES, LAWS, Witness, recheck, sample_search, search
from agmat.predicates import LAW_PREDICATES, pred_ag_group

DEFAULT_SEED = 20_250_917
SPOT_CHECK_SAMPLES = 1000
# Triple budget above which matrix-groupoid checks sample instead of exhausting.
TRIPLE_BUDGET = 10**6

Checkable = Union[ParamGroupoid, CayleyTable]
Result = tuple[bool, Union[Witness, None]]


def _entries(g: Checkable) -> np.ndarray:
    if isinstance(g, CayleyTable):
        return g.entries
    return cayley_table(g).entries


def _check(g: Checkable, law: str) -> Result:
    w = search(_entries(g), law)
    return w is None, w


def is_left_invertive(g: Checkable) -> Result:
    """(a*b)*c == (c*b)*a for all a, b, c."""
    return _check(g, "left_invertive")


def is_associative(g: Checkable) -> Result:
    return _check(g, "associative")


def is_commutative(g: Checkable) -> Result:
    return _check(g, "commutative")


def is_ag_band(g: Checkable) -> Result:
    """Every element is idempotent, a*a == a."""
    return _check(g, "idempotent")


def is_T3_l(g: Checkable) -> Result:
    return _check(g, "T3_l")


def is_T3_r(g: Checkable) -> Result:
    return _check(g, "T3_r")


def is_T3(g: Checkable) -> Result:
    ok, w = is_T3_l(g)
    return is_T3_r(g) if ok else (ok, w)


def is_transitively_commutative(g: Checkable) -> Result:
    return _check(g, "transitively_commutative")


def is_left_cancellative(g: Checkable) -> Result:
    return _check(g, "left_cancellative")


def is_right_cancellative(g: Checkable) -> Result:
    return _check(g, "right_cancellative")


def is_cancellative(g: Checkable) -> Result:
    ok, w = is_left_cancellative(g)
    return is_right_cancellative(g) if ok else (ok, w)


def find_left_identities(g: Checkable) -> list[int]:
    tab = _entries(g)
    ar = np.arange(tab.shape[0])
    return [int(e) for e in np.flatnonzero((tab == ar[None, :]).all(axis=1))]


def is_ag_group(g: Checkable) -> tuple[bool, dict]:
    """Left invertive, with a left identity e and two-sided inverses y*x = x*y = e.

    ``details`` holds the identity and the inverse map. For G_n(t, 1) with
    t^2 = 1 the map is x -> -t*x, and it is confirmed against the table.
    """
    tab = _entries(g)
    details: dict = {"identity": None, "inverses": None, "closed_form_inverse": False}
    if not is_left_invertive(g)[0]:
        return False, details
    for e in find_left_identities(g):
        inv = (tab == e) & (tab.T == e)
        if not inv.any(axis=1).all():
            continue
        details["identity"] = e
        inverses = [int(y) for y in inv.argmax(axis=1)]
        grp = g.groupoid if isinstance(g, CayleyTable) else g
        if pred_ag_group(grp.n, grp.t, grp.u):
            closed = [(-grp.t * x) % grp.n for x in range(grp.n)]
            if not all(inv[x, y] for x, y in enumerate(closed)):
                raise InconsistencyError(f"{grp}: -t*x is not an inverse map")
            inverses = closed
            details["closed_form_inverse"] = True
        details["inverses"] = inverses
        return True, details
    return False, details


# -- report --------------------------------------------------------------------

# Reported properties: the nine searched laws plus the composite classes.
COMPOSITES = {
    "ag": ("left_invertive",),
    "ag_band": ("left_invertive", "idempotent"),
    "T3": ("T3_l", "T3_r"),
    "cancellative": ("left_cancellative", "right_cancellative"),
}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    method: str  # "oracle", "closed_form" or "both"
    witness: Witness | None = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass
class PropertyReport:
    groupoid: ParamGroupoid
    type_class: TypeClass
    verdicts: dict[str, Verdict]
    left_identities: list[int]
    ag_group: bool
    ag_group_details: dict
    matrix: dict | None = field(default=None)

    def holds(self, name: str) -> bool:
        return self.verdicts[name].holds

    def witnesses(self) -> list[Witness]:
        return [v.witness for v in self.verdicts.values() if v.witness is not None]

    def to_dict(self) -> dict:
        g = self.groupoid
        out = {
            "n": g.n,
            "t": g.t,
            "u": g.u,
            "type": self.type_class.tag,
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
            "left_identities": list(self.left_identities),
            "ag_group": self.ag_group,
            "ag_group_identity": self.ag_group_details.get("identity"),
            "ag_group_inverses": self.ag_group_details.get("inverses"),
        }
        if self.matrix is not None:
            out["matrix"] = self.matrix
        return out


def law_verdicts(g: ParamGroupoid) -> dict[str, Verdict]:
    """Search every law and compare with its closed form; raise on disagreement."""
    tab = cayley_table(g).entries
    out = {}
    for name in LAW_NAMES:
        w = search(tab, name)
        closed = LAW_PREDICATES[name](g.n, g.t, g.u)
        if closed != (w is None):
            raise InconsistencyError(f"{g} {name}: search says {w is None}, closed form says {closed}; witness {w}")
        out[name] = Verdict(w is None, "both", w)
    return out


def property_report(
    g: ParamGroupoid,
    shape: tuple[int, int] | None = None,
    seed: int = DEFAULT_SEED,
) -> PropertyReport:
    verdicts = law_verdicts(g)
    for name, parts in COMPOSITES.items():
        failed = [verdicts[p] for p in parts if not verdicts[p].holds]
        verdicts[name] = Verdict(not failed, "both", failed[0].witness if failed else None)
    ok, details = is_ag_group(g)
    if ok != pred_ag_group(g.n, g.t, g.u):
        raise InconsistencyError(f"{g} ag_group: search says {ok}, closed form disagrees")
    verdicts["ag_group"] = Verdict(ok, "both", None)
    report = PropertyReport(
        groupoid=g,
        type_class=classify_type(g),
        verdicts=verdicts,
        left_identities=find_left_identities(g),
        ag_group=ok,
        ag_group_details=details,
    )
    if shape is not None:
        report.matrix = matrix_spot_check(g, *shape, verdicts=verdicts, seed=seed)
    return report


# -- matrix groupoids ----------------------------------------------------------


def lift_witness(w: Witness, n: int, p: int, q: int) -> Witness:
    """Carry a scalar witness to constant p x q matrices (element indices)."""
    ones = sum(n**i for i in range(p * q))
    return Witness(w.law, tuple(e * ones for e in w.elements), w.lhs * ones, w.rhs * ones)


def matrix_recheck(w: Witness, g: ParamGroupoid, p: int, q: int) -> bool:
    """Re-evaluate a matrix-groupoid witness with mat_op on decoded matrices."""
    return recheck(w, lambda a, b: mx.mat_op(g, a, b), lambda i: mx.decode(i, g.n, p, q))


@dataclass(frozen=True)
class MatrixVerdict:
    holds: bool
    exhaustive: bool
    witness: Witness | None


def matrix_verdicts(
    g: ParamGroupoid,
    p: int,
    q: int,
    seed: int = DEFAULT_SEED,
    budget: int = TRIPLE_BUDGET,
) -> dict[str, MatrixVerdict]:
    """Check all nine laws on the full p x q matrix groupoid.

    Laws of arity <= 2 and cancellation are always exhaustive. Three-variable
    laws are exhaustive when the element count cubed fits ``budget`` and
    otherwise sampled with ``budget`` draws from a generator seeded by ``seed``.
    """
    tab = mx.matrix_table(g, p, q)
    m = tab.shape[0]
    rng = np.random.default_rng([seed, g.n, g.t, g.u, p, q])
    out = {}
    for name in LAW_NAMES:
        small = LAWS[name].arity < 3 or "cancellative" in name or m**3 <= budget
        w = search(tab, name) if small else sample_search(tab, name, budget, rng)
        out[name] = MatrixVerdict(w is None, small, w)
    return out


def matrix_spot_check(
    g: ParamGroupoid,
    p: int,
    q: int,
    verdicts: dict[str, Verdict] | None = None,
    seed: int = DEFAULT_SEED,
    samples: int = SPOT_CHECK_SAMPLES,
) -> dict:
    """Randomized matrix-level confirmation of the scalar verdicts.

    Checks the entrywise definition on random pairs, then for each law either
    finds no violation among random matrix tuples (scalar law holds) or
    confirms the scalar witness lifted to constant matrices (scalar law fails).
    """
    if p < 1 or q < 1:
        raise ValueError(f"matrix shape must be positive, got {p}x{q}")
    if verdicts is None:
        verdicts = law_verdicts(g)
    rng = np.random.default_rng([seed, g.n, g.t, g.u, p, q])
    tab = cayley_table(g).entries
    a = rng.integers(0, g.n, size=(samples, p, q))
    b = rng.integers(0, g.n, size=(samples, p, q))
    if not np.array_equal(mx.batch_op(g, a, b), tab[a, b]):
        raise InconsistencyError(f"{g}: entrywise matrix operation disagrees with the scalar table")

    def mul(x, y):
        return mx.batch_op(g, x, y)

    def eq(x, y):
        return np.all(x == y, axis=(-2, -1))

    laws = {}
    for name in LAW_NAMES:
        v = verdicts[name]
        if v.holds:
            xs = rng.integers(0, g.n, size=(LAWS[name].arity, samples, p, q))
            viol = np.broadcast_to(LAWS[name].fn(mul, eq, *xs)[0], (samples,))
            if viol.any():
                raise InconsistencyError(f"{g} {name}: holds on residues but fails on {p}x{q} matrices")
            laws[name] = {"holds": True, "samples": samples}
        else:
            w = v.witness
            if not matrix_recheck(lift_witness(w, g.n, p, q), g, p, q):
                raise InconsistencyError(f"{g} {name}: scalar witness does not lift to {p}x{q} matrices")
            laws[name] = {"holds": False, "lifted_witness": list(w.elements)}
    return {"shape": f"{p}x{q}", "seed": seed, "laws": laws}
