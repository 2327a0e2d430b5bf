"""Sweep every G_n(t, u) over a range of moduli and check the class theorems.

Each assertion is evaluated on every (n, t, u) whose hypothesis applies. The
search verdicts come from agmat.laws; the closed forms from agmat.predicates.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from agmat.errors import BoundError
from agmat.groupoid import ParamGroupoid, cayley_table
from agmat.laws import LAW_NAMES, search
from agmat.modring import is_prime
from agmat.predicates import (
    pred_ag,
    pred_ag_group,
    pred_associative,
    pred_band,
    pred_cancellative,
    pred_commutative,
    pred_T3_l,
    pred_T3_r,
)
from agmat.properties import find_left_identities, is_ag_group

SWEEP_MIN = 3
SWEEP_MAX = 64
DEFAULT_N_MAX = 16


@dataclass(frozen=True)
class Cell:
    """Search verdicts for one groupoid, collected once and shared by all assertions."""

    n: int
    t: int
    u: int
    laws: dict[str, bool]
    ag_group: bool
    identity: int | None
    inverses: list[int] | None
    left_identities: list[int]
    t7_structure: bool

    def __getitem__(self, law: str) -> bool:
        return self.laws[law]

    @property
    def T3(self) -> bool:
        return self.laws["T3_l"] and self.laws["T3_r"]

    @property
    def cancellative(self) -> bool:
        return self.laws["left_cancellative"] and self.laws["right_cancellative"]


def evaluate_cell(n: int, t: int, u: int) -> Cell:
    g = ParamGroupoid(n, t, u)
    tab = cayley_table(g).entries
    laws = {name: search(tab, name) is None for name in LAW_NAMES}
    ok, details = is_ag_group(g)
    # zero is a left identity and x -> -t*x inverts on both sides
    t7 = all(int(tab[0, x]) == x for x in range(n)) and all(
        int(tab[(-t * x) % n, x]) == 0 and int(tab[x, (-t * x) % n]) == 0 for x in range(n)
    )
    return Cell(n, t, u, laws, ok, details["identity"], details["inverses"], find_left_identities(g), t7)


@dataclass(frozen=True)
class Assertion:
    name: str
    description: str
    applies: Callable[[Cell], bool]
    check: Callable[[Cell], bool]


def _t(c: Cell) -> bool:
    return True


ASSERTIONS: tuple[Assertion, ...] = (
    Assertion(
        "T1",
        "t^2 = u  <=>  left invertive",
        _t,
        lambda c: pred_ag(c.n, c.t, c.u) == c["left_invertive"],
    ),
    Assertion(
        "C1",
        "t = u = 1  =>  associative, commutative, AG-group",
        lambda c: c.t == 1 and c.u == 1,
        lambda c: c["associative"] and c["commutative"] and c.ag_group,
    ),
    Assertion(
        "C2",
        "t = u != 0, 1 with t^2 = t  =>  associative and commutative",
        lambda c: c.t == c.u and c.t not in (0, 1) and pred_associative(c.n, c.t, c.u),
        lambda c: c["associative"] and c["commutative"],
    ),
    Assertion(
        "T2",
        "t^2 = u, t = u != 0  =>  T3",
        lambda c: pred_ag(c.n, c.t, c.u) and c.t == c.u != 0,
        lambda c: c.T3,
    ),
    Assertion(
        "T3",
        "t^2 = u, n prime, u != 0  =>  T3",
        lambda c: pred_ag(c.n, c.t, c.u) and is_prime(c.n) and c.u != 0,
        lambda c: c.T3,
    ),
    Assertion(
        "T4",
        "t^2 = u  =>  transitively commutative",
        lambda c: pred_ag(c.n, c.t, c.u),
        lambda c: c["transitively_commutative"],
    ),
    Assertion(
        "T5",
        "t^2 = u, n prime, u != 0  =>  cancellative",
        lambda c: pred_ag(c.n, c.t, c.u) and is_prime(c.n) and c.u != 0,
        lambda c: c.cancellative,
    ),
    Assertion(
        "T6",
        "t^2 = u:  t + u = 1  <=>  idempotent",
        lambda c: pred_ag(c.n, c.t, c.u),
        lambda c: pred_band(c.n, c.t, c.u) == c["idempotent"],
    ),
    Assertion(
        "T7",
        "u = 1, t^2 = 1  =>  AG-group with identity 0 and inverse -t*x",
        lambda c: pred_ag_group(c.n, c.t, c.u),
        lambda c: c.ag_group and c.identity == 0 and c.t7_structure,
    ),
    Assertion(
        "C3",
        "t = n-1, u = 1  =>  AG-group",
        lambda c: c.t == c.n - 1 and c.u == 1,
        lambda c: c.ag_group and c.identity == 0 and c.inverses == [(-(c.n - 1) * x) % c.n for x in range(c.n)],
    ),
    Assertion(
        "D-assoc",
        "t^2 = t, u^2 = u  <=>  associative",
        _t,
        lambda c: pred_associative(c.n, c.t, c.u) == c["associative"],
    ),
    Assertion(
        "D-comm",
        "t = u  <=>  commutative",
        _t,
        lambda c: pred_commutative(c.n, c.t, c.u) == c["commutative"],
    ),
    Assertion(
        "D-T3l",
        "gcd(u, n) | t  <=>  T3_l",
        _t,
        lambda c: pred_T3_l(c.n, c.t, c.u) == c["T3_l"],
    ),
    Assertion(
        "D-T3r",
        "gcd(t, n) | u  <=>  T3_r",
        _t,
        lambda c: pred_T3_r(c.n, c.t, c.u) == c["T3_r"],
    ),
    Assertion(
        "D-canc",
        "gcd(t, n) = gcd(u, n) = 1  <=>  cancellative",
        _t,
        lambda c: pred_cancellative(c.n, c.t, c.u) == c.cancellative,
    ),
    Assertion(
        "D-agroup",
        "u = 1, t^2 = 1  <=>  AG-group",
        _t,
        lambda c: pred_ag_group(c.n, c.t, c.u) == c.ag_group,
    ),
    Assertion(
        "D-lr-canc",
        "t^2 = u:  left cancellative  <=>  right cancellative",
        lambda c: pred_ag(c.n, c.t, c.u),
        lambda c: c["left_cancellative"] == c["right_cancellative"],
    ),
)


@dataclass
class AssertionResult:
    name: str
    description: str
    checked: int = 0
    failures: int = 0
    first_failure: tuple[int, int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class TheoremReport:
    n_lo: int
    n_hi: int
    pairs: int = 0
    results: list[AssertionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> AssertionResult:
        return next(r for r in self.results if r.name == name)

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_lo,
            "n_max": self.n_hi,
            "pairs": self.pairs,
            "passed": self.passed,
            "assertions": [
                {
                    "name": r.name,
                    "description": r.description,
                    "checked": r.checked,
                    "failures": r.failures,
                    "first_failure": None if r.first_failure is None else list(r.first_failure),
                }
                for r in self.results
            ],
        }

    def render(self) -> str:
        lines = [f"theorem sweep n = {self.n_lo}..{self.n_hi}, {self.pairs} (n, t, u) cells"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            tail = "" if r.passed else f"  first failure (n,t,u)={r.first_failure}"
            lines.append(f"{status:4}  {r.name:<9} {r.checked:6d} checked {r.failures:5d} failed  {r.description}{tail}")
        lines.append("all theorem assertions pass" if self.passed else "theorem assertions FAILED")
        return "\n".join(lines) + "\n"


def _modulus_cells(n: int) -> list[Cell]:
    return [evaluate_cell(n, t, u) for t in range(n) for u in range(n)]


def verify_theorems(n_lo: int = SWEEP_MIN, n_hi: int = DEFAULT_N_MAX, workers: int = 1) -> TheoremReport:
    if not SWEEP_MIN <= n_lo <= n_hi <= SWEEP_MAX:
        raise BoundError(f"need {SWEEP_MIN} <= n_min <= n_max <= {SWEEP_MAX}, got {n_lo}..{n_hi}")
    moduli = range(n_lo, n_hi + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_n = list(pool.map(_modulus_cells, moduli))
    else:
        per_n = [_modulus_cells(n) for n in moduli]

    report = TheoremReport(n_lo, n_hi)
    report.results = [AssertionResult(a.name, a.description) for a in ASSERTIONS]
    # cells arrive in (n, t, u) order, so first failures are deterministic
    for cells in per_n:
        for c in cells:
            report.pairs += 1
            for a, r in zip(ASSERTIONS, report.results):
                if not a.applies(c):
                    continue
                r.checked += 1
                if not a.check(c):
                    r.failures += 1
                    if r.first_failure is None:
                        r.first_failure = (c.n, c.t, c.u)
    return report
