"""Classification of every (t, u) pair for a modulus, with CSV/JSON/text output."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from agmat import fixtures
from agmat.errors import BoundError, InconsistencyError
from agmat.groupoid import MIN_GROUPOID_MODULUS, ParamGroupoid, classify_type
from agmat.predicates import (
    pred_ag,
    pred_ag_group,
    pred_associative,
    pred_band,
    pred_cancellative,
    pred_commutative,
    pred_T3,
)
from agmat.properties import DEFAULT_SEED, is_ag_group, law_verdicts

DEFAULT_MAX_N = 256
# Above this modulus rows come from closed forms, spot-confirmed by search.
ORACLE_LIMIT = 64
CONFIRM_SAMPLES = 32

CSV_HEADER = (
    "n",
    "t",
    "u",
    "type",
    "is_ag",
    "is_band",
    "is_ag_group",
    "is_T3",
    "is_cancellative",
    "is_assoc",
    "is_comm",
    "paper_listed",
)


def max_n_from_env(default: int = DEFAULT_MAX_N) -> int:
    raw = os.environ.get("AGMAT_MAX_N")
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise BoundError(f"AGMAT_MAX_N must be an integer, got {raw!r}") from None
    if value < MIN_GROUPOID_MODULUS:
        raise BoundError(f"AGMAT_MAX_N must be >= {MIN_GROUPOID_MODULUS}, got {value}")
    return value


@dataclass(frozen=True)
class ClassRow:
    t: int
    u: int
    type_tag: str
    is_ag: bool
    is_band: bool
    is_ag_group: bool
    is_T3: bool
    is_cancellative: bool
    is_assoc: bool
    is_comm: bool
    paper_listed: str | None = None
    note: str | None = None
    method: str = "both"


@dataclass(frozen=True)
class ClassTable:
    n: int
    rows: tuple[ClassRow, ...]

    def ag_pairs(self) -> set[tuple[int, int]]:
        return {(r.t, r.u) for r in self.rows if r.is_ag and r.type_tag != "Degenerate"}

    def row(self, t: int, u: int) -> ClassRow:
        return next(r for r in self.rows if (r.t, r.u) == (t, u))

    def flagged(self) -> set[tuple[int, int, int]]:
        return {(self.n, r.t, r.u) for r in self.rows if r.note == "gcd_mismatch"}


def _annotations(n: int, t: int, u: int) -> tuple[str | None, str | None]:
    note = "gcd_mismatch" if fixtures.gcd_mismatch(n, t, u) else None
    return fixtures.listed_in(n, t, u), note


def _searched_row(g: ParamGroupoid) -> ClassRow:
    v = law_verdicts(g)  # raises if any closed form disagrees
    ok, _ = is_ag_group(g)
    if ok != pred_ag_group(g.n, g.t, g.u):
        raise InconsistencyError(f"{g} ag_group: search says {ok}, closed form disagrees")
    listed, note = _annotations(g.n, g.t, g.u)
    return ClassRow(
        t=g.t,
        u=g.u,
        type_tag=classify_type(g).tag,
        is_ag=v["left_invertive"].holds,
        is_band=v["idempotent"].holds,
        is_ag_group=ok,
        is_T3=v["T3_l"].holds and v["T3_r"].holds,
        is_cancellative=v["left_cancellative"].holds and v["right_cancellative"].holds,
        is_assoc=v["associative"].holds,
        is_comm=v["commutative"].holds,
        paper_listed=listed,
        note=note,
        method="both",
    )


def _closed_row(g: ParamGroupoid) -> ClassRow:
    n, t, u = g.n, g.t, g.u
    listed, note = _annotations(n, t, u)
    return ClassRow(
        t=t,
        u=u,
        type_tag=classify_type(g).tag,
        is_ag=pred_ag(n, t, u),
        is_band=pred_band(n, t, u),
        is_ag_group=pred_ag_group(n, t, u),
        is_T3=pred_T3(n, t, u),
        is_cancellative=pred_cancellative(n, t, u),
        is_assoc=pred_associative(n, t, u),
        is_comm=pred_commutative(n, t, u),
        paper_listed=listed,
        note=note,
        method="closed_form",
    )


def enumerate_classes(
    n: int,
    include_degenerate: bool = False,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
    seed: int = DEFAULT_SEED,
) -> ClassTable:
    """One row per (t, u), sorted; (0, 0) only when ``include_degenerate``.

    Up to ORACLE_LIMIT every row is decided by exhaustive search and checked
    against the closed forms. Beyond it rows use the closed forms and a seeded
    sample of CONFIRM_SAMPLES pairs is confirmed by search.
    """
    if not MIN_GROUPOID_MODULUS <= n <= max_n:
        raise BoundError(f"n must be in [{MIN_GROUPOID_MODULUS}, {max_n}], got {n}")
    groupoids = [
        ParamGroupoid(n, t, u)
        for t in range(n)
        for u in range(n)
        if include_degenerate or (t, u) != (0, 0)
    ]
    if n <= ORACLE_LIMIT:
        confirm = set(range(len(groupoids)))
    else:
        rng = np.random.default_rng([seed, n])
        confirm = set(rng.choice(len(groupoids), size=min(CONFIRM_SAMPLES, len(groupoids)), replace=False).tolist())

    def build(i: int) -> ClassRow:
        g = groupoids[i]
        if i not in confirm:
            return _closed_row(g)
        row = _searched_row(g)
        if n > ORACLE_LIMIT and asdict(row) | {"method": ""} != asdict(_closed_row(g)) | {"method": ""}:
            raise InconsistencyError(f"{g}: sampled search row disagrees with closed forms")
        return row

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(build, range(len(groupoids))))
    else:
        rows = tuple(build(i) for i in range(len(groupoids)))
    return ClassTable(n, rows)


# -- serialization ---------------------------------------------------------------


def _b(x: bool) -> str:
    return "true" if x else "false"


def _csv_record(n: int, r: ClassRow) -> list[str]:
    return [
        str(n),
        str(r.t),
        str(r.u),
        r.type_tag,
        _b(r.is_ag),
        _b(r.is_band),
        _b(r.is_ag_group),
        _b(r.is_T3),
        _b(r.is_cancellative),
        _b(r.is_assoc),
        _b(r.is_comm),
        r.paper_listed or "",
    ]


def export_csv(table: ClassTable) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in table.rows:
        w.writerow(_csv_record(table.n, r))
    return buf.getvalue().encode("utf-8")


def _parse_bool(s: str) -> bool:
    if s == "true":
        return True
    if s == "false":
        return False
    raise ValueError(f"expected true/false, got {s!r}")


def import_csv(data: bytes | str) -> ClassTable:
    """Inverse of export_csv. ``note`` and ``method`` are not part of the CSV and come back as defaults."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    reader = csv.reader(io.StringIO(data))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    n = None
    rows = []
    for rec in reader:
        if len(rec) != len(CSV_HEADER):
            raise ValueError(f"CSV row has {len(rec)} fields, expected {len(CSV_HEADER)}")
        rn = int(rec[0])
        if n is None:
            n = rn
        elif rn != n:
            raise ValueError(f"mixed moduli in one table: {n} and {rn}")
        rows.append(
            ClassRow(
                t=int(rec[1]),
                u=int(rec[2]),
                type_tag=rec[3],
                is_ag=_parse_bool(rec[4]),
                is_band=_parse_bool(rec[5]),
                is_ag_group=_parse_bool(rec[6]),
                is_T3=_parse_bool(rec[7]),
                is_cancellative=_parse_bool(rec[8]),
                is_assoc=_parse_bool(rec[9]),
                is_comm=_parse_bool(rec[10]),
                paper_listed=rec[11] or None,
            )
        )
    if n is None:
        raise ValueError("CSV has no rows; the modulus cannot be recovered")
    return ClassTable(n, tuple(rows))


def table_to_dict(table: ClassTable) -> dict:
    names = [f.name for f in fields(ClassRow)]
    return {
        "n": table.n,
        "rows": [
            {"n": table.n, **{("type" if k == "type_tag" else k): getattr(r, k) for k in names}}
            for r in table.rows
        ],
    }


def render_text(table: ClassTable) -> str:
    head = ("t", "u", "type", "ag", "band", "agrp", "T3", "canc", "assoc", "comm", "listed", "note")
    widths = (4, 4, 10, 5, 5, 5, 5, 5, 5, 5, 10, 0)
    lines = [f"classification of G_{table.n}(t,u): {len(table.rows)} pairs, {len(table.ag_pairs())} AG", head]
    for r in table.rows:
        flags = (r.is_ag, r.is_band, r.is_ag_group, r.is_T3, r.is_cancellative, r.is_assoc, r.is_comm)
        lines.append((r.t, r.u, r.type_tag, *("yes" if f else "-" for f in flags), r.paper_listed or "", r.note or ""))
    out = [lines[0]]
    for cells in lines[1:]:
        out.append(" ".join(f"{c!s:<{w}}" for c, w in zip(cells, widths)).rstrip())
    return "\n".join(out) + "\n"
