import random

import pytest

from agmat import fixtures
from agmat.classify import (
    CSV_HEADER,
    ClassRow,
    ClassTable,
    enumerate_classes,
    export_csv,
    import_csv,
    max_n_from_env,
    render_text,
    table_to_dict,
)
from agmat.errors import BoundError
from agmat.groupoid import TYPE_TAGS


@pytest.mark.parametrize(
    "n, ag",
    [
        (3, {(1, 1), (2, 1)}),
        (4, {(1, 1), (2, 0), (3, 1)}),
        (5, {(1, 1), (2, 4), (3, 4), (4, 1)}),
        (6, {(1, 1), (2, 4), (3, 3), (4, 4), (5, 1)}),
    ],
)
def test_enumeration_ag_sets(n, ag):
    assert enumerate_classes(n).ag_pairs() == ag


def test_distinct_nonzero_subset_for_five():
    t = enumerate_classes(5)
    assert {p for p in t.ag_pairs() if p[0] != p[1] and 0 not in p} == {(2, 4), (3, 4), (4, 1)}


def test_row_counts():
    for n in (3, 7, 10):
        assert len(enumerate_classes(n).rows) == n * n - 1
        assert len(enumerate_classes(n, include_degenerate=True).rows) == n * n


def test_rows_sorted():
    rows = enumerate_classes(7, include_degenerate=True).rows
    assert [(r.t, r.u) for r in rows] == sorted((r.t, r.u) for r in rows)


def test_every_example_pair_is_ag():
    for c in fixtures.example_claims():
        row = enumerate_classes(c.n).row(c.t, c.u)
        assert row.is_ag, c
        assert row.paper_listed is not None


def test_listed_names():
    assert fixtures.listed_in(3, 2, 1) == "Example-3"
    assert fixtures.listed_in(8, 6, 4) == "Example-2"
    assert fixtures.listed_in(7, 5, 4) == "Example-9"
    assert fixtures.listed_in(7, 1, 1) is None


def test_gcd_mismatch_flags():
    flagged = set()
    for n in (5, 6, 8):
        flagged |= enumerate_classes(n).flagged()
    assert flagged == {(5, 2, 4), (6, 2, 4), (8, 6, 4)}


def test_readings_of_mismatched_pairs():
    assert fixtures.readings(5, 2, 4) == {"with_gcd": "Other", "without_gcd": "TypeI"}
    assert fixtures.readings(5, 3, 4) == {"with_gcd": "TypeI", "without_gcd": "TypeI"}


def test_csv_row_for_three_two_one():
    lines = export_csv(enumerate_classes(3)).decode().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    row = next(ln for ln in lines if ln.startswith("3,2,1,"))
    # G_3(2,1) = G_n(n-1, 1) is an AG-group: identity 0, inverse x -> x
    assert row == "3,2,1,TypeI,true,false,true,true,true,false,false,Example-3"


def test_csv_empty_table():
    assert export_csv(ClassTable(5, ())) == (",".join(CSV_HEADER) + "\n").encode()


def test_csv_line_endings():
    data = export_csv(enumerate_classes(4))
    assert b"\r" not in data and data.endswith(b"\n")


def test_csv_round_trip_enumeration():
    for n in (3, 8, 12):
        t = enumerate_classes(n)
        back = import_csv(export_csv(t))
        assert back.n == n
        assert export_csv(back) == export_csv(t)


def _random_table(rnd):
    n = rnd.randint(3, 300)
    rows = []
    for _ in range(rnd.randint(1, 12)):
        rows.append(
            ClassRow(
                rnd.randrange(n),
                rnd.randrange(n),
                rnd.choice(TYPE_TAGS),
                *(rnd.random() < 0.5 for _ in range(7)),
                paper_listed=rnd.choice([None, "Example-3", "Example-10", "x,y \"q\""]),
            )
        )
    return ClassTable(n, tuple(rows))


def test_csv_round_trip_random():
    rnd = random.Random(99)
    for _ in range(300):
        t = _random_table(rnd)
        assert import_csv(export_csv(t)) == t


def test_import_rejects_bad_input():
    with pytest.raises(ValueError):
        import_csv(b"a,b\n1,2\n")
    with pytest.raises(ValueError):
        import_csv(",".join(CSV_HEADER) + "\n3,1,1,TypeII,maybe,false,false,false,false,false,false,\n")


def test_bounds():
    with pytest.raises(BoundError):
        enumerate_classes(2)
    with pytest.raises(BoundError):
        enumerate_classes(300)
    with pytest.raises(BoundError):
        enumerate_classes(20, max_n=10)


def test_large_modulus_uses_closed_forms():
    t = enumerate_classes(70)
    methods = [r.method for r in t.rows]
    assert methods.count("both") == 32
    assert set(methods) == {"both", "closed_form"}
    assert t.ag_pairs() == {(x, (x * x) % 70) for x in range(1, 70)}


def test_workers_same_rows():
    assert enumerate_classes(9, workers=3) == enumerate_classes(9)


def test_env_override(monkeypatch):
    monkeypatch.setenv("AGMAT_MAX_N", "40")
    assert max_n_from_env() == 40
    monkeypatch.setenv("AGMAT_MAX_N", "lots")
    with pytest.raises(BoundError):
        max_n_from_env()
    monkeypatch.delenv("AGMAT_MAX_N")
    assert max_n_from_env() == 256


def test_json_and_text_views():
    t = enumerate_classes(5)
    d = table_to_dict(t)
    row = next(r for r in d["rows"] if (r["t"], r["u"]) == (2, 4))
    assert row["type"] == "Other" and row["note"] == "gcd_mismatch" and row["paper_listed"] == "Example-5"
    assert "gcd_mismatch" in render_text(t)
