import json
import shutil

import pytest

from cyclotome.golden import (
    TABLE_IDS,
    GoldenError,
    default_golden_dir,
    expected_generators,
    load_table,
    render_report,
    verify_table,
)

ROW_COUNTS = {1: 14, 2: 30, 3: 8, 4: 16, 5: 14, 6: 30, 7: 8, 8: 16}


@pytest.mark.parametrize("tid", TABLE_IDS)
def test_tables_load_and_cover_their_family(tid):
    t = load_table(tid)
    assert len(t.rows) == ROW_COUNTS[tid]
    gens = sorted(t.generator(labels) for labels, _ in t.rows)
    assert gens == sorted(expected_generators(t))
    assert all(g.degree == t.n // 2 for g in gens)


@pytest.mark.parametrize("tid", [1, 3, 5, 7])
def test_small_tables_verify(tid):
    rep = verify_table(load_table(tid))
    assert rep.ok, render_report(rep)


def test_table_ids():
    with pytest.raises(ValueError):
        load_table(9)


@pytest.fixture
def golden_copy(tmp_path):
    shutil.copytree(default_golden_dir(), tmp_path / "data")
    return tmp_path / "data"


def test_wrong_distance_is_reported(golden_copy):
    path = golden_copy / "table1.json"
    raw = json.loads(path.read_text())
    raw["rows"][0]["d"] = 3
    path.write_text(json.dumps(raw))
    rep = verify_table(load_table(1, golden_copy))
    assert not rep.ok
    assert [r.labels for r in rep.failures] == [tuple(raw["rows"][0]["g"])]
    assert "FAIL" in render_report(rep)


def test_wrong_factor_is_reported(golden_copy):
    path = golden_copy / "table3.json"
    raw = json.loads(path.read_text())
    raw["factors"]["f21"] = "x^2 + 4"
    path.write_text(json.dumps(raw))
    rep = verify_table(load_table(3, golden_copy))
    assert not rep.ok and any("factor" in i for i in rep.issues)


def test_missing_row_is_reported(golden_copy):
    path = golden_copy / "table5.json"
    raw = json.loads(path.read_text())
    del raw["rows"][-1]
    path.write_text(json.dumps(raw))
    rep = verify_table(load_table(5, golden_copy))
    assert any(i.startswith("missing code") for i in rep.issues)


def test_unreadable_file_names_the_table(golden_copy):
    (golden_copy / "table4.json").write_text("{not json")
    with pytest.raises(GoldenError, match="table 4"):
        load_table(4, golden_copy)
    (golden_copy / "table2.json").unlink()
    with pytest.raises(GoldenError, match="table 2"):
        load_table(2, golden_copy)
