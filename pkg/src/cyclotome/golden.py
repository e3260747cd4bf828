"""Reference code tables stored as data, and their recomputation.

Each ``data/tableN.json`` holds a label -> polynomial dictionary and rows of
(label multiset, expected minimum distance).  Matching against recomputed
codes goes through polynomial values, so the labels themselves never matter.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from importlib import resources
from operator import mul
from pathlib import Path

from .codes import DEFAULT_BUDGET, compute_distances, from_generator
from .cyclotomy import enumerate_construction, enumerate_half_dim_codes
from .factor import check_irreducible, factor_xn_minus_1
from .gf import PrimeField
from .poly import Polynomial

TABLE_IDS = tuple(range(1, 9))


class GoldenError(ValueError):
    """A golden data file is missing or malformed."""


@dataclass(frozen=True)
class GoldenTable:
    id: int
    caption: str
    n: int
    q: int
    kind: str  # "all" or "construction"
    construction: dict | None
    factors: dict  # label -> Polynomial
    rows: tuple  # (labels tuple, expected d)

    @property
    def e(self) -> int:
        return self.n.bit_length() - 1

    def generator(self, labels) -> Polynomial:
        F = PrimeField(self.q)
        return reduce(mul, (self.factors[x] for x in labels), Polynomial.one(F))


@dataclass
class RowResult:
    labels: tuple
    generator: Polynomial
    expected: int
    computed: int | None

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


@dataclass
class TableReport:
    table: GoldenTable
    method: str
    rows: list = field(default_factory=list)
    issues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues and all(r.ok for r in self.rows)

    @property
    def failures(self) -> list:
        return [r for r in self.rows if not r.ok]


def default_golden_dir() -> Path:
    return Path(str(resources.files("cyclotome") / "data"))


def load_table(table_id: int, directory=None) -> GoldenTable:
    if table_id not in TABLE_IDS:
        raise ValueError(f"table id must be in 1..8, got {table_id}")
    path = Path(directory or default_golden_dir()) / f"table{table_id}.json"
    try:
        raw = json.loads(path.read_text())
        n, q = int(raw["n"]), int(raw["q"])
        F = PrimeField(q)
        factors = {lab: Polynomial.parse(F, txt) for lab, txt in raw["factors"].items()}
        rows = tuple((tuple(r["g"]), int(r["d"])) for r in raw["rows"])
        table = GoldenTable(
            id=int(raw["id"]),
            caption=raw["caption"],
            n=n,
            q=q,
            kind=raw["kind"],
            construction=raw.get("construction"),
            factors=factors,
            rows=rows,
        )
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise GoldenError(f"table {table_id}: cannot load {path.name}: {exc}") from exc
    if table.id != table_id:
        raise GoldenError(f"table {table_id}: file declares id {table.id}")
    for labels, _ in rows:
        unknown = [x for x in labels if x not in factors]
        if unknown:
            raise GoldenError(f"table {table_id}: unknown factor labels {unknown}")
    return table


def default_method(table: GoldenTable, budget: int = DEFAULT_BUDGET) -> str:
    """Brute force when the message space fits the budget, else the support search."""
    return "bruteforce" if table.q ** (table.n // 2) <= budget else "support"


def expected_generators(table: GoldenTable) -> list:
    """Generators of the code family a table claims to list, recomputed from scratch."""
    if table.kind == "all":
        codes = enumerate_half_dim_codes(table.e, table.q)
    elif table.kind == "construction":
        c = table.construction
        codes = enumerate_construction(c["construction"], c["e"], table.q, c["s"])
    else:
        raise GoldenError(f"table {table.id}: unknown kind {table.kind!r}")
    return [c.generator for c in codes]


def verify_table(table: GoldenTable, method: str | None = None, budget: int = DEFAULT_BUDGET,
                 threads: int = 1) -> TableReport:
    method = method or default_method(table, budget)
    report = TableReport(table, method)

    fac = factor_xn_minus_1(table.n, table.q)
    given = sorted(table.factors.values(), key=Polynomial.sort_key)
    if given != fac.multiset():
        report.issues.append("factor dictionary differs from the factorization of x^n - 1")
    for lab, f in table.factors.items():
        if not f.is_monic() or not check_irreducible(f):
            report.issues.append(f"factor {lab} = {f} is not monic irreducible")

    gens = [table.generator(labels) for labels, _ in table.rows]
    want = Counter(expected_generators(table))
    have = Counter(gens)
    for g in sorted(want - have, key=Polynomial.sort_key):
        report.issues.append(f"missing code with generator {g}")
    for g in sorted(have - want, key=Polynomial.sort_key):
        report.issues.append(f"unexpected row with generator {g}")

    codes, keep = [], []
    for (labels, d), g in zip(table.rows, gens):
        try:
            codes.append(from_generator(g, table.n, table.q))
            keep.append((labels, g, d))
        except ValueError as exc:
            report.issues.append(f"row {' '.join(labels)}: {exc}")
            report.rows.append(RowResult(labels, g, d, None))
    dists = compute_distances(codes, method, budget, threads)
    for (labels, g, d), got in zip(keep, dists):
        report.rows.append(RowResult(labels, g, d, got))
    return report


def render_report(report: TableReport, verify: bool = True) -> str:
    t = report.table
    lines = [f"Table {t.id}: {t.caption}  (n={t.n}, q={t.q}, distance: {report.method})"]
    for r in report.rows:
        g = " ".join(r.labels)
        if verify:
            mark = "pass" if r.ok else "FAIL"
            lines.append(f"  {g:<40} d={r.expected}  computed={r.computed}  {mark}")
        else:
            lines.append(f"  {g:<40} d={r.computed}")
    for issue in report.issues:
        lines.append(f"  ! {issue}")
    if verify:
        passed = sum(r.ok for r in report.rows)
        status = "PASS" if report.ok else "FAIL"
        lines.append(f"  {passed}/{len(report.rows)} rows match; table {t.id} {status}")
    return "\n".join(lines)


def report_records(report: TableReport) -> list:
    out = []
    for r in report.rows:
        code = from_generator(r.generator, report.table.n, report.table.q)
        rec = code.to_record(r.computed)
        out.append(rec)
    return out
