"""Side-by-side checks of catalog formulas against constructions, finder runs and the oracle.

Rows marked ``must-match`` decide the exit status; ``informational`` rows are
findings that are reported but never fail the run.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from . import catalog
from .constructions import build_lower_bound
from .core import ForestShape
from .finder import LemmaBoundViolation, run_trials
from .oracle import compute_ar, compute_ar_triangle

MUST_MATCH = "must-match"
INFORMATIONAL = "informational"
DEFAULT_ORACLE_BUDGET = 2_000_000
DEFAULT_TRIALS = 25


@dataclass(frozen=True)
class CheckRow:
    check_id: str
    lhs_source: str
    rhs_source: str
    lhs_value: object
    rhs_value: object
    verdict: str
    severity: str = MUST_MATCH
    note: str = ""


@dataclass(frozen=True)
class CrosscheckReport:
    suite: str
    rows: tuple[CheckRow, ...]

    @property
    def exit_code(self) -> int:
        bad = [r for r in self.rows if r.severity == MUST_MATCH and r.verdict == "mismatch"]
        return 1 if bad else 0

    def mismatches(self, severity: str | None = None) -> list[CheckRow]:
        return [
            r
            for r in self.rows
            if r.verdict == "mismatch" and (severity is None or r.severity == severity)
        ]

    def to_json(self) -> str:
        return json.dumps(
            {"suite": self.suite, "exit_code": self.exit_code, "rows": [asdict(r) for r in self.rows]},
            indent=2,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = list(CheckRow.__dataclass_fields__)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in self.rows:
            writer.writerow(asdict(r))
        return buf.getvalue()

    def to_text(self) -> str:
        header = ("check", "lhs", "rhs", "lhs_value", "rhs_value", "verdict", "severity")
        table = [header] + [
            (r.check_id, r.lhs_source, r.rhs_source, str(r.lhs_value), str(r.rhs_value), r.verdict, r.severity)
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
        lines.append(f"suite={self.suite} rows={len(self.rows)} exit={self.exit_code}")
        return "\n".join(lines) + "\n"


def _row(check_id, lhs_src, rhs_src, lhs, rhs, severity=MUST_MATCH, note="") -> CheckRow:
    if lhs is None or rhs is None:
        verdict = "skipped"
    else:
        verdict = "match" if lhs == rhs else "mismatch"
    return CheckRow(check_id, lhs_src, rhs_src, lhs, rhs, verdict, severity, note)


def _formula(family: str, **params) -> int | None:
    return catalog.evaluate(family, **params).value


def _base_rows(budget: int | None) -> list[CheckRow]:
    rows = []
    for t in range(2, 51):
        rows.append(
            _row(
                f"identity/spanning-vs-p3tp2/t={t}",
                f"SPANNING_KP3_TP2(k=1,t={t})",
                f"P3_TP2(n={2 * t + 3},t={t})",
                _formula("SPANNING_KP3_TP2", k=1, t=t),
                _formula("P3_TP2", n=2 * t + 3, t=t),
            )
        )
    rows.append(
        _row(
            "identity/spanning-vs-bialostocki/n=7",
            "SPANNING_KP3_TP2(k=1,t=2)",
            "P3_P2_SMALL(n=7,t=2)",
            _formula("SPANNING_KP3_TP2", k=1, t=2),
            _formula("P3_P2_SMALL", n=7, t=2),
        )
    )
    res = compute_ar(7, ForestShape(1, 2), node_budget=budget)
    rows.append(
        _row(
            "oracle/n=7/P3u2P2",
            "oracle AR(7,P3∪2P2)",
            "SPANNING_KP3_TP2(k=1,t=2)",
            res.value,
            _formula("SPANNING_KP3_TP2", k=1, t=2),
            note="proven" if res.proven else "lower side only: node budget exhausted",
        )
    )
    for k in range(1, 7):
        for t in range(2, 7):
            rows.append(
                _row(
                    f"construction/classes/k={k},t={t}",
                    f"build_lower_bound({k},{t}).class_count",
                    f"SPANNING_KP3_TP2(k={k},t={t})",
                    build_lower_bound(k, t).class_count,
                    _formula("SPANNING_KP3_TP2", k=k, t=t),
                )
            )
    oracle_cases = [
        (5, (1, 1), "P3_P2_SMALL", {"n": 5, "t": 1}),
        (6, (1, 1), "P3_P2_SMALL", {"n": 6, "t": 1}),
        (5, (0, 2), "MATCHING", {"n": 5, "t": 2}),
        (6, (0, 2), "MATCHING", {"n": 6, "t": 2}),
        (6, (0, 3), "MATCHING", {"n": 6, "t": 3}),
    ]
    for n, (k, t), family, params in oracle_cases:
        shape = ForestShape(k, t)
        res = compute_ar(n, shape, node_budget=budget)
        fres = catalog.evaluate(family, **params)
        shown = ",".join(f"{a}={b}" for a, b in params.items())
        rows.append(
            _row(
                f"oracle/n={n}/{shape}",
                f"oracle AR({n},{shape})",
                f"{family}({shown})[{fres.branch}]",
                res.value if res.proven else None,
                fres.value,
            )
        )
    ns = [3, 4, 5, 6]
    rows.append(
        _row(
            "cycle/printed-vs-oracle/t=3",
            f"CYCLE(n={ns[0]}..{ns[-1]},t=3) as printed",
            f"oracle AR(n,C3), n={ns[0]}..{ns[-1]}",
            [_formula("CYCLE", n=n, t=3) for n in ns],
            [compute_ar_triangle(n, node_budget=budget).value for n in ns],
            severity=INFORMATIONAL,
            note="printed cycle formula disagrees with exhaustive search",
        )
    )
    return rows


def _extended_rows(trials: int, seed: int, threads: int) -> list[CheckRow]:
    rows = []
    for k, t in [(1, 2), (1, 3), (2, 2), (2, 3)]:
        try:
            runs = run_trials(k, t, trials, seed, threads=threads)
            lemma_ok = True
        except LemmaBoundViolation:
            runs, lemma_ok = [], False
        good = sum(1 for r in runs if r["valid"] and r["spanning"])
        rows.append(
            _row(
                f"finder/witness/k={k},t={t}",
                "valid spanning witnesses",
                "trials",
                good,
                trials,
            )
        )
        rows.append(
            _row(
                f"finder/fallback/k={k},t={t}",
                "full-detector fallbacks",
                "expected",
                sum(r["fallback"] for r in runs) if lemma_ok else None,
                0,
                note=f"max repair radius {max((r['max_radius'] for r in runs), default=0)}",
            )
        )
        rows.append(
            _row(
                f"lemma/retained-colors/k={k},t={t}",
                "dense-triple bound held at every level",
                "expected",
                lemma_ok,
                True,
            )
        )
    return rows


def run_crosscheck(
    suite: str = "base",
    budget: int | None = DEFAULT_ORACLE_BUDGET,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    threads: int = 1,
) -> CrosscheckReport:
    if suite not in ("base", "extended"):
        raise ValueError(f"unknown suite {suite!r}; expected 'base' or 'extended'")
    rows = _base_rows(budget)
    if suite == "extended":
        rows += _extended_rows(trials, seed, threads)
    return CrosscheckReport(suite, tuple(rows))
