"""Induction certificates over a grid of (k, n).

For every n in 4..max_n and 2 <= k <= n-2 a cell records the classical
generation check and the commuting squares that reduce (k, n) to smaller
cells. What cannot be computed is listed as an external assumption; the
certificate never claims more than "every mechanical step verified".
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .classical import closure, completions, witness_generators
from .morphisms import CheckReport, Status, Witness, diagram_dot, diagram_tilde, well_defined

CLAIM = "all mechanically checkable steps verified; remaining steps are the listed citations"

EXTERNAL_ASSUMPTIONS = (
    {
        "id": "base-case",
        "statement": "the quantum subgroup generated by I^+_{2,4} is S_4^+",
        "source": "external result for n = 4, k = 2",
        "used_for": "induction base (k, n) = (2, 4)",
    },
    {
        "id": "generation-theorem",
        "statement": "S_n together with S_{n-1}^+ generates S_n^+",
        "source": "Brannan, Chirvasitu, Freslon: generation of quantum permutation groups",
        "used_for": "closing each induction step",
    },
    {
        "id": "hopf-image-factorization",
        "statement": "if beta composed with a quotient onto H factors through Y, then <Y> is contained in <X>",
        "source": "universal property of Hopf images",
        "used_for": "turning each verified commuting square into S_{n-1}^+ inside <I^+_{k,n}>",
    },
    {
        "id": "classical-inclusion",
        "statement": "S_n is contained in the quantum subgroup generated by I^+_{k,n}",
        "source": "follows from <I_{k,n}> = S_n (checked here) by the same Hopf image property",
        "used_for": "first observation of each induction step",
    },
)

CONVENTIONS = {
    "orthogonality": "same-row and same-column products of distinct magic generators, and same-column products "
                     "of distinct increasing generators, vanish (derived from the projection relations in any C*-algebra)",
    "trivial_algebra": "C(I^+_{0,m}) is the one-dimensional algebra; beta_{0,m} is the counit",
    "permutations": "(s t)(x) = s(t(x)); cycle (a b c) sends a to b, b to c, c to a; "
                    "the permutation matrix has a 1 at (s(j), j)",
}


def check_closure(k: int, n: int) -> CheckReport:
    """Completions of I_{k,n} generate S_n, and so do the three witnesses."""
    started = time.perf_counter()
    full = math.factorial(n)
    size = len(closure(completions(k, n), n))
    witnesses = []
    if size != full:
        witnesses.append(Witness("closure of completed I_k,n", f"|closure| = {size} != {full}", "generation",
                                 "model:exhaustive enumeration"))
    notes = [f"|closure| = {size}"]
    if 1 <= k <= n - 1:
        gens = witness_generators(k, n)
        sub = len(closure(gens, n))
        notes.append("proof generators: " + ", ".join(g.cycle_str() for g in gens) + f"; generate {sub} elements")
        if sub != full:
            witnesses.append(Witness("proof generators", f"generate {sub} != {full} elements", "generation",
                                     "model:exhaustive enumeration"))
    status = Status.NOT_VERIFIED if witnesses else Status.VERIFIED
    return CheckReport("closure", k, n, status, witnesses, ["generation"], len(completions(k, n)),
                       (time.perf_counter() - started) * 1e3, notes)


@dataclass
class Cell:
    k: int
    n: int
    branches: list[str]
    depends_on: list[tuple[int, int]]
    reports: list[CheckReport] = field(default_factory=list)

    @property
    def status(self) -> Status:
        statuses = {r.status for r in self.reports}
        for s in (Status.NOT_VERIFIED, Status.INCONCLUSIVE):
            if s in statuses:
                return s
        return Status.VERIFIED

    def to_dict(self, with_time: bool = True) -> dict:
        return {
            "params": {"k": self.k, "n": self.n},
            "branches": list(self.branches),
            "depends_on": [{"k": k, "n": n} for k, n in self.depends_on],
            "status": self.status.value,
            "reports": [r.to_dict(with_time) for r in self.reports],
        }

    @classmethod
    def from_dict(cls, d: dict) -> Cell:
        return cls(
            d["params"]["k"],
            d["params"]["n"],
            list(d["branches"]),
            [(x["k"], x["n"]) for x in d["depends_on"]],
            [CheckReport.from_dict(r) for r in d["reports"]],
        )


def plan_cell(k: int, n: int) -> Cell:
    """Which reductions apply to (k, n)."""
    branches, deps = [], []
    if n == 4:
        branches.append("base-case")
    else:
        if k <= n - 3:
            branches.append("drop-last")
            deps.append((k, n - 1))
        if k >= 3:
            branches.append("drop-first")
            deps.append((k - 1, n - 1))
    return Cell(k, n, branches, deps)


def run_cell(k: int, n: int) -> Cell:
    cell = plan_cell(k, n)
    cell.reports.append(check_closure(k, n))
    if "drop-last" in cell.branches:
        cell.reports.append(well_defined("eta-tilde", k, n))
        cell.reports.append(diagram_tilde(k, n))
    if "drop-first" in cell.branches:
        cell.reports.append(well_defined("eta-dot", k, n))
        cell.reports.append(diagram_dot(k, n))
    return cell


def grid(max_n: int) -> list[tuple[int, int]]:
    return [(k, n) for n in range(4, max_n + 1) for k in range(2, n - 1)]


@dataclass
class Certificate:
    max_n: int
    cells: list[Cell]
    external_assumptions: list[dict] = field(default_factory=lambda: [dict(a) for a in EXTERNAL_ASSUMPTIONS])
    assumptions_acknowledged: bool = True
    tool_version: str = __version__
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.cells}
        if Status.NOT_VERIFIED in statuses:
            return Status.NOT_VERIFIED.value
        if Status.INCONCLUSIVE in statuses or not self.assumptions_acknowledged:
            return Status.INCONCLUSIVE.value
        return "verified-with-assumptions"

    def to_dict(self, with_time: bool = True) -> dict:
        d = {
            "tool": "qisv",
            "tool_version": self.tool_version,
            "theorem": "for n >= 4 and 2 <= k <= n-2, I^+_{k,n} generates S_n^+",
            "claim": CLAIM,
            "parameter_grid": {"max_n": self.max_n, "cells": [{"k": k, "n": n} for k, n in grid(self.max_n)]},
            "overall_status": self.status,
            "conventions": dict(CONVENTIONS),
            "external_assumptions": [dict(a) for a in self.external_assumptions],
            "assumptions_acknowledged": self.assumptions_acknowledged,
            "cells": [c.to_dict(with_time) for c in self.cells],
        }
        if with_time:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def to_json(self, with_time: bool = True) -> str:
        return json.dumps(self.to_dict(with_time), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        return cls(
            max_n=d["parameter_grid"]["max_n"],
            cells=[Cell.from_dict(c) for c in d["cells"]],
            external_assumptions=[dict(a) for a in d["external_assumptions"]],
            assumptions_acknowledged=d["assumptions_acknowledged"],
            tool_version=d["tool_version"],
            elapsed_ms=d.get("elapsed_ms", 0.0),
        )

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        lines = [f"induction certificate, 4 <= n <= {self.max_n}: {self.status}"]
        for c in self.cells:
            lines.append(f"  (k={c.k}, n={c.n}) {c.status.value}; branches: {', '.join(c.branches)}")
            for r in c.reports:
                lines.append(f"    {r.summary()}")
        lines.append("external assumptions:")
        lines += [f"  - {a['id']}: {a['statement']} ({a['source']})" for a in self.external_assumptions]
        lines.append(f"claim: {CLAIM}")
        return "\n".join(lines)


def _run(args: tuple[int, int]) -> Cell:
    return run_cell(*args)


def build_certificate(max_n: int = 9, jobs: int = 1) -> Certificate:
    if not 4 <= max_n <= 9:
        raise ValueError(f"max_n must lie in 4..9, got {max_n}")
    started = time.perf_counter()
    cells_in = grid(max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(_run, cells_in))
    else:
        cells = [run_cell(k, n) for k, n in cells_in]
    cells.sort(key=lambda c: (c.n, c.k))
    return Certificate(max_n, cells, elapsed_ms=(time.perf_counter() - started) * 1e3)

