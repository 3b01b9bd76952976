"""Named verification suites over rings and modular data, with typed reports.

Check statuses are pass / fail / undecided-insufficient-data; every fail or
undecided carries a witness.  Reports are deterministic for identical input:
per-check wall times live in a separate field that golden comparisons ignore.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cyclotomic import Cyc
from .fusionring import MissingDataError, is_integral, universal_grading, validate
from .modular import (
    PartialModularData,
    check_balancing,
    complete_smatrix,
    enumerate_symmetric_subcategories,
    is_group_theoretical_by_dimension,
    is_group_theoretical_modular,
    verlinde_fusion,
)

PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided-insufficient-data"

SUITES = ("axioms", "balancing", "verlinde", "grading", "symmetric", "gt", "all")


@dataclass
class Check:
    name: str
    status: str
    witness: str = ""


@dataclass
class CheckReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def add(self, name, status, witness=""):
        if status != PASS and not witness:
            raise ValueError("fail/undecided checks need a witness")
        self.checks.append(Check(name, status, witness))

    @property
    def failed(self):
        return any(c.status == FAIL for c in self.checks)

    @property
    def has_undecided(self):
        return any(c.status == UNDECIDED for c in self.checks)

    def exit_code(self):
        return 1 if self.failed else 0

    def to_json(self):
        return {
            "kind": "report",
            "schema": 1,
            "subject": self.subject,
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness} for c in self.checks
            ],
            "timing": {k: round(v, 6) for k, v in self.timing.items()},
        }

    def to_text(self):
        lines = [f"subject: {self.subject}"]
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", UNDECIDED: "UNDECIDED"}[c.status]
            suffix = f"  ({c.witness})" if c.witness else ""
            lines.append(f"  [{mark}] {c.name}{suffix}")
        n_fail = sum(1 for c in self.checks if c.status == FAIL)
        n_und = sum(1 for c in self.checks if c.status == UNDECIDED)
        lines.append(f"{len(self.checks)} checks: {n_fail} failed, {n_und} undecided")
        return "\n".join(lines) + "\n"


def _timed(report, name, fn):
    t0 = time.perf_counter()
    try:
        fn()
    finally:
        report.timing[name] = time.perf_counter() - t0


def run_suite(subject: str, obj, suite: str) -> CheckReport:
    """Run one named suite (or 'all') against a ring or a modular datum."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    report = CheckReport(subject=subject)
    names = SUITES[:-1] if suite == "all" else (suite,)
    for name in names:
        _timed(report, name, lambda name=name: _dispatch(report, name, obj))
    return report


def _dispatch(report, name, obj):
    is_md = isinstance(obj, PartialModularData)
    if name == "axioms":
        _check_axioms(report, obj)
    elif name == "balancing":
        if not is_md:
            report.add("balancing", UNDECIDED, "no modular data attached to a bare ring")
        else:
            _check_balancing(report, obj)
    elif name == "verlinde":
        if not is_md:
            report.add("verlinde", UNDECIDED, "no modular data attached to a bare ring")
        else:
            _check_verlinde(report, obj)
    elif name == "grading":
        ring = obj if not is_md else obj.ring
        if ring is None:
            report.add("grading", UNDECIDED, "fusion table is only partially known")
        else:
            _check_grading(report, ring)
    elif name == "symmetric":
        if not is_md:
            report.add("symmetric", UNDECIDED, "needs an S-matrix")
        else:
            _check_symmetric(report, obj)
    elif name == "gt":
        _check_gt(report, obj)


def _check_axioms(report, obj):
    if isinstance(obj, PartialModularData):
        md = obj
        ok = md.dims[0] == Cyc.rational(1) and md.twists[0] == Cyc.rational(1)
        report.add("normalization", PASS if ok else FAIL, "" if ok else "dims[0] or twists[0] != 1")
        bad = next(
            (j for j in range(md.rank) if md.s_entry(0, j) != md.dims[j]),
            None,
        )
        report.add(
            "s-row-zero-is-dims", PASS if bad is None else FAIL, "" if bad is None else f"index {bad}"
        )
        bad = next(
            (j for j in range(md.rank) if not (md.twists[j] ** md.conductor == Cyc.rational(1))),
            None,
        )
        report.add(
            "twists-are-roots-of-unity",
            PASS if bad is None else FAIL,
            "" if bad is None else f"index {bad}",
        )
        if md.ring is None:
            report.add("ring-axioms", UNDECIDED, "fusion table is only partially known")
            return
        obj = md.ring
    rep = validate(obj)
    for item in rep.items:
        report.add(f"ring-{item.name}", PASS if item.ok else FAIL, item.witness or "")


def _check_balancing(report, md):
    rep = check_balancing(md)
    if rep.violations:
        (pair, why) = rep.violations[0]
        report.add("balancing", FAIL, f"{len(rep.violations)} violations, first at {pair}: {why}")
    else:
        report.add("balancing", PASS)
    if rep.undecided:
        report.add(
            "balancing-coverage",
            UNDECIDED,
            f"{len(rep.undecided)} pairs skipped, first: {rep.undecided[0][1]}",
        )


def _check_verlinde(report, md):
    md2 = complete_smatrix(md)
    missing = [
        (i, j) for i in range(md2.rank) for j in range(i, md2.rank) if not md2.s_known(i, j)
    ]
    if missing:
        report.add(
            "verlinde",
            UNDECIDED,
            f"S-matrix incomplete after orthogonality completion; missing {missing[0]}",
        )
        return
    try:
        ring = verlinde_fusion(md2)
    except (ValueError, MissingDataError) as exc:
        report.add("verlinde", FAIL, f"inconsistent S-matrix: {exc}")
        return
    rep = validate(ring)
    report.add(
        "verlinde-output-axioms",
        PASS if rep.passed else FAIL,
        "" if rep.passed else rep.failures()[0].witness or rep.failures()[0].name,
    )
    mismatch = None
    for (a, b), decomp in md.fusion.items():
        if ring.product(a, b) != tuple(sorted(decomp)):
            mismatch = (a, b)
            break
    report.add(
        "verlinde-matches-known-fusion",
        PASS if mismatch is None else FAIL,
        "" if mismatch is None else f"pair {mismatch}",
    )
    bal = check_balancing(
        PartialModularData(
            md2.labels, md2.dual, md2.dims, md2.twists, md2.s, ring=ring, s_norm_sq=md2.s_norm_sq
        )
    )
    report.add(
        "verlinde-balancing",
        PASS if bal.passed else FAIL,
        "" if bal.passed else f"violation at {bal.violations[0][0]}",
    )


def _check_grading(report, ring):
    try:
        grading = universal_grading(ring)
    except Exception as exc:
        report.add("grading", FAIL, str(exc))
        return
    sizes = sorted(len(c) for c in grading.components)
    report.add("grading", PASS, f"group order {grading.order}, component sizes {sizes}")


def _check_symmetric(report, md):
    decided, undecidable = enumerate_symmetric_subcategories(md)
    labels = [sorted(md.labels[i] for i in s.members) for s in decided]
    report.add("symmetric-subcategories", PASS, f"found {len(decided)}: {labels}")
    if undecidable:
        report.add(
            "symmetric-coverage",
            UNDECIDED,
            f"{len(undecidable)} candidate subsets undecidable: {undecidable[0][1]}",
        )


def _check_gt(report, obj):
    if isinstance(obj, PartialModularData):
        decision = is_group_theoretical_modular(obj)
        if decision.status == "UNDECIDED":
            report.add("group-theoretical", UNDECIDED, decision.reason)
        else:
            witness = (
                f"witness L = {sorted(obj.labels[i] for i in decision.witness)}"
                if decision.witness
                else decision.reason
            )
            report.add("group-theoretical", PASS, f"{decision.status}: {witness}")
        return
    ring = obj
    if not is_integral(ring):
        report.add("group-theoretical", PASS, "NOT_GT: ring is not integral")
        return
    decision = is_group_theoretical_by_dimension(ring)
    if decision is None:
        report.add(
            "group-theoretical",
            UNDECIDED,
            "dimension-count criterion gives no decision and no S-matrix is attached",
        )
    else:
        report.add("group-theoretical", PASS, f"GT: {decision.reason}")
