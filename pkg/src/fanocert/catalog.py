"""Embedded case table, verdict computation and the verification runner."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import comb

from .lattice import FamilySpec
from .outcome import CheckOutcome

REALIZABLE = "Realizable"
NOT_REALIZABLE = "NotRealizable"
OPEN = "Open"
UNVERIFIED = "Unverified"

VERDICTS = (REALIZABLE, NOT_REALIZABLE, OPEN)
FAMILY_NAMES = ("quadric", "v4", "v5", "x14", "sporadic")


class CaseTableError(ValueError):
    """The case table file does not match the expected schema."""


@dataclass(frozen=True)
class CaseRecord:
    case_id: int
    family: str
    d: int
    g: int
    expected: str
    route: str = "construction"
    smallness: str = "table-absent"
    ambient: str | None = None
    construction: str = "main"
    seed_d: int | None = None
    seed_g: int | None = None

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise CaseTableError(f"unknown family {self.family!r}")
        if self.expected not in VERDICTS:
            raise CaseTableError(f"unknown verdict {self.expected!r}")
        if self.route not in ("construction", "contradiction"):
            raise CaseTableError(f"unknown route {self.route!r}")
        if self.smallness not in ("table-absent", "ambiguous"):
            raise CaseTableError(f"unknown smallness tag {self.smallness!r}")
        if self.family == "sporadic" and not self.ambient:
            raise CaseTableError("sporadic cases need an ambient")
        if self.construction == "residual" and (self.seed_d is None or self.seed_g is None):
            raise CaseTableError("residual constructions need seed invariants")

    def label(self) -> str:
        tag = self.family if not self.ambient else f"{self.family}/{self.ambient}"
        return f"case {self.case_id} {tag} (d,g)=({self.d},{self.g})"


@dataclass(frozen=True)
class Certificate:
    case: CaseRecord
    computed: str
    checks: tuple[CheckOutcome, ...]
    discrepancies: tuple[str, ...] = ()

    @property
    def matches(self) -> bool:
        return self.computed == self.case.expected

    def to_dict(self) -> dict:
        data = {
            "case_id": self.case.case_id,
            "family": self.case.family,
            "d": self.case.d,
            "g": self.case.g,
            "expected": self.case.expected,
            "computed": self.computed,
            "checks": [c.to_dict() for c in self.checks],
            "discrepancies": list(self.discrepancies),
        }
        if self.case.ambient:
            data["ambient"] = self.case.ambient
        return data


@dataclass(frozen=True)
class Report:
    certificates: tuple[Certificate, ...]
    summary: dict = field(default_factory=dict)

    @property
    def all_match(self) -> bool:
        return all(c.matches for c in self.certificates)


def _record_from_entry(entry: dict) -> CaseRecord:
    try:
        return CaseRecord(
            case_id=int(entry["id"]),
            family=str(entry["family"]),
            d=int(entry["d"]),
            g=int(entry["g"]),
            expected=str(entry["expected"]),
            route=entry.get("route", "construction"),
            smallness=entry.get("smallness", "table-absent"),
            ambient=entry.get("ambient"),
            construction=entry.get("construction", "main"),
            seed_d=entry.get("seed_d"),
            seed_g=entry.get("seed_g"),
        )
    except (KeyError, TypeError) as exc:
        raise CaseTableError(f"malformed case entry {entry!r}") from exc


def load_cases(path: str | None = None) -> tuple[CaseRecord, ...]:
    """Embedded table, or an override file with the same JSON schema."""
    if path is None:
        payload = resources.files("fanocert").joinpath("data/cases.json").read_text()
    else:
        with open(path, encoding="utf-8") as handle:
            payload = handle.read()
    try:
        table = json.loads(payload)
        entries = table["cases"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise CaseTableError(f"unreadable case table: {exc}") from exc
    records = tuple(_record_from_entry(entry) for entry in entries)
    return tuple(sorted(records, key=lambda r: (r.case_id, r.family)))


def trisecant_count(d: int, g: int) -> int:
    """Trisecant lines to a degree-d genus-g curve in 4-space."""
    if d < 3:
        raise ValueError("need d >= 3")
    return comb(d - 2, 3) - g * (d - 4)


def anticanonical_cube(family: FamilySpec, d: int, g: int) -> int:
    """Anticanonical degree of the blow-up along a degree-d genus-g curve."""
    return family.anticanonical_cube_base - 2 * family.index_multiplier * d - 2 + 2 * g


def verify_case(case: CaseRecord) -> Certificate:
    """Run the family pipeline and compare the computed verdict."""
    from .pipelines import PIPELINES

    checks, discrepancies = PIPELINES[case.family](case)
    all_passed = all(c.passed for c in checks)
    if not all_passed:
        computed = UNVERIFIED
    elif case.route == "contradiction":
        computed = NOT_REALIZABLE
    elif case.smallness == "ambiguous":
        computed = OPEN
    else:
        computed = REALIZABLE
    return Certificate(case=case, computed=computed, checks=tuple(checks),
                       discrepancies=tuple(discrepancies))


def run_all(case_id: int | None = None, family: str | None = None,
            table: str | None = None) -> Report:
    """Verify the selected cases in deterministic (case id, family) order."""
    cases = load_cases(table)
    if case_id is not None:
        cases = tuple(c for c in cases if c.case_id == case_id)
    if family is not None:
        cases = tuple(c for c in cases if c.family == family)
    certificates = tuple(verify_case(c) for c in cases)
    summary = {
        "cases": len(certificates),
        "pass": sum(1 for c in certificates if c.matches),
        "mismatch": sum(1 for c in certificates if not c.matches),
        "open": sum(1 for c in certificates if c.case.expected == OPEN),
        "flagged": sum(1 for c in certificates if c.discrepancies),
    }
    return Report(certificates=certificates, summary=summary)
