"""Nefness and base-point-freeness certificates for the adjoint class sH - C.

Nefness: every admissible obstructor type (m, p_a) is searched for in the
lattice; any class found must fail the secancy requirement against C.

Freeness: a nef class of square >= 2 that is not free decomposes as k E + G
with E elliptic (square 0, H.E >= 3), G a (-2)-curve and E.G = 1.  Matching
squares pins k, and the polarization degree budget left for G is
H.(sH - C) - 3k; if positive, a (-2)-class of that small degree must exist,
which the lattice search decides.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diophantine import DegreeSquareProblem, solve_degree_square
from .lattice import DivisorClass, FamilySpec, make_family_lattice
from .outcome import CheckOutcome, DERIVED, VERIFIED, class_witness


class FreenessInapplicableError(ValueError):
    """The decomposition criterion needs square >= 2 (elliptic multiplicity k >= 2)."""


@dataclass(frozen=True)
class FreenessBudget:
    k: int
    h_dot_d: int
    gamma_budget: int


def _table_kind(family: FamilySpec) -> str:
    return DERIVED if family.derived_constants else VERIFIED


def nef_certificate(family: FamilySpec, d: int, g: int) -> CheckOutcome:
    """Search out every admissible obstructor and eliminate it by secancy."""
    from .secant import admissible_table

    lattice = make_family_lattice(family, d, g)
    curve = DivisorClass(0, 1)
    table = admissible_table(family, d, g)
    witnesses = []
    all_eliminated = True
    for cand in table:
        classes = solve_degree_square(
            DegreeSquareProblem(lattice, cand.m, 2 * cand.p_a - 2))
        for cls in classes:
            meets = lattice.pair(cls, curve)
            eliminated = meets < cand.secancy
            all_eliminated = all_eliminated and eliminated
            witnesses.append({
                "class": class_witness(cls),
                "degree": cand.m,
                "arithmetic_genus": cand.p_a,
                "meets_curve": meets,
                "secancy_required": cand.secancy,
                "eliminated": eliminated,
            })
    return CheckOutcome(
        name="adjoint-class-nef",
        rule="secant-obstruction-search",
        kind=_table_kind(family),
        passed=all_eliminated,
        inputs={"family": family.name, "d": d, "g": g,
                "candidates": [[c.m, c.p_a, c.secancy] for c in table]},
        result={"witness_count": len(witnesses)},
        witnesses=tuple(witnesses),
    )


def freeness_budget(family: FamilySpec, d: int, g: int) -> FreenessBudget:
    lattice = make_family_lattice(family, d, g)
    adjoint = family.adjoint_class
    square = lattice.pair(adjoint, adjoint)
    if square < 2:
        raise FreenessInapplicableError(
            f"adjoint square {square} < 2; the decomposition criterion "
            "does not apply as stated"
        )
    k = (square + 2) // 2
    if k < 2:
        raise FreenessInapplicableError(f"elliptic multiplicity k={k} < 2")
    h_dot_d = lattice.degree(adjoint)
    return FreenessBudget(k=k, h_dot_d=h_dot_d, gamma_budget=h_dot_d - 3 * k)


def free_certificate(family: FamilySpec, d: int, g: int) -> CheckOutcome:
    """Rule out the elliptic-plus-rational decomposition of a non-free class."""
    lattice = make_family_lattice(family, d, g)
    budget = freeness_budget(family, d, g)
    witnesses = []
    searched = []
    if budget.gamma_budget > 0:
        for degree in range(1, budget.gamma_budget + 1):
            searched.append(degree)
            for cls in solve_degree_square(DegreeSquareProblem(lattice, degree, -2)):
                witnesses.append({"class": class_witness(cls),
                                  "polarization_degree": degree})
    return CheckOutcome(
        name="adjoint-class-free",
        rule="elliptic-decomposition-budget",
        kind=_table_kind(family),
        passed=not witnesses,
        inputs={"family": family.name, "d": d, "g": g},
        result={"elliptic_multiplicity": budget.k,
                "adjoint_polarization_degree": budget.h_dot_d,
                "rational_part_budget": budget.gamma_budget,
                "searched_degrees": searched},
        witnesses=tuple(witnesses),
    )
