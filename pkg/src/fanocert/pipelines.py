"""Per-family verification pipelines.

Each pipeline re-derives every finite arithmetic claim behind its family's
existence or non-existence argument and records the geometric steps it
cannot decide as cited rules.  The functions return the ordered check trail
plus any flagged gaps.
"""
from __future__ import annotations

from .diophantine import (DegreeSquareProblem, Interval, band_empty,
                          curve_class_search, effective_decompositions,
                          solve_degree_square)
from .gonality import tetragonal_certificate
from .lattice import FAMILIES, DivisorClass, FamilySpec, make_family_lattice
from .nefness import free_certificate, nef_certificate
from .outcome import (CheckOutcome, cited, class_witness, derived, verified)
from .riemannroch import (LinearSeries, brill_noether, ideal_curve_bound, k3_h0,
                          monomial_count, plane_curve_genus, residual_series,
                          span_dimension_bound)
from .ruled import hirzebruch_search, noether_contradiction, p2_square_ten
from .schubert import SchubertProblem, surface_class_split

# Ambient genus for the sporadic twisted-cubic constructions; a prime Fano
# threefold of anticanonical degree 2g-2 has genus g.
SPORADIC_AMBIENT_DEGREE = {"X10": 10, "X16": 16, "X18": 18}

# Genus threshold for the bisecant-exclusion rule on prime Fano threefolds.
BISECANT_GENUS_FLOOR = 7


def _lattice_signature_check(family: FamilySpec, d: int, g: int) -> CheckOutcome:
    lattice = make_family_lattice(family, d, g)
    return verified(
        name="picard-lattice-signature",
        rule="lattice-determinant",
        passed=lattice.det < 0,
        inputs={"gram": [list(row) for row in lattice.gram]},
        result={"determinant": lattice.det},
    )


def _ideal_sections_check(family: FamilySpec, d: int, g: int, ambient_dim: int,
                          forms_degree: int) -> CheckOutcome:
    """Forms through the curve must outnumber forms through the surface."""
    lattice = make_family_lattice(family, d, g)
    curve_bound = ideal_curve_bound(ambient_dim, forms_degree, d, g)
    polarization = DivisorClass(forms_degree, 0)
    surface_count = (monomial_count(ambient_dim, forms_degree)
                     - k3_h0(lattice, polarization, nef_hint=True))
    return verified(
        name="forms-through-curve-but-not-surface",
        rule="ideal-sheaf-section-count",
        passed=curve_bound > surface_count,
        inputs={"ambient_dim": ambient_dim, "forms_degree": forms_degree,
                "d": d, "g": g},
        result={"curve_sections_lower_bound": curve_bound,
                "surface_sections": surface_count},
    )


def _anticanonical_degree_check(family: FamilySpec, d: int, g: int) -> CheckOutcome:
    from .catalog import anticanonical_cube

    cube = anticanonical_cube(family, d, g)
    return verified(
        name="anticanonical-degree-positive",
        rule="blowup-anticanonical-degree",
        passed=cube > 0,
        inputs={"family": family.name, "d": d, "g": g},
        result={"cube": cube},
    )


def _knutsen_check(family: FamilySpec) -> CheckOutcome:
    return cited(
        name="k3-with-prescribed-lattice-exists",
        rule="knutsen-existence",
        statement=("a smooth K3 surface of degree %d with rank-2 Picard lattice "
                   "generated by the polarization and the curve exists"
                   % family.h_square),
    )


def _smallness_check(open_case: bool) -> CheckOutcome:
    if open_case:
        return cited(
            name="anticanonical-contraction-size",
            rule="divisorial-table-overlap",
            statement=("these invariants also appear among the divisorial-type "
                       "rows, and whether the anticanonical map contracts a "
                       "divisor or only curves is undecided; the case stays open"),
        )
    return cited(
        name="anticanonical-contraction-size",
        rule="table-absence",
        statement=("the invariants appear in no divisorial-type or non-E1 row, "
                   "so the anticanonical contraction is small and the link is "
                   "of E1-E1 type"),
    )


def quadric_pipeline(case) -> tuple[list[CheckOutcome], list[str]]:
    family = FAMILIES["quadric"]
    d, g = case.d, case.g
    lattice = make_family_lattice(family, d, g)
    quadric_sections = monomial_count(4, 2) - k3_h0(lattice, DivisorClass(2, 0),
                                                    nef_hint=True)
    checks = [
        _lattice_signature_check(family, d, g),
        _knutsen_check(family),
        _ideal_sections_check(family, d, g, ambient_dim=4, forms_degree=3),
        verified(
            name="surface-lies-on-a-quadric",
            rule="ideal-sheaf-section-count",
            passed=quadric_sections >= 1,
            result={"quadric_sections": quadric_sections},
        ),
        cited(
            name="containing-quadric-unique",
            rule="minimal-degree-argument",
            statement="a nondegenerate degree-6 surface in 4-space lies on at "
                      "most one quadric",
        ),
        nef_certificate(family, d, g),
        free_certificate(family, d, g),
    ]
    plane_cubic = solve_degree_square(DegreeSquareProblem(lattice, 3, 0))
    checks.append(verified(
        name="singular-ambient-excluded",
        rule="plane-cubic-class-search",
        passed=not plane_cubic,
        inputs={"degree": 3, "square": 0},
        result={"classes_found": len(plane_cubic)},
        witnesses=tuple(class_witness(c) for c in plane_cubic),
        notes=("a singular containing quadric would cut a plane cubic of "
               "square 0 and degree 3 on the surface",),
    ))
    from .catalog import trisecant_count

    theta = trisecant_count(d, g)
    checks.append(verified(
        name="trisecant-line-exists",
        rule="berzolari-trisecant-count",
        passed=theta > 0,
        inputs={"d": d, "g": g},
        result={"trisecant_count": theta},
    ))
    checks.append(_anticanonical_degree_check(family, d, g))
    checks.append(_smallness_check(case.smallness == "ambiguous"))

    discrepancies = []
    if (d, g) == (10, 6):
        note = ("secant table note: the genus-one cubic entry is absent here "
                "although the plane-cubic secancy rule is vacuous at d=10; the "
                "exclusion rests on the genus cap at m=3 being 0, reported "
                "rather than silently matched")
        discrepancies.append(note)
    return checks, discrepancies


def v4_pipeline(case) -> tuple[list[CheckOutcome], list[str]]:
    family = FAMILIES["v4"]
    d, g = case.d, case.g
    lattice = make_family_lattice(family, d, g)
    quadric_sections = monomial_count(5, 2) - k3_h0(lattice, DivisorClass(2, 0),
                                                    nef_hint=True)
    checks = [
        _lattice_signature_check(family, d, g),
        _knutsen_check(family),
        _ideal_sections_check(family, d, g, ambient_dim=5, forms_degree=2),
        verified(
            name="surface-quadric-net-dimension",
            rule="ideal-sheaf-section-count",
            passed=quadric_sections == 3,
            result={"quadric_sections": quadric_sections},
        ),
        cited(
            name="ambient-intersection-smooth",
            rule="bertini-smoothness",
            statement="general members of the quadric net through the surface "
                      "cut out a smooth intersection of two quadrics",
        ),
        nef_certificate(family, d, g),
        free_certificate(family, d, g),
        _anticanonical_degree_check(family, d, g),
        cited(
            name="anticanonical-class-not-ample",
            rule="fano-classification-tables",
            statement="no Fano threefold of Picard rank two carries these "
                      "invariants with an ample anticanonical class",
        ),
        _smallness_check(case.smallness == "ambiguous"),
    ]
    return checks, []


def _hyperplane_irreducibility(family: FamilySpec, d: int, g: int) -> list[CheckOutcome]:
    """Every hyperplane section of the surface is irreducible and reduced.

    A splitting T = D1 + D2 either has no curve component equal to C, in
    which case the class of D1 lands in a bounded band, or T - C itself must
    be effective.  Band witnesses and T - C are killed by showing one side
    of each split admits no decomposition into irreducible-curve classes.
    """
    lattice = make_family_lattice(family, d, g)
    h2 = family.h_square
    band = band_empty((h2, d), Interval.open(0, h2),
                      (d, 2 * g - 2), Interval.closed(0, d))
    witnesses = []
    all_eliminated = True
    for point in band.witnesses:
        part = DivisorClass(point[0], point[1])
        complement = DivisorClass(1, 0) - part
        part_decomp = effective_decompositions(lattice, part)
        comp_decomp = effective_decompositions(lattice, complement)
        part_deg = lattice.degree(part)
        comp_deg = lattice.degree(complement)
        eliminated = ((part_deg < 1 or not part_decomp)
                      or (comp_deg < 1 or not comp_decomp))
        all_eliminated = all_eliminated and eliminated
        witnesses.append({
            "class": class_witness(part),
            "complement": class_witness(complement),
            "eliminated": eliminated,
            "reason": "one side admits no decomposition into curve classes",
        })
    checks = [CheckOutcome(
        name="hyperplane-splitting-band",
        rule="ample-splitting-bounds",
        kind="verified",
        passed=all_eliminated,
        inputs=band.inputs,
        result={"band_points": len(band.witnesses)},
        witnesses=tuple(witnesses),
    )]

    residual = DivisorClass(1, -1)
    res_deg = lattice.degree(residual)
    res_square = lattice.pair(residual, residual)
    decomp = effective_decompositions(lattice, residual) if res_deg >= 1 else ()
    checks.append(verified(
        name="section-minus-curve-not-effective",
        rule="effective-decomposition-search",
        passed=res_deg < 1 or not decomp,
        inputs={"class": class_witness(residual)},
        result={"degree": res_deg, "square": res_square,
                "decompositions_found": len(decomp)},
    ))
    lines = curve_class_search(lattice, 1, -2)
    checks.append(verified(
        name="no-line-classes",
        rule="short-curve-search",
        passed=not lines,
        inputs={"degree": 1, "min_square": -2},
        witnesses=tuple(class_witness(c) for c in lines),
    ))
    return checks


def _v5_bundle_checks() -> list[CheckOutcome]:
    """Class arithmetic of the rank-2 bundle mapping the surface to G(1,4)."""
    splits = surface_class_split(SchubertProblem(c2_value=4, t_square=10))
    split_data = [[s.deg_alpha, s.a, s.b] for s in splits]
    checks = [verified(
        name="surface-class-splits-in-grassmannian",
        rule="schubert-class-split",
        passed=split_data == [[1, 6, 4], [2, 3, 2]],
        inputs={"c2": 4, "t_square": 10},
        result={"splits": split_data},
    )]
    degree2 = next(s for s in splits if s.deg_alpha == 2)
    checks.append(verified(
        name="degree-two-span-three-branch-contradiction",
        rule="linear-subvariety-class",
        passed=(degree2.a, degree2.b) != (5, 0),
        inputs={"split": [degree2.deg_alpha, degree2.a, degree2.b]},
        result={"forced_class": [5, 0]},
        notes=("a degree-5 surface cut on a maximal linear subvariety would "
               "have class coefficients (5, 0), incompatible with the split",),
    ))
    checks.append(cited(
        name="degree-two-span-four-five-branches-excluded",
        rule="projection-and-del-pezzo-arguments",
        statement="the span-4 branch forces a reducible hyperplane section and "
                  "the span-5 branch a degree-2 cover of a quintic del Pezzo "
                  "surface; both are impossible, so the map has degree one",
    ))
    rho = brill_noether(6, 1, 4)
    checks.append(verified(
        name="pencil-degree-four-expected-dimension",
        rule="brill-noether-number",
        passed=rho == 0,
        inputs={"g": 6, "r": 1, "d": 4},
        result={"rho": rho},
    ))
    residual = residual_series(6, LinearSeries(1, 4))
    checks.append(verified(
        name="residual-of-degree-four-pencil",
        rule="series-residuation",
        passed=residual == LinearSeries(2, 6),
        inputs={"genus": 6, "series": "g^1_4"},
        result={"residual": residual.label()},
    ))
    sections = 2 + residual.r + 1
    checks.append(verified(
        name="bundle-section-count",
        rule="bundle-section-sum",
        passed=sections == 5,
        result={"h0": sections},
        notes=("two sections from the trivial part plus the residual series "
               "sections; the defining extension is an imported construction",),
    ))
    checks.append(cited(
        name="section-curve-not-trigonal",
        rule="enriques-babbage",
        statement="the section curve is cut out by quadrics, hence neither "
                  "trigonal nor a plane quintic, so both series are free",
    ))
    return checks


def v5_pipeline(case) -> tuple[list[CheckOutcome], list[str]]:
    family = FAMILIES["v5"]
    d, g = case.d, case.g
    if case.route == "contradiction":
        return _v5_non_realizable(family, d, g)
    checks = [
        _lattice_signature_check(family, d, g),
        _knutsen_check(family),
    ]
    if case.construction == "residual":
        checks.extend(_v5_residual_construction(family, case))
    else:
        checks.extend(_hyperplane_irreducibility(family, d, g))
        checks.extend(_v5_bundle_checks())
        checks.append(cited(
            name="surface-embeds-in-quintic-del-pezzo",
            rule="linear-section-smoothness",
            statement="the span of the embedded surface meets the Grassmannian "
                      "in a smooth codimension-3 linear section, a quintic del "
                      "Pezzo threefold",
        ))
    checks.append(nef_certificate(family, d, g))
    checks.append(free_certificate(family, d, g))
    checks.append(_anticanonical_degree_check(family, d, g))
    checks.append(_smallness_check(case.smallness == "ambiguous"))
    return checks, []


def _v5_residual_construction(family: FamilySpec, case) -> list[CheckOutcome]:
    """Cases built from a residual member on an already-realized row."""
    seed_d, seed_g = case.seed_d, case.seed_g
    seed_lattice = make_family_lattice(family, seed_d, seed_g)
    residual = DivisorClass(2, -1)
    degree = seed_lattice.degree(residual)
    square = seed_lattice.pair(residual, residual)
    genus = square // 2 + 1
    checks = [cited(
        name="seed-blowup-exists",
        rule="classification-table-row",
        statement=(f"a weak Fano blow-up of a degree-{seed_d} genus-{seed_g} "
                   "curve on the quintic del Pezzo threefold exists by an "
                   "already-settled table row"),
        inputs={"seed_d": seed_d, "seed_g": seed_g},
    )]
    checks.append(derived(
        name="residual-member-invariants",
        rule="residual-class-arithmetic",
        passed=(degree, genus) == (case.d, case.g),
        inputs={"seed_d": seed_d, "seed_g": seed_g,
                "residual_class": class_witness(residual)},
        result={"degree": degree, "square": square, "genus": genus},
    ))
    checks.append(verified(
        name="residual-seed-not-rational",
        rule="series-fixed-part",
        passed=seed_g >= 1,
        inputs={"seed_genus": seed_g},
        notes=("the seed curve sits in the residual system of the new curve; "
               "a non-rational member forces that system to be free",),
    ))
    checks.append(cited(
        name="residual-system-free",
        rule="fixed-part-structure",
        statement="the residual system has no base points outside its fixed "
                  "part, and a non-rational member rules the fixed part out",
    ))
    return checks


def _v5_non_realizable(family: FamilySpec, d: int, g: int):
    """Degree comparison killing the (14, 10) configuration."""
    lattice = make_family_lattice(family, d, g)
    checks = [
        _lattice_signature_check(family, d, g),
        cited(
            name="anticanonical-system-free-on-blowup",
            rule="classification-freeness",
            statement="for these invariants the anticanonical system of the "
                      "hypothetical blow-up is free, so the residual system on "
                      "the K3 slice is free as well",
        ),
    ]
    residual = DivisorClass(2, -1)
    degree = lattice.degree(residual)
    square = lattice.pair(residual, residual)
    genus = square // 2 + 1
    checks.append(verified(
        name="residual-member-invariants",
        rule="residual-class-arithmetic",
        passed=(degree, genus) == (6, 2),
        inputs={"residual_class": class_witness(residual)},
        result={"degree": degree, "square": square, "genus": genus},
    ))
    span = span_dimension_bound(degree, genus)
    checks.append(verified(
        name="residual-span-dimension",
        rule="nonspecial-span-bound",
        passed=span == 4,
        inputs={"degree": degree, "genus": genus},
        result={"span_dimension": span},
    ))
    independent_hyperplanes = 6 - span
    checks.append(verified(
        name="two-hyperplanes-contain-residual",
        rule="codimension-count",
        passed=independent_hyperplanes >= 2,
        inputs={"ambient_projective_dim": 6, "span_dimension": span},
        result={"independent_hyperplanes": independent_hyperplanes},
    ))
    section_degree = 5
    checks.append(verified(
        name="degree-exceeds-linear-section",
        rule="linear-normality-degree",
        passed=degree > section_degree,
        inputs={"threefold_degree": section_degree},
        result={"residual_degree": degree, "section_curve_degree": section_degree},
        notes=("two hyperplane cuts of the degree-5 threefold give a curve of "
               "degree 5, which cannot contain a curve of degree 6",),
    ))
    return checks, []


def _x14_bundle_checks() -> list[CheckOutcome]:
    rho = brill_noether(8, 1, 5)
    checks = [verified(
        name="pencil-degree-five-expected-dimension",
        rule="brill-noether-number",
        passed=rho == 0,
        inputs={"g": 8, "r": 1, "d": 5},
        result={"rho": rho},
    )]
    residual = residual_series(8, LinearSeries(1, 5))
    checks.append(verified(
        name="residual-of-degree-five-pencil",
        rule="series-residuation",
        passed=residual == LinearSeries(3, 9),
        inputs={"genus": 8, "series": "g^1_5"},
        result={"residual": residual.label()},
    ))
    # Freeness of the residual series: a base point would leave a g^3_8 whose
    # residual g^2_6 either has a base point (giving a degree-4 pencil) or
    # maps to a plane sextic, whose genus 10 is not 8.
    fallback = residual_series(8, LinearSeries(3, 8))
    checks.append(verified(
        name="residual-series-free",
        rule="series-residuation",
        passed=fallback == LinearSeries(2, 6) and plane_curve_genus(6) != 8,
        inputs={"genus": 8, "blocked_series": "g^3_8"},
        result={"fallback_residual": fallback.label(),
                "plane_sextic_genus": plane_curve_genus(6)},
        notes=("either branch of the fallback produces a degree-4 pencil, "
               "which the non-tetragonality certificate excludes",),
    ))
    sections = 2 + residual.r + 1
    checks.append(verified(
        name="bundle-section-count",
        rule="bundle-section-sum",
        passed=sections == 6,
        result={"h0": sections},
    ))
    splits = surface_class_split(SchubertProblem(c2_value=5, t_square=14))
    split_data = [[s.deg_alpha, s.a, s.b] for s in splits]
    checks.append(verified(
        name="surface-class-splits-in-grassmannian",
        rule="schubert-class-split",
        passed=split_data == [[1, 9, 5]],
        inputs={"c2": 5, "t_square": 14},
        result={"splits": split_data},
    ))
    checks.append(cited(
        name="section-curve-embeds-by-bundle",
        rule="linear-section-embedding",
        statement="a non-tetragonal canonical curve of genus 8 with the given "
                  "bundle embeds as a codimension-7 linear section of the "
                  "Grassmannian of lines in 5-space",
    ))
    return checks


def x14_pipeline(case) -> tuple[list[CheckOutcome], list[str]]:
    family = FAMILIES["x14"]
    d, g = case.d, case.g
    if case.route == "contradiction":
        return _x14_non_realizable(family, d, g)
    checks = [
        _lattice_signature_check(family, d, g),
        _knutsen_check(family),
    ]
    report = tetragonal_certificate(d, g)
    checks.append(cited(
        name="tetragonal-donor-criterion",
        rule="pencil-donor-translation",
        statement="a degree-4 pencil on the section curve forces a donor class "
                  "on the surface meeting the recorded degree window; the "
                  "translation is imported, its case analysis verified below",
    ))
    checks.extend(report.outcomes())
    discrepancies = list(report.discrepancies)
    checks.extend(_x14_bundle_checks())
    checks.append(nef_certificate(family, d, g))
    checks.append(free_certificate(family, d, g))
    checks.append(_anticanonical_degree_check(family, d, g))
    checks.append(cited(
        name="ambient-linear-section-smooth",
        rule="bertini-smoothness",
        statement="the embedded surface lies in a smooth codimension-5 linear "
                  "section of the Grassmannian",
    ))
    checks.append(_smallness_check(case.smallness == "ambiguous"))
    return checks, discrepancies


def _x14_non_realizable(family: FamilySpec, d: int, g: int):
    lattice = make_family_lattice(family, d, g)
    curve = DivisorClass(0, 1)
    square = lattice.pair(curve, curve)
    sections = k3_h0(lattice, curve, nef_hint=True)
    degree_on_section = lattice.degree(curve)
    series = LinearSeries(sections - 1, degree_on_section)
    checks = [
        _lattice_signature_check(family, d, g),
        cited(
            name="anticanonical-system-free-on-blowup",
            rule="classification-freeness",
            statement="a realizable case would put the curve on a smooth K3 "
                      "slice with free adjoint system",
        ),
        verified(
            name="curve-section-count",
            rule="k3-section-count",
            passed=sections == 3,
            inputs={"curve_class": class_witness(curve), "square": square},
            result={"h0": sections},
        ),
        verified(
            name="curve-cuts-plane-series-on-section",
            rule="restricted-series-invariants",
            passed=series == LinearSeries(2, 7),
            inputs={"curve_degree_on_section": degree_on_section},
            result={"series": series.label()},
        ),
        cited(
            name="plane-series-obstructs-linear-section",
            rule="mukai-linear-section",
            statement="a genus-8 curve carrying a g^2_7 is never a linear "
                      "section of the Grassmannian of lines in 5-space, "
                      "contradicting the construction",
        ),
    ]
    return checks, []


def sporadic_pipeline(case) -> tuple[list[CheckOutcome], list[str]]:
    ambient_degree = SPORADIC_AMBIENT_DEGREE[case.ambient]
    ambient_genus = ambient_degree // 2 + 1
    checks = [
        verified(
            name="ambient-genus",
            rule="prime-fano-genus",
            passed=ambient_degree > 0 and ambient_degree % 2 == 0
            and 2 * ambient_genus - 2 == ambient_degree,
            inputs={"ambient": case.ambient, "anticanonical_degree": ambient_degree},
            result={"genus": ambient_genus},
        ),
        cited(
            name="twisted-cubics-exist",
            rule="rational-curve-existence",
            statement="the anticanonical model carries twisted cubics",
        ),
    ]
    if ambient_genus >= BISECANT_GENUS_FLOOR:
        checks.append(verified(
            name="bisecant-exclusion-genus-gate",
            rule="line-surface-base-locus",
            passed=ambient_genus >= BISECANT_GENUS_FLOOR,
            inputs={"genus": ambient_genus, "floor": BISECANT_GENUS_FLOOR},
        ))
        checks.append(cited(
            name="span-meets-threefold-in-curve-only",
            rule="line-surface-base-locus",
            statement="for genus at least 7 the base locus of the anticanonical "
                      "system minus twice a line is exactly the lines meeting "
                      "it, so no bisecant or tangent line of the cubic exists "
                      "and the span cuts the cubic alone; freeness follows",
        ))
    else:
        checks.append(cited(
            name="bisecant-forces-cubic-family",
            rule="line-surface-base-locus",
            statement="the genus sits below the bisecant-exclusion gate, and a "
                      "bisecant or tangent line to a general twisted cubic "
                      "would force an irreducible anticanonical surface to "
                      "carry a two-parameter family of rational cubics",
            inputs={"genus": ambient_genus, "floor": BISECANT_GENUS_FLOOR},
        ))
        checks.append(p2_square_ten())
        sweeps = {n: hirzebruch_search(n) for n in range(0, 11)}
        checks.append(verified(
            name="hirzebruch-sweep-empty",
            rule="ruled-surface-enumeration",
            passed=all(not wits for wits in sweeps.values()),
            inputs={"n_range": [0, 10],
                    "bound_derivation": "x divides 10 and n <= 10 / x^2"},
            result={"witnesses_found": sum(len(w) for w in sweeps.values())},
            witnesses=tuple(w for wits in sweeps.values() for w in wits),
        ))
        checks.append(noether_contradiction(10))
        checks.append(cited(
            name="higher-picard-rank-branch",
            rule="surface-classification",
            statement="any remaining resolution has Picard rank at least 3, is "
                      "weak del Pezzo with canonical square 10, and dies on the "
                      "bound above",
        ))
    checks.append(_smallness_check(False))
    return checks, []


PIPELINES = {
    "quadric": quadric_pipeline,
    "v4": v4_pipeline,
    "v5": v5_pipeline,
    "x14": x14_pipeline,
    "sporadic": sporadic_pipeline,
}
