import random
from fractions import Fraction

import pytest

from fanocert.diophantine import (DegreeSquareProblem, DependentFormsError,
                                  FamilyMaxUndefinedError, Interval, LinearFamily,
                                  band_empty, curve_class_search,
                                  effective_decompositions, family_quadratic_max,
                                  family_solutions, solve_degree_square)
from fanocert.lattice import (FAMILIES, DivisorClass, IntersectionLattice,
                              make_family_lattice)

WINDOW = 50


def random_hyperbolic_lattice(rng):
    while True:
        h2 = 2 * rng.randint(1, 7)
        d = rng.randint(1, 12)
        c2 = 2 * rng.randint(-1, 10)
        if h2 * c2 - d * d < 0:
            return IntersectionLattice(((h2, d), (d, c2)))


def brute_degree_square(lattice, degree, square, window=WINDOW):
    h2, d = lattice.gram[0]
    found = []
    for a in range(-window, window + 1):
        rest = degree - h2 * a
        if rest % d:
            continue
        b = rest // d
        if abs(b) > window:
            continue
        cls = DivisorClass(a, b)
        if lattice.pair(cls, cls) == square:
            found.append(cls)
    return sorted(found, key=lambda c: (c.a, c.b))


def brute_curve_search(lattice, degree, min_square, window=WINDOW):
    h2, d = lattice.gram[0]
    found = []
    for a in range(-window, window + 1):
        rest = degree - h2 * a
        if rest % d:
            continue
        b = rest // d
        if abs(b) > window:
            continue
        cls = DivisorClass(a, b)
        if lattice.pair(cls, cls) >= min_square:
            found.append(cls)
    return sorted(found, key=lambda c: (c.a, c.b))


def in_window(cls, window=WINDOW):
    return abs(cls.a) <= window and abs(cls.b) <= window


def test_solve_degree_square_reference_values():
    quadric = make_family_lattice(FAMILIES["quadric"], 13, 14)
    assert solve_degree_square(DegreeSquareProblem(quadric, 1, -2)) == (DivisorClass(-2, 1),)
    v4 = make_family_lattice(FAMILIES["v4"], 10, 6)
    assert solve_degree_square(DegreeSquareProblem(v4, 2, -2)) == (DivisorClass(-1, 1),)
    quadric92 = make_family_lattice(FAMILIES["quadric"], 9, 2)
    assert solve_degree_square(DegreeSquareProblem(quadric92, 1, -2)) == ()
    assert brute_degree_square(quadric92, 1, -2, window=200) == []


def test_solve_degree_square_matches_brute_force():
    rng = random.Random(0xFA2601)
    for _ in range(300):
        lattice = random_hyperbolic_lattice(rng)
        degree = rng.randint(-30, 30)
        square = 2 * rng.randint(-40, 40)
        solved = solve_degree_square(DegreeSquareProblem(lattice, degree, square))
        for cls in solved:
            assert lattice.degree(cls) == degree
            assert lattice.pair(cls, cls) == square
        expected = brute_degree_square(lattice, degree, square)
        assert [c for c in solved if in_window(c)] == expected


def test_solve_degree_square_full_plane_scan():
    # independent 2-D oracle on a smaller batch
    rng = random.Random(0xFA2602)
    for _ in range(40):
        lattice = random_hyperbolic_lattice(rng)
        degree = rng.randint(-12, 12)
        square = 2 * rng.randint(-20, 20)
        expected = sorted(
            (DivisorClass(a, b)
             for a in range(-25, 26) for b in range(-25, 26)
             if lattice.degree(DivisorClass(a, b)) == degree
             and lattice.pair(DivisorClass(a, b), DivisorClass(a, b)) == square),
            key=lambda c: (c.a, c.b))
        solved = solve_degree_square(DegreeSquareProblem(lattice, degree, square))
        assert [c for c in solved if abs(c.a) <= 25 and abs(c.b) <= 25] == expected


def test_curve_class_search_reference_values():
    v5 = make_family_lattice(FAMILIES["v5"], 7, 0)
    assert curve_class_search(v5, 1, -2) == ()
    x14 = make_family_lattice(FAMILIES["x14"], 4, 0)
    assert curve_class_search(x14, 2, -2) == ()
    quadric = make_family_lattice(FAMILIES["quadric"], 8, 0)
    found = curve_class_search(quadric, 8, -2)
    assert DivisorClass(0, 1) in found


def test_curve_class_search_matches_brute_force():
    rng = random.Random(0xFA2603)
    for _ in range(300):
        lattice = random_hyperbolic_lattice(rng)
        degree = rng.randint(-20, 20)
        min_square = rng.randint(-24, 12)
        found = curve_class_search(lattice, degree, min_square)
        for cls in found:
            assert lattice.degree(cls) == degree
            assert lattice.pair(cls, cls) >= min_square
        expected = brute_curve_search(lattice, degree, min_square)
        assert [c for c in found if in_window(c)] == expected


def test_band_reference_regions():
    lemma_band = band_empty((10, 7), Interval.open(0, 10), (7, -2), Interval.closed(0, 7))
    assert lemma_band.passed and lemma_band.witnesses == ()

    open_box = band_empty((1, 0), Interval.open(0, 1), (0, 1), Interval.open(0, 1))
    assert open_box.passed

    closed_box = band_empty((1, 0), Interval.closed(0, 1), (0, 1), Interval.closed(0, 1))
    assert not closed_box.passed
    assert list(closed_box.witnesses) == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_band_rejects_dependent_forms():
    with pytest.raises(DependentFormsError):
        band_empty((2, 4), Interval.closed(0, 3), (1, 2), Interval.closed(0, 3))


def test_band_witnesses_satisfy_constraints():
    rng = random.Random(0xFA2604)
    for _ in range(100):
        f1 = (rng.randint(-6, 6), rng.randint(-6, 6))
        f2 = (rng.randint(-6, 6), rng.randint(-6, 6))
        if f1[0] * f2[1] - f1[1] * f2[0] == 0:
            continue
        r1 = Interval(rng.randint(-8, 0), rng.randint(1, 8),
                      rng.random() < 0.5, rng.random() < 0.5)
        r2 = Interval(rng.randint(-8, 0), rng.randint(1, 8),
                      rng.random() < 0.5, rng.random() < 0.5)
        outcome = band_empty(f1, r1, f2, r2)
        # oracle: scan a box large enough to hold the whole region
        oracle = []
        for a in range(-200, 201):
            for b in range(-200, 201):
                u = f1[0] * a + f1[1] * b
                v = f2[0] * a + f2[1] * b
                if u in r1.integers() and v in r2.integers():
                    oracle.append([a, b])
        assert sorted(list(w) for w in outcome.witnesses) == sorted(oracle)


def test_family_solutions_reference_families():
    families = family_solutions((14, 4), range(4, 8), (-14, -4), -14)
    data = {(f.base.coords(), f.step.coords(), f.value) for f in families}
    assert data == {((0, 1), (2, -7), 4), ((1, -2), (2, -7), 6)}
    for fam in families:
        assert fam.k_min is None and fam.k_max is None

    families = family_solutions((14, 5), range(4, 8), (-14, -5), -14)
    assert len(families) == 4
    members = {fam.value: fam for fam in families}
    assert members[5].index_of(DivisorClass(0, 1)) is not None
    assert members[4].index_of(DivisorClass(1, -2)) is not None

    assert family_solutions((2, 0), [1], (0, 1), -100) == ()


def test_family_solutions_half_line_constraint():
    # side form not parallel to the solved form: a genuine half-line appears
    families = family_solutions((1, 0), [2], (0, 1), 0)
    assert len(families) == 1
    fam = families[0]
    assert fam.member(0).a == 2
    ks = [k for k in range(-10, 11) if fam.in_window(k)]
    assert all(fam.member(k).b >= 0 for k in ks)
    assert fam.k_min is not None or fam.k_max is not None


def test_family_quadratic_max_reference_values():
    x14_40 = make_family_lattice(FAMILIES["x14"], 4, 0)
    fam = LinearFamily(DivisorClass(0, 1), DivisorClass(2, -7), 4)
    a, b, c = fam.square_polynomial(x14_40)
    assert (a, b, c) == (-154, 44, -2)
    assert family_quadratic_max(x14_40, fam) == (-2, 0)

    with pytest.raises(FamilyMaxUndefinedError):
        quadric = make_family_lattice(FAMILIES["quadric"], 9, 2)
        family_quadratic_max(quadric, LinearFamily(DivisorClass(0, 0), DivisorClass(1, 0), 0))


def test_family_quadratic_max_matches_brute_force():
    rng = random.Random(0xFA2605)
    checked = 0
    while checked < 200:
        lattice = random_hyperbolic_lattice(rng)
        p, q = rng.randint(1, 12), rng.randint(1, 12)
        value = rng.randint(-20, 20)
        families = family_solutions((p, q), [value], (0, 1), -10**6)
        if not families:
            continue
        fam = families[0]
        quad_a, quad_b, _ = fam.square_polynomial(lattice)
        if quad_a >= 0 or abs(Fraction(-quad_b, 2 * quad_a)) > 500:
            continue
        exclude = set()
        if rng.random() < 0.5:
            exclude = {rng.randint(-2, 2)}
        best, at = family_quadratic_max(lattice, fam, exclude=exclude)
        brute = max((lattice.pair(fam.member(k), fam.member(k)), k)
                    for k in range(-1000, 1001) if k not in exclude)
        assert best == brute[0]
        assert lattice.pair(fam.member(at), fam.member(at)) == best
        checked += 1


def test_effective_decompositions():
    v5_70 = make_family_lattice(FAMILIES["v5"], 7, 0)
    assert effective_decompositions(v5_70, DivisorClass(1, -1)) == ()
    # negative degree: trivially nothing
    v5_126 = make_family_lattice(FAMILIES["v5"], 12, 6)
    assert effective_decompositions(v5_126, DivisorClass(1, -1)) == ()
    # a genuine curve class decomposes as itself
    quadric = make_family_lattice(FAMILIES["quadric"], 8, 0)
    decomps = effective_decompositions(quadric, DivisorClass(0, 1))
    assert (DivisorClass(0, 1),) in decomps
    for decomp in decomps:
        total = DivisorClass(0, 0)
        for part in decomp:
            assert quadric.degree(part) >= 1
            assert quadric.pair(part, part) >= -2
            total = total + part
        assert total == DivisorClass(0, 1)
