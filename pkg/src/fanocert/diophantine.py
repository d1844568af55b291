"""Bounded exact integer searches on rank-2 lattices.

All solvers work over the integers with rational intermediate steps
(``fractions.Fraction`` and ``math.isqrt``); no floating point appears
anywhere.  Degree constraints cut out a line in the class lattice, and the
intersection form restricted to such a line is a downward parabola whenever
the lattice has signature (1,1), so every search window below is finite and
derived from discriminants rather than guessed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, isqrt

from .lattice import DivisorClass, IntersectionLattice, LatticeSignatureError, as_class
from .outcome import CheckOutcome, VERIFIED, class_witness


class DependentFormsError(ValueError):
    """The two band forms are proportional, so the region is unbounded."""


class FamilyMaxUndefinedError(ValueError):
    """Square along the family does not attain a maximum over the integers."""


@dataclass(frozen=True)
class Interval:
    """Integer interval with independently open or closed endpoints."""

    lo: int
    hi: int
    lo_open: bool = False
    hi_open: bool = False

    @classmethod
    def open(cls, lo: int, hi: int) -> "Interval":
        return cls(lo, hi, True, True)

    @classmethod
    def closed(cls, lo: int, hi: int) -> "Interval":
        return cls(lo, hi, False, False)

    def integers(self) -> range:
        return range(self.lo + (1 if self.lo_open else 0),
                     self.hi + (0 if self.hi_open else 1))

    def label(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo},{self.hi}{right}"


@dataclass(frozen=True)
class DegreeSquareProblem:
    """Find all classes of fixed polarization degree and fixed square."""

    lattice: IntersectionLattice
    degree: int
    square: int


@dataclass(frozen=True)
class LinearFamily:
    """Arithmetic progression base + k*step of lattice classes.

    ``value`` records the linear-form target the family solves, and
    ``k_min``/``k_max`` an optional half-line restriction on the parameter.
    """

    base: DivisorClass
    step: DivisorClass
    value: int
    k_min: int | None = None
    k_max: int | None = None

    def __post_init__(self):
        if self.step.a == 0 and self.step.b == 0:
            raise ValueError("family step must be nonzero")

    def member(self, k: int) -> DivisorClass:
        return self.base + k * self.step

    def in_window(self, k: int) -> bool:
        if self.k_min is not None and k < self.k_min:
            return False
        if self.k_max is not None and k > self.k_max:
            return False
        return True

    def index_of(self, cls) -> int | None:
        """Parameter k with member(k) == cls, or None."""
        cls = as_class(cls)
        diff = cls - self.base
        if self.step.a != 0:
            if diff.a % self.step.a:
                return None
            k = diff.a // self.step.a
        else:
            if diff.b % self.step.b:
                return None
            k = diff.b // self.step.b
        return k if self.member(k) == cls and self.in_window(k) else None

    def square_polynomial(self, lattice: IntersectionLattice) -> tuple[int, int, int]:
        """Coefficients (A, B, C) with member(k)^2 = A k^2 + B k + C."""
        a = lattice.pair(self.step, self.step)
        b = 2 * lattice.pair(self.base, self.step)
        c = lattice.pair(self.base, self.base)
        return a, b, c

    def to_witness(self) -> dict:
        data = {"base": class_witness(self.base), "step": class_witness(self.step),
                "value": self.value}
        if self.k_min is not None:
            data["k_min"] = self.k_min
        if self.k_max is not None:
            data["k_max"] = self.k_max
        return data


def _extended_gcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, u, v) with u*x + v*y = g = gcd(x, y)."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _line_solutions(coeff_a: int, coeff_b: int, target: int) -> tuple[DivisorClass, DivisorClass] | None:
    """Canonical (base, step) for the solutions of coeff_a*a + coeff_b*b = target.

    Returns None when no integer solutions exist.  The step has its first
    nonzero coordinate positive and the base is reduced so that the fast
    coordinate lies in [0, step coordinate).
    """
    if coeff_a == 0 and coeff_b == 0:
        raise ValueError("zero form")
    g, u, v = _extended_gcd(coeff_a, coeff_b)
    if target % g:
        return None
    scale = target // g
    base = DivisorClass(u * scale, v * scale)
    step = DivisorClass(coeff_b // g, -coeff_a // g)
    if step.a < 0 or (step.a == 0 and step.b < 0):
        step = -step
    if step.a != 0:
        shift = base.a // step.a
    else:
        shift = base.b // step.b
    base = base - shift * step
    return base, step


def _int_sqrt_if_square(value: int) -> int | None:
    if value < 0:
        return None
    root = isqrt(value)
    return root if root * root == value else None


def solve_degree_square(problem: DegreeSquareProblem) -> tuple[DivisorClass, ...]:
    """All integer classes with the given polarization degree and square.

    Eliminates one variable along the degree line and solves the remaining
    single-variable quadratic exactly; the signature hypothesis makes its
    leading coefficient negative, so at most two candidates exist.
    """
    lattice = problem.lattice
    if lattice.det >= 0:
        raise LatticeSignatureError("degree/square search needs det < 0")
    h2 = lattice.gram[0][0]
    d = lattice.gram[0][1]
    line = _line_solutions(h2, d, problem.degree)
    if line is None:
        return ()
    base, step = line
    quad_a = lattice.pair(step, step)
    quad_b = 2 * lattice.pair(base, step)
    quad_c = lattice.pair(base, base) - problem.square
    disc = quad_b * quad_b - 4 * quad_a * quad_c
    root = _int_sqrt_if_square(disc)
    if root is None:
        return ()
    found = []
    for signed in (root, -root):
        num = -quad_b + signed
        den = 2 * quad_a
        if num % den:
            continue
        cls = base + (num // den) * step
        if cls not in found:
            found.append(cls)
    return tuple(sorted(found, key=lambda c: (c.a, c.b)))


def curve_class_search(lattice: IntersectionLattice, degree: int,
                       min_square: int) -> tuple[DivisorClass, ...]:
    """All classes of the given polarization degree with square >= min_square.

    Finite because the square restricted to the degree line is a downward
    parabola; the window comes from its discriminant.
    """
    if lattice.det >= 0:
        raise LatticeSignatureError("curve class search needs det < 0")
    h2 = lattice.gram[0][0]
    d = lattice.gram[0][1]
    line = _line_solutions(h2, d, degree)
    if line is None:
        return ()
    base, step = line
    quad_a = lattice.pair(step, step)
    quad_b = 2 * lattice.pair(base, step)
    quad_c = lattice.pair(base, base) - min_square
    disc = quad_b * quad_b - 4 * quad_a * quad_c
    if disc < 0:
        return ()
    # Conservative integer window around the real roots, then exact filter.
    spread = isqrt(disc) + 1
    edge1 = Fraction(-quad_b - spread, 2 * quad_a)
    edge2 = Fraction(-quad_b + spread, 2 * quad_a)
    lo = floor(min(edge1, edge2)) - 1
    hi = ceil(max(edge1, edge2)) + 1
    found = []
    for k in range(lo, hi + 1):
        if quad_a * k * k + quad_b * k + quad_c >= 0:
            found.append(base + k * step)
    return tuple(sorted(found, key=lambda c: (c.a, c.b)))


def band_empty(form1: tuple[int, int], range1: Interval,
               form2: tuple[int, int], range2: Interval) -> CheckOutcome:
    """Enumerate integer points with form1 in range1 and form2 in range2.

    Passes when the region holds no integer point; otherwise the full
    witness list is attached.  Proportional forms are rejected since the
    region would be an unbounded strip.
    """
    p, q = form1
    r, s = form2
    det = p * s - q * r
    if det == 0:
        raise DependentFormsError("band forms are linearly dependent")
    witnesses = []
    for u in range1.integers():
        for v in range2.integers():
            a_num = u * s - v * q
            b_num = v * p - u * r
            if a_num % det or b_num % det:
                continue
            witnesses.append([a_num // det, b_num // det])
    witnesses.sort()
    return CheckOutcome(
        name="integer-points-in-band",
        rule="band-enumeration",
        kind=VERIFIED,
        passed=not witnesses,
        inputs={"form1": list(form1), "range1": range1.label(),
                "form2": list(form2), "range2": range2.label()},
        result={"points_found": len(witnesses)},
        witnesses=tuple(witnesses),
    )


def family_solutions(lhs: tuple[int, int], values, side: tuple[int, int],
                     side_bound: int) -> tuple[LinearFamily, ...]:
    """Solution families of lhs . (a,b) = v for each v, filtered by a side form.

    The side constraint side . (a,b) >= side_bound is linear along each
    family, hence either holds identically, fails identically, or restricts
    the parameter to a half-line recorded on the family.
    """
    families = []
    for value in values:
        line = _line_solutions(lhs[0], lhs[1], value)
        if line is None:
            continue
        base, step = line
        c0 = side[0] * base.a + side[1] * base.b
        c1 = side[0] * step.a + side[1] * step.b
        k_min = k_max = None
        if c1 == 0:
            if c0 < side_bound:
                continue
        elif c1 > 0:
            k_min = ceil(Fraction(side_bound - c0, c1))
        else:
            k_max = floor(Fraction(side_bound - c0, c1))
        families.append(LinearFamily(base, step, value, k_min, k_max))
    return tuple(families)


def family_quadratic_max(lattice: IntersectionLattice, family: LinearFamily,
                         exclude: frozenset[int] | set[int] = frozenset()) -> tuple[int, int]:
    """Exact maximum of the square over the family's integer parameters.

    Requires a negative leading coefficient (step of negative square); the
    maximum then sits at one of the admissible integers nearest the real
    vertex, walking outward past any excluded parameters.
    """
    quad_a, quad_b, quad_c = family.square_polynomial(lattice)
    if quad_a >= 0:
        raise FamilyMaxUndefinedError(
            f"leading coefficient {quad_a} >= 0; no integer maximum exists"
        )
    vertex = Fraction(-quad_b, 2 * quad_a)

    def admissible(k: int) -> bool:
        return family.in_window(k) and k not in exclude

    candidates = []
    k = floor(vertex)
    while not admissible(k):
        k -= 1
        if family.k_min is not None and k < family.k_min:
            k = None
            break
    if k is not None:
        candidates.append(k)
    k = max(ceil(vertex), floor(vertex) + 1)
    while not admissible(k):
        k += 1
        if family.k_max is not None and k > family.k_max:
            k = None
            break
    if k is not None:
        candidates.append(k)
    if not candidates:
        raise FamilyMaxUndefinedError("family window is empty after exclusions")

    def value(k: int) -> int:
        return quad_a * k * k + quad_b * k + quad_c

    best = max(candidates, key=value)
    return value(best), best


def effective_decompositions(lattice: IntersectionLattice, target,
                             limit: int = 32) -> tuple[tuple[DivisorClass, ...], ...]:
    """Decompositions of a class into irreducible-curve candidates.

    Candidate components are the classes of positive polarization degree and
    square >= -2 (what an irreducible curve on a K3 may have), used with
    multiplicity.  An empty result certifies the class is not represented by
    an effective curve cycle; a nonempty one is merely inconclusive.
    """
    target = as_class(target)
    total = lattice.degree(target)
    if total < 1:
        return ()
    pool = []
    for deg in range(1, total + 1):
        for cls in curve_class_search(lattice, deg, -2):
            pool.append((deg, cls))
    pool.sort(key=lambda item: (-item[0], item[1].a, item[1].b))
    results: list[tuple[DivisorClass, ...]] = []

    def search(start: int, remaining: DivisorClass, budget: int, chosen: list):
        if len(results) >= limit:
            return
        if remaining.a == 0 and remaining.b == 0:
            if chosen:
                results.append(tuple(chosen))
            return
        if budget <= 0:
            return
        for idx in range(start, len(pool)):
            deg, cls = pool[idx]
            if deg > budget:
                continue
            chosen.append(cls)
            search(idx, remaining - cls, budget - deg, chosen)
            chosen.pop()

    search(0, target, total, [])
    return tuple(results)
