"""Simplicial cone machinery: fundamental simplices, levels, atomic
lattice points and the discrete-cone partition check.

A ConeBasis is an ordered list of d linearly independent integer
generators v_1, ..., v_d in ambient dimension n >= d.  Every point of
the real cone has a unique coefficient vector lambda with z = V lambda.
Writing lev(lambda) for the integer with lev-1 < sum(lambda) <= lev and
deg(lambda) for the smallest index j with lambda_j > 1 (d+1 if none),
a lattice point with all lambda_i > 0 is *atomic* exactly when
deg(lambda) >= lev(lambda).  The atomic points all lie in the half-open
fundamental simplex {V lambda : lambda > 0, sum(lambda) <= d}, and
translating the discrete cone of the first lev generators to each atomic
point partitions the lattice points of the open cone.

Enumeration works in scaled integer coordinates: with t = denom * lambda
(an integer vector computed by a precomputed exact solve template) every
membership test below is pure integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .exact import (IntVector, RatVector, Scalar, SolveTemplate,
                    span_lattice_basis)

Constraint = tuple[Sequence[int], Optional[int], Optional[int]]


def scan_constrained(bounds: Sequence[tuple[int, int]],
                     constraints: Sequence[Constraint],
                     ) -> Iterator[tuple[IntVector, list[int]]]:
    """Enumerate integer points z of a box subject to linear constraints
    lo <= coeffs . z <= hi (either bound may be None).

    Depth-first over coordinates with interval pruning: a branch is cut
    as soon as some constraint cannot be met by any completion.  Yields
    (z, values) in lexicographic order; `values` (aligned with the
    constraints) is a reused buffer -- copy it before storing.
    """
    n = len(bounds)
    if any(lo > hi for lo, hi in bounds):
        return
    rows = [tuple(c[0]) for c in constraints]
    m = len(rows)
    # Suffix extremes of the possible contribution of coordinates j..n-1.
    suf_min = [[0] * m for _ in range(n + 1)]
    suf_max = [[0] * m for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        lo, hi = bounds[j]
        for r in range(m):
            a, b = rows[r][j] * lo, rows[r][j] * hi
            if a > b:
                a, b = b, a
            suf_min[j][r] = suf_min[j + 1][r] + a
            suf_max[j][r] = suf_max[j + 1][r] + b
    # Replace missing bounds with values that can never bind.
    lowers = [suf_min[0][r] if constraints[r][1] is None else constraints[r][1]
              for r in range(m)]
    uppers = [suf_max[0][r] if constraints[r][2] is None else constraints[r][2]
              for r in range(m)]
    point = [0] * n
    stack = [[0] * m for _ in range(n + 1)]

    def descend(j: int) -> Iterator[tuple[IntVector, list[int]]]:
        current = stack[j]
        if j == n:
            yield tuple(point), current
            return
        lo, hi = bounds[j]
        nxt = stack[j + 1]
        smin, smax = suf_min[j + 1], suf_max[j + 1]
        for v in range(lo, hi + 1):
            feasible = True
            for r in range(m):
                value = current[r] + rows[r][j] * v
                if value + smax[r] < lowers[r] or value + smin[r] > uppers[r]:
                    feasible = False
                    break
                nxt[r] = value
            if feasible:
                point[j] = v
                yield from descend(j + 1)

    yield from descend(0)


def skew_parts(x: Scalar) -> tuple[int, Fraction]:
    """Split x = whole + part with part in the half-open interval (0, 1].

    Unlike floor/frac, integers split as x = (x-1) + 1.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return int(x) - 1, Fraction(1)
    whole = math.floor(x)
    return whole, x - whole


def skew_parts_vector(v: Sequence[Scalar]) -> tuple[IntVector, RatVector]:
    parts = [skew_parts(x) for x in v]
    return tuple(p[0] for p in parts), tuple(p[1] for p in parts)


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients of a point of the open cone, with its level and the
    smallest 1-based index whose coefficient exceeds 1 (d+1 if none)."""

    lambdas: RatVector
    level: int
    degree: int

    def __post_init__(self):
        expected = CoefficientVector._derive(self.lambdas)
        if (self.level, self.degree) != expected:
            raise ValueError("level/degree inconsistent with coefficients")

    @staticmethod
    def _derive(lambdas: RatVector) -> tuple[int, int]:
        if any(x <= 0 for x in lambdas):
            raise ValueError("coefficients must be positive")
        total = sum(lambdas)
        level = -((-total.numerator) // total.denominator)  # ceil
        degree = next((j + 1 for j, x in enumerate(lambdas) if x > 1),
                      len(lambdas) + 1)
        return level, degree

    @classmethod
    def from_lambdas(cls, lambdas: Iterable[Scalar]) -> "CoefficientVector":
        lambdas = tuple(Fraction(x) for x in lambdas)
        return cls(lambdas, *cls._derive(lambdas))


def is_atomic(c: CoefficientVector) -> bool:
    """No coefficient before the level index exceeds 1."""
    return c.degree >= c.level


@dataclass(frozen=True)
class AtomicPoint:
    point: IntVector
    coefficients: CoefficientVector

    @property
    def level(self) -> int:
        return self.coefficients.level

    @property
    def height(self) -> int:
        return self.point[-1]


class ConeBasis:
    """Ordered, linearly independent integer generators of a simplicial
    cone.  The generator order is significant and preserved."""

    def __init__(self, generators: Iterable[Sequence[int]]):
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if not gens:
            raise ValueError("at least one generator required")
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError("generators must share one ambient dimension")
        if len(gens) > n:
            raise ValueError("generators not linearly independent")
        self.generators = gens
        self.ambient_dim = n
        self.dim = len(gens)
        # Raises "generators not linearly independent" on a rank defect.
        self.solver = SolveTemplate(
            [[gens[i][r] for i in range(self.dim)] for r in range(n)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ConeBasis) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"ConeBasis({list(map(list, self.generators))!r})"

    def _coefficient_constraints(self) -> tuple[list[Constraint], int]:
        """Rows computing t = denom*lambda plus zero-residual rows."""
        rows = [(row, None, None) for row in self.solver.rows]
        rows += [(row, 0, 0) for row in self.solver.residual_rows]
        return rows, len(self.solver.rows)

    @cached_property
    def _reduced(self) -> Optional[tuple["ConeBasis", tuple[IntVector, ...]]]:
        """For fewer generators than ambient dimensions: the same cone
        expressed over a lattice basis of span intersect Z^n, so that
        enumerations can run in the (small) span coordinates.  None when
        the cone is already full-dimensional."""
        if self.ambient_dim == self.dim:
            return None
        span = span_lattice_basis(self.generators)
        coord_solver = SolveTemplate(
            [[span[j][c] for j in range(self.dim)]
             for c in range(self.ambient_dim)])
        coords = []
        for g in self.generators:
            sol = coord_solver.solve(g)
            assert sol is not None and all(x.denominator == 1 for x in sol)
            coords.append([int(x) for x in sol])
        return ConeBasis(coords), tuple(span)


def coefficients_of(basis: ConeBasis,
                    point: Sequence[int]) -> Optional[CoefficientVector]:
    """Exact coefficients of a lattice point, or None when the point is
    not in the open cone (off the span or some coefficient <= 0)."""
    if len(point) != basis.ambient_dim:
        raise ValueError("point dimension mismatch")
    scaled = basis.solver.scaled_solution([int(x) for x in point])
    if scaled is None or any(t <= 0 for t in scaled):
        return None
    denom = basis.solver.denom
    return CoefficientVector.from_lambdas(
        Fraction(t, denom) for t in scaled)


def _fundamental_box(basis: ConeBasis, scale: int) -> list[tuple[int, int]]:
    # Bounding box of conv(0, scale*v_1, ..., scale*v_d).
    bounds = []
    for c in range(basis.ambient_dim):
        coords = [g[c] for g in basis.generators]
        bounds.append((min(0, scale * min(coords)),
                       max(0, scale * max(coords))))
    return bounds


def _map_from_span(point: Sequence[int], span: Sequence[IntVector],
                   ambient: int) -> IntVector:
    return tuple(sum(point[j] * span[j][c] for j in range(len(point)))
                 for c in range(ambient))


def _cone_points_scaled(basis: ConeBasis, max_level: int,
                        ) -> tuple[Iterator[tuple[IntVector, list[int]]], int]:
    """Iterator over (point, values buffer) for the open-cone lattice
    points with level <= max_level, plus the scaling denominator; the
    first basis.dim buffer entries are denominator*coefficients.  The
    buffer is reused between yields."""
    reduced = basis._reduced
    if reduced is not None:
        inner_basis, span = reduced
        inner, denom = _cone_points_scaled(inner_basis, max_level)
        n = basis.ambient_dim

        def mapped() -> Iterator[tuple[IntVector, list[int]]]:
            for y, vals in inner:
                yield _map_from_span(y, span, n), vals

        return mapped(), denom
    denom = basis.solver.denom
    d = basis.dim
    constraints, n_rows = basis._coefficient_constraints()
    constraints = [(row, 1, max_level * denom)
                   for row, _, _ in constraints[:n_rows]] + constraints[n_rows:]
    sum_row = tuple(sum(col) for col in zip(*(r for r, _, _ in constraints[:d])))
    constraints.append((sum_row, d, max_level * denom))
    return (scan_constrained(_fundamental_box(basis, max_level), constraints),
            denom)


def _parallelepiped_scaled(basis: ConeBasis,
                           ) -> tuple[list[tuple[IntVector, list[int]]], int]:
    """Lattice points of {V lambda : 0 <= lambda_i < 1} with their scaled
    coefficient vectors, sorted by point, plus the scaling denominator."""
    reduced = basis._reduced
    if reduced is not None:
        inner_basis, span = reduced
        items, denom = _parallelepiped_scaled(inner_basis)
        n = basis.ambient_dim
        mapped = [(_map_from_span(y, span, n), t) for y, t in items]
        mapped.sort(key=lambda item: item[0])
        return mapped, denom
    denom = basis.solver.denom
    bounds = []
    for c in range(basis.ambient_dim):
        coords = [g[c] for g in basis.generators]
        bounds.append((sum(x for x in coords if x < 0),
                       sum(x for x in coords if x > 0)))
    constraints, n_rows = basis._coefficient_constraints()
    constraints = [(row, 0, denom - 1)
                   for row, _, _ in constraints[:n_rows]] + constraints[n_rows:]
    return ([(z, vals[:n_rows])
             for z, vals in scan_constrained(bounds, constraints)], denom)


def parallelepiped_points(basis: ConeBasis) -> tuple[IntVector, ...]:
    """All lattice points V lambda with 0 <= lambda_i < 1, sorted."""
    return tuple(z for z, _ in _parallelepiped_scaled(basis)[0])


def _bounded_exponents(slots: int, total: int) -> Iterator[tuple[int, ...]]:
    # All non-negative integer vectors with component sum <= total.
    if slots == 0:
        yield ()
        return
    for v in range(total + 1):
        for rest in _bounded_exponents(slots - 1, total - v):
            yield (v,) + rest


def _scaled_atomic(basis: ConeBasis,
                   ) -> tuple[list[tuple[IntVector, list[int]]], int]:
    """Atomic points as (point, scaled coefficients) sorted by point,
    plus the scaling denominator.

    Every lattice point of the closed fundamental simplex decomposes
    uniquely as a parallelepiped lattice point plus a non-negative
    integer combination of the generators, so the candidates are walked
    without scanning the full bounding box.
    """
    d = basis.dim
    gens = basis.generators
    base_points, denom = _parallelepiped_scaled(basis)
    found = []
    for base_point, base_coeffs in base_points:
        budget = (d * denom - sum(base_coeffs)) // denom
        for exponents in _bounded_exponents(d, budget):
            t = [base_coeffs[i] + exponents[i] * denom for i in range(d)]
            if 0 in t:
                continue
            total = sum(t)
            level = -((-total) // denom)  # ceil(total / denom)
            if any(t[j] > denom for j in range(level - 1)):
                continue  # not atomic
            z = tuple(base_point[c]
                      + sum(exponents[i] * gens[i][c] for i in range(d))
                      for c in range(basis.ambient_dim))
            found.append((z, t))
    found.sort(key=lambda item: item[0])
    return found, denom


def _to_atomic_point(z: IntVector, scaled: Sequence[int],
                     denom: int) -> AtomicPoint:
    coeffs = CoefficientVector.from_lambdas(
        Fraction(t, denom) for t in scaled)
    return AtomicPoint(z, coeffs)


def enumerate_atomic(basis: ConeBasis) -> tuple[AtomicPoint, ...]:
    """All atomic lattice points of the cone, sorted by point.

    These are the points of the half-open fundamental simplex whose
    coefficient vector satisfies the atomicity characterization; there
    are finitely many, all at level <= d.
    """
    found, denom = _scaled_atomic(basis)
    return tuple(_to_atomic_point(z, t, denom) for z, t in found)


def atomic_inductive_oracle(basis: ConeBasis) -> tuple[AtomicPoint, ...]:
    """Atomic points computed literally from the inductive definition:
    level-1 points of the half-open fundamental simplex are kept, and
    each higher level keeps the points not reachable from a kept
    lower-level point by adding generators up to that point's level.

    Test oracle for enumerate_atomic; scans the full bounding box.
    """
    d = basis.dim
    points, denom = _cone_points_scaled(basis, d)
    by_level: dict[int, list[tuple[IntVector, list[int]]]] = {}
    for z, vals in points:
        t = vals[:d]
        total = sum(t)
        level = -((-total) // denom)
        by_level.setdefault(level, []).append((z, t))
    kept: list[tuple[IntVector, list[int], int]] = []
    for level in range(1, d + 1):
        new = []
        for z, t in by_level.get(level, ()):
            reachable = False
            for _, t_low, level_low in kept:
                diff = [a - b for a, b in zip(t, t_low)]
                if (all(x == 0 for x in diff[level_low:])
                        and all(x >= 0 and x % denom == 0
                                for x in diff[:level_low])):
                    reachable = True
                    break
            if not reachable:
                new.append((z, t, level))
        kept.extend(new)
    kept.sort(key=lambda item: item[0])
    return tuple(_to_atomic_point(z, t, denom) for z, t, _ in kept)


@dataclass(frozen=True)
class PartitionReport:
    """Result of checking that the atomic discrete cones cover every
    open-cone lattice point up to a level exactly once."""

    passed: bool
    max_level: int
    points_checked: int
    atomic_count: int
    violations: tuple[tuple[IntVector, int], ...] = field(default=())


def verify_partition(basis: ConeBasis, max_level: int) -> PartitionReport:
    """Check, for every lattice point z of the open cone with level at
    most max_level, that exactly one atomic point a has
    z in a + discrete cone of the first lev(a) generators."""
    atomics, denom = _scaled_atomic(basis)
    points, denom_points = _cone_points_scaled(basis, max_level)
    assert denom == denom_points
    # Group by the componentwise remainder mod denom: translation by an
    # integer generator combination never changes it.
    groups: dict[tuple[int, ...], list[tuple[list[int], int]]] = {}
    for _, t in atomics:
        total = sum(t)
        level = -((-total) // denom)
        key = tuple(x % denom for x in t)
        groups.setdefault(key, []).append((t, level))
    checked = 0
    violations = []
    d = basis.dim
    for z, vals in points:
        checked += 1
        covers = 0
        key = tuple(vals[j] % denom for j in range(d))
        for t_a, level_a in groups.get(key, ()):
            diff_ok = all(vals[j] == t_a[j] for j in range(level_a, d))
            if diff_ok and all(vals[j] >= t_a[j] for j in range(level_a)):
                covers += 1
        if covers != 1:
            violations.append((z, covers))
    return PartitionReport(passed=not violations, max_level=max_level,
                           points_checked=checked, atomic_count=len(atomics),
                           violations=tuple(violations))
