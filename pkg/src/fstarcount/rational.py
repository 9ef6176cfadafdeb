"""Counting functions of rational open simplices.

Dilates of a rational simplex are counted by a quasipolynomial: one
polynomial per residue class of the dilate modulo a period m.  With the
anchoring used here, residue class l in {0..m-1} describes the heights
h = (k-1)m + l + 1 for k >= 1, and its f*-vector entry i equals the
number of atomic points of the cone over the simplex embedded at height
m whose level is i+1 and whose last coordinate is i*m + l + 1.

The alternative route embeds each vertex at its own minimal integral
height m_i; the counting function then expands over restricted
partition functions of the height multiset, weighted by the atomic
points' (level, height) profile.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .bases import FStarVector, eval_fstar
from .cones import ConeBasis, enumerate_atomic
from .simplices import Simplex, homogenize


def restricted_partition(weights: Sequence[int], target: int) -> int:
    """Number of ways to write target as a non-negative integer
    combination of the weights (order of summands irrelevant).
    0 for negative targets; 1 for target 0."""
    if any(int(w) < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    if target < 0:
        return 0
    ways = [0] * (target + 1)
    ways[0] = 1
    for w in weights:
        for value in range(w, target + 1):
            ways[value] += ways[value - w]
    return ways[target]


@dataclass(frozen=True)
class EhrhartQuasiPolynomial:
    """Period m plus one f*-vector per residue class; the vector at
    index l covers the heights congruent to l+1 mod m."""

    period: int
    ambient_degree: int
    residue_fstar: tuple[FStarVector, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.residue_fstar) != self.period:
            raise ValueError("one residue vector per residue class required")


def residue_fstar(simplex: Simplex, period: int) -> EhrhartQuasiPolynomial:
    """Quasipolynomial of an open rational simplex for a period that
    makes period*simplex integral.

    Atomic points of the height-`period` cone at level i+1 have last
    coordinate i*period + l + 1 for a unique residue l; bucketing them
    by (l, i) gives the residue f*-vectors.
    """
    if not simplex.is_open:
        raise ValueError("simplex must be open")
    basis = homogenize(simplex, period)  # raises if the period is no good
    d = simplex.dim
    buckets = [[Fraction(0)] * (d + 1) for _ in range(period)]
    for atom in enumerate_atomic(basis):
        i = atom.level - 1
        residue = atom.height - i * period - 1
        assert 0 <= residue < period
        buckets[residue][i] += 1
    return EhrhartQuasiPolynomial(
        period, d,
        tuple(FStarVector(tuple(b), d) for b in buckets))


def quasi_eval(qp: EhrhartQuasiPolynomial, height: int) -> int:
    """Value at a dilate h >= 1, via h = (k-1)m + l + 1."""
    if height < 1:
        raise ValueError("height must be positive")
    m = qp.period
    residue = (height - 1) % m
    k = (height - 1) // m + 1
    value = eval_fstar(qp.residue_fstar[residue], k)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class AtomicHeightProfile:
    """counts[(i, s)] is the number of atomic points at level i+1 with
    last coordinate s, for the mixed-height cone over a simplex.

    Heights can exceed the sum of the generator heights (witness: the
    open segment (0, 2/3) has an atomic point at height 5 while the
    generator heights sum to 4); they never exceed generators * max
    height, the ceiling the fundamental simplex does guarantee."""

    counts: Mapping[tuple[int, int], int]
    generator_count: int
    max_height: int

    def __post_init__(self):
        bound = self.generator_count * self.max_height
        for (i, s), c in self.counts.items():
            if not (0 <= i < self.generator_count and 0 <= s <= bound):
                raise ValueError("profile key out of range")
            if c < 0:
                raise ValueError("profile counts must be non-negative")

    def total(self) -> int:
        return sum(self.counts.values())


def mixed_profile(simplex: Simplex) -> tuple[AtomicHeightProfile,
                                             tuple[int, ...]]:
    """Embed vertex j at its minimal integral height m_j (lcm of its
    coordinate denominators) and profile the atomic points of the
    resulting cone by (level-1, last coordinate).  Returns the profile
    and the heights in vertex order."""
    if not simplex.is_open:
        raise ValueError("simplex must be open")
    heights = tuple(lcm(*(x.denominator for x in v), 1)
                    for v in simplex.vertices)
    generators = [tuple(int(x * m) for x in v) + (m,)
                  for v, m in zip(simplex.vertices, heights)]
    basis = ConeBasis(generators)
    counts: dict[tuple[int, int], int] = {}
    for atom in enumerate_atomic(basis):
        key = (atom.level - 1, atom.height)
        counts[key] = counts.get(key, 0) + 1
    profile = AtomicHeightProfile(counts, len(generators), max(heights))
    return profile, heights


def count_via_profile(simplex: Simplex, dilate: int) -> int:
    """Count lattice points of dilate*simplex from the mixed-height
    profile: each atomic point at level i+1 and height s contributes the
    restricted partition count of dilate - s over the first i+1 vertex
    heights."""
    if dilate < 1:
        raise ValueError("dilate must be positive")
    profile, heights = mixed_profile(simplex)
    total = 0
    for (i, s), c in profile.counts.items():
        total += c * restricted_partition(heights[:i + 1], dilate - s)
    return total
