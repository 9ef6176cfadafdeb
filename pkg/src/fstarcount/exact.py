"""Exact arithmetic substrate: rationals, vectors, exact linear solving,
generalized binomial coefficients and dense univariate polynomials.

Scalars are `fractions.Fraction` (arbitrary precision, always in lowest
terms with positive denominator), so every operation in this package is
exact; there is no floating point anywhere.

Vectors are plain tuples: `IntVector = tuple[int, ...]` and
`RatVector = tuple[Fraction, ...]`.  A matrix is a tuple of row vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
RatMatrix = tuple[RatVector, ...]

Scalar = Union[int, Fraction]


def gen_binomial(k: int, i: int) -> int:
    """Binomial coefficient k over i as the falling factorial
    k (k-1) ... (k-i+1) / i!, defined for every integer k and i >= 0.

    gen_binomial(k, 0) == 1 for all k, and e.g. gen_binomial(-1, 2) == 1.
    """
    if i < 0:
        raise ValueError("lower index must be non-negative")
    num = 1
    for j in range(i):
        num *= k - j
    return num // factorial(i)  # exact: the product is divisible by i!


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum(a * b for a, b in zip(u, v))


def _rref(rows: list[list[Fraction]]) -> list[int]:
    """Reduced row echelon form in place; returns the pivot columns."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    return len(_rref(work))


def solve_exact(matrix: Sequence[Sequence[Scalar]],
                rhs: Sequence[Scalar]) -> Optional[RatVector]:
    """Solve `matrix @ x = rhs` exactly for a matrix with full column rank.

    Returns the unique solution, or None when rhs is outside the column
    span (possible only for more rows than columns).  Raises ValueError
    when the columns are linearly dependent.
    """
    if len(rhs) != len(matrix):
        raise ValueError("right-hand side length mismatch")
    n_cols = len(matrix[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)]
           for row, b in zip(matrix, rhs)]
    pivots = _rref(aug)
    column_pivots = [p for p in pivots if p < n_cols]
    if len(column_pivots) < n_cols:
        raise ValueError("generators not linearly independent")
    if n_cols in pivots:
        return None
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(column_pivots):
        solution[c] = aug[r][-1]
    return tuple(solution)


class SolveTemplate:
    """Precomputed exact solver for `matrix @ x = z` with a fixed matrix
    and many right-hand sides.

    Row-reducing [matrix | I] once yields an integer matrix `rows` and a
    positive integer `denom` with  x_i = (rows[i] . z) / denom,  valid
    exactly when every residual row annihilates z (for square full-rank
    matrices there are no residual rows).  Keeping the scaled integer
    form lets enumeration loops stay in pure integer arithmetic.
    """

    __slots__ = ("n_rows", "n_cols", "rows", "denom", "residual_rows")

    def __init__(self, matrix: Sequence[Sequence[Scalar]]):
        n = len(matrix)
        d = len(matrix[0])
        aug = [[Fraction(x) for x in row]
               + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(matrix)]
        pivots = _rref(aug)
        if [p for p in pivots if p < d] != list(range(d)):
            raise ValueError("generators not linearly independent")
        transform = [row[d:] for row in aug]
        denom = lcm(*(x.denominator for row in transform[:d] for x in row), 1)
        self.n_rows = n
        self.n_cols = d
        self.denom = denom
        self.rows = tuple(tuple(int(x * denom) for x in row)
                          for row in transform[:d])
        residuals = []
        for row in transform[d:]:
            scale = lcm(*(x.denominator for x in row), 1)
            residuals.append(tuple(int(x * scale) for x in row))
        self.residual_rows = tuple(residuals)

    def scaled_solution(self, z: Sequence[int]) -> Optional[list[int]]:
        """denom * x as integers, or None when z is off the column span."""
        for row in self.residual_rows:
            if dot(row, z) != 0:
                return None
        return [dot(row, z) for row in self.rows]

    def solve(self, z: Sequence[int]) -> Optional[RatVector]:
        scaled = self.scaled_solution(z)
        if scaled is None:
            return None
        return tuple(Fraction(t, self.denom) for t in scaled)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, u, v with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def integer_kernel(rows: Sequence[Sequence[int]]) -> list[IntVector]:
    """Basis of {v integral : rows @ v = 0}, via unimodular column
    reduction of the matrix stacked on an identity block."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    cols = [[rows[r][c] for r in range(m)] + [int(i == c) for i in range(n)]
            for c in range(n)]
    fixed = 0
    for r in range(m):
        piv = next((j for j in range(fixed, n) if cols[j][r] != 0), None)
        if piv is None:
            continue
        cols[fixed], cols[piv] = cols[piv], cols[fixed]
        for j in range(fixed + 1, n):
            if cols[j][r] == 0:
                continue
            a, b = cols[fixed][r], cols[j][r]
            g, u, v = _xgcd(a, b)
            p, q = a // g, b // g
            head, other = cols[fixed], cols[j]
            cols[fixed] = [u * x + v * y for x, y in zip(head, other)]
            cols[j] = [p * y - q * x for x, y in zip(head, other)]
        fixed += 1
    return [tuple(col[m:]) for col in cols[fixed:]]


def span_lattice_basis(vectors: Sequence[Sequence[int]]) -> list[IntVector]:
    """Basis of the lattice span_R(vectors) intersect Z^n, for linearly
    independent integer vectors.

    Row-reducing the vectors gives rational rows R with identity on the
    pivot columns, so integral span points correspond to integer
    combinations y with y @ R integral on the non-pivot columns -- a
    congruence sublattice of Z^d computed by an integer kernel.
    """
    d = len(vectors)
    n = len(vectors[0])
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots = _rref(rows)
    if len(pivots) != d:
        raise ValueError("generators not linearly independent")
    denom = lcm(*(x.denominator for row in rows for x in row), 1)
    free_cols = [c for c in range(n) if c not in pivots]
    if denom == 1 or not free_cols:
        combos = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    else:
        # y is admissible iff sum_r y_r * (denom * R[r][c]) = 0 mod denom
        # for every non-pivot column c.
        constraint = [[int(rows[r][c] * denom) for r in range(d)]
                      + [-denom if i == k else 0 for i in range(len(free_cols))]
                      for k, c in enumerate(free_cols)]
        kernel = integer_kernel(constraint)
        combos = [vec[:d] for vec in kernel]
        assert len(combos) == d
    basis = []
    for y in combos:
        x = [sum(y[r] * rows[r][c] for r in range(d)) for c in range(n)]
        assert all(value.denominator == 1 for value in x)
        basis.append(tuple(int(value) for value in x))
    return basis


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    coefficients[i] is the coefficient of the i-th power; trailing zeros
    are trimmed, and the zero polynomial has degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, point: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * point + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients])

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial([c * x for x in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        out = Polynomial((1,))
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Polynomial)
                and self.coefficients == other.coefficients)

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)!r})"

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")


def binomial_poly(shift: int, i: int) -> Polynomial:
    """The binomial coefficient (k + shift) over i as a polynomial in k."""
    p = Polynomial((1,))
    for j in range(i):
        p = p * Polynomial((shift - j, 1))
    return p * Fraction(1, factorial(i))
