"""Exact linear algebra over Q(s, l): ranks, nullspaces, solving, and
matrices of left-multiplication operators.

Rank uses fraction-free (Bareiss) elimination on denominator-cleared
polynomial entries to contain expression swell; nullspace and solving use
straight field arithmetic, which is fine at the sizes that occur here
(nothing beyond 64 x 16).
"""

from __future__ import annotations

from .coeff import P_ONE, Poly, RF_ONE, RF_ZERO, RatFunc, poly_gcd, render_ratfunc
from .clifford import Algebra
from .exterior import Multivector, all_blades


class SpanError(ValueError):
    """A vector failed to lie in the span of the given basis."""


class Matrix:
    """Dense matrix of exact scalars."""

    def __init__(self, entries: list[list[RatFunc]]):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[RF_ONE if i == j else RF_ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[RF_ZERO] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(cols: list[list[RatFunc]]) -> "Matrix":
        if not cols:
            return Matrix.zero(0, 0)
        return Matrix([[col[i] for col in cols] for i in range(len(cols[0]))])

    def column(self, j: int) -> list[RatFunc]:
        return [row[j] for row in self.entries]

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = RF_ZERO
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self.entries for c in row)

    def render(self) -> str:
        return "\n".join(
            "[" + ", ".join(render_ratfunc(c) for c in row) + "]" for row in self.entries
        )


def _cleared_rows(M: Matrix) -> list[list[Poly]]:
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in M.entries:
        lcm = P_ONE
        for c in row:
            if not c.den.is_one():
                g = poly_gcd(lcm, c.den)
                lcm = lcm * c.den.exact_div(g)
        out.append([c.num * lcm.exact_div(c.den) for c in row])
    return out


def rank(M: Matrix) -> int:
    """Exact rank by one-step fraction-free elimination with exact divisions."""
    if M.rows == 0 or M.cols == 0:
        return 0
    a = _cleared_rows(M)
    rows, cols = M.rows, M.cols
    r = 0
    prev = P_ONE
    for c in range(cols):
        # pivot: nonzero entry of minimal total degree in this column
        pivot = -1
        best = -1
        for i in range(r, rows):
            if not a[i][c].is_zero():
                d = a[i][c].total_degree()
                if pivot < 0 or d < best:
                    pivot, best = i, d
        if pivot < 0:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).exact_div(prev)
            a[i][c] = Poly()
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def rank_field(M: Matrix) -> int:
    """Rank by plain Gaussian elimination over the field (cross-check path)."""
    a = [row[:] for row in M.entries]
    rows, cols = M.rows, M.cols
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not a[i][c].is_zero()), -1)
        if pivot < 0:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def _rref(M: Matrix) -> tuple[list[list[RatFunc]], list[int]]:
    a = [row[:] for row in M.entries]
    rows, cols = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not a[i][c].is_zero()), -1)
        if pivot < 0:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def nullspace(M: Matrix) -> list[list[RatFunc]]:
    """Basis of the right nullspace; one vector per free column."""
    a, pivots = _rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [RF_ZERO] * M.cols
        v[f] = RF_ONE
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        basis.append(v)
    return basis


def solve(M: Matrix, rhs: list[RatFunc]) -> list[RatFunc] | None:
    """One solution of M x = rhs, or None when the system is inconsistent."""
    if len(rhs) != M.rows:
        raise ValueError("right-hand side length mismatch")
    aug = Matrix([row + [b] for row, b in zip(M.entries, rhs)])
    a, pivots = _rref(aug)
    if M.cols in pivots:
        return None
    x = [RF_ZERO] * M.cols
    for r, p in enumerate(pivots):
        x[p] = a[r][M.cols]
    return x


# ---------------------------------------------------------------------------
# multivector coordinates
# ---------------------------------------------------------------------------

def mv_coordinate_matrix(vectors: list[Multivector], dim: int) -> Matrix:
    """Columns are blade coordinates of the vectors, blade masks ascending."""
    blades = list(all_blades(dim))
    return Matrix.from_columns([[v.coeff(m) for m in blades] for v in vectors])


def mv_rank(vectors: list[Multivector], dim: int) -> int:
    return rank(mv_coordinate_matrix(vectors, dim))


def coords_in_basis(basis: list[Multivector], target: Multivector) -> list[RatFunc]:
    """Coordinates of target in the given multivector basis; SpanError if outside."""
    dim = basis[0].dim
    blades = list(all_blades(dim))
    M = Matrix.from_columns([[v.coeff(m) for m in blades] for v in basis])
    x = solve(M, [target.coeff(m) for m in blades])
    if x is None:
        raise SpanError("target multivector is outside the span of the basis")
    return x


def left_mult_matrix(
    a: Multivector,
    domain_basis: list[Multivector],
    alg: Algebra,
    codomain_basis: list[Multivector] | None = None,
) -> Matrix:
    """Matrix of v -> a*v from the domain basis to the codomain basis
    (default codomain: all blades of the algebra)."""
    images = [alg.mul(a, v) for v in domain_basis]
    if codomain_basis is None:
        blades = list(all_blades(alg.dim))
        return Matrix.from_columns([[img.coeff(m) for m in blades] for img in images])
    return Matrix.from_columns([coords_in_basis(codomain_basis, img) for img in images])
