"""Clifford algebra of multivectors for an arbitrary bilinear form.

The product is the Chevalley lift: for a vector x, x*w = (x _| w) + (x ^ w),
extended to blades by left-factor recursion.  Because the form may be
non-symmetric the product does not preserve grades (only the filtration)
and reversion produces lower-grade terms rather than a bare sign.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import RF_L, RF_ONE, RF_Q, RF_ZERO, RatFunc, render_ratfunc
from .exterior import (
    DimensionMismatch,
    Multivector,
    all_blades,
    grade,
    wedge_sign,
)

_HALF = RatFunc.from_fraction(Fraction(1, 2))


class AlgebraError(ValueError):
    """A structural assumption of the algebra was violated."""


class BilinearForm:
    """2n x 2n matrix of exact scalars: entries[i-1][j-1] = B(e_i, e_j)."""

    def __init__(self, entries: list[list[RatFunc]]):
        dim = len(entries)
        if dim % 2 or any(len(row) != dim for row in entries):
            raise ValueError("bilinear form must be a square matrix of even dimension")
        self.n = dim // 2
        self.dim = dim
        self.entries = [list(row) for row in entries]

    def entry(self, i: int, j: int) -> RatFunc:
        return self.entries[i - 1][j - 1]

    def symmetric_part(self) -> "BilinearForm":
        d = self.dim
        return BilinearForm(
            [[(self.entries[i][j] + self.entries[j][i]) * _HALF for j in range(d)] for i in range(d)]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearForm) and self.entries == other.entries

    def render(self) -> str:
        return "\n".join(
            "[" + ", ".join(render_ratfunc(c) for c in row) + "]" for row in self.entries
        )


def build_B(n: int) -> BilinearForm:
    """The block form: B(e_i, e_{n+j}) = q*d_ij on the upper-right block and
    B(e_{n+i}, e_j) = d_ij + l*d_{j,i+1} + (q/l)*d_{j,i-1} on the lower-left."""
    if n < 1:
        raise ValueError("n must be positive")
    d = 2 * n
    z = RF_ZERO
    rows = [[z] * d for _ in range(d)]
    ql = RF_Q / RF_L
    for i in range(1, n + 1):
        rows[i - 1][n + i - 1] = RF_Q
        rows[n + i - 1][i - 1] = RF_ONE
        if i + 1 <= n:
            rows[n + i - 1][i + 1 - 1] = RF_L
        if i - 1 >= 1:
            rows[n + i - 1][i - 1 - 1] = ql
    return BilinearForm(rows)


def build_B_unrestricted(n: int) -> BilinearForm:
    """The same delta list read over all index pairs, not just the two
    off-diagonal blocks; for n >= 2 this adds l at entry (2n, 2n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    d = 2 * n
    rows = []
    ql = RF_Q / RF_L
    for i in range(1, d + 1):
        row = []
        for j in range(1, d + 1):
            c = RF_ZERO
            if i == j - n:
                c = c + RF_Q
            if i - n == j - 1:
                c = c + RF_L
            if i - n == j:
                c = c + RF_ONE
            if i - n - 1 == j:
                c = c + ql
            row.append(c)
        rows.append(row)
    return BilinearForm(rows)


class Algebra:
    """Clifford algebra Cl(V, B) with dim V = 2n; caches blade products."""

    def __init__(self, B: BilinearForm):
        self.B = B
        self.n = B.n
        self.dim = B.dim
        self._mul_cache: dict[tuple[int, int], dict[int, RatFunc]] = {}
        self._rev_cache: dict[int, dict[int, RatFunc]] = {}

    def symmetrized(self) -> "Algebra":
        return Algebra(self.B.symmetric_part())

    # -- blade-level kernels ----------------------------------------------

    def _vector_contract_blade(self, i: int, t: int) -> list[tuple[int, RatFunc]]:
        return _vector_contract(i, t, self.B)

    def _vector_mul(self, i: int, t: int) -> dict[int, RatFunc]:
        out: dict[int, RatFunc] = {}
        for m, c in self._vector_contract_blade(i, t):
            v = out.get(m)
            out[m] = c if v is None else v + c
        sg = wedge_sign(1 << (i - 1), t)
        if sg:
            m = (1 << (i - 1)) | t
            v = out.get(m, RF_ZERO) + (RF_ONE if sg > 0 else -RF_ONE)
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        return {m: c for m, c in out.items() if not c.is_zero()}

    def _blade_mul(self, s: int, t: int) -> dict[int, RatFunc]:
        key = (s, t)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        if s == 0:
            out = {t: RF_ONE}
        else:
            low = s & -s
            i = low.bit_length()
            rest = s ^ low
            if rest == 0:
                out = self._vector_mul(i, t)
            else:
                acc: dict[int, RatFunc] = {}
                for u, c in self._blade_mul(rest, t).items():
                    for w, d in self._blade_mul(low, u).items():
                        v = acc.get(w)
                        cd = c * d
                        acc[w] = cd if v is None else v + cd
                for u2, c2 in self._vector_contract_blade(i, rest):
                    for w, d in self._blade_mul(u2, t).items():
                        v = acc.get(w)
                        cd = c2 * d
                        acc[w] = -cd if v is None else v - cd
                out = {m: c for m, c in acc.items() if not c.is_zero()}
        self._mul_cache[key] = out
        return out

    def _blade_rev(self, s: int) -> dict[int, RatFunc]:
        cached = self._rev_cache.get(s)
        if cached is not None:
            return cached
        if grade(s) <= 1:
            out = {s: RF_ONE}
        else:
            low = s & -s
            i = low.bit_length()
            rest = s ^ low
            acc: dict[int, RatFunc] = {}
            for u, c in self._blade_rev(rest).items():
                for w, d in self._blade_mul(u, low).items():
                    v = acc.get(w)
                    cd = c * d
                    acc[w] = cd if v is None else v + cd
            for u2, c2 in self._vector_contract_blade(i, rest):
                for w, d in self._blade_rev(u2).items():
                    v = acc.get(w)
                    cd = c2 * d
                    acc[w] = -cd if v is None else v - cd
            out = {m: c for m, c in acc.items() if not c.is_zero()}
        self._rev_cache[s] = out
        return out

    # -- multivector-level operations ---------------------------------------

    def _check(self, u: Multivector):
        if u.dim != self.dim:
            raise DimensionMismatch(f"multivector dimension {u.dim} vs algebra {self.dim}")

    def mul(self, u: Multivector, v: Multivector) -> Multivector:
        self._check(u)
        self._check(v)
        acc: dict[int, RatFunc] = {}
        for s, c in u.terms.items():
            for t, d in v.terms.items():
                cd = c * d
                for w, e in self._blade_mul(s, t).items():
                    prev = acc.get(w)
                    val = cd * e
                    acc[w] = val if prev is None else prev + val
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = {m: c for m, c in acc.items() if not c.is_zero()}
        return mv

    def contract(self, u: Multivector, v: Multivector) -> Multivector:
        return contract(u, v, self.B)

    def reversion(self, u: Multivector) -> Multivector:
        self._check(u)
        acc: dict[int, RatFunc] = {}
        for s, c in u.terms.items():
            for w, d in self._blade_rev(s).items():
                prev = acc.get(w)
                val = c * d
                acc[w] = val if prev is None else prev + val
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = {m: c for m, c in acc.items() if not c.is_zero()}
        return mv

    def symmetric_entry(self, i: int, j: int) -> RatFunc:
        return (self.B.entry(i, j) + self.B.entry(j, i)) * _HALF

    def quadratic_value(self, x: Multivector) -> RatFunc:
        """G(x, x) for a grade-1 vector x, via the symmetric part of B."""
        acc = RF_ZERO
        items = list(x.terms.items())
        for m1, c1 in items:
            i = m1.bit_length()
            for m2, c2 in items:
                j = m2.bit_length()
                acc = acc + c1 * c2 * self.symmetric_entry(i, j)
        return acc

    def blades(self):
        return all_blades(self.dim)


def cl_mul(u: Multivector, v: Multivector, alg: Algebra) -> Multivector:
    return alg.mul(u, v)


def reversion(u: Multivector, alg: Algebra) -> Multivector:
    return alg.reversion(u)


def clifford_map_square(x: Multivector, alg: Algebra) -> RatFunc:
    """Scalar c with x*x = c for a grade-1 vector; checked against G(x,x)."""
    if x.grades() not in ((), (1,)):
        raise AlgebraError("argument must be homogeneous of grade 1")
    sq = alg.mul(x, x)
    if not sq.is_scalar():
        raise AlgebraError("square of a vector is not scalar: product kernel broken")
    c = sq.scalar_part()
    if c != alg.quadratic_value(x):
        raise AlgebraError("vector square disagrees with the quadratic form")
    return c


def _vector_contract(i: int, t: int, B: BilinearForm) -> list[tuple[int, RatFunc]]:
    """e_i _| e_T as (mask, coeff) pairs: alternating-sign Laplace rule."""
    out = []
    row = B.entries[i - 1]
    sign = 1
    rest = t
    while rest:
        low = rest & -rest
        j = low.bit_length()
        c = row[j - 1]
        if not c.is_zero():
            out.append((t ^ low, -c if sign < 0 else c))
        sign = -sign
        rest ^= low
    return out


def _blade_contract(s: int, t: int, B: BilinearForm) -> dict[int, RatFunc]:
    # (e_i ^ e_rest) _| w = e_i _| (e_rest _| w); scalars contract as scalars
    if s == 0:
        return {t: RF_ONE}
    low = s & -s
    i = low.bit_length()
    rest = s ^ low
    if rest == 0:
        return dict(_vector_contract(i, t, B))
    acc: dict[int, RatFunc] = {}
    for u, c in _blade_contract(rest, t, B).items():
        for w, d in _vector_contract(i, u, B):
            prev = acc.get(w)
            val = c * d
            acc[w] = val if prev is None else prev + val
    return {m: c for m, c in acc.items() if not c.is_zero()}


def contract(u: Multivector, v: Multivector, B: BilinearForm) -> Multivector:
    """Left contraction u _| v for the form B, bilinear in both arguments."""
    if u.dim != v.dim or u.dim != B.dim:
        raise DimensionMismatch("contraction operands must share the form's dimension")
    acc: dict[int, RatFunc] = {}
    for s, c in u.terms.items():
        for t, d in v.terms.items():
            cd = c * d
            for w, e in _blade_contract(s, t, B).items():
                prev = acc.get(w)
                val = cd * e
                acc[w] = val if prev is None else prev + val
    mv = Multivector.__new__(Multivector)
    mv.dim = u.dim
    mv.terms = {m: c for m, c in acc.items() if not c.is_zero()}
    return mv
