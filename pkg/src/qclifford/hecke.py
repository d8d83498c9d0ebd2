"""Hecke generators as bivectors b_i = e_i ^ e_{n+i} and their algebra.

verify_relations checks the quadratic, distant-commutation and braid
relation families symbolically; failures come back as data (the nonzero
difference), never as exceptions, so experiments with modified forms can
report what breaks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import RF_ONE, RF_Q, RatFunc
from .clifford import Algebra, build_B
from .exterior import Multivector, mask_of
from . import exactla


@dataclass(frozen=True)
class RelationResult:
    """Outcome of one symbolic identity check."""

    id: str
    statement: str
    difference: Multivector

    @property
    def holds(self) -> bool:
        return self.difference.is_zero()


@dataclass(frozen=True)
class HeckeContext:
    alg: Algebra
    generators: tuple[Multivector, ...]

    @property
    def n(self) -> int:
        return self.alg.n

    @property
    def dim(self) -> int:
        return self.alg.dim


def hecke_context(n: int, algebra: Algebra | None = None, check: bool = True) -> HeckeContext:
    """Build the context for n generators; check=False skips the quadratic
    relation assertion (needed for deliberately broken forms)."""
    alg = algebra if algebra is not None else Algebra(build_B(n))
    if alg.n != n:
        raise ValueError(f"algebra dimension {alg.dim} does not fit n={n}")
    gens = tuple(
        Multivector.blade(alg.dim, mask_of((i, n + i))) for i in range(1, n + 1)
    )
    if check:
        for i, b in enumerate(gens, start=1):
            if not _quadratic_difference(b, alg).is_zero():
                raise ValueError(f"generator b{i} violates the quadratic relation")
    return HeckeContext(alg=alg, generators=gens)


def generator(ctx: HeckeContext, i: int) -> Multivector:
    if not 1 <= i <= ctx.n:
        raise IndexError(f"generator index {i} outside 1..{ctx.n}")
    return ctx.generators[i - 1]


def word_to_mv(ctx: HeckeContext, letters) -> Multivector:
    """Product b_{i1} * ... * b_{im}; the empty word is 1."""
    out = Multivector.one(ctx.dim)
    for i in letters:
        out = ctx.alg.mul(out, generator(ctx, i))
    return out


def _quadratic_difference(b: Multivector, alg: Algebra) -> Multivector:
    q = RF_Q
    return alg.mul(b, b) - b.scale(RF_ONE - q) - Multivector.scalar(alg.dim, q)


def verify_relations(ctx: HeckeContext) -> list[RelationResult]:
    """All instances of the three relation families for this n."""
    out = []
    alg = ctx.alg
    for i in range(1, ctx.n + 1):
        out.append(
            RelationResult(
                id=f"rel_i.b{i}",
                statement=f"b{i}*b{i} == (1-q)*b{i} + q*1",
                difference=_quadratic_difference(generator(ctx, i), alg),
            )
        )
    for i in range(1, ctx.n + 1):
        for j in range(i + 2, ctx.n + 1):
            bi, bj = generator(ctx, i), generator(ctx, j)
            out.append(
                RelationResult(
                    id=f"rel_ii.b{i}b{j}",
                    statement=f"b{i}*b{j} == b{j}*b{i}",
                    difference=alg.mul(bi, bj) - alg.mul(bj, bi),
                )
            )
    for i in range(1, ctx.n):
        bi, bj = generator(ctx, i), generator(ctx, i + 1)
        lhs = alg.mul(alg.mul(bi, bj), bi)
        rhs = alg.mul(alg.mul(bj, bi), bj)
        out.append(
            RelationResult(
                id=f"rel_iii.b{i}b{i + 1}",
                statement=f"b{i}*b{i + 1}*b{i} == b{i + 1}*b{i}*b{i + 1}",
                difference=lhs - rhs,
            )
        )
    return out


def projector(ctx: HeckeContext, i: int, sign: str) -> Multivector:
    """The spectral projectors (q + b_i)/(1+q) and (1 - b_i)/(1+q)."""
    b = generator(ctx, i)
    inv = (RF_ONE + RF_Q).inverse()
    if sign == "+":
        return (Multivector.scalar(ctx.dim, RF_Q) + b).scale(inv)
    if sign == "-":
        return (Multivector.one(ctx.dim) - b).scale(inv)
    raise ValueError("sign must be '+' or '-'")


def hecke_basis(ctx: HeckeContext) -> list[Multivector]:
    """Algebra basis {1, b1, b2, b1*b2, b2*b1, b1*b2*b1} for n = 2."""
    if ctx.n != 2:
        raise ValueError("the 6-element basis is built for n = 2 only")
    words = [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
    basis = [word_to_mv(ctx, w) for w in words]
    assert exactla.mv_rank(basis, ctx.dim) == 6
    return basis


def class_sum(ctx: HeckeContext) -> Multivector:
    """Transposition class-sum b1 + b2 + (1/q) b1*b2*b1; central for n = 2."""
    if ctx.n != 2:
        raise ValueError("class sum is built for n = 2 only")
    b121 = word_to_mv(ctx, (1, 2, 1))
    return ctx.generators[0] + ctx.generators[1] + b121.scale(RF_Q.inverse())
