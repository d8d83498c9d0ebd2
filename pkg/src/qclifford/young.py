"""q-Young operators for n = 2, their left ideals and spinor spaces.

Three of the four operators are built from explicit coefficients; the
13|2 operator is derived from completeness (1 = sum of all four), which
the other three determine uniquely.  A separately printed variant of the
13|2 operator is kept for comparison: it differs from the derived one
(it lacks the e23 term and doubles the e13 coefficient), and the suite
reports that difference instead of silently trusting either side.

The regular module (direct sum of the four left ideals; as a subspace it
is the span of the 6-element algebra basis) is mostly killed by e12 and
e34: e12 left-annihilates everything except the antisymmetric summand
(e12 * Y[asym] = e12) and e34 everything except the symmetric one
(e34 * Y[sym] = e34).  Both annihilate the whole mixed part, so the even
subalgebra cannot act faithfully there.  A faithful 4-dimensional spinor
space is obtained by adjoining the odd element u = e1 + e3 on the left:
S = ideal + u*ideal.  Adjoining u on the right does not help: right
multiplication commutes with the left action, so ideal + ideal*u is two
copies of the same module and e12 still acts as zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import RF_ONE, RF_Q, RF_L, RF_ZERO, RatFunc, parse_ratfunc
from .exterior import Multivector, even_blades, mask_of
from .hecke import HeckeContext, RelationResult, generator, hecke_basis
from . import exactla

LABELS = ("sym", "12|3", "13|2", "asym")


@dataclass(frozen=True)
class YoungOp:
    label: str
    value: Multivector


@dataclass(frozen=True)
class IdealBasis:
    label: str
    vectors: tuple[Multivector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class SpinorSpace:
    label: str
    vectors: tuple[Multivector, ...]
    u: Multivector


def _mv(ctx: HeckeContext, coeffs: dict[tuple[int, ...], str], prefactor: str) -> Multivector:
    pref = parse_ratfunc(prefactor).inverse()
    terms = {mask_of(idx): parse_ratfunc(c) * pref for idx, c in coeffs.items()}
    return Multivector(ctx.dim, terms)


def young_operators(ctx: HeckeContext) -> list[YoungOp]:
    """The four operators in label order; idempotency is asserted."""
    if ctx.n != 2:
        raise ValueError("Young operators are built for n = 2 only")
    y_sym = _mv(
        ctx,
        {(): "q^2", (1, 3): "q", (2, 4): "q", (1, 2, 3, 4): "-1"},
        "q^2+q+1",
    )
    y_12_3 = _mv(
        ctx,
        {(): "q", (1, 3): "1", (2, 4): "-q*(q+1)", (1, 2, 3, 4): "q+1"},
        "(q+1)*(q^2+q+1)",
    )
    y_asym = _mv(
        ctx,
        {(): "1-q", (1, 3): "-1", (2, 4): "-1", (1, 4): "l", (2, 3): "q/l", (1, 2, 3, 4): "-1"},
        "q^2+q+1",
    )
    y_13_2 = Multivector.one(ctx.dim) - y_sym - y_12_3 - y_asym
    ops = [
        YoungOp("sym", y_sym),
        YoungOp("12|3", y_12_3),
        YoungOp("13|2", y_13_2),
        YoungOp("asym", y_asym),
    ]
    for op in ops:
        assert ctx.alg.mul(op.value, op.value) == op.value, f"Y_{op.label} not idempotent"
    return ops


def printed_y_13_2(ctx: HeckeContext) -> Multivector:
    """The 13|2 operator as printed, with its doubled e13 term and no e23 term."""
    return _mv(
        ctx,
        {(): "q*(2*q+1)", (1, 3): "-2*q^2", (2, 4): "q+1", (1, 4): "-l*(q+1)", (1, 2, 3, 4): "q+1"},
        "(q+1)*(q^2+q+1)",
    )


def young_13_2_diff(ctx: HeckeContext, ops: list[YoungOp] | None = None) -> Multivector:
    """printed minus derived; nonzero, reported as an informational record."""
    ops = ops if ops is not None else young_operators(ctx)
    derived = next(op.value for op in ops if op.label == "13|2")
    return printed_y_13_2(ctx) - derived


def verify_young(ctx: HeckeContext, ops: list[YoungOp]) -> list[RelationResult]:
    """All 16 pairwise products (delta rule) plus completeness."""
    out = []
    for a in ops:
        for b in ops:
            expected = b.value if a.label == b.label else Multivector.zero(ctx.dim)
            rhs = "Y[{}]".format(b.label) if a.label == b.label else "0"
            out.append(
                RelationResult(
                    id=f"product.{a.label}.{b.label}",
                    statement=f"Y[{a.label}]*Y[{b.label}] == {rhs}",
                    difference=ctx.alg.mul(a.value, b.value) - expected,
                )
            )
    total = Multivector.zero(ctx.dim)
    for op in ops:
        total = total + op.value
    out.append(
        RelationResult(
            id="completeness",
            statement="Y[sym] + Y[12|3] + Y[13|2] + Y[asym] == 1",
            difference=total - Multivector.one(ctx.dim),
        )
    )
    return out


def left_ideal(ctx: HeckeContext, y: YoungOp) -> IdealBasis:
    """Basis of span{A*Y : A in the 6-element algebra basis}.

    Mixed-symmetry ideals come back as {Y, b2*Y}; the one-dimensional
    ideals as {Y}.  Closure under b1 and b2 is verified by coordinate
    solving (SpanError propagates on failure).
    """
    basis6 = hecke_basis(ctx)
    span = [ctx.alg.mul(a, y.value) for a in basis6]
    r = exactla.mv_rank(span, ctx.dim)
    if r == 1:
        vectors = (y.value,)
    elif r == 2:
        vectors = (y.value, ctx.alg.mul(generator(ctx, 2), y.value))
        assert exactla.mv_rank(list(vectors), ctx.dim) == 2
    else:
        raise ValueError(f"unexpected ideal dimension {r} for Y[{y.label}]")
    ideal = IdealBasis(label=y.label, vectors=vectors)
    for i in (1, 2):
        for v in vectors:
            exactla.coords_in_basis(list(vectors), ctx.alg.mul(generator(ctx, i), v))
    return ideal


def class_sum_eigenvalue(ctx: HeckeContext, ideal: IdealBasis, c3: Multivector) -> RatFunc:
    """Scalar by which the class-sum acts on the ideal; non-scalar action
    would falsify centrality and raises."""
    m = exactla.left_mult_matrix(c3, list(ideal.vectors), ctx.alg, list(ideal.vectors))
    value = m.entries[0][0]
    for i in range(m.rows):
        for j in range(m.cols):
            expected = value if i == j else RF_ZERO
            if m.entries[i][j] != expected:
                raise ValueError(f"class-sum does not act as a scalar on Y[{ideal.label}]")
    return value


def regular_decomposition(ctx: HeckeContext, ops: list[YoungOp] | None = None) -> list[IdealBasis]:
    """The four left ideals; their union is independent of total dimension 6."""
    ops = ops if ops is not None else young_operators(ctx)
    ideals = [left_ideal(ctx, y) for y in ops]
    combined = [v for ideal in ideals for v in ideal.vectors]
    assert exactla.mv_rank(combined, ctx.dim) == 6
    return ideals


# the two regular-module vectors NOT killed by the respective bivector
ANNIHILATOR_EXCEPTIONS = frozenset({("e12", "asym", 0), ("e34", "sym", 0)})


def annihilator_check(ctx: HeckeContext, ideals: list[IdealBasis]) -> list[RelationResult]:
    """Left action of e12 and e34 on every regular-module basis vector, plus
    a control check that e13 = b1 does not annihilate Y[sym].

    All products vanish except e12 * Y[asym] = e12 and e34 * Y[sym] = e34
    (the ANNIHILATOR_EXCEPTIONS); failures come back as data.
    """
    out = []
    e12 = Multivector.blade(ctx.dim, mask_of((1, 2)))
    e34 = Multivector.blade(ctx.dim, mask_of((3, 4)))
    for name, a in (("e12", e12), ("e34", e34)):
        for ideal in ideals:
            for k, v in enumerate(ideal.vectors):
                out.append(
                    RelationResult(
                        id=f"annihilate.{name}.{ideal.label}.{k}",
                        statement=f"{name} * (Y[{ideal.label}] vector {k}) == 0",
                        difference=ctx.alg.mul(a, v),
                    )
                )
    y_sym = next(i for i in ideals if i.label == "sym").vectors[0]
    control = ctx.alg.mul(generator(ctx, 1), y_sym)
    out.append(
        RelationResult(
            id="annihilate.control.e13",
            statement="e13 * Y[sym] == Y[sym] != 0",
            difference=control - y_sym,
        )
    )
    return out


def adjoined_odd_element(ctx: HeckeContext) -> Multivector:
    """u = e1 + e3 with u*u = (1+q)*1."""
    u = Multivector.basis_vector(ctx.dim, 1) + Multivector.basis_vector(ctx.dim, 3)
    sq = ctx.alg.mul(u, u)
    assert sq == Multivector.scalar(ctx.dim, RF_ONE + RF_Q)
    return u


def spinor_space(ctx: HeckeContext, ideal: IdealBasis) -> SpinorSpace:
    """4-dimensional spinor space ideal + u*ideal for a mixed-symmetry ideal.

    u is adjoined on the left so the left action of the even subalgebra
    reaches the whole space; see the module docstring.
    """
    if ideal.dim != 2:
        raise ValueError("spinor spaces are built over the 2-dimensional ideals")
    u = adjoined_odd_element(ctx)
    vectors = tuple(ideal.vectors) + tuple(ctx.alg.mul(u, v) for v in ideal.vectors)
    assert exactla.mv_rank(list(vectors), ctx.dim) == 4
    return SpinorSpace(label=ideal.label, vectors=vectors, u=u)


def spinor_space_right_variant(ctx: HeckeContext, ideal: IdealBasis) -> tuple[Multivector, ...]:
    """ideal + ideal*u: the non-faithful right-adjoined variant, kept so the
    rank-deficiency can be demonstrated."""
    u = adjoined_odd_element(ctx)
    return tuple(ideal.vectors) + tuple(ctx.alg.mul(v, u) for v in ideal.vectors)


def mixed_part(ideals: list[IdealBasis]) -> list[Multivector]:
    """Basis of the 4-dimensional mixed-symmetry part of the regular module,
    the largest piece on which the whole even subalgebra acts (e12 and e34
    act as zero there)."""
    return [v for i in ideals if i.dim == 2 for v in i.vectors]


def bivector_blades(ctx: HeckeContext) -> list[int]:
    return [m for m in even_blades(ctx.dim) if m.bit_count() == 2]


def even_action_matrix(ctx: HeckeContext, vectors: list[Multivector]) -> exactla.Matrix:
    """Stacked coordinate matrix of the map (even subalgebra) -> operators
    on span(vectors); one column per even blade, operators flattened."""
    columns = []
    for m in even_blades(ctx.dim):
        a = Multivector.blade(ctx.dim, m)
        op = exactla.left_mult_matrix(a, vectors, ctx.alg, vectors)
        columns.append([op.entries[i][j] for i in range(op.rows) for j in range(op.cols)])
    return exactla.Matrix.from_columns(columns)


def faithfulness_rank(ctx: HeckeContext, vectors: list[Multivector]) -> int:
    """Rank of the even-subalgebra action map on span(vectors)."""
    return exactla.rank(even_action_matrix(ctx, vectors))


def bivector_action_nonzero(ctx: HeckeContext, vectors: list[Multivector]) -> dict[int, bool]:
    """Which bivectors act as a nonzero operator on span(vectors)."""
    out = {}
    for m in bivector_blades(ctx):
        a = Multivector.blade(ctx.dim, m)
        op = exactla.left_mult_matrix(a, vectors, ctx.alg, vectors)
        out[m] = not op.is_zero()
    return out
