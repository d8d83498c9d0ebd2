"""Versor words in the Hecke generators and the q-spin group machinery.

A VersorWord is a scalar prefactor, an ordered list of generator letters
and a sign eps; the adjoint carries eps^(word length), so the word (not
the bare multivector) is the carrier of group structure.  Two distinct
conjugation readings coexist on purpose: the linear map eps*reversion
(which swaps the spectral projectors) and the word adjoint (which feeds
the inner product and the group membership test); they are not the same
map and are never identified.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coeff import ParseError, RF_ONE, RF_Q, RF_S, RatFunc, parse_ratfunc, render_ratfunc
from .exterior import Multivector
from .hecke import HeckeContext, generator, word_to_mv


@dataclass(frozen=True)
class VersorWord:
    c: RatFunc
    letters: tuple[int, ...]
    eps: int = -1

    def __post_init__(self):
        if self.eps not in (-1, 1):
            raise ValueError("eps must be +1 or -1")

    @property
    def length(self) -> int:
        return len(self.letters)

    def concat(self, other: "VersorWord") -> "VersorWord":
        if self.eps != other.eps:
            raise ValueError("words carry different eps")
        return VersorWord(self.c * other.c, self.letters + other.letters, self.eps)


def word(letters, eps: int = -1, c: RatFunc = RF_ONE) -> VersorWord:
    return VersorWord(c, tuple(letters), eps)


def eval_word(w: VersorWord, ctx: HeckeContext) -> Multivector:
    return word_to_mv(ctx, w.letters).scale(w.c)


def adjoint(w: VersorWord, ctx: HeckeContext) -> Multivector:
    """eps^m * reversion(eval(w)) for word length m."""
    rev = ctx.alg.reversion(eval_word(w, ctx))
    return -rev if (w.eps == -1 and w.length % 2) else rev


def alpha_eps_linear(a: Multivector, eps: int, ctx: HeckeContext) -> Multivector:
    """The linear conjugation eps * reversion; swaps the two spectral
    projectors of each generator: alpha_eps(P_i^+-) = eps * P_i^-+."""
    rev = ctx.alg.reversion(a)
    return -rev if eps == -1 else rev


def generator_adjoint(ctx: HeckeContext, i: int, eps: int) -> Multivector:
    """eps * reversion(b_i) = eps*[(1-q) - b_i]."""
    return alpha_eps_linear(generator(ctx, i), eps, ctx)


def generator_inverse(ctx: HeckeContext, i: int, eps: int = -1) -> Multivector:
    """b_i^{-1} = (b_i - (1-q))/q, independent of eps; verified two-sided."""
    b = generator(ctx, i)
    q = RF_Q
    via_adjoint = generator_adjoint(ctx, i, eps).scale(-(RatFunc.from_int(eps)) / q)
    direct = (b - Multivector.scalar(ctx.dim, RF_ONE - q)).scale(q.inverse())
    assert via_adjoint == direct
    one = Multivector.one(ctx.dim)
    assert ctx.alg.mul(b, direct) == one and ctx.alg.mul(direct, b) == one
    return direct


def phi(x: VersorWord, y: VersorWord, ctx: HeckeContext) -> Multivector:
    """Inner product adjoint(x) * eval(y); scalar for versor arguments."""
    if x.eps != y.eps:
        raise ValueError("both arguments must carry the same eps")
    return ctx.alg.mul(adjoint(x, ctx), eval_word(y, ctx))


def phi_scalars_both_orders(w: VersorWord, ctx: HeckeContext) -> tuple[Multivector, Multivector]:
    """(adjoint(w)*eval(w), eval(w)*adjoint(w)); equal for generator words."""
    ev = eval_word(w, ctx)
    ad = adjoint(w, ctx)
    return ctx.alg.mul(ad, ev), ctx.alg.mul(ev, ad)


def normalize_word(w: VersorWord) -> VersorWord:
    """Set the prefactor to s^{-m} so the word lands in the q-spin group;
    only meaningful for eps = -1."""
    if w.eps != -1:
        raise ValueError("normalization requires eps = -1")
    return VersorWord(RF_S.inverse() ** w.length, w.letters, w.eps)


def gamma_membership(w: VersorWord, ctx: HeckeContext) -> tuple[bool, Multivector]:
    """Whether Phi(w, w) = 1 with eval(w) even; returns the Phi certificate."""
    if w.eps != -1:
        raise ValueError("membership is defined for eps = -1")
    cert = phi(w, w, ctx)
    ev = eval_word(w, ctx)
    even = all(g % 2 == 0 for g in ev.grades())
    ok = even and cert == Multivector.one(ctx.dim)
    return ok, cert


def vector_membership(ctx: HeckeContext, i: int) -> tuple[bool, bool, Multivector]:
    """Membership data for the single-vector word e_i (an odd candidate):
    returns (is_even, phi_is_one, certificate).  The evenness requirement
    always fails, which is why odd versor groups do not arise this way."""
    x = Multivector.basis_vector(ctx.dim, i)
    rev = ctx.alg.reversion(x)
    cert = ctx.alg.mul(-rev, x)  # word length 1, eps = -1
    even = all(g % 2 == 0 for g in x.grades())
    return even, cert == Multivector.one(ctx.dim), cert


def word_inverse_mv(w: VersorWord, ctx: HeckeContext) -> Multivector:
    """eval(w)^{-1} = adjoint(w) / Phi(w,w); needs a nonzero scalar Phi."""
    cert = phi(w, w, ctx)
    if not cert.is_scalar() or cert.is_zero():
        raise ValueError("word is not invertible through the adjoint")
    inv = adjoint(w, ctx).scale(cert.scalar_part().inverse())
    one = Multivector.one(ctx.dim)
    ev = eval_word(w, ctx)
    assert ctx.alg.mul(ev, inv) == one and ctx.alg.mul(inv, ev) == one
    return inv


def conjugate(w: VersorWord, v: Multivector, ctx: HeckeContext) -> Multivector:
    """eval(w) * v * eval(w)^{-1}: the q-reflection action generating the
    q-Weyl group when w runs over generator words."""
    ev = eval_word(w, ctx)
    inv = word_inverse_mv(w, ctx)
    return ctx.alg.mul(ctx.alg.mul(ev, v), inv)


def words_over(letters: tuple[int, ...], max_len: int, eps: int = -1):
    """All words (including the empty one) over the letters, up to max_len."""
    stack: list[tuple[int, ...]] = [()]
    for w in stack:
        yield VersorWord(RF_ONE, w, eps)
        if len(w) < max_len:
            stack.extend(w + (a,) for a in letters)


# ---------------------------------------------------------------------------
# text format: "c * b1.b2.b1 [eps=-1]" with "1" for the empty word
# ---------------------------------------------------------------------------

_WORD_RE = re.compile(r"^(?P<c>.*\S)\s*\*\s*(?P<letters>1|b\d+(?:\.b\d+)*)\s*\[eps=(?P<eps>[+-]1)\]$")


def render_word(w: VersorWord) -> str:
    letters = ".".join(f"b{i}" for i in w.letters) if w.letters else "1"
    eps = "+1" if w.eps == 1 else "-1"
    return f"{render_ratfunc(w.c)} * {letters} [eps={eps}]"


def parse_word(text: str) -> VersorWord:
    m = _WORD_RE.match(text.strip())
    if m is None:
        raise ParseError("not a versor word (expected 'c * b1.b2 [eps=-1]')", 0)
    c = parse_ratfunc(m.group("c"))
    ls = m.group("letters")
    letters = () if ls == "1" else tuple(int(p[1:]) for p in ls.split("."))
    return VersorWord(c, letters, int(m.group("eps")))
