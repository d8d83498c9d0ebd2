"""Grassmann algebra over a 2n-dimensional space.

Basis blades are bitmasks over the indices 1..2n (bit k-1 <-> index k);
the empty mask is the scalar unit.  Multivectors map blades to RatFunc
coefficients and are immutable values.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import (
    GuardError,
    ParseError,
    RF_ONE,
    RF_ZERO,
    RatFunc,
    _ScalarParser,
    rational_sqrt,
    render_ratfunc,
)


class DimensionMismatch(ValueError):
    """Operands live in algebras of different ambient dimension."""


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def grade(mask: int) -> int:
    return mask.bit_count()


def wedge_sign(s: int, t: int) -> int:
    """Sign of e_S ^ e_T (0 on overlap): parity of inversions in S followed by T."""
    if s & t:
        return 0
    inv = 0
    while t:
        low = t & -t
        inv += (s >> low.bit_length()).bit_count()
        t ^= low
    return -1 if inv & 1 else 1


class Multivector:
    """Finite map blade -> RatFunc with an ambient dimension."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict[int, RatFunc] | None = None):
        self.dim = dim
        t: dict[int, RatFunc] = {}
        if terms:
            limit = 1 << dim
            for m, c in terms.items():
                if m >= limit or m < 0:
                    raise ValueError(f"blade {m:b} outside dimension {dim}")
                if not c.is_zero():
                    t[m] = c
        self.terms = t

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Multivector":
        return Multivector(dim)

    @staticmethod
    def scalar(dim: int, c: RatFunc) -> "Multivector":
        return Multivector(dim, {0: c})

    @staticmethod
    def one(dim: int) -> "Multivector":
        return Multivector(dim, {0: RF_ONE})

    @staticmethod
    def blade(dim: int, mask: int, c: RatFunc = RF_ONE) -> "Multivector":
        return Multivector(dim, {mask: c})

    @staticmethod
    def basis_vector(dim: int, i: int) -> "Multivector":
        if not 1 <= i <= dim:
            raise ValueError(f"index {i} outside 1..{dim}")
        return Multivector(dim, {1 << (i - 1): RF_ONE})

    # -- predicates and access -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mask: int) -> RatFunc:
        return self.terms.get(mask, RF_ZERO)

    def scalar_part(self) -> RatFunc:
        return self.terms.get(0, RF_ZERO)

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({grade(m) for m in self.terms}))

    def max_grade(self) -> int:
        return max((grade(m) for m in self.terms), default=0)

    def is_scalar(self) -> bool:
        return not self.terms or self.terms.keys() == {0}

    # -- linear structure --------------------------------------------------

    def _check_dim(self, other: "Multivector"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_dim(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            s = c if v is None else v + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = out
        return mv

    def __neg__(self) -> "Multivector":
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = {m: -c for m, c in self.terms.items()}
        return mv

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c: RatFunc) -> "Multivector":
        if c.is_zero():
            return Multivector.zero(self.dim)
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = {m: v * c for m, v in self.terms.items()}
        return mv

    # -- Grassmann operations ----------------------------------------------

    def wedge(self, other: "Multivector") -> "Multivector":
        self._check_dim(other)
        out: dict[int, RatFunc] = {}
        for s, c in self.terms.items():
            for t, d in other.terms.items():
                sg = wedge_sign(s, t)
                if sg == 0:
                    continue
                m = s | t
                v = c * d
                if sg < 0:
                    v = -v
                prev = out.get(m)
                v = v if prev is None else prev + v
                if v.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = v
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = out
        return mv

    def __xor__(self, other: "Multivector") -> "Multivector":
        return self.wedge(other)

    def grade_project(self, k: int) -> "Multivector":
        if not 0 <= k <= self.dim:
            raise ValueError(f"grade {k} outside 0..{self.dim}")
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = {m: c for m, c in self.terms.items() if grade(m) == k}
        return mv

    def grade_involute(self) -> "Multivector":
        mv = Multivector.__new__(Multivector)
        mv.dim = self.dim
        mv.terms = {m: (-c if grade(m) & 1 else c) for m, c in self.terms.items()}
        return mv

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Multivector({self.dim}, {render_multivector(self)!r})"


def wedge(u: Multivector, v: Multivector) -> Multivector:
    return u.wedge(v)


def grade_project(u: Multivector, k: int) -> Multivector:
    return u.grade_project(k)


def grade_involute(u: Multivector) -> Multivector:
    return u.grade_involute()


def all_blades(dim: int):
    """All 2^dim blade masks, ascending."""
    return range(1 << dim)


def even_blades(dim: int) -> list[int]:
    """Even-grade blade masks in (grade, index-tuple) order."""
    return sorted((m for m in all_blades(dim) if grade(m) % 2 == 0),
                  key=lambda m: (grade(m), indices_of(m)))


# ---------------------------------------------------------------------------
# specialization at rational points
# ---------------------------------------------------------------------------

def specialize_multivector(u: Multivector, s0=None, l0=1, q0=None) -> dict[int, Fraction]:
    """Exact coefficients at a point given by s0 (preferred) or q0.

    With only q0, coefficients must be even in s; q0 that is a perfect
    rational square is converted to s0 = sqrt(q0) so odd powers work too.
    Raises GuardError when a denominator vanishes.
    """
    if s0 is None and q0 is not None:
        r = rational_sqrt(Fraction(q0))
        if r is not None:
            s0 = r
    out: dict[int, Fraction] = {}
    for m, c in u.terms.items():
        if s0 is not None:
            v = c.evaluate(s0, l0)
        elif q0 is not None:
            v = c.evaluate_q(q0, l0)
        else:
            raise ValueError("a specialization point needs s0 or q0")
        if v:
            out[m] = v
    return out


# ---------------------------------------------------------------------------
# text format: sum of <coeff>*e<indices>, "1" for the scalar blade
# ---------------------------------------------------------------------------

def _render_blade(mask: int, dim: int) -> str:
    if mask == 0:
        return "1"
    idx = indices_of(mask)
    if dim >= 10:
        return "e" + ",".join(str(i) for i in idx)
    return "e" + "".join(str(i) for i in idx)


def render_multivector(u: Multivector) -> str:
    if not u.terms:
        return "0"
    keys = sorted(u.terms, key=lambda m: (grade(m), indices_of(m)))
    parts = []
    for m in keys:
        c = u.terms[m]
        neg = c.display_negative()
        if neg:
            c = -c
        cs = render_ratfunc(c)
        if "+" in cs[1:] or "-" in cs[1:]:
            cs = f"({cs})"
        body = f"{cs}*{_render_blade(m, u.dim)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _parse_blade_token(tok: str, dim: int) -> int:
    tok = tok.strip()
    if tok == "1":
        return 0
    if not tok.startswith("e") or len(tok) == 1:
        raise ParseError(f"expected blade token, got {tok!r}", 0)
    body = tok[1:]
    if "," in body:
        idx = [int(p) for p in body.split(",")]
    else:
        if not body.isdigit():
            raise ParseError(f"bad blade indices in {tok!r}", 0)
        idx = [int(ch) for ch in body]
    mask = 0
    prev = 0
    for i in idx:
        if not 1 <= i <= dim:
            raise ParseError(f"blade index {i} outside 1..{dim}", 0)
        if i <= prev:
            raise ParseError(f"blade indices must ascend in {tok!r}", 0)
        prev = i
        mask |= 1 << (i - 1)
    return mask


def _split_top_level(text: str, seps: str) -> list[tuple[str, str]]:
    """Split on top-level separator characters; returns (sep, chunk) pairs."""
    parts: list[tuple[str, str]] = []
    depth = 0
    cur = []
    sign = "+"
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps and cur:
            parts.append((sign, "".join(cur)))
            sign = ch
            cur = []
        elif depth == 0 and ch in seps and not cur and not parts:
            sign = ch
        else:
            cur.append(ch)
    if cur:
        parts.append((sign, "".join(cur)))
    return parts


def parse_multivector(text: str, dim: int) -> Multivector:
    """Parse the canonical multivector text format."""
    text = text.strip()
    if text == "0" or not text:
        return Multivector.zero(dim)
    acc = Multivector.zero(dim)
    for sign, chunk in _split_top_level(text, "+-"):
        chunk = chunk.strip()
        # the coefficient is everything before the last top-level '*'
        depth = 0
        star = -1
        for k, ch in enumerate(chunk):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "*" and depth == 0:
                star = k
        if star >= 0 and chunk[star + 1 :].strip()[:1] in ("e", "1"):
            coeff = _ScalarParser(chunk[:star]).parse()
            mask = _parse_blade_token(chunk[star + 1 :], dim)
        elif chunk.startswith("e"):
            coeff = RF_ONE
            mask = _parse_blade_token(chunk, dim)
        else:
            coeff = _ScalarParser(chunk).parse()
            mask = 0
        if sign == "-":
            coeff = -coeff
        acc = acc + Multivector.blade(dim, mask, coeff)
    return acc
