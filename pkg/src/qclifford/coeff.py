"""Exact arithmetic in the field Q(s, l) with the convention q = s^2.

All scalars of the algebra live here.  A Poly is a rational-coefficient
polynomial in s and l, a RatFunc a reduced fraction of two Polys.  The
deformation parameter q is represented internally as s^2 so that the
square root of q (needed for versor normalization) exists in the field
without any extension.  l may only appear with nonnegative exponent in
a Poly; q/l is an honest RatFunc.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, isqrt, lcm as int_lcm

Exp = tuple[int, int]  # (degree in s, degree in l)


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class GuardError(ArithmeticError):
    """A denominator vanished at a specialization point.

    ``guard`` names the vanishing factor, e.g. "1+q=0" or "l=0".
    """

    def __init__(self, guard: str, message: str | None = None):
        self.guard = guard
        super().__init__(message or f"non-generic specialization: {guard}")


def _grlex_key(e: Exp) -> tuple[int, int]:
    # graded lexicographic with s > l: compare total degree, then s-degree
    return (e[0] + e[1], e[0])


class Poly:
    """Polynomial in s and l over Q, stored as exponent-pair -> coefficient."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[Exp, Fraction] | None = None):
        t: dict[Exp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[e] = c if type(c) is Fraction else Fraction(c)
        self.terms = t
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(c) -> "Poly":
        return Poly({(0, 0): Fraction(c)})

    @staticmethod
    def s_power(k: int) -> "Poly":
        return Poly({(k, 0): Fraction(1)})

    @staticmethod
    def l_power(k: int) -> "Poly":
        return Poly({(0, k): Fraction(1)})

    @staticmethod
    def q_power(k: int) -> "Poly":
        return Poly({(2 * k, 0): Fraction(1)})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): Fraction(1)}

    def is_const(self) -> bool:
        return not self.terms or self.terms.keys() == {(0, 0)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_even_in_s(self) -> bool:
        return all(e[0] % 2 == 0 for e in self.terms)

    # -- structure -------------------------------------------------------

    def total_degree(self) -> int:
        return max((e[0] + e[1] for e in self.terms), default=-1)

    def degree_s(self) -> int:
        return max((e[0] for e in self.terms), default=-1)

    def degree_l(self) -> int:
        return max((e[1] for e in self.terms), default=-1)

    def leading_exp(self) -> Exp:
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_exp()]

    def trailing_coeff(self) -> Fraction:
        return self.terms[min(self.terms, key=_grlex_key)]

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = int_lcm(den, c.denominator)
        return Fraction(abs(num), den)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        p = Poly.__new__(Poly)
        p.terms = out
        p._hash = None
        return p

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p.terms = {e: -c for e, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return P_ZERO
        out: dict[Exp, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                v = out.get(e)
                if v is None:
                    out[e] = c1 * c2
                else:
                    out[e] = v + c1 * c2
        p = Poly.__new__(Poly)
        p.terms = {e: c for e, c in out.items() if c}
        p._hash = None
        return p

    def scale(self, c: Fraction) -> "Poly":
        if not c:
            return P_ZERO
        p = Poly.__new__(Poly)
        p.terms = {e: v * c for e, v in self.terms.items()}
        p._hash = None
        return p

    def __pow__(self, k: int) -> "Poly":
        out = P_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact multivariate division; raises ValueError when not divisible."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if other.is_one():
            return self
        if other.is_const():
            return self.scale(1 / other.trailing_coeff())
        rem = self
        quot: dict[Exp, Fraction] = {}
        le = other.leading_exp()
        lc = other.terms[le]
        while not rem.is_zero():
            re = rem.leading_exp()
            qe = (re[0] - le[0], re[1] - le[1])
            if qe[0] < 0 or qe[1] < 0:
                raise ValueError("inexact polynomial division")
            qc = rem.terms[re] / lc
            quot[qe] = qc
            rem = rem - Poly({qe: qc}) * other
        return Poly(quot)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, s0: Fraction, l0: Fraction) -> Fraction:
        acc = Fraction(0)
        for (ds, dl), c in self.terms.items():
            acc += c * s0**ds * l0**dl
        return acc

    def evaluate_q(self, q0: Fraction, l0: Fraction) -> Fraction:
        """Substitute s^2 -> q0; requires every s-exponent to be even."""
        acc = Fraction(0)
        for (ds, dl), c in self.terms.items():
            if ds % 2:
                raise ValueError("odd power of s cannot be specialized at q")
            acc += c * q0 ** (ds // 2) * l0**dl
        return acc

    def q_coeff_list(self, l0: Fraction) -> list[Fraction]:
        """Coefficient list in q after substituting l = l0 (even s-powers only)."""
        out: list[Fraction] = []
        for (ds, dl), c in self.terms.items():
            if ds % 2:
                raise ValueError("odd power of s cannot be specialized at q")
            k = ds // 2
            if k >= len(out):
                out.extend([Fraction(0)] * (k + 1 - len(out)))
            out[k] += c * l0**dl
        while out and not out[-1]:
            out.pop()
        return out

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)!r})"


P_ZERO = Poly()
P_ONE = Poly.const(1)
P_S = Poly.s_power(1)
P_L = Poly.l_power(1)
P_Q = Poly.q_power(1)


# ---------------------------------------------------------------------------
# polynomial gcd: primitive polynomial remainder sequence on s over Q[l]
# ---------------------------------------------------------------------------

def _uni_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p

def _uni_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _uni_trim(out)

def _uni_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _uni_trim(out)

def _uni_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _uni_trim(out)

def _uni_divmod(a, b):
    if not b:
        raise DivisionByZero("univariate division by zero")
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lb
        k = len(a) - len(b)
        q[k] = c
        for i, d in enumerate(b):
            a[k + i] -= c * d
        _uni_trim(a)
        if len(a) >= len(b) and not a[-1]:
            _uni_trim(a)
    return q, a

def _uni_gcd(a, b):
    a, b = a[:], b[:]
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if a:
        la = a[-1]
        a = [c / la for c in a]  # monic
    return a


def _poly_to_rec(p: Poly) -> list[list[Fraction]]:
    """Dense [s-degree][l-degree] coefficient table."""
    ds = p.degree_s()
    out: list[list[Fraction]] = [[] for _ in range(ds + 1)]
    for (a, b), c in p.terms.items():
        row = out[a]
        if b >= len(row):
            row.extend([Fraction(0)] * (b + 1 - len(row)))
        row[b] = c
    for row in out:
        _uni_trim(row)
    while out and not out[-1]:
        out.pop()
    return out

def _rec_to_poly(rec: list[list[Fraction]]) -> Poly:
    terms: dict[Exp, Fraction] = {}
    for a, row in enumerate(rec):
        for b, c in enumerate(row):
            if c:
                terms[(a, b)] = c
    return Poly(terms)

def _rec_l_content(rec) -> list[Fraction]:
    g: list[Fraction] = []
    for row in rec:
        if row:
            g = _uni_gcd(g, row)
    return g

def _rec_div_l(rec, d):
    out = []
    for row in rec:
        q, r = _uni_divmod(row, d) if row else ([], [])
        if r:
            raise ValueError("inexact content division")
        out.append(q)
    while out and not out[-1]:
        out.pop()
    return out

def _rec_prem(f, g):
    """Pseudo-remainder of f by g in the variable s, coefficients in Q[l]."""
    f = [row[:] for row in f]
    lg = g[-1]
    dv = len(g) - 1
    while f and len(f) - 1 >= dv:
        lf = f[-1]
        f = [_uni_mul(row, lg) for row in f]
        shift = len(f) - 1 - dv
        for i, gc in enumerate(g):
            f[shift + i] = _uni_sub(f[shift + i], _uni_mul(lf, gc))
        while f and not f[-1]:
            f.pop()
    return f


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """GCD in Q[s, l], canonicalized: integer-primitive, positive leading coeff."""
    if a.is_zero():
        return _canonical_assoc(b)
    if b.is_zero():
        return _canonical_assoc(a)
    if a.is_const() or b.is_const():
        return P_ONE
    if a.is_monomial() or b.is_monomial():
        return _monomial_gcd(a, b)
    ra, rb = _poly_to_rec(a), _poly_to_rec(b)
    ca, cb = _rec_l_content(ra), _rec_l_content(rb)
    pa, pb = _rec_div_l(ra, ca), _rec_div_l(rb, cb)
    gc = _uni_gcd(ca, cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while True:
        if len(pb) - 1 == 0:
            gp: list[list[Fraction]] = [[Fraction(1)]]
            break
        r = _rec_prem(pa, pb)
        if not r:
            gp = pb
            break
        pa, pb = pb, _rec_div_l(r, _rec_l_content(r))
    g = _rec_to_poly(gp) * _rec_to_poly([gc])
    return _canonical_assoc(g)


def _monomial_gcd(a: Poly, b: Poly) -> Poly:
    mono, other = (a, b) if a.is_monomial() else (b, a)
    (ms, ml) = mono.leading_exp()
    gs = min((e[0] for e in other.terms), default=0)
    gl = min((e[1] for e in other.terms), default=0)
    return Poly({(min(ms, gs), min(ml, gl)): Fraction(1)})


def _canonical_assoc(p: Poly) -> Poly:
    """Scale to the canonical associate: integer-primitive, positive leading coeff."""
    if p.is_zero():
        return P_ZERO
    c = p.content()
    if p.leading_coeff() < 0:
        c = -c
    return p.scale(1 / c)


def poly_divides(g: Poly, p: Poly) -> bool:
    try:
        p.exact_div(g)
        return True
    except (ValueError, DivisionByZero):
        return False


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

def _normalize_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Canonical representative: num/den with integer polynomials, joint
    content 1, polynomial gcd removed, den with positive leading coefficient."""
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return P_ZERO, P_ONE
    g = poly_gcd(num, den)
    if not g.is_one():
        num = num.exact_div(g)
        den = den.exact_div(g)
    cn, cd = num.content(), den.content()
    num = num.scale(1 / cn)
    den = den.scale(1 / cd)
    ratio = cn / cd
    a, b = ratio.numerator, ratio.denominator
    num = num.scale(Fraction(a))
    den = den.scale(Fraction(b))
    if den.leading_coeff() < 0:
        num, den = -num, -den
    return num, den


# named non-generic guards, in detection order (s-representation)
GUARDS: list[tuple[str, Poly]] = [
    ("l=0", P_L),
    ("q=0", P_S),
    ("1+q=0", P_ONE + P_Q),
    ("q^2+q+1=0", P_ONE + P_Q + Poly.q_power(2)),
    ("1-q=0", P_ONE - P_Q),
]


def _named_guard(den: Poly, vanishes) -> str:
    for name, g in GUARDS:
        if vanishes(g) and poly_divides(g, den):
            return name
    return render_poly(den) + "=0"


class RatFunc:
    """Element of Q(s, l) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly = P_ONE, _canonical: bool = False):
        if not _canonical:
            num, den = _normalize_pair(num, den)
        self.num = num
        self.den = den
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_int(k: int) -> "RatFunc":
        return RatFunc(Poly.const(k), P_ONE, _canonical=True) if k else RF_ZERO

    @staticmethod
    def from_fraction(c: Fraction) -> "RatFunc":
        c = Fraction(c)
        if not c:
            return RF_ZERO
        return RatFunc(Poly.const(c.numerator), Poly.const(c.denominator), _canonical=True)

    @staticmethod
    def q() -> "RatFunc":
        return RF_Q

    @staticmethod
    def l() -> "RatFunc":
        return RF_L

    @staticmethod
    def s() -> "RatFunc":
        return RF_S

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_even_in_s(self) -> bool:
        return self.num.is_even_in_s() and self.den.is_even_in_s()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            n = self.num + other.num
            if n.is_zero():
                return RF_ZERO
            return RatFunc(n, P_ONE)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, P_ONE)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, s0, l0) -> Fraction:
        """Exact substitution s -> s0, l -> l0; l0 must be nonzero."""
        s0, l0 = Fraction(s0), Fraction(l0)
        if not l0:
            raise GuardError("l=0")
        dv = self.den.evaluate(s0, l0)
        if not dv:
            raise GuardError(_named_guard(self.den, lambda g: not g.evaluate(s0, l0)))
        return self.num.evaluate(s0, l0) / dv

    def evaluate_q(self, q0, l0) -> Fraction:
        """Exact substitution s^2 -> q0 (even s-powers only), l -> l0."""
        q0, l0 = Fraction(q0), Fraction(l0)
        if not l0:
            raise GuardError("l=0")
        dv = self.den.evaluate_q(q0, l0)
        if not dv:
            raise GuardError(_named_guard(self.den, lambda g: not g.evaluate_q(q0, l0)))
        return self.num.evaluate_q(q0, l0) / dv

    def evaluate_at_root(self, modulus: list[Fraction], l0, guard_name: str) -> list[Fraction]:
        """Evaluate in Q[q]/(m(q)) for an irreducible monic m, after l -> l0.

        Returns the coefficient list of the residue.  Raises GuardError with
        ``guard_name`` when the denominator is divisible by the modulus.
        """
        l0 = Fraction(l0)
        if not l0:
            raise GuardError("l=0")
        m = _uni_trim([Fraction(c) for c in modulus])
        den_q = self.den.q_coeff_list(l0)
        _, dr = _uni_divmod(den_q, m)
        if not dr:
            raise GuardError(guard_name)
        if not den_q:
            raise GuardError(_named_guard(self.den, lambda g: False))
        num_q = self.num.q_coeff_list(l0)
        _, nr = _uni_divmod(num_q, m)
        inv = _uni_mod_inverse(dr, m)
        _, out = _uni_divmod(_uni_mul(nr, inv), m)
        return out

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def display_negative(self) -> bool:
        """Sign used when rendering inside multivector sums."""
        return self.num.trailing_coeff() < 0

    def __repr__(self) -> str:
        return f"RatFunc({render_ratfunc(self)!r})"


RF_ZERO = RatFunc(P_ZERO, P_ONE, _canonical=True)
RF_ONE = RatFunc(P_ONE, P_ONE, _canonical=True)
RF_Q = RatFunc(P_Q, P_ONE, _canonical=True)
RF_L = RatFunc(P_L, P_ONE, _canonical=True)
RF_S = RatFunc(P_S, P_ONE, _canonical=True)


def _uni_mod_inverse(a, m):
    """Inverse of a modulo m over Q via extended Euclid."""
    r0, r1 = m[:], a[:]
    t0: list[Fraction] = []
    t1: list[Fraction] = [Fraction(1)]
    while r1:
        q, r = _uni_divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, _uni_sub(t0, _uni_mul(q, t1))
    if len(r0) != 1:
        raise GuardError("reducible modulus", "denominator shares a factor with the modulus")
    c = r0[0]
    return [x / c for x in t0]


def field_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Named field operations; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical representative of num/den."""
    return RatFunc(num, den)


def evaluate(a: RatFunc, s0, l0) -> Fraction:
    return a.evaluate(s0, l0)


def rational_sqrt(c: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if c < 0:
        return None
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn == c.numerator and rd * rd == c.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# text rendering / parsing
# ---------------------------------------------------------------------------

def _render_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_monomial(e: Exp) -> str:
    ds, dl = e
    parts = []
    if ds:
        if ds % 2 == 0:
            k = ds // 2
            parts.append("q" if k == 1 else f"q^{k}")
        else:
            parts.append("s" if ds == 1 else f"s^{ds}")
    if dl:
        parts.append("l" if dl == 1 else f"l^{dl}")
    return "*".join(parts)


def render_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for e in sorted(p.terms, key=_grlex_key):
        c = p.terms[e]
        mono = _render_monomial(e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_render_frac(mag)}*{mono}"
        else:
            body = _render_frac(mag)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+" if c > 0 else "-") + body)
    return "".join(out)


def render_ratfunc(a: RatFunc) -> str:
    ns = render_poly(a.num)
    if a.den.is_one():
        return ns
    if len(a.num.terms) > 1:
        ns = f"({ns})"
    ds = render_poly(a.den)
    if len(a.den.terms) > 1 or any(ch in ds for ch in "*-"):
        ds = f"({ds})"
    return f"{ns}/{ds}"


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")


class _ScalarParser:
    """Recursive-descent parser for rational-function text.

    Accepts q, l and s as variables (q is stored as s^2), integer literals,
    +, -, *, /, ^ and parentheses.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> RatFunc:
        v = self.expr()
        self._skip()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.pos)
        return v

    def expr(self) -> RatFunc:
        v = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                v = v + self.term()
            elif ch == "-":
                self.pos += 1
                v = v - self.term()
            else:
                return v

    def term(self) -> RatFunc:
        v = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                v = v * self.factor()
            elif ch == "/":
                self.pos += 1
                d = self.factor()
                if d.is_zero():
                    raise DivisionByZero("division by zero in expression")
                v = v / d
            else:
                return v

    def factor(self) -> RatFunc:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch == "+":
            self.pos += 1
            return self.factor()
        v = self.atom()
        if self.peek() == "^":
            self.pos += 1
            neg = False
            if self.peek() == "-":
                neg = True
                self.pos += 1
            k = self._int()
            v = v ** (-k if neg else k)
        return v

    def atom(self) -> RatFunc:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return v
        if ch.isdigit():
            return RatFunc.from_int(self._int())
        if ch == "q":
            self.pos += 1
            return RF_Q
        if ch == "l":
            self.pos += 1
            return RF_L
        if ch == "s":
            self.pos += 1
            return RF_S
        raise ParseError(f"unexpected character {ch!r}" if ch else "unexpected end of input", self.pos)

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected integer", self.pos)
        return int(self.text[start : self.pos])


def parse_ratfunc(text: str) -> RatFunc:
    return _ScalarParser(text).parse()
