"""Exact arithmetic in a number field K = Q(g) given by a monic integer polynomial.

Elements are stored as coordinate vectors of reduced fractions in the power
basis 1, g, ..., g^(d-1), constant coordinate first. A field also carries a
distinguished complex root of its defining polynomial, which fixes an
embedding of K into C and lets us tell conjugates apart.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoNearbyRoot,
    NotMonic,
    ParseError,
    Reducible,
)

DEFAULT_PRECISION = 30
HINT_TOLERANCE = 1e-3
SQRT_DENOMINATOR_BOUND = 10**12


# ---------------------------------------------------------------------------
# dense polynomials over Q, constant term first, no trailing zeros

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _psub(a, b):
    return _padd(a, [-c for c in b])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    a = [Fraction(c) for c in a]
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a = _trim(a)
    return _trim(q), a


def _pmonic(p):
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a) if a else []


def _pxinv(a, m):
    """Inverse of a modulo m in Q[x]/(m); a must be coprime to m."""
    r0, r1 = _trim(m), _trim(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    c = Fraction(r0[0])
    return [x / c for x in s0]


def _pderiv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with integer coefficients listed constant term first."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in _trim(self.coeffs))
        if not coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_rational(cls, coeffs: Sequence) -> "IntegerPolynomial":
        """Clear denominators and content; the result has positive leading coefficient."""
        fr = [Fraction(c) for c in _trim(coeffs)]
        den = math.lcm(*(c.denominator for c in fr))
        ints = [int(c * den) for c in fr]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return cls(tuple(c // g for c in ints))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def content(self) -> int:
        return math.gcd(*self.coeffs)

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0 and self.degree > 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class ComplexApprox:
    """Midpoint/radius enclosure of a complex number."""

    value: mpmath.mpc
    radius: mpmath.mpf

    def contains(self, z, slack=0) -> bool:
        return abs(mpmath.mpc(z) - self.value) <= self.radius + slack

    def format(self, digits: int) -> str:
        re_s = _fixed(self.value.real, digits)
        if abs(self.value.imag) <= max(self.radius, mpmath.mpf(10) ** -digits):
            return re_s
        im = self.value.imag
        sign = "-" if im < 0 else "+"
        return f"{re_s} {sign} {_fixed(abs(im), digits)}*i"

    def __str__(self):
        return self.format(DEFAULT_PRECISION)


def _fixed(x, digits):
    sig = digits + 10 + (int(mpmath.log10(abs(x))) if abs(x) >= 1 else 0)
    with mpmath.workdps(sig + 10):
        text = mpmath.nstr(x, sig, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    with localcontext() as ctx:
        ctx.prec = sig + digits + 10
        out = format(Decimal(text).quantize(Decimal(1).scaleb(-digits)), "f")
    return out.lstrip("-") if Decimal(out) == 0 else out


def _to_fraction(x) -> Fraction:
    x = mpmath.mpf(x)
    man, exp = x.man_exp  # man is unsigned
    f = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -f if x < 0 else f


def _newton_refine(poly: IntegerPolynomial, r, digits: int):
    """Polish r towards a root of poly until the enclosure radius is below 10^-digits."""
    deriv = IntegerPolynomial(tuple(_pderiv(list(poly.coeffs))) or (0,))
    target = mpmath.mpf(10) ** -digits
    rad = mpmath.inf
    for _ in range(200):
        fr, dfr = poly(r), deriv(r)
        if dfr == 0:
            break
        rad = poly.degree * abs(fr / dfr)
        r = r - fr / dfr
        if rad < target * mpmath.mpf(10) ** -5:
            break
    fr, dfr = poly(r), deriv(r)
    # a disc of radius deg*|f/f'| around r contains a root
    rad = poly.degree * abs(fr / dfr) if dfr != 0 else mpmath.inf
    rad += mpmath.mpf(2) ** (-mpmath.mp.prec + 4) * (1 + abs(r))
    return mpmath.mpc(r), rad


class NumberField:
    """K = Q[x]/(min_poly) together with a complex embedding x -> root.

    ``embedding`` is a complex hint within 1e-3 of the wanted root; it is
    ignored for degree one. Irreducibility is checked for degree <= 3 and
    trusted above that.
    """

    def __init__(self, min_poly, embedding=None):
        if not isinstance(min_poly, IntegerPolynomial):
            min_poly = IntegerPolynomial(tuple(min_poly))
        if min_poly.degree < 1:
            raise NotMonic(f"defining polynomial must have degree >= 1, got {min_poly}")
        if not min_poly.is_monic():
            raise NotMonic(f"defining polynomial {min_poly} is not monic")
        self.min_poly = min_poly
        self.degree = min_poly.degree
        if self.degree <= 3:
            _check_irreducible(min_poly)
        self._roots: dict[int, tuple] = {}
        if self.degree == 1:
            self._root_exact = Fraction(-min_poly.coeffs[0])
            self._hint = complex(self._root_exact)
        else:
            if embedding is None:
                raise NoNearbyRoot("an embedding hint is required for degree > 1")
            self._root_exact = None
            self._hint = complex(embedding)
            with mpmath.workdps(60):
                roots = _all_roots(min_poly)
                h = mpmath.mpc(self._hint)
                best = min(roots, key=lambda r: abs(r - h))
                if abs(best - h) > HINT_TOLERANCE:
                    raise NoNearbyRoot(f"no root of {min_poly} within {HINT_TOLERANCE} of {embedding}")
                self._roots[40] = _newton_refine(min_poly, best, 40)

    @classmethod
    def rational(cls) -> "NumberField":
        return cls((0, 1))

    def root(self, digits: int = DEFAULT_PRECISION) -> ComplexApprox:
        """The distinguished root of min_poly, enclosed to radius <= 10^-digits."""
        if self._root_exact is not None:
            with mpmath.workdps(digits + 10):
                return ComplexApprox(mpmath.mpc(self._root_exact.numerator) / self._root_exact.denominator,
                                     mpmath.mpf(0))
        if digits not in self._roots:
            start = max(self._roots)
            r0 = self._roots[start][0]
            with mpmath.workdps(digits + 20):
                self._roots[digits] = _newton_refine(self.min_poly, mpmath.mpc(r0), digits)
        r, rad = self._roots[digits]
        return ComplexApprox(r, rad)

    def conjugate_roots(self, dps: int = 60) -> list:
        """All complex roots of min_poly, distinguished root first."""
        if self.degree == 1:
            return [mpmath.mpc(self._root_exact.numerator) / self._root_exact.denominator]
        with mpmath.workdps(dps):
            roots = [_newton_refine(self.min_poly, r, dps - 10)[0] for r in _all_roots(self.min_poly)]
            main = self.root(dps - 10).value
            roots.sort(key=lambda r: abs(r - main))
            return roots

    # element construction ------------------------------------------------
    def __call__(self, x) -> "AlgebraicNumber":
        if isinstance(x, AlgebraicNumber):
            if x.field != self:
                raise FieldMismatch("element belongs to a different field")
            return x
        if isinstance(x, str):
            return parse_algebraic(self, x)
        if isinstance(x, (list, tuple)):
            return AlgebraicNumber(self, x)
        return AlgebraicNumber(self, (x,))

    @property
    def gen(self) -> "AlgebraicNumber":
        if self.degree == 1:
            return AlgebraicNumber(self, (self._root_exact,))
        return AlgebraicNumber(self, (0, 1))

    @property
    def zero(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, ())

    @property
    def one(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, (1,))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NumberField) or self.min_poly != other.min_poly:
            return False
        if self.degree == 1:
            return True
        return abs(self.root(40).value - other.root(40).value) < mpmath.mpf(10) ** -20

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        if self.degree == 1:
            return f"NumberField({self.min_poly})"
        return f"NumberField({self.min_poly}, g ~ {self._hint})"


def nf_new(min_poly, embedding_hint=None) -> NumberField:
    return NumberField(min_poly, embedding_hint)


def _all_roots(poly: IntegerPolynomial):
    return mpmath.polyroots(list(reversed(poly.coeffs)), maxsteps=500, extraprec=4 * mpmath.mp.prec)


def _check_irreducible(poly: IntegerPolynomial):
    # monic of degree <= 3 is reducible iff it has a root in Q, which must be an integer
    if poly.degree == 1:
        return
    if poly.degree == 2:
        c, b, _ = poly.coeffs
        disc = b * b - 4 * c
        if disc >= 0 and math.isqrt(disc) ** 2 == disc:
            raise Reducible(f"{poly} splits over Q (discriminant {disc} is a square)")
        return
    with mpmath.workdps(50):
        candidates = {int(mpmath.nint(r.real)) for r in _all_roots(poly)}
    for r in candidates:
        if poly(r) == 0:
            raise Reducible(f"{poly} has the rational root {r}")


# ---------------------------------------------------------------------------

class AlgebraicNumber:
    """Immutable element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Iterable):
        c = [Fraction(x) for x in coords]
        d = field.degree
        if len(c) > d:
            c = _reduce(c, field.min_poly.coeffs)
        c += [Fraction(0)] * (d - len(c))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicNumber is immutable")

    # coercion ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(self.field, (other,))
        return None

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicNumber(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.degree == 1:
            return AlgebraicNumber(self.field, (self.coords[0] * o.coords[0],))
        prod = _pmul(_trim(self.coords), _trim(o.coords))
        return AlgebraicNumber(self.field, _reduce(prod, self.field.min_poly.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.field.degree == 1:
            return AlgebraicNumber(self.field, (1 / self.coords[0],))
        return AlgebraicNumber(self.field, _pxinv(_trim(self.coords), list(self.field.min_poly.coeffs)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, (AlgebraicNumber, int, Fraction)):
            return NotImplemented
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        return self.coords == o.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    # invariants of the element ------------------------------------------
    def _mult_matrix(self):
        d = self.field.degree
        cols = []
        col = self
        g = AlgebraicNumber(self.field, (0, 1)) if d > 1 else None
        for i in range(d):
            cols.append(col.coords)
            if i + 1 < d:
                col = col * g
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def charpoly(self) -> list:
        """Characteristic polynomial of multiplication-by-self, monic, constant first."""
        m = self._mult_matrix()
        d = len(m)
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[d] = Fraction(1)
        acc = [[Fraction(0)] * d for _ in range(d)]
        for k in range(1, d + 1):
            # Faddeev-LeVerrier: acc <- m*acc + c_{d-k+1} I ; c_{d-k} = -tr(m*acc)/k
            acc = [[sum(m[i][t] * acc[t][j] for t in range(d)) for j in range(d)] for i in range(d)]
            for i in range(d):
                acc[i][i] += coeffs[d - k + 1]
            ma = [[sum(m[i][t] * acc[t][j] for t in range(d)) for j in range(d)] for i in range(d)]
            coeffs[d - k] = -sum(ma[i][i] for i in range(d)) / k
        return coeffs

    def trace(self) -> Fraction:
        cp = self.charpoly()
        return -cp[-2]

    def norm(self) -> Fraction:
        cp = self.charpoly()
        return cp[0] if len(cp) % 2 == 1 else -cp[0]

    def min_poly(self) -> IntegerPolynomial:
        """Primitive integer minimal polynomial with positive leading coefficient."""
        cp = self.charpoly()
        # charpoly is a power of the minimal polynomial; strip repeated factors
        g = _pgcd(cp, _pderiv(cp))
        sqfree = _pdivmod(cp, g)[0] if len(g) > 1 else cp
        return IntegerPolynomial.from_rational(sqfree)

    def denominator(self) -> int:
        return self.min_poly().leading

    def is_integral(self) -> bool:
        return self.min_poly().is_monic()

    def embed(self, precision: int = DEFAULT_PRECISION) -> ComplexApprox:
        return embed(self, precision)

    def sqrt(self, denominator_bound: int = SQRT_DENOMINATOR_BOUND):
        return sqrt_in_field(self, denominator_bound)

    # rendering -----------------------------------------------------------
    def __str__(self):
        if self.field.degree == 1:
            return str(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            mono = "" if i == 0 else ("*g" if i == 1 else f"*g^{i}")
            terms.append(f"({c}){mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"AlgebraicNumber({self})"


def _reduce(poly, modulus):
    """Reduce poly modulo a monic integer polynomial."""
    p = [Fraction(c) for c in poly]
    d = len(modulus) - 1
    for i in range(len(p) - 1, d - 1, -1):
        c = p[i]
        if c:
            for j in range(d):
                p[i - d + j] -= c * modulus[j]
        p[i] = Fraction(0)
    return p[:d]


# ---------------------------------------------------------------------------
# functional surface

def an_arith(op: str, z1: AlgebraicNumber, z2: AlgebraicNumber | None = None) -> AlgebraicNumber:
    if op == "add":
        return z1 + z2
    if op == "sub":
        return z1 - z2
    if op == "mul":
        return z1 * z2
    if op == "div":
        return z1 / z2
    if op == "neg":
        return -z1
    if op == "inv":
        return z1.inverse()
    raise ValueError(f"unknown operation {op!r}")


def min_poly_of(z: AlgebraicNumber) -> IntegerPolynomial:
    return z.min_poly()


def denominator(z: AlgebraicNumber) -> int:
    """Leading coefficient of the primitive minimal polynomial of z."""
    return z.min_poly().leading


def embed(z: AlgebraicNumber, precision: int = DEFAULT_PRECISION) -> ComplexApprox:
    """Image of z under the field's embedding, to within 10^-precision."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    field = z.field
    if field.degree == 1:
        c = z.coords[0]
        with mpmath.workdps(precision + 10):
            return ComplexApprox(mpmath.mpc(c.numerator) / c.denominator, mpmath.mpf(0))
    coeff_bound = max(abs(c) for c in z.coords)
    extra = 10 + max(0, int(math.log10(float(coeff_bound) + 1)) + 1)
    digits = precision + extra
    while True:
        root = field.root(digits)
        with mpmath.workdps(digits + 20):
            r, eps = root.value, root.radius
            val = mpmath.mpc(0)
            for c in reversed(z.coords):
                val = val * r + mpmath.mpf(c.numerator) / c.denominator
            # |z(r') - z(r)| <= sum |c_i| * i * (|r| + eps)^(i-1) * eps
            big = abs(r) + eps
            prop = sum(abs(mpmath.mpf(c.numerator) / c.denominator) * i * big ** (i - 1)
                       for i, c in enumerate(z.coords) if i)
            radius = prop * eps + mpmath.mpf(10) ** -(digits + 10)
            if radius <= mpmath.mpf(10) ** -precision:
                return ComplexApprox(val, radius)
        digits += 20


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _sqrt_quadratic(z: AlgebraicNumber):
    c0, c1, _ = z.field.min_poly.coeffs
    a, b = z.coords
    # write g = h - c1/2 so that h^2 = delta is rational
    half = Fraction(c1, 2)
    delta = half * half - c0
    a2 = a - b * half
    candidates = []
    if b == 0:
        u = _rational_sqrt(a2)
        if u is not None:
            candidates.append((u, Fraction(0)))
        v = _rational_sqrt(a2 / delta)
        if v is not None:
            candidates.append((Fraction(0), v))
    else:
        # u^4 - a2 u^2 + delta b^2 / 4 = 0
        s = _rational_sqrt(a2 * a2 - delta * b * b)
        if s is not None:
            for big_u in ((a2 + s) / 2, (a2 - s) / 2):
                u = _rational_sqrt(big_u) if big_u else None
                if u:
                    candidates.append((u, b / (2 * u)))
    for u, v in candidates:
        w = AlgebraicNumber(z.field, (u + v * half, v))
        if w * w == z:
            return w
    return None


def _sqrt_by_embeddings(z: AlgebraicNumber, denominator_bound: int):
    field = z.field
    d = field.degree
    dps = 80
    roots = field.conjugate_roots(dps)
    with mpmath.workdps(dps):
        vals = []
        for r in roots:
            v = mpmath.mpc(0)
            for c in reversed(z.coords):
                v = v * r + mpmath.mpf(c.numerator) / c.denominator
            vals.append(mpmath.sqrt(v))
        vander = mpmath.matrix([[r ** i for i in range(d)] for r in roots])
        tol = mpmath.mpf(10) ** -(dps // 3)
        for signs in itertools.product((1, -1), repeat=d - 1):
            rhs = mpmath.matrix([vals[0]] + [s * v for s, v in zip(signs, vals[1:])])
            try:
                sol = mpmath.lu_solve(vander, rhs)
            except ZeroDivisionError:
                return None
            if any(abs(sol[i].imag) > tol for i in range(d)):
                continue
            coords = [_to_fraction(sol[i].real).limit_denominator(denominator_bound) for i in range(d)]
            w = AlgebraicNumber(field, coords)
            if w * w == z:
                return w
    return None


def _normalize_sign(w: AlgebraicNumber) -> AlgebraicNumber:
    if not w:
        return w
    for digits in (DEFAULT_PRECISION, 80, 200):
        e = embed(w, digits)
        if abs(e.value.real) > e.radius:
            return w if e.value.real > 0 else -w
    # real part is (numerically) zero: break the tie on the imaginary part
    return w if e.value.imag >= 0 else -w


def sqrt_in_field(z: AlgebraicNumber, denominator_bound: int = SQRT_DENOMINATOR_BOUND):
    """Exact square root of z in its own field, or None when z is not a square there.

    The returned root has nonnegative real part under the field embedding
    (nonnegative imaginary part on ties). Degrees 1 and 2 are exact; higher
    degrees reconstruct coordinates from approximate conjugate roots and
    accept them only after exact verification.
    """
    d = z.field.degree
    if not z:
        return z
    if d == 1:
        r = _rational_sqrt(z.coords[0])
        return None if r is None else AlgebraicNumber(z.field, (r,))
    if d == 2:
        w = _sqrt_quadratic(z)
    else:
        w = _sqrt_by_embeddings(z, denominator_bound)
    return None if w is None else _normalize_sign(w)


# ---------------------------------------------------------------------------
# text format: "(c0) + (c1)*g + (c2)*g^2"; bare rationals and signs are accepted

_TERM = re.compile(
    r"(?P<sign>[+-]?)(?:\((?P<paren>[+-]?\d+(?:/\d+)?)\)|(?P<bare>\d+(?:/\d+)?))?"
    r"(?P<star>\*)?(?P<g>g(?:\^(?P<exp>\d+))?)?"
)


def parse_algebraic(field: NumberField, text: str) -> AlgebraicNumber:
    if re.search(r"[\d)]\s+[\d(g]", text):
        raise ParseError(f"missing operator in {text!r}")
    s = "".join(text.split())
    if not s:
        raise ParseError("empty algebraic number")
    poly: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        has_coeff = m["paren"] is not None or m["bare"] is not None
        if m.end() == pos or not (has_coeff or m["g"]):
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        if pos > 0 and not m["sign"]:
            raise ParseError(f"missing '+' or '-' before offset {pos} in {text!r}")
        if m["g"] and has_coeff != bool(m["star"]) or (m["star"] and not m["g"]):
            raise ParseError(f"malformed term {m.group(0)!r} in {text!r}")
        try:
            c = Fraction(m["paren"] or m["bare"] or 1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational in {text!r}: {exc}") from exc
        if m["sign"] == "-":
            c = -c
        power = int(m["exp"] or 1) if m["g"] else 0
        poly[power] = poly.get(power, Fraction(0)) + c
        pos = m.end()
    coeffs = [poly.get(i, Fraction(0)) for i in range(max(poly) + 1)]
    if field.degree == 1:
        # g is the rational root itself
        root = field.gen.coords[0]
        return AlgebraicNumber(field, (sum(c * root ** i for i, c in enumerate(coeffs)),))
    return AlgebraicNumber(field, coeffs)


RATIONALS = NumberField.rational()
