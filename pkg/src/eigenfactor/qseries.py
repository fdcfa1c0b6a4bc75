"""Truncated power series with big-integer coefficients, and the q-expansion of Delta.

Delta = q * prod_{n>=1} (1 - q^n)^24 is assembled as q * (eta^3)^8, where
eta^3 = prod (1 - q^n)^3 is sparse by Jacobi's identity. That leaves three
dense squarings, which is where the multiplication kernels below earn
their keep.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import gmpy2

from .errors import GuardExceeded, TruncationMismatch

DEFAULT_GUARD = 10**7
# schoolbook below this many terms; also the Karatsuba recursion cutoff
KARATSUBA_THRESHOLD = 64


@dataclass(frozen=True)
class TruncatedSeries:
    """sum coeffs[i] q^i modulo q^T, with T = len(coeffs)."""

    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("truncation must be positive")

    @classmethod
    def zero(cls, T: int) -> "TruncatedSeries":
        return cls((0,) * T)

    @classmethod
    def one(cls, T: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * (T - 1))

    @property
    def T(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_same(self, other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_same(self, other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * a for a in self.coeffs))
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by q^k, keeping the truncation."""
        T = self.T
        return TruncatedSeries((0,) * min(k, T) + self.coeffs[: max(T - k, 0)])

    def truncate(self, T: int) -> "TruncatedSeries":
        if T <= self.T:
            return TruncatedSeries(self.coeffs[:T])
        return TruncatedSeries(self.coeffs + (0,) * (T - self.T))


def _check_same(a: TruncatedSeries, b: TruncatedSeries):
    if a.T != b.T:
        raise TruncationMismatch(f"truncations differ: {a.T} vs {b.T}")


# ---------------------------------------------------------------------------
# multiplication kernels; each takes and returns plain lists, product cut at T

def mul_schoolbook(a: Sequence[int], b: Sequence[int], T: int) -> list:
    out = [0] * T
    for i, x in enumerate(a[:T]):
        if x:
            lim = T - i
            for j, y in enumerate(b[:lim]):
                out[i + j] += x * y
    return out


def _karatsuba_full(a: list, b: list) -> list:
    """Full product of equal-length lists, length 2n - 1."""
    n = len(a)
    if n <= KARATSUBA_THRESHOLD:
        out = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    # pad low halves so all three recursive calls see equal lengths
    m = n - h
    a0p = a0 + [0] * (m - h)
    b0p = b0 + [0] * (m - h)
    z0 = _karatsuba_full(a0, b0)
    z2 = _karatsuba_full(a1, b1)
    z1 = _karatsuba_full([x + y for x, y in zip(a0p, a1)], [x + y for x, y in zip(b0p, b1)])
    out = [0] * (2 * n - 1)
    for i, c in enumerate(z0):
        out[i] += c
        z1[i] -= c
    for i, c in enumerate(z2):
        out[i + 2 * h] += c
        z1[i] -= c
    for i, c in enumerate(z1):
        if i + h < len(out):
            out[i + h] += c
    return out


def mul_karatsuba(a: Sequence[int], b: Sequence[int], T: int) -> list:
    a = list(a[:T]) + [0] * max(0, T - len(a))
    b = list(b[:T]) + [0] * max(0, T - len(b))
    return _karatsuba_full(a, b)[:T]


def _pack(values: Sequence[int], width: int) -> gmpy2.mpz:
    """sum values[i] * 2^(8*width*i) for signed values with |v| < 2^(8*width - 1)."""
    pos = b"".join(v.to_bytes(width, "little") if v > 0 else bytes(width) for v in values)
    neg = b"".join((-v).to_bytes(width, "little") if v < 0 else bytes(width) for v in values)
    return gmpy2.mpz(int.from_bytes(pos, "little")) - gmpy2.mpz(int.from_bytes(neg, "little"))


def mul_kronecker(a: Sequence[int], b: Sequence[int], T: int) -> list:
    """Product via Kronecker substitution: evaluate at 2^w, multiply once, read digits back."""
    a = list(a[:T])
    b = list(b[:T])
    if not any(a) or not any(b):
        return [0] * T
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    bound = ma * mb * min(len(a), len(b))
    # each product coefficient c satisfies |c| <= bound; offset digits live in [0, 2*bound]
    width = ((2 * bound).bit_length() + 1 + 7) // 8
    shift = 8 * width
    pa = _pack(a, width)
    pb = _pack(b, width)
    prod = pa * pb
    mod = gmpy2.mpz(1) << (shift * T)
    offset = gmpy2.mpz(int.from_bytes(bound.to_bytes(width, "little") * T, "little"))
    digits = gmpy2.f_mod(prod + offset, mod)
    raw = int(digits).to_bytes(width * T, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") - bound for i in range(T)]


_KERNELS = {
    "schoolbook": mul_schoolbook,
    "karatsuba": mul_karatsuba,
    "kronecker": mul_kronecker,
}


def series_mul(a: TruncatedSeries, b: TruncatedSeries, method: str = "auto") -> TruncatedSeries:
    """Product modulo q^T. All methods return identical coefficients.

    ``auto`` uses schoolbook for short series and Kronecker substitution
    otherwise; with GMP underneath, the latter beats Karatsuba at every size
    past the threshold (see scripts/bench_series_mul.py).
    """
    _check_same(a, b)
    T = a.T
    if method == "auto":
        method = "schoolbook" if T < KARATSUBA_THRESHOLD else "kronecker"
    try:
        kernel = _KERNELS[method]
    except KeyError:
        raise ValueError(f"unknown multiplication method {method!r}") from None
    return TruncatedSeries(tuple(kernel(a.coeffs, b.coeffs, T)))


# ---------------------------------------------------------------------------

def eta_cubed(T: int) -> TruncatedSeries:
    """prod_{n>=1} (1 - q^n)^3 = sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2), mod q^T."""
    if T < 1:
        raise ValueError("T must be >= 1")
    out = [0] * T
    m = 0
    while m * (m + 1) // 2 < T:
        out[m * (m + 1) // 2] = (-1) ** m * (2 * m + 1)
        m += 1
    return TruncatedSeries(tuple(out))


def delta_qexp(T: int, guard: int = DEFAULT_GUARD, method: str = "auto") -> TruncatedSeries:
    """q-expansion of Delta mod q^T; coefficient n is tau(n) for 1 <= n < T."""
    if T < 2:
        raise ValueError("T must be >= 2")
    if T > guard:
        raise GuardExceeded(f"truncation {T} exceeds the guard {guard}; raise the guard to opt in")
    e = eta_cubed(T - 1)
    e2 = series_mul(e, e, method)
    e4 = series_mul(e2, e2, method)
    e8 = series_mul(e4, e4, method)
    return TruncatedSeries((0,) + e8.coeffs)
