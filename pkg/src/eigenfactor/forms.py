"""Eigenform metadata and coefficient oracles.

An oracle is anything with ``coeff(n)`` returning a(n) as an element of the
form's coefficient field, plus ``supports(n)`` describing its domain. Two
concrete sources are provided:

* :class:`RecurrenceOracle` builds a(n) from a table of a(p) using
  multiplicativity and the Hecke recurrence. It factors n by trial division
  against its table, so it is a stand-in for a hypothetical fast algorithm,
  not one.
* :class:`QExpansionOracle` reads tau(n) off the q-expansion of Delta and
  never looks at the factorisation of n.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Protocol, Sequence

from .errors import (
    EigenfactorError,
    InvariantViolation,
    OutOfRange,
    ParseError,
    UnknownPrimeFactor,
)
from .numberfield import RATIONALS, AlgebraicNumber, NumberField, parse_algebraic
from .qseries import DEFAULT_GUARD, delta_qexp

BUNDLED_SPECS = ("delta.json", "g29.json")


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and _factorize(n) == {n: 1}


def primes_upto(x: int) -> list[int]:
    if x < 2:
        return []
    sieve = bytearray([1]) * (x + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(x) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, x + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


def carmichael_lambda(n: int) -> int:
    """Exponent of the group (Z/nZ)^*."""
    lam = 1
    for p, e in _factorize(n).items():
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = math.lcm(lam, part)
    return lam


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod N stored as its table of values on residues 0..N-1."""

    modulus: int
    values: tuple

    def __post_init__(self):
        N = self.modulus
        if N < 1:
            raise InvariantViolation("character modulus", f"must be positive, got {N}")
        if len(self.values) != N:
            raise InvariantViolation("character table length", f"expected {N} values, got {len(self.values)}")
        if self.values[1 % N] != 1:
            raise InvariantViolation("chi(1) = 1", f"table has chi(1) = {self.values[1 % N]}")
        for m, v in enumerate(self.values):
            coprime = math.gcd(m, N) == 1
            if coprime == (v == 0):
                raise InvariantViolation("chi vanishes exactly off the units", f"chi({m}) = {v}")
        lam = carmichael_lambda(N)
        for m, v in enumerate(self.values):
            if v and v ** lam != 1:
                raise InvariantViolation("values are roots of unity", f"chi({m})^{lam} = {v ** lam}")
        for a in range(N):
            for b in range(a, N):
                if self.values[a * b % N] != self.values[a] * self.values[b]:
                    raise InvariantViolation("multiplicativity", f"chi({a}*{b}) != chi({a})chi({b})")

    @classmethod
    def trivial(cls, modulus: int, field: NumberField = RATIONALS) -> "DirichletCharacter":
        return cls(modulus, tuple(field.one if math.gcd(m, modulus) == 1 else field.zero
                                  for m in range(modulus)))

    @property
    def field(self) -> NumberField:
        return self.values[0].field

    def is_trivial(self) -> bool:
        return all(v == 0 or v == 1 for v in self.values)

    def __call__(self, m: int) -> AlgebraicNumber:
        return self.values[m % self.modulus]


def char_eval(chi: DirichletCharacter, m: int) -> AlgebraicNumber:
    return chi(m)


@dataclass(frozen=True)
class EigenformSpec:
    """A normalised Hecke eigenform described by its prime coefficients."""

    name: str
    weight: int
    level: int
    character: DirichletCharacter
    field: NumberField
    prime_coeffs: dict = dc_field(hash=False)
    non_cm: bool = True

    def __post_init__(self):
        if self.weight < 2:
            raise InvariantViolation("weight >= 2", f"got {self.weight}")
        if self.character.modulus != self.level:
            raise InvariantViolation("character modulus equals level",
                                     f"{self.character.modulus} != {self.level}")
        if self.character.field != self.field:
            raise InvariantViolation("character values lie in the coefficient field")
        for p, a in self.prime_coeffs.items():
            if not is_prime(p):
                raise InvariantViolation("prime table keys are prime", f"{p} is not prime")
            if a.field != self.field:
                raise InvariantViolation("coefficients lie in the coefficient field", f"a({p})")
            if not a.is_integral():
                raise InvariantViolation("a(p) is an algebraic integer", f"a({p}) = {a}")

    @property
    def primes(self) -> list[int]:
        return sorted(self.prime_coeffs)

    def with_primes(self, prime_coeffs: dict, name: str | None = None) -> "EigenformSpec":
        return EigenformSpec(name or self.name, self.weight, self.level, self.character,
                             self.field, dict(prime_coeffs), self.non_cm)

    def is_delta(self) -> bool:
        return self.weight == 12 and self.level == 1 and self.field.degree == 1


class CoefficientOracle(Protocol):
    field: NumberField

    def coeff(self, n: int) -> AlgebraicNumber: ...

    def supports(self, n: int) -> bool: ...


# ---------------------------------------------------------------------------

def _prime_power_coeff(spec: EigenformSpec, p: int, r: int) -> AlgebraicNumber:
    # a(p^{r+1}) = a(p) a(p^r) - chi(p) p^{k-1} a(p^{r-1})
    ap = spec.prime_coeffs[p]
    c = spec.character(p) * p ** (spec.weight - 1)
    prev, cur = spec.field.one, ap
    if r == 0:
        return prev
    for _ in range(r - 1):
        prev, cur = cur, ap * cur - c * prev
    return cur


def recurrence_extend(spec: EigenformSpec, n: int) -> AlgebraicNumber:
    """a(n) from the prime table via multiplicativity and the prime-power recurrence."""
    if n < 1:
        raise OutOfRange(f"coefficient index must be positive, got {n}")
    result = spec.field.one
    m = n
    for p in spec.primes:
        if m == 1:
            break
        r = 0
        while m % p == 0:
            m //= p
            r += 1
        if r:
            result = result * _prime_power_coeff(spec, p, r)
    if m != 1:
        raise UnknownPrimeFactor(n, m)
    return result


class RecurrenceOracle:
    """Coefficient oracle backed by a table of a(p). Caches; single-threaded use."""

    def __init__(self, spec: EigenformSpec):
        self.spec = spec
        self.field = spec.field
        self._coeff = lru_cache(maxsize=4096)(self._compute)

    def _compute(self, n: int) -> AlgebraicNumber:
        return recurrence_extend(self.spec, n)

    def coeff(self, n: int) -> AlgebraicNumber:
        return self._coeff(n)

    def supports(self, n: int) -> bool:
        if n < 1:
            return False
        for p in self.spec.primes:
            while n % p == 0:
                n //= p
        return n == 1


class QExpansionOracle:
    """tau(n) read from the q-expansion of Delta, valid for 1 <= n < T."""

    def __init__(self, T: int, guard: int = DEFAULT_GUARD):
        self.T = T
        self.field = RATIONALS
        self._series = delta_qexp(T, guard=guard)

    def coeff(self, n: int) -> AlgebraicNumber:
        if not self.supports(n):
            raise OutOfRange(f"index {n} outside the q-expansion range 1..{self.T - 1}")
        return AlgebraicNumber(self.field, (self._series[n],))

    def supports(self, n: int) -> bool:
        return 1 <= n < self.T


def qexp_oracle(T: int, guard: int = DEFAULT_GUARD) -> QExpansionOracle:
    return QExpansionOracle(T, guard)


class BasisCombinationOracle:
    """coeff(n) = sum_i alpha_i * basis_i.coeff(n)."""

    def __init__(self, basis: Sequence[CoefficientOracle], alphas: Sequence):
        if len(basis) != len(alphas) or not basis:
            raise ValueError("basis and coefficients must be non-empty and of equal length")
        self.field = basis[0].field
        for b in basis:
            if b.field != self.field:
                raise ValueError("all basis oracles must share one coefficient field")
        self.basis = list(basis)
        self.alphas = [self.field(a) for a in alphas]

    def coeff(self, n: int) -> AlgebraicNumber:
        total = self.field.zero
        for a, b in zip(self.alphas, self.basis):
            total = total + a * b.coeff(n)
        return total

    def supports(self, n: int) -> bool:
        return all(b.supports(n) for b in self.basis)


def basis_combination_oracle(basis, alphas) -> BasisCombinationOracle:
    return BasisCombinationOracle(basis, alphas)


class ScaledOracle:
    """c * f; handy for building non-normalised basis elements."""

    def __init__(self, oracle: CoefficientOracle, scale):
        self.oracle = oracle
        self.field = oracle.field
        self.scale = self.field(scale)

    def coeff(self, n: int) -> AlgebraicNumber:
        return self.scale * self.oracle.coeff(n)

    def supports(self, n: int) -> bool:
        return self.oracle.supports(n)


# ---------------------------------------------------------------------------
# JSON spec documents

def _require(doc, key, kind):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ParseError(f"field {key!r} has the wrong type")
    return value


def load_spec(document: str) -> EigenformSpec:
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("spec document must be a JSON object")
    name = _require(doc, "name", str)
    weight = _require(doc, "weight", int)
    level = _require(doc, "level", int)
    fdoc = _require(doc, "field", dict)
    min_poly = _require(fdoc, "min_poly", list)
    emb = fdoc.get("embedding", [0, 0])
    if not (isinstance(emb, list) and len(emb) == 2):
        raise ParseError("field.embedding must be [re, im]")
    try:
        K = NumberField([int(c) for c in min_poly], complex(float(emb[0]), float(emb[1])))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, EigenfactorError):
            raise InvariantViolation("coefficient field", str(exc)) from exc
        raise ParseError(f"bad field description: {exc}") from exc

    cdoc = _require(doc, "character", dict)
    kind = cdoc.get("kind")
    if kind == "trivial":
        chi = DirichletCharacter.trivial(level, K)
    elif kind == "table":
        vals = _require(cdoc, "values", list)
        chi = DirichletCharacter(level, tuple(parse_algebraic(K, str(v)) for v in vals))
    else:
        raise ParseError(f"unknown character kind {kind!r}")

    primes = {}
    for key, coords in _require(doc, "primes", dict).items():
        try:
            p = int(key)
            if isinstance(coords, str):
                value = parse_algebraic(K, coords)
            else:
                value = AlgebraicNumber(K, [Fraction(str(c)) for c in coords])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad prime coefficient for {key!r}: {exc}") from exc
        primes[p] = value
    return EigenformSpec(name, weight, level, chi, K, primes, bool(doc.get("non_cm", True)))


def dump_spec(spec: EigenformSpec) -> str:
    r = spec.field.root(20).value
    doc = {
        "name": spec.name,
        "weight": spec.weight,
        "level": spec.level,
        "character": ({"kind": "trivial"} if spec.character.is_trivial()
                      else {"kind": "table", "values": [str(v) for v in spec.character.values]}),
        "field": {"min_poly": list(spec.field.min_poly.coeffs),
                  "embedding": [float(r.real), float(r.imag)]},
        "primes": {str(p): [str(c) for c in spec.prime_coeffs[p].coords] for p in spec.primes},
    }
    return json.dumps(doc, indent=2)


def read_spec_text(path: str | Path) -> str:
    """Text of a spec file; bare bundled names like ``g29.json`` fall back to package data."""
    p = Path(path)
    if p.exists():
        return p.read_text()
    if p.name in BUNDLED_SPECS and str(path) == p.name:
        return resources.files("eigenfactor").joinpath("data", p.name).read_text()
    raise FileNotFoundError(f"no spec file at {path}")


def load_spec_file(path: str | Path) -> EigenformSpec:
    return load_spec(read_spec_text(path))


def bundled_spec(name: str) -> EigenformSpec:
    return load_spec(resources.files("eigenfactor").joinpath("data", name).read_text())


def delta_spec(prime_bound: int = 97, guard: int = DEFAULT_GUARD) -> EigenformSpec:
    """Delta with tau(p) tabulated for p <= prime_bound, read from the q-expansion."""
    series = delta_qexp(prime_bound + 1, guard=guard)
    K = RATIONALS
    return EigenformSpec("delta", 12, 1, DirichletCharacter.trivial(1, K), K,
                         {p: K(series[p]) for p in primes_upto(prime_bound)})
