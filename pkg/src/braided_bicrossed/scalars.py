"""Exact scalars: roots of unity and integers of a cyclotomic field.

A root of unity is stored as an exponent ``e`` modulo its conductor ``N``
(value ``exp(2*pi*i*e/N)``).  Linear combinations of roots of unity live
in Z[zeta_N] = Z[x]/(Phi_N) and are stored as integer coefficient vectors
of length phi(N); equality of two such vectors is equality in C.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import ConductorMismatch, NotDivisible


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, ascending coefficients, monic divisor
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dq = len(num) - len(den)
    if dq < 0:
        return [0], num
    quot = [0] * (dq + 1)
    for shift in range(dq, -1, -1):
        coef = num[shift + len(den) - 1]
        quot[shift] = coef
        if coef:
            for i, d in enumerate(den):
                num[shift + i] -= coef * d
    rem = num[: len(den) - 1] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            if any(rem):
                raise ArithmeticError(f"Phi_{d} does not divide x^{n}-1")
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def power_table(n: int) -> np.ndarray:
    """Row k holds x^k reduced modulo Phi_n, for 0 <= k < 2n.

    Multiplying a vector of per-exponent counts by the first ``n`` rows
    maps a formal sum of n-th roots of unity to its canonical form.
    """
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = np.zeros((2 * n, deg), dtype=np.int64)
    cur = np.zeros(deg, dtype=np.int64)
    cur[0] = 1
    for k in range(2 * n):
        rows[k] = cur
        # multiply by x and reduce the overflow coefficient
        top = cur[-1]
        nxt = np.zeros(deg, dtype=np.int64)
        nxt[1:] = cur[:-1]
        if top:
            nxt -= top * np.asarray(phi[:deg], dtype=np.int64)
        cur = nxt
    rows.setflags(write=False)
    return rows


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """The scalar zeta_N^e."""

    conductor: int
    exponent: int

    def __post_init__(self) -> None:
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.conductor)

    @classmethod
    def one(cls, conductor: int) -> "RootOfUnity":
        return cls(conductor, 0)

    def _check(self, other: "RootOfUnity") -> None:
        if other.conductor != self.conductor:
            raise ConductorMismatch(
                f"conductors {self.conductor} and {other.conductor} differ"
            )

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        self._check(other)
        return RootOfUnity(self.conductor, self.exponent + other.exponent)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        self._check(other)
        return RootOfUnity(self.conductor, self.exponent - other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.conductor, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.conductor, -self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    def order(self) -> int:
        return self.conductor // gcd(self.conductor, self.exponent)

    @property
    def value(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.exponent / self.conductor)

    def __repr__(self) -> str:
        return f"zeta_{self.conductor}^{self.exponent}"


def rescale_conductor(s: RootOfUnity, m: int) -> RootOfUnity:
    """Express ``s`` over the larger conductor ``m`` (requires N | m)."""
    if m % s.conductor:
        raise NotDivisible(f"{s.conductor} does not divide {m}", (s.conductor, m))
    return RootOfUnity(m, s.exponent * (m // s.conductor))


@dataclass(frozen=True)
class CycInt:
    """An element of Z[zeta_N], reduced modulo Phi_N."""

    conductor: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != totient(self.conductor):
            raise ValueError("coefficient vector has the wrong length")

    @classmethod
    def zero(cls, n: int) -> "CycInt":
        return cls(n, (0,) * totient(n))

    @classmethod
    def from_int(cls, n: int, k: int) -> "CycInt":
        return cls(n, (k,) + (0,) * (totient(n) - 1))

    @classmethod
    def one(cls, n: int) -> "CycInt":
        return cls.from_int(n, 1)

    @classmethod
    def root(cls, n: int, e: int) -> "CycInt":
        """Embed zeta_n^e."""
        row = power_table(n)[e % n]
        return cls(n, tuple(int(v) for v in row))

    @classmethod
    def embed(cls, r: RootOfUnity) -> "CycInt":
        return cls.root(r.conductor, r.exponent)

    def _check(self, other: "CycInt") -> None:
        if other.conductor != self.conductor:
            raise ConductorMismatch(
                f"conductors {self.conductor} and {other.conductor} differ"
            )

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "CycInt") -> "CycInt":
        if isinstance(other, int):
            other = CycInt.from_int(self.conductor, other)
        self._check(other)
        return CycInt(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycInt") -> "CycInt":
        return self + (-other)

    def __mul__(self, other: "CycInt | RootOfUnity | int") -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.conductor, tuple(other * a for a in self.coeffs))
        if isinstance(other, RootOfUnity):
            other = CycInt.embed(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        n = self.conductor
        deg = len(self.coeffs)
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        table = power_table(n)
        out = np.zeros(deg, dtype=object)
        for k, c in enumerate(prod):
            if c:
                out += c * table[k].astype(object)
        return CycInt(n, tuple(int(v) for v in out))

    __rmul__ = __mul__

    def unit_form(self) -> tuple[int, int] | None:
        """Return (sign, e) if self == sign * zeta_N^e, else None."""
        for e in range(self.conductor):
            r = CycInt.root(self.conductor, e)
            if r == self:
                return 1, e
            if (-r) == self:
                return -1, e
        return None

    def inverse_unit(self) -> "CycInt":
        form = self.unit_form()
        if form is None:
            raise ZeroDivisionError(f"{self} is not a signed root of unity")
        sign, e = form
        return CycInt.root(self.conductor, -e) * sign

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(c * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycInt[{self.conductor}](" + (" + ".join(terms) or "0") + ")"


def cyc_arith(a: CycInt, b: CycInt, op: str) -> CycInt | bool:
    """Dispatch helper: ``op`` is one of 'add', 'sub', 'mul', 'eq'."""
    if a.conductor != b.conductor:
        raise ConductorMismatch(f"conductors {a.conductor} and {b.conductor} differ")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def canonical_sums(
    keys: np.ndarray, exps: np.ndarray, weights: np.ndarray | None, n: int
) -> tuple[np.ndarray, np.ndarray]:
    """Group the formal sum  sum_i w_i zeta_n^{e_i} [key_i]  by key.

    Returns the sorted distinct keys and, for each, the canonical
    coefficient vector in Z[zeta_n].  Vectorized; exact for the small
    integer weights used in axiom sweeps.
    """
    keys = np.asarray(keys, dtype=np.int64).ravel()
    exps = np.mod(np.asarray(exps, dtype=np.int64).ravel(), n)
    if weights is None:
        weights = np.ones(keys.shape, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64).ravel()
    if keys.size == 0:
        return keys, np.zeros((0, totient(n)), dtype=np.int64)
    uniq, inv = np.unique(keys, return_inverse=True)
    flat = inv.astype(np.int64) * n + exps
    counts = np.bincount(flat, weights=weights.astype(np.float64), minlength=uniq.size * n)
    counts = np.rint(counts).astype(np.int64).reshape(uniq.size, n)
    return uniq, counts @ power_table(n)[:n]


def sums_differ(
    keys_a: np.ndarray,
    exps_a: np.ndarray,
    keys_b: np.ndarray,
    exps_b: np.ndarray,
    n: int,
    weights_a: np.ndarray | None = None,
    weights_b: np.ndarray | None = None,
) -> np.ndarray:
    """Keys at which two formal sums of roots of unity disagree."""
    keys_a = np.asarray(keys_a, dtype=np.int64).ravel()
    keys_b = np.asarray(keys_b, dtype=np.int64).ravel()
    wa = np.ones(keys_a.size, dtype=np.int64) if weights_a is None else np.asarray(weights_a).ravel()
    wb = np.ones(keys_b.size, dtype=np.int64) if weights_b is None else np.asarray(weights_b).ravel()
    keys = np.concatenate([keys_a, keys_b])
    exps = np.concatenate([np.asarray(exps_a).ravel(), np.asarray(exps_b).ravel()])
    weights = np.concatenate([wa, -wb])
    uniq, coeffs = canonical_sums(keys, exps, weights, n)
    return uniq[np.any(coeffs != 0, axis=1)]
