"""The field with p² elements, presented as F_p(a) with a² = c.

``c`` is the least quadratic nonresidue modulo ``p``, so a^p = -a and the
trace is tr(j + l·a) = 2j.  Element ``j + l·a`` has index ``j*p + l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import BadParameters, NoOrderQUnit


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def least_nonresidue(p: int) -> int:
    squares = {(k * k) % p for k in range(1, p)}
    return next(c for c in range(2, p) if c not in squares)


def unit_of_order(q: int, p: int) -> int:
    """Smallest ν in F_p^× of multiplicative order exactly q."""
    if (p - 1) % q:
        raise NoOrderQUnit(f"{p} is not 1 modulo {q}; no unit of order {q}", (p, q))
    for nu in range(2, p):
        if pow(nu, q, p) == 1 and all(pow(nu, d, p) != 1 for d in range(1, q)):
            return nu
    raise NoOrderQUnit(f"no unit of order {q} modulo {p}", (p, q))


def q_number(nu: int, x: int, p: int) -> int:
    """[x]_ν = 1 + ν + ... + ν^{x-1} in F_p, with [0]_ν = 0."""
    return sum(pow(nu, k, p) for k in range(x)) % p


@dataclass(frozen=True)
class GaloisField:
    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise BadParameters(f"p = {self.p} must be an odd prime", (self.p,))

    @cached_property
    def c(self) -> int:
        return least_nonresidue(self.p)

    @property
    def order(self) -> int:
        return self.p * self.p

    def index(self, j: int, l: int) -> int:
        return (j % self.p) * self.p + (l % self.p)

    def coords(self, i: int) -> tuple[int, int]:
        return divmod(int(i), self.p)

    def one(self) -> int:
        return self.index(1, 0)

    def generator(self) -> int:
        """The element ``a``."""
        return self.index(0, 1)

    @cached_property
    def _jl(self) -> tuple[np.ndarray, np.ndarray]:
        i = np.arange(self.order)
        return i // self.p, i % self.p

    @cached_property
    def add_table(self) -> np.ndarray:
        j, l = self._jl
        p = self.p
        return ((j[:, None] + j[None, :]) % p) * p + (l[:, None] + l[None, :]) % p

    @cached_property
    def mul_table(self) -> np.ndarray:
        j, l = self._jl
        p, c = self.p, self.c
        jj = (j[:, None] * j[None, :] + c * l[:, None] * l[None, :]) % p
        ll = (j[:, None] * l[None, :] + l[:, None] * j[None, :]) % p
        return jj * p + ll

    def add(self, u: int, v: int) -> int:
        return int(self.add_table[u, v])

    def mul(self, u: int, v: int) -> int:
        return int(self.mul_table[u, v])

    def neg(self, u: int) -> int:
        j, l = self.coords(u)
        return self.index(-j, -l)

    def scale(self, k: int, u: int) -> int:
        j, l = self.coords(u)
        return self.index(k * j, k * l)

    def inv(self, u: int) -> int:
        if u == 0:
            raise ZeroDivisionError("0 has no inverse")
        row = self.mul_table[u]
        return int(np.flatnonzero(row == self.one())[0])

    def power(self, u: int, k: int) -> int:
        acc = self.one()
        for _ in range(k):
            acc = self.mul(acc, u)
        return acc

    @cached_property
    def trace(self) -> np.ndarray:
        """tr(j + l·a) = 2j, as a table over element indices."""
        j, _ = self._jl
        return (2 * j) % self.p

    @cached_property
    def det_table(self) -> np.ndarray:
        """det_a(j + l·a, j' + l'·a) = j l' - l j'."""
        j, l = self._jl
        return (j[:, None] * l[None, :] - l[:, None] * j[None, :]) % self.p

    def elements(self) -> range:
        return range(self.order)
