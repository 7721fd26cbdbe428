"""Exact arithmetic in rings of cyclotomic integers Z[zeta_e].

Values are integer coefficient vectors of length deg(Phi_e), reduced
modulo the e-th cyclotomic polynomial.  Zero tests and equality are
exact; mixed root orders are aligned by embedding into the lcm ring.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of monic integer polynomial division with zero remainder."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q[i - dn] = c
        for j, d in enumerate(den):
            num[i - dn + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("division was not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_e, by dividing x^e - 1 by all Phi_d, d|e, d<e."""
    if e == 1:
        return (-1, 1)
    num = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            num = _poly_divmod_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


class _Ring:
    """Reduction data for Z[x]/Phi_e: rows[k] = x^k reduced, 0 <= k < 2e."""

    def __init__(self, e: int):
        self.e = e
        phi = cyclotomic_polynomial(e)
        self.deg = len(phi) - 1
        rows: list[tuple[int, ...]] = []
        for k in range(self.deg):
            rows.append(tuple(1 if i == k else 0 for i in range(self.deg)))
        for k in range(self.deg, 2 * e):
            # x^k = x * x^(k-1), then kill the top coefficient with the monic Phi_e.
            prev = rows[k - 1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                for i in range(self.deg):
                    shifted[i] -= top * phi[i]
            rows.append(tuple(shifted))
        self.rows = rows


@lru_cache(maxsize=None)
def _ring(e: int) -> _Ring:
    return _Ring(e)


class Cyc:
    """An element of Z[zeta_e] in the power basis of zeta_e mod Phi_e."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: Sequence[int]):
        ring = _ring(e)
        if len(coeffs) != ring.deg:
            raise ValueError(f"expected {ring.deg} coefficients for e={e}")
        self.e = e
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, e: int) -> Cyc:
        return cls(e, (0,) * _ring(e).deg)

    @classmethod
    def integer(cls, n: int, e: int = 1) -> Cyc:
        ring = _ring(e)
        return cls(e, (n,) + (0,) * (ring.deg - 1))

    @classmethod
    def root_power(cls, e: int, k: int) -> Cyc:
        """zeta_e^k reduced mod Phi_e."""
        return cls(e, _ring(e).rows[k % e])

    @classmethod
    def from_root_multiset(cls, e: int, counts: dict[int, int]) -> Cyc:
        """Sum of counts[k] copies of zeta_e^k."""
        ring = _ring(e)
        acc = [0] * ring.deg
        for k, c in counts.items():
            if c == 0:
                continue
            row = ring.rows[k % e]
            for i in range(ring.deg):
                acc[i] += c * row[i]
        return cls(e, acc)

    def rebase(self, new_e: int) -> Cyc:
        """Embed into Z[zeta_new_e] via zeta_e = zeta_new_e^(new_e/e)."""
        if new_e == self.e:
            return self
        if new_e % self.e:
            raise ValueError(f"cannot embed Z[zeta_{self.e}] into Z[zeta_{new_e}]")
        step = new_e // self.e
        ring = _ring(new_e)
        acc = [0] * ring.deg
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            row = ring.rows[(j * step) % new_e]
            for i in range(ring.deg):
                acc[i] += c * row[i]
        return Cyc(new_e, acc)

    def _aligned(self, other: Cyc) -> tuple[Cyc, Cyc]:
        if self.e == other.e:
            return self, other
        e = math.lcm(self.e, other.e)
        return self.rebase(e), other.rebase(e)

    def __add__(self, other: Cyc) -> Cyc:
        a, b = self._aligned(other)
        return Cyc(a.e, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: Cyc) -> Cyc:
        a, b = self._aligned(other)
        return Cyc(a.e, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> Cyc:
        return Cyc(self.e, tuple(-x for x in self.coeffs))

    def __mul__(self, other: Cyc | int) -> Cyc:
        if isinstance(other, int):
            return Cyc(self.e, tuple(other * x for x in self.coeffs))
        a, b = self._aligned(other)
        ring = _ring(a.e)
        conv = [0] * (2 * ring.deg - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        acc = list(conv[: ring.deg]) + [0] * max(0, ring.deg - len(conv))
        for k in range(ring.deg, len(conv)):
            c = conv[k]
            if c:
                row = ring.rows[k]
                for i in range(ring.deg):
                    acc[i] += c * row[i]
        return Cyc(a.e, acc)

    __rmul__ = __mul__

    def conjugate(self) -> Cyc:
        """Complex conjugation: zeta_e -> zeta_e^(e-1)."""
        ring = _ring(self.e)
        acc = [0] * ring.deg
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            row = ring.rows[(self.e - j) % self.e]
            for i in range(ring.deg):
                acc[i] += c * row[i]
        return Cyc(self.e, acc)

    def divide_exact(self, n: int) -> Cyc:
        if any(c % n for c in self.coeffs):
            raise ArithmeticError(f"coefficients {self.coeffs} not divisible by {n}")
        return Cyc(self.e, tuple(c // n for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.is_rational_integer() and self.coeffs[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    # Equal values can live in different rings, so Cyc stays unhashable.
    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Cyc({self.e}, {self.coeffs})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            power = f"z{self.e}" if j == 1 else f"z{self.e}^{j}"
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(f"{sign}{mag}{power}")
        return "".join(terms)
