"""Exact arithmetic in Q(zeta_N), the field of N-th roots of unity over Q.

Elements are stored on the power basis 1, z, ..., z^(phi(N)-1) modulo the
N-th cyclotomic polynomial, with Fraction coefficients throughout.  This is
the desk-scale stand-in for an algebraically closed constant field of
characteristic zero: it is exact, and it contains every root of unity the
symbol-algebra computations need once N is chosen large enough.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Tuple


class UnsupportedConstant(ArithmeticError):
    """A constant has no n-th root expressible as (root of unity) * rational."""


def _poly_trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_sub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_divmod(num: list, den: list) -> Tuple[list, list]:
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    inv_lead = Fraction(1) / Fraction(den[-1])
    while len(num) >= len(den):
        c = Fraction(num[-1]) * inv_lead
        k = len(num) - len(den)
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
        _poly_trim(num)
        if not num:
            break
    return _poly_trim(q), num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Dense integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("modulus must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod([Fraction(c) for c in poly],
                                [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not r
            poly = [int(c) for c in q]
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _integer_nth_root(m: int, n: int) -> Optional[int]:
    """Exact n-th root of a nonnegative integer, or None."""
    if m < 0:
        raise ValueError
    if m in (0, 1):
        return m
    lo, hi = 1, 1
    while hi ** n < m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** n == m else None


def rational_nth_root(q: Fraction, n: int) -> Optional[Fraction]:
    """Exact rational n-th root of q, or None.  Negative q needs n odd."""
    if q < 0:
        if n % 2 == 0:
            return None
        r = rational_nth_root(-q, n)
        return -r if r is not None else None
    pn = _integer_nth_root(q.numerator, n)
    pd = _integer_nth_root(q.denominator, n)
    if pn is None or pd is None:
        return None
    return Fraction(pn, pd)


class CyclotomicNumber:
    """An element of Q(zeta_N) with exact rational coordinates."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[Fraction]):
        self.modulus = modulus
        phi = euler_phi(modulus)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            cs = self._reduce(modulus, cs)
        cs += [Fraction(0)] * (phi - len(cs))
        self.coeffs = tuple(cs)

    @staticmethod
    def _reduce(modulus: int, coeffs: list) -> list:
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(modulus)]
        _, rem = _poly_divmod(coeffs, phi_poly)
        return rem

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, modulus: int, q) -> "CyclotomicNumber":
        return cls(modulus, [Fraction(q)])

    @classmethod
    def zeta(cls, modulus: int, power: int = 1) -> "CyclotomicNumber":
        power %= modulus
        return cls(modulus, [Fraction(0)] * power + [Fraction(1)])

    @classmethod
    def primitive_root(cls, modulus: int, order: int) -> "CyclotomicNumber":
        """The canonical primitive order-th root of unity zeta_N^(N/order)."""
        if modulus % order:
            raise ValueError(f"order {order} does not divide modulus {modulus}")
        return cls.zeta(modulus, modulus // order)

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.modulus != other.modulus:
            raise ValueError("cyclotomic modulus mismatch")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CyclotomicNumber(self.modulus,
                                [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CyclotomicNumber(self.modulus,
                                [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicNumber(self.modulus, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        return CyclotomicNumber(self.modulus, prod)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        return CyclotomicNumber.from_rational(self.modulus, other)

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverting zero cyclotomic number")
        # extended Euclid in Q[z] against the cyclotomic polynomial
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.modulus)]
        r0, r1 = phi_poly, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is the gcd, a nonzero constant since Phi_N is irreducible
        c = r0[0]
        return CyclotomicNumber(self.modulus, [a / c for a in s0])

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int) -> "CyclotomicNumber":
        if e < 0:
            return self.inverse() ** (-e)
        out = CyclotomicNumber.from_rational(self.modulus, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- predicates / views ------------------------------------------------

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(not c for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational constant")
        return self.coeffs[0]

    def root_of_unity_split(self) -> Optional[Tuple[int, Fraction]]:
        """Write self as zeta_N^k * q with q rational, if possible."""
        if self.is_zero():
            return None
        for k in range(self.modulus):
            cand = self * CyclotomicNumber.zeta(self.modulus, -k % self.modulus)
            if cand.is_rational():
                return k, cand.as_rational()
        return None

    def multiplicative_order(self) -> Optional[int]:
        """Order as a root of unity (None if not one)."""
        split = self.root_of_unity_split()
        if split is None:
            return None
        k, q = split
        if q == 1:
            pass
        elif q == -1:
            # fold -1 = zeta^(N/2) when N is even
            if self.modulus % 2:
                return None
            k = (k + self.modulus // 2) % self.modulus
        else:
            return None
        return self.modulus // gcd(k, self.modulus)

    def nth_root(self, n: int) -> "CyclotomicNumber":
        """An exact n-th root of the supported constant forms.

        Supports constants of the shape zeta_N^k * q with the rational part
        having a rational n-th root; raises UnsupportedConstant otherwise.
        """
        if n == 1:
            return self
        split = self.root_of_unity_split()
        if split is None:
            raise UnsupportedConstant("constant is not (root of unity) * rational")
        k, q = split
        if q < 0:
            if n % 2 == 1:
                pass  # handled by rational_nth_root
            elif self.modulus % 2 == 0:
                k = (k + self.modulus // 2) % self.modulus
                q = -q
            else:
                raise UnsupportedConstant("even root of a negative rational "
                                          "outside the root-of-unity lattice")
        rho = rational_nth_root(q, n)
        if rho is None:
            raise UnsupportedConstant(f"{q} has no rational {n}-th root")
        g = gcd(n, self.modulus)
        if k % g:
            raise UnsupportedConstant(
                f"zeta^{k} has no {n}-th root inside Q(zeta_{self.modulus})")
        m = self.modulus // g
        e = (k // g) * pow(n // g, -1, m) % m
        root = CyclotomicNumber.zeta(self.modulus, e) * rho
        return root

    # -- hashing / output --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicNumber):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return f"Cyc({self.modulus}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mon = "z" if k == 1 else f"z^{k}"
                parts.append(mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")
