"""Skew polynomial ring F_q[Y; sigma] with sigma the twist Frobenius.

Elements are coefficient tuples (f_0, ..., f_n) for sum_i f_i Y^i, zero
being the empty tuple, with multiplication twisted by Y a = sigma(a) Y
where sigma(a) = a^(p^twist).  The ring is a left and right Euclidean
domain, so both one-sided divisions, both one-sided gcds, and greatest
common left divisors of images of additive polynomials are all exact.

to_skew / to_linear translate between this ring and LinPoly with the
same twist: coefficient tuples are carried over unchanged, and
composition of additive polynomials matches ring multiplication.

When the module flag CHECK_DIVISION is True every quotient/remainder
pair is multiplied back and compared against the dividend before being
returned, and DIVISION_CHECKS counts how many such checks ran.
"""

from __future__ import annotations

from typing import Iterable

from .errors import BothZeroError, ContextMismatchError, TwistMismatchError
from .fields import FiniteField, FqElem
from .linpoly import NEG_INF, LinPoly

CHECK_DIVISION = False
DIVISION_CHECKS = 0


def _trim(coeffs: list[FqElem]) -> tuple[FqElem, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class SkewPoly:
    __slots__ = ("field", "twist", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[FqElem], twist: int = 1):
        if not isinstance(twist, int) or twist < 1:
            raise TwistMismatchError(f"twist step must be a positive int, got {twist!r}")
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, FqElem) or c.field != field:
                raise ContextMismatchError("coefficient from a different field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("SkewPoly is immutable")

    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FiniteField, twist: int = 1) -> "SkewPoly":
        return cls(field, (), twist)

    @classmethod
    def one(cls, field: FiniteField, twist: int = 1) -> "SkewPoly":
        return cls(field, (field.one(),), twist)

    @classmethod
    def monomial(cls, field: FiniteField, index: int, coeff: FqElem, twist: int = 1) -> "SkewPoly":
        zero = field.zero()
        return cls(field, [zero] * index + [coeff], twist)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> FqElem:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewPoly)
            and self.field == other.field
            and self.twist == other.twist
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.twist, self.coeffs))

    def __repr__(self) -> str:
        digs = [list(c.digits) for c in self.coeffs]
        return f"SkewPoly(twist={self.twist}, coeffs={digs})"

    # ------------------------------------------------------------------

    def _peer(self, other: "SkewPoly") -> None:
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if self.field != other.field:
            raise ContextMismatchError("polynomials over different fields")
        if self.twist != other.twist:
            raise TwistMismatchError(
                f"twist steps differ: {self.twist} vs {other.twist}"
            )

    def _sigma(self, a: FqElem, n: int) -> FqElem:
        """sigma^n(a), n may be negative."""
        return a.frobenius((self.twist * n) % self.field.e)

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._peer(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return SkewPoly(self.field, out, self.twist)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.field, [-c for c in self.coeffs], self.twist)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._peer(other)
        field = self.field
        if self.is_zero or other.is_zero:
            return SkewPoly.zero(field, self.twist)
        a, b = self.coeffs, other.coeffs
        out = [field.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * self._sigma(bj, i)
        return SkewPoly(field, out, self.twist)

    def left_scalar(self, c: FqElem) -> "SkewPoly":
        """(c) * self as ring elements: coefficients multiplied by c on the left."""
        return SkewPoly(self.field, [c * a for a in self.coeffs], self.twist)

    def right_scalar(self, c: FqElem) -> "SkewPoly":
        """self * (c): coefficient i picks up sigma^i(c)."""
        return SkewPoly(
            self.field,
            [a * self._sigma(c, i) for i, a in enumerate(self.coeffs)],
            self.twist,
        )

    # ------------------------------------------------------------------
    # Euclidean structure

    def divmod_right(self, g: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """q, r with self = q * g + r and deg r < deg g."""
        self._peer(g)
        if g.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.field
        n = len(g.coeffs) - 1
        r = list(self.coeffs)
        q = [field.zero()] * max(len(r) - n, 0)
        g_inv = g.lead.inv()
        while len(r) > n:
            k = len(r) - 1 - n
            c = r[-1] * self._sigma(g_inv, k)
            q[k] = c
            for i, gi in enumerate(g.coeffs):
                if gi:
                    r[i + k] = r[i + k] - c * self._sigma(gi, k)
            del r[-1]
            while r and not r[-1]:
                del r[-1]
        qq = SkewPoly(field, q, self.twist)
        rr = SkewPoly(field, r, self.twist)
        _maybe_check(self, qq * g + rr)
        return qq, rr

    def divmod_left(self, g: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """q, r with self = g * q + r and deg r < deg g."""
        self._peer(g)
        if g.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.field
        n = len(g.coeffs) - 1
        g_inv = g.lead.inv()
        r = list(self.coeffs)
        q = [field.zero()] * max(len(r) - n, 0)
        while len(r) > n:
            k = len(r) - 1 - n
            c = self._sigma(g_inv * r[-1], -n)
            q[k] = c
            for i, gi in enumerate(g.coeffs):
                if gi:
                    r[i + k] = r[i + k] - gi * self._sigma(c, i)
            del r[-1]
            while r and not r[-1]:
                del r[-1]
        qq = SkewPoly(field, q, self.twist)
        rr = SkewPoly(field, r, self.twist)
        _maybe_check(self, g * qq + rr)
        return qq, rr

    def mod_right(self, g: "SkewPoly") -> "SkewPoly":
        return self.divmod_right(g)[1]

    def mod_left(self, g: "SkewPoly") -> "SkewPoly":
        return self.divmod_left(g)[1]

    def monic_left(self) -> "SkewPoly":
        """Monic left-scalar normalisation c * self."""
        if self.is_zero:
            return self
        return self.left_scalar(self.lead.inv())

    def monic_right(self) -> "SkewPoly":
        """Monic right-scalar normalisation self * c."""
        if self.is_zero:
            return self
        c = self._sigma(self.lead.inv(), -(len(self.coeffs) - 1))
        return self.right_scalar(c)


def _maybe_check(expected: SkewPoly, rebuilt: SkewPoly) -> None:
    global DIVISION_CHECKS
    if CHECK_DIVISION:
        DIVISION_CHECKS += 1
        if rebuilt != expected:
            raise AssertionError("division check failed: q, r do not rebuild the dividend")


# ----------------------------------------------------------------------
# one-sided gcds


def gcd_right(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor, via right-division remainders."""
    f._peer(g)
    if f.is_zero and g.is_zero:
        raise BothZeroError("gcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a.mod_right(b)
    return a.monic_left()


def gcd_left(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic greatest common left divisor, via left-division remainders."""
    f._peer(g)
    if f.is_zero and g.is_zero:
        raise BothZeroError("gcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a.mod_left(b)
    return a.monic_right()


def skew_gcd(f: SkewPoly, g: SkewPoly, side: str) -> SkewPoly:
    if side == "right":
        return gcd_right(f, g)
    if side == "left":
        return gcd_left(f, g)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ----------------------------------------------------------------------
# correspondence with additive polynomials


def to_skew(L: LinPoly) -> SkewPoly:
    """Ring image of an additive polynomial; composition becomes product."""
    return SkewPoly(L.field, L.coeffs, L.twist)


def to_linear(f: SkewPoly) -> LinPoly:
    return LinPoly(f.field, f.coeffs, f.twist)


def gcldf(L1: LinPoly, L2: LinPoly) -> tuple[LinPoly, LinPoly, LinPoly]:
    """Greatest common left divisor factor of two additive polynomials.

    Returns (G, A, B) with L1 = G . A and L2 = G . B exactly (symbolic
    composition, no reduction), G monic.  Raises BothZeroError when both
    inputs are zero; if exactly one is zero the other's monic form is
    returned with the matching witness zero.
    """
    f1, f2 = to_skew(L1), to_skew(L2)
    g = gcd_left(f1, f2)
    a, ra = f1.divmod_left(g)
    b, rb = f2.divmod_left(g)
    if not (ra.is_zero and rb.is_zero):
        raise AssertionError("left gcd does not left-divide its inputs")
    return to_linear(g), to_linear(a), to_linear(b)
