"""Exact arithmetic in Z[zeta_12] and Z[i].

``CycInt`` stores an element of the 12th cyclotomic ring on the power basis
(1, z, z^2, z^3) with z = exp(i*pi/6), using the minimal polynomial
z^4 = z^2 - 1.  This ring contains every value the boundary weights take at
the angles 0, pi/6, pi/3, pi/2 (via x = z^-s, y = z^s) together with
sqrt(3) = 2z - z^3, i = z^3, and the primitive roots omega_3 = z^4 and
omega_6 = z^2.  Division is exact or raises: multiply by the three Galois
conjugates, divide by the integer norm, and verify by multiplying back.

``GaussInt`` is the analogous two-coordinate ring Z[i], used where the angle
pi/4 leaves Z[zeta_12].
"""

from __future__ import annotations

import cmath

from .poly import NotDivisible

_HALF_PI6 = cmath.exp(1j * cmath.pi / 6)


class CycInt:
    """An element a0 + a1*z + a2*z^2 + a3*z^3 of Z[zeta_12]."""

    __slots__ = ("coords",)

    def __init__(self, a0: int, a1: int = 0, a2: int = 0, a3: int = 0):
        object.__setattr__(self, "coords", (int(a0), int(a1), int(a2), int(a3)))

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zeta(k: int) -> "CycInt":
        """z^k for any integer k (reduced mod 12)."""
        k %= 12
        acc = CycInt(1)
        for _ in range(k):
            acc = acc._times_zeta()
        return acc

    @staticmethod
    def sqrt3() -> "CycInt":
        return CycInt(0, 2, 0, -1)

    @staticmethod
    def imag_unit() -> "CycInt":
        return CycInt.zeta(3)

    @staticmethod
    def omega3() -> "CycInt":
        """Primitive cube root of unity exp(2*pi*i/3)."""
        return CycInt.zeta(4)

    @staticmethod
    def omega6() -> "CycInt":
        """Primitive sixth root of unity exp(pi*i/3)."""
        return CycInt.zeta(2)

    def _times_zeta(self) -> "CycInt":
        a0, a1, a2, a3 = self.coords
        # shift up one power, folding z^4 = z^2 - 1
        return CycInt(-a3, a0, a1 + a3, a2)

    # -- ring operations -------------------------------------------------------

    @staticmethod
    def _coerce(v) -> "CycInt":
        if isinstance(v, CycInt):
            return v
        if isinstance(v, int):
            return CycInt(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to CycInt")

    def __add__(self, other):
        if not isinstance(other, (CycInt, int)):
            return NotImplemented
        o = CycInt._coerce(other)
        return CycInt(*(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(*(-a for a in self.coords))

    def __sub__(self, other):
        if not isinstance(other, (CycInt, int)):
            return NotImplemented
        return self + (-CycInt._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (CycInt, int)):
            return NotImplemented
        b = CycInt._coerce(other).coords
        a = self.coords
        c = [0] * 7
        for i in range(4):
            if a[i] == 0:
                continue
            for j in range(4):
                c[i + j] += a[i] * b[j]
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        return CycInt(
            c[0] - c[4] - c[6],
            c[1] - c[5],
            c[2] + c[4],
            c[3] + c[5],
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycInt":
        if k < 0:
            return CycInt(1).exact_div(self ** (-k))
        acc, base = CycInt(1), self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.coords == other.coords

    def __bool__(self):
        return any(self.coords)

    def __hash__(self):
        return hash(("CycInt", self.coords))

    def __repr__(self):
        return f"CycInt{self.coords}"

    # -- Galois theory and division ---------------------------------------------

    def galois(self, k: int) -> "CycInt":
        """Apply the automorphism z -> z^k, k coprime to 12 (1, 5, 7, 11)."""
        if k % 12 not in (1, 5, 7, 11):
            raise ValueError("k must be a unit mod 12")
        a = self.coords
        out = CycInt(a[0])
        for i in range(1, 4):
            if a[i]:
                out = out + CycInt.zeta(k * i) * a[i]
        return out

    def conjugate(self) -> "CycInt":
        """Complex conjugation, the automorphism z -> z^-1."""
        return self.galois(11)

    def norm(self) -> int:
        """Field norm: product over all four Galois conjugates, in Z."""
        p = self * self.galois(5) * self.galois(7) * self.galois(11)
        a0, a1, a2, a3 = p.coords
        if (a1, a2, a3) != (0, 0, 0):
            raise ArithmeticError("norm did not land in Z (internal error)")
        return a0

    def exact_div(self, other) -> "CycInt":
        """Exact quotient in Z[zeta_12]; raises NotDivisible otherwise."""
        den = CycInt._coerce(other)
        if not den:
            raise ZeroDivisionError("division by zero in Z[zeta_12]")
        aux = den.galois(5) * den.galois(7) * den.galois(11)
        n = (den * aux).coords[0]
        t = self * aux
        if any(c % n for c in t.coords):
            raise NotDivisible(f"{self!r} not divisible by {den!r}")
        q = CycInt(*(c // n for c in t.coords))
        if q * den != self:
            raise NotDivisible(f"{self!r} not divisible by {den!r}")
        return q

    # -- structure ----------------------------------------------------------------

    def is_rational_int(self) -> bool:
        return self.coords[1:] == (0, 0, 0)

    def as_int(self) -> int:
        if not self.is_rational_int():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coords[0]

    def is_real(self) -> bool:
        a0, a1, a2, a3 = self.coords
        return a2 == 0 and a1 == -2 * a3

    def as_real_pair(self) -> tuple[int, int]:
        """Write a real element as (a, b) meaning a + b*sqrt(3)."""
        if not self.is_real():
            raise ValueError(f"{self!r} is not real")
        a0, _, _, a3 = self.coords
        return (a0, -a3)

    def to_complex(self) -> complex:
        a0, a1, a2, a3 = self.coords
        return a0 + a1 * _HALF_PI6 + a2 * _HALF_PI6**2 + a3 * _HALF_PI6**3


def theta_point(s: int) -> tuple[CycInt, CycInt]:
    """Boundary weights (x, y) = (z^-s, z^s) at the angle theta = s*pi/6."""
    return CycInt.zeta(-s), CycInt.zeta(s)


class GaussInt:
    """A Gaussian integer re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0):
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussInt is immutable")

    @staticmethod
    def _coerce(v) -> "GaussInt":
        if isinstance(v, GaussInt):
            return v
        if isinstance(v, int):
            return GaussInt(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to GaussInt")

    def __add__(self, other):
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt._coerce(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt._coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (GaussInt, int)):
            return NotImplemented
        o = GaussInt._coerce(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GaussInt":
        if k < 0:
            return GaussInt(1).exact_div(self ** (-k))
        acc, base = GaussInt(1), self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = GaussInt(other)
        if not isinstance(other, GaussInt):
            return NotImplemented
        return (self.re, self.im) == (other.re, other.im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __hash__(self):
        return hash(("GaussInt", self.re, self.im))

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, other) -> "GaussInt":
        den = GaussInt._coerce(other)
        if not den:
            raise ZeroDivisionError("division by zero in Z[i]")
        n = den.norm()
        t = self * den.conjugate()
        if t.re % n or t.im % n:
            raise NotDivisible(f"{self!r} not divisible by {den!r}")
        q = GaussInt(t.re // n, t.im // n)
        if q * den != self:
            raise NotDivisible(f"{self!r} not divisible by {den!r}")
        return q

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class RadicalValue:
    """A number a*sqrt(r) with integer a and squarefree r in {1, 2, 3}.

    This is the shape every angle-table entry takes; keeping the radical
    symbolic lets the tables stay exact end to end.
    """

    __slots__ = ("scale", "radical")

    def __init__(self, scale: int, radical: int = 1):
        if radical not in (1, 2, 3):
            raise ValueError("radical must be 1, 2 or 3")
        if scale == 0:
            radical = 1
        object.__setattr__(self, "scale", int(scale))
        object.__setattr__(self, "radical", int(radical))

    def __setattr__(self, name, value):
        raise AttributeError("RadicalValue is immutable")

    def __eq__(self, other):
        if not isinstance(other, RadicalValue):
            return NotImplemented
        return (self.scale, self.radical) == (other.scale, other.radical)

    def __hash__(self):
        return hash(("RadicalValue", self.scale, self.radical))

    def __float__(self):
        return self.scale * self.radical**0.5

    def __repr__(self):
        return f"RadicalValue({self.scale}, {self.radical})"

    def __str__(self):
        if self.radical == 1:
            return str(self.scale)
        return f"{self.scale}*sqrt({self.radical})"

    @staticmethod
    def from_cyc(v: CycInt) -> "RadicalValue":
        """Classify a real cyclotomic value as n or n*sqrt(3)."""
        a, b = v.as_real_pair()
        if a and b:
            raise ValueError(f"{v!r} is not of the form n or n*sqrt(3)")
        return RadicalValue(b, 3) if b else RadicalValue(a, 1)
