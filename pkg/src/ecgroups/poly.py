"""Dense univariate polynomials with coefficients in a FieldSpec.

Coefficients are stored low degree first; the zero polynomial has an
empty coefficient tuple. Root finding is by exhaustive evaluation,
which is the right tool at the field sizes this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement, FieldSpec


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[FieldElement, ...]

    @staticmethod
    def make(field: FieldSpec, coeffs) -> Poly:
        elts = [field(c) for c in coeffs]
        while elts and elts[-1].is_zero():
            elts.pop()
        return Poly(field, tuple(elts))

    @staticmethod
    def x(field: FieldSpec) -> Poly:
        return Poly.make(field, [0, 1])

    @staticmethod
    def const(field: FieldSpec, c) -> Poly:
        return Poly.make(field, [c])

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 by convention."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Poly.make(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Poly.make(self.field, [x - y for x, y in zip(a, b)])

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> Poly:
        if isinstance(other, FieldElement) or isinstance(other, int):
            c = self.field(other)
            return Poly.make(self.field, [a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(self.field, ())
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly.make(self.field, out)

    __rmul__ = __mul__

    def divmod(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        z = self.field.zero()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(self.field, ()), self
        quo = [z] * (dq + 1)
        inv = other.leading().inverse()
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] * inv
            if not c.is_zero():
                quo[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly.make(self.field, quo), Poly.make(self.field, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __pow__(self, e: int) -> Poly:
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, mod: Poly) -> Poly:
        result = Poly.const(self.field, 1)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def derivative(self) -> Poly:
        return Poly.make(
            self.field, [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def __call__(self, x) -> FieldElement:
        x = self.field(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def roots(self) -> list[FieldElement]:
        """Distinct roots in the coefficient field, canonical order."""
        if self.is_zero():
            raise ValueError("every element is a root of the zero polynomial")
        return [x for x in self.field.elements() if self(x).is_zero()]

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"({c})*x")
            else:
                terms.append(f"({c})*x^{i}")
        return " + ".join(terms)
