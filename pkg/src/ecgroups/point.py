"""The group of points: affine group law, scalar multiplication, NAF.

Addition implements the full long-form case analysis, so every curve
model the package produces (including characteristic 2 and 3 normal
forms) uses the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import Curve, EdwardsCurve, is_nonsingular
from .errors import DenominatorVanishes, MixedCurves, SingularCurve
from .field import FieldElement, parse_element


@dataclass(frozen=True)
class Point:
    curve: Curve
    x: FieldElement | None = None
    y: FieldElement | None = None

    def __post_init__(self):
        if self.x is not None:
            assert self.curve.equation_lhs_minus_rhs(self.x, self.y).is_zero(), (
                "point does not satisfy the curve equation"
            )

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @staticmethod
    def infinity(curve: Curve) -> Point:
        return Point(curve)

    @staticmethod
    def at(curve: Curve, x, y) -> Point:
        return Point(curve, curve.field(x), curve.field(y))

    def __str__(self):
        if self.is_infinity:
            return "inf"
        return f"({self.x},{self.y})"


def on_curve(curve: Curve, x, y) -> bool:
    return curve.equation_lhs_minus_rhs(curve.field(x), curve.field(y)).is_zero()


def negate(P: Point) -> Point:
    if P.is_infinity:
        return P
    E = P.curve
    return Point(E, P.x, -P.y - E.a1 * P.x - E.a3)


def add(P: Point, Q: Point) -> Point:
    if P.curve != Q.curve:
        raise MixedCurves("points on different curves")
    E = P.curve
    if not is_nonsingular(E):
        raise SingularCurve("group law requires a nonsingular curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1 = P.x, P.y
    x2, y2 = Q.x, Q.y
    if x1 == x2:
        if Q == negate(P):
            return Point.infinity(E)
        # duplication; the tangent slope
        den = 2 * y1 + E.a1 * x1 + E.a3
        if den.is_zero():
            return Point.infinity(E)  # 2-torsion
        num = 3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1
        u = num / den
    else:
        u = (y2 - y1) / (x2 - x1)
    v = y1 - x1 * u
    x3 = u * u + E.a1 * u - E.a2 - x1 - x2
    y3 = -(u + E.a1) * x3 - v - E.a3
    return Point(E, x3, y3)


def double(P: Point) -> Point:
    return add(P, P)


def scalar_mul(n: int, P: Point, strategy: str = "binary") -> Point:
    """[n]P by double-and-add (binary) or signed-digit NAF."""
    if n < 0:
        return scalar_mul(-n, negate(P), strategy)
    if n == 0 or P.is_infinity:
        return Point.infinity(P.curve)
    if strategy == "binary":
        acc = Point.infinity(P.curve)
        base = P
        while n:
            if n & 1:
                acc = add(acc, base)
            base = add(base, base)
            n >>= 1
        return acc
    if strategy == "naf":
        acc = Point.infinity(P.curve)
        negP = negate(P)
        for digit in naf_encode(n).digits:
            acc = add(acc, acc)
            if digit == 1:
                acc = add(acc, P)
            elif digit == -1:
                acc = add(acc, negP)
        return acc
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class NafDigits:
    digits: tuple[int, ...]  # most significant first

    def __post_init__(self):
        assert all(d in (-1, 0, 1) for d in self.digits)
        assert not any(
            a != 0 and b != 0 for a, b in zip(self.digits, self.digits[1:])
        ), "adjacent nonzero digits"

    def value(self) -> int:
        v = 0
        for d in self.digits:
            v = 2 * v + d
        return v


def naf_encode(n: int) -> NafDigits:
    """Non-adjacent form: unique signed binary with no adjacent nonzeros."""
    assert n >= 1
    digits = []
    while n:
        if n & 1:
            d = 2 - (n % 4)  # 1 if n=1 mod 4, -1 if n=3 mod 4
            n -= d
        else:
            d = 0
        digits.append(d)
        n >>= 1
    out = NafDigits(tuple(reversed(digits)))
    assert out.value() >= 1
    return out


def edwards_add(E: EdwardsCurve, P, Q):
    """Unified Edwards addition on x^2 + y^2 = c^2 (1 + d x^2 y^2)."""
    x1, y1 = (E.field(v) for v in P)
    x2, y2 = (E.field(v) for v in Q)
    if not (E.contains(x1, y1) and E.contains(x2, y2)):
        raise ValueError("inputs must lie on the Edwards curve")
    w = E.d * x1 * x2 * y1 * y2
    one = E.field.one()
    den_x = E.c * (one + w)
    den_y = E.c * (one - w)
    if den_x.is_zero() or den_y.is_zero():
        raise DenominatorVanishes("excluded case d*x1*x2*y1*y2 = ±1")
    x3 = (x1 * y2 + y1 * x2) / den_x
    y3 = (y1 * y2 - x1 * x2) / den_y
    assert E.contains(x3, y3)
    return (x3, y3)


def parse_point(text: str, curve: Curve) -> Point:
    """Grammar: `inf` or `(<elt>,<elt>)`."""
    text = text.strip()
    if text == "inf":
        return Point.infinity(curve)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("point must be `inf` or `(x,y)`")
    xs, _, ys = text[1:-1].partition(",")
    x = parse_element(xs.strip(), curve.field)
    y = parse_element(ys.strip(), curve.field)
    return Point(curve, x, y)


def all_points(E: Curve) -> list[Point]:
    """Every rational point, infinity first.

    Odd characteristic solves the y-quadratic per x-line (completing the
    square); characteristic 2 falls back to scanning y.
    """
    from .field import square_root

    f = E.field
    pts = [Point.infinity(E)]
    if f.char == 2:
        for x in f.elements():
            for y in f.elements():
                if E.equation_lhs_minus_rhs(x, y).is_zero():
                    pts.append(Point(E, x, y))
        return pts
    half = f(2).inverse()
    for x in f.elements():
        L = E.a1 * x + E.a3
        c = ((x + E.a2) * x + E.a4) * x + E.a6
        disc = L * L + f(4) * c
        roots = square_root(disc)
        if roots is None:
            continue
        for r in set(roots):
            pts.append(Point(E, x, (r - L) * half))
    return pts
