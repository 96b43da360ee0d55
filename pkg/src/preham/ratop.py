"""The skew field Q of rational difference operators A*B^-1.

Every ``RatOp`` is stored in minimal form: num and den right-coprime
(their right gcd is a unit) and the den's leading monomial scaled to
exactly 1*S^0 by a right unit factor, so den = 1 + (strictly negative
powers of S).  That pins both degrees of freedom of the unit and makes
the representation canonical; equality is nevertheless decided by
cross-multiplication, never by comparing representations.
"""
from __future__ import annotations

from .errors import DivisionByZero
from .diffop import DiffOp, dop, right_divide, right_gcd, right_lcm
from .field import RatFunc


class RatOp:
    """Rational operator num * den^-1 in canonical minimal form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_dop(num)
        den = _D1 if den is None else _as_dop(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator operator")
        if num.is_zero():
            self.num = _D0
            self.den = _D1
            return
        g = right_gcd(num, den)
        if g.total_order() > 0:
            num, rn = right_divide(num, g)
            den, rd = right_divide(den, g)
            if not (rn.is_zero() and rd.is_zero()):
                raise AssertionError("gcd failed to divide exactly")
        nd, bN = den.leading()
        w = DiffOp({-nd: bN.inverse().shift(-nd)})
        self.num = num * w
        self.den = den * w

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "RatOp":
        return cls(_D0)

    @classmethod
    def one(cls) -> "RatOp":
        return cls(_D1)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_operator(self) -> bool:
        """True when den = 1, i.e. the value lies in R."""
        return self.den == _D1

    def total_order(self):
        """Ord(A*B^-1) = Ord A - Ord B; None for the zero operator."""
        if self.num.is_zero():
            return None
        return self.num.total_order() - self.den.total_order()

    # -- field arithmetic ------------------------------------------------

    def __neg__(self) -> "RatOp":
        return _raw(-self.num, self.den)

    def __add__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m, a1, b1 = right_lcm(self.den, other.den)
        return RatOp(self.num * b1 + other.num * a1, m)

    __radd__ = __add__

    def __sub__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatOp(_D0)
        # den1^-1 * num2 = c1 * d1^-1 with den1*c1 = num2*d1
        _, d1, c1 = right_lcm(self.den, other.num)
        return RatOp(self.num * c1, other.den * d1)

    def __rmul__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__mul__(self)

    def inverse(self) -> "RatOp":
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero operator")
        return RatOp(self.den, self.num)

    def __truediv__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other) -> "RatOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__mul__(self.inverse())

    def __pow__(self, n: int) -> "RatOp":
        if n < 0:
            return self.inverse().__pow__(-n)
        result = RatOp(_D1)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    # -- adjoint and symmetry --------------------------------------------

    def adjoint(self) -> "RatOp":
        """(A*B^-1)^† = (B^†)^-1 * A^†, converted to a right fraction."""
        if self.num.is_zero():
            return RatOp(_D0)
        return from_left_fraction(self.den.adjoint(), self.num.adjoint())

    def is_skew_symmetric(self) -> bool:
        """L^† = -L, tested as B^†*A + A^†*B = 0 in R."""
        return (self.den.adjoint() * self.num
                + self.num.adjoint() * self.den).is_zero()

    # -- comparison / printing ---------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other.num.is_zero()
        if other.num.is_zero():
            return False
        _, a1, b1 = right_lcm(self.den, other.den)
        return self.num * b1 == other.num * a1

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __str__(self) -> str:
        if self.den == _D1:
            return str(self.num)
        return f"({self.num})*inv({self.den})"

    def __repr__(self) -> str:
        return f"RatOp({self})"


def _raw(num: DiffOp, den: DiffOp) -> RatOp:
    """Wrap without renormalizing; num, den must already be canonical."""
    out = object.__new__(RatOp)
    out.num = num
    out.den = den
    return out


def _as_dop(x) -> DiffOp:
    return x if isinstance(x, DiffOp) else dop(x)


def _coerce(x):
    if isinstance(x, RatOp):
        return x
    if isinstance(x, DiffOp):
        return RatOp(x)
    if isinstance(x, (RatFunc, int)):
        return RatOp(dop(x))
    return NotImplemented


_D0 = DiffOp.zero()
_D1 = DiffOp.one()


def from_left_fraction(B: DiffOp, A: DiffOp) -> RatOp:
    """The right fraction equal to B^-1 * A.

    Ore exchange: B^-1*A = C*D^-1 where A*D = B*C is the right lcm.
    """
    if B.is_zero():
        raise DivisionByZero("left fraction with zero denominator")
    if A.is_zero():
        return RatOp(_D0)
    _, d, c = right_lcm(B, A)
    return RatOp(c, d)
