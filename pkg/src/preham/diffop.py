"""The noncommutative ring R = F[S, S^-1] of difference operators.

A ``DiffOp`` is a finite map exponent -> nonzero ``RatFunc`` coefficient,
standing for sum c_k * S^k.  Multiplication follows the twist
(a*S^n)(b*S^m) = a*S^n(b)*S^(n+m).  The ring is a left and right
Euclidean domain with respect to the total order (width of the support
window); both divisions, gcds on both sides and Ore least common
multiples are provided.  Units are the single monomials a*S^k.

Division in a Laurent window is unique only once an alignment policy
pins the remainder's position as well as its width: here the leading
(highest-S) term is eliminated while the remainder's total order is
still >= that of the divisor or its leading exponent is still >= the
divisor's.  On exit Ord R < Ord B and the leading exponent of R sits
below that of B, which fixes (Q, R) deterministically and always
detects exact divisibility.
"""
from __future__ import annotations

from .errors import DivisionByZero, PreconditionFailed
from .field import RatFunc, _coerce as _coerce_elem
from . import config


class DiffOp:
    """Difference operator; ``coeffs`` maps k to a nonzero RatFunc."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "DiffOp":
        return _D0

    @classmethod
    def one(cls) -> "DiffOp":
        return _D1

    @classmethod
    def of_elem(cls, c: RatFunc, k: int = 0) -> "DiffOp":
        """The monomial c*S^k."""
        return cls({k: c}) if not c.is_zero() else _D0

    @classmethod
    def from_dict(cls, d: dict) -> "DiffOp":
        return cls({k: c for k, c in d.items() if not c.is_zero()})

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def order(self):
        """Support window (M, N), or None for the zero operator."""
        if not self.coeffs:
            return None
        return (min(self.coeffs), max(self.coeffs))

    def total_order(self):
        """Width N - M; None for the zero operator (Ord 0 = infinity)."""
        if not self.coeffs:
            return None
        return max(self.coeffs) - min(self.coeffs)

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_elem(self) -> bool:
        """Zero-order operator: multiplication by a field element."""
        return not self.coeffs or self.coeffs.keys() == {0}

    def coeff(self, k: int) -> RatFunc:
        return self.coeffs.get(k, RatFunc.zero())

    def leading(self):
        """(N, coefficient at N) for the highest power of S."""
        n = max(self.coeffs)
        return n, self.coeffs[n]

    def trailing(self):
        m = min(self.coeffs)
        return m, self.coeffs[m]

    # -- ring arithmetic ----------------------------------------------

    def __neg__(self) -> "DiffOp":
        return DiffOp({k: -c for k, c in self.coeffs.items()})

    def __add__(self, other) -> "DiffOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return DiffOp(out)

    __radd__ = __add__

    def __sub__(self, other) -> "DiffOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "DiffOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "DiffOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return _D0
        out = {}
        for n, a in self.coeffs.items():
            for m, b in other.coeffs.items():
                k = n + m
                c = a * b.shift(n)
                s = out.get(k)
                if s is None:
                    out[k] = c
                else:
                    s = s + c
                    if s.is_zero():
                        del out[k]
                    else:
                        out[k] = s
        return DiffOp(out)

    def __rmul__(self, other) -> "DiffOp":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__mul__(self)

    def __pow__(self, n: int) -> "DiffOp":
        if n < 0:
            raise ValueError("negative power of a difference operator")
        result = _D1
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    # -- action and adjoint ---------------------------------------------

    def apply(self, x: RatFunc) -> RatFunc:
        """Natural action on a field element: sum c_k * S^k(x)."""
        out = RatFunc.zero()
        for k, c in self.coeffs.items():
            out = out + c * x.shift(k)
        return out

    def adjoint(self) -> "DiffOp":
        """Formal adjoint: (a*S^n)^† = S^(-n)*a = a_(-n)*S^(-n)."""
        return DiffOp({-k: c.shift(-k) for k, c in self.coeffs.items()})

    # -- comparison / printing -------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(c == other.coeffs[k] for k, c in self.coeffs.items())

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for k in sorted(self.coeffs, reverse=True):
            sign, body = _fmt_term(self.coeffs[k], k)
            if not chunks:
                chunks.append(body if sign > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if sign > 0 else f" - {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"DiffOp({self})"


def _fmt_term(c: RatFunc, k: int):
    """(sign, unsigned text) for the term c*S^k."""
    _, lead = c.num.leading()
    sign = 1 if lead > 0 else -1
    cpos = c if sign > 0 else -c
    if k == 0:
        body = str(cpos)
        if len(cpos.num.terms) > 1 and cpos.den.is_const():
            body = f"({body})"
        return sign, body
    s = "S" if k == 1 else f"S^{k}"
    if cpos.is_one():
        return sign, s
    body = str(cpos)
    if len(cpos.num.terms) > 1 and cpos.den.is_const():
        body = f"({body})"
    return sign, f"{body}*{s}"


def _coerce(x):
    if isinstance(x, DiffOp):
        return x
    e = _coerce_elem(x)
    if e is NotImplemented:
        return NotImplemented
    return DiffOp.of_elem(e)


_D0 = DiffOp({})
_D1 = DiffOp({0: RatFunc.one()})


def S(k: int = 1) -> DiffOp:
    """The shift monomial S^k."""
    return DiffOp({k: RatFunc.one()})


def dop(x) -> DiffOp:
    """Embed a field element (or int) as a zero-order operator."""
    d = _coerce(x)
    if d is NotImplemented:
        raise TypeError(f"cannot embed {type(x).__name__} as an operator")
    return d


# -- Euclidean structure ------------------------------------------------


def right_divide(A: DiffOp, B: DiffOp):
    """Q, R with A = Q*B + R and Ord R < Ord B (R = 0 allowed).

    Leading terms are eliminated until the remainder is narrower than B
    and its top exponent has dropped below B's, so quotient exponents
    run from N_A - N_B downward and the result is deterministic.
    """
    if B.is_zero():
        raise DivisionByZero("division by the zero operator")
    if A.is_zero():
        return _D0, _D0
    wB = B.total_order()
    NB, bN = B.leading()
    rem = dict(A.coeffs)
    quo = {}
    while rem and (max(rem) - min(rem) >= wB or max(rem) >= NB):
        config.checkpoint()
        NR = max(rem)
        n = NR - NB
        q = rem[NR] / bN.shift(n)
        quo[n] = q
        for m, b in B.coeffs.items():
            k = n + m
            c = q * b.shift(n)
            s = rem.get(k)
            if s is None:
                rem[k] = -c
            else:
                s = s - c
                if s.is_zero():
                    del rem[k]
                else:
                    rem[k] = s
    return DiffOp(quo), DiffOp(rem)


def left_divide(A: DiffOp, B: DiffOp):
    """Q, R with A = B*Q + R and Ord R < Ord B (R = 0 allowed)."""
    if B.is_zero():
        raise DivisionByZero("division by the zero operator")
    if A.is_zero():
        return _D0, _D0
    wB = B.total_order()
    NB, bN = B.leading()
    rem = dict(A.coeffs)
    quo = {}
    while rem and (max(rem) - min(rem) >= wB or max(rem) >= NB):
        config.checkpoint()
        NR = max(rem)
        n = NR - NB
        q = (rem[NR] / bN).shift(-NB)
        quo[n] = q
        qs = q  # B*(q*S^n) has coefficient b_m * S^m(q) at m+n
        for m, b in B.coeffs.items():
            k = m + n
            c = b * qs.shift(m)
            s = rem.get(k)
            if s is None:
                rem[k] = -c
            else:
                s = s - c
                if s.is_zero():
                    del rem[k]
                else:
                    rem[k] = s
    return DiffOp(quo), DiffOp(rem)


def _left_unit_canon(G: DiffOp) -> DiffOp:
    """Left-multiply by a unit a*S^k: trailing exponent 0, leading coeff 1.

    Generators of a left ideal R*G differ exactly by such units, so the
    result is the unique canonical generator.
    """
    if G.is_zero():
        return G
    M, _ = G.trailing()
    _, gN = G.leading()
    a = gN.shift(-M).inverse()
    return DiffOp({k - M: a * c.shift(-M) for k, c in G.coeffs.items()})


def _right_unit_canon(G: DiffOp):
    """The unit W = a*S^k with G*W having trailing exponent 0, leading 1.

    Right-ideal generators differ by right unit factors; G*W is canonical.
    """
    M, _ = G.trailing()
    N, gN = G.leading()
    return DiffOp({-M: gN.shift(-N).inverse()})


def right_gcd(A: DiffOp, B: DiffOp) -> DiffOp:
    """Greatest common right divisor; trailing exponent 0, leading coeff 1."""
    if A.is_zero() and B.is_zero():
        raise PreconditionFailed("gcd of two zero operators")
    r0, r1 = A, B
    while not r1.is_zero():
        config.checkpoint()
        _, r2 = right_divide(r0, r1)
        r0, r1 = r1, r2
    return _left_unit_canon(r0)


def left_gcd(A: DiffOp, B: DiffOp) -> DiffOp:
    """Greatest common left divisor; trailing exponent 0, leading coeff 1."""
    if A.is_zero() and B.is_zero():
        raise PreconditionFailed("gcd of two zero operators")
    r0, r1 = A, B
    while not r1.is_zero():
        config.checkpoint()
        _, r2 = left_divide(r0, r1)
        r0, r1 = r1, r2
    return r0 * _right_unit_canon(r0) if not r0.is_zero() else r0


def right_lcm(A: DiffOp, B: DiffOp):
    """M, A1, B1 with M = A*B1 = B*A1 generating A*R  ∩  B*R.

    Extended Euclid with left division; cofactors multiply on the right.
    M is normalized to trailing exponent 0, leading coefficient 1.
    """
    if A.is_zero() or B.is_zero():
        raise PreconditionFailed("lcm needs nonzero operators")
    r0, r1 = A, B
    u0, u1 = _D1, _D0
    v0, v1 = _D0, _D1
    while not r1.is_zero():
        config.checkpoint()
        q, r2 = left_divide(r0, r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - u1 * q
        v0, v1 = v1, v0 - v1 * q
    W = _right_unit_canon(A * u1)
    return A * (u1 * W), -(v1 * W), u1 * W


def left_lcm(A: DiffOp, B: DiffOp):
    """M, A1, B1 with M = B1*A = A1*B generating R*A  ∩  R*B.

    M is normalized to trailing exponent 0, leading coefficient 1.
    """
    if A.is_zero() or B.is_zero():
        raise PreconditionFailed("lcm needs nonzero operators")
    r0, r1 = A, B
    u0, u1 = _D1, _D0
    v0, v1 = _D0, _D1
    while not r1.is_zero():
        config.checkpoint()
        q, r2 = right_divide(r0, r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    raw = u1 * A
    Mlo, _ = raw.trailing()
    _, mN = raw.leading()
    W = DiffOp({-Mlo: mN.shift(-Mlo).inverse()})
    return W * raw, W * -v1, W * u1
