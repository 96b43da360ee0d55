"""Exact arithmetic in the difference field K(..., u[-1], u, u[1], ...).

Values are rational functions in finitely many shifted variables u[i]
(i in Z) over the constants K = Q extended by declared symbols.  Two
layers:

* ``Poly`` -- sparse multivariate polynomial: a map monomial -> nonzero
  ``gmpy2.mpq`` coefficient.  A monomial is a tuple of (variable,
  exponent) pairs sorted by variable, exponents positive; a variable is
  an ``int`` (the index of u[i]) or a ``str`` (a constant symbol).  The
  empty tuple is the constant monomial.
* ``RatFunc`` -- quotient num/den of two ``Poly``, normalized on
  construction: monomial and scalar content always cancel, the
  denominator is integer-primitive with positive leading coefficient,
  and the full polynomial gcd cancels whenever the fraction size
  exceeds ``config.gcd_threshold()`` (default 0: always).  Zero and
  equality tests never rely on the normal form.

The shift automorphism S acts by translating every integer variable
index and fixing constants; partial derivatives are formal.  Both
classes are immutable and hashable-free by design (use ``==``).
"""
from __future__ import annotations

import heapq
from functools import reduce
from typing import Union

from gmpy2 import mpq, mpz, gcd as _zgcd, lcm as _zlcm

from . import config
from .errors import DivisionByZero

Var = Union[int, str]
Monomial = tuple  # tuple[tuple[Var, int], ...]

_Q0 = mpq(0)
_Q1 = mpq(1)

RESERVED_NAMES = frozenset({"u", "S", "log", "inv"})


def _vkey(v: Var):
    # ints sort among themselves, before all symbol names
    return (0, v) if type(v) is int else (1, v)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        k1, k2 = _vkey(v1), _vkey(v2)
        if k1 == k2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif k1 < k2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_div(m1: Monomial, m2: Monomial):
    """m1 / m2 as a monomial, or None if not divisible."""
    rem = dict(m1)
    for v, e in m2:
        have = rem.get(v, 0)
        if have < e:
            return None
        if have == e:
            del rem[v]
        else:
            rem[v] = have - e
    return tuple(sorted(rem.items(), key=lambda p: _vkey(p[0])))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_desc_key(m: Monomial):
    """Sort key that DESCENDS in the graded monomial order.

    The order: total degree first, then lex with lower variables (more
    negative u-index) taking priority -- a proper monomial order,
    compatible with multiplication, constant monomial least.  Degree and
    exponents are negated so tuple comparison ranks the largest monomial
    first; distinct monomials never collide because the factor tuple
    determines them.
    """
    return (-_mono_deg(m), tuple((_vkey(v), -e) for v, e in m))


def _mono_str(m: Monomial) -> str:
    parts = []
    for v, e in m:
        if type(v) is int:
            name = "u" if v == 0 else f"u[{v}]"
        else:
            name = v
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """Sparse polynomial; ``terms`` maps monomial -> nonzero mpq.

    The constructor trusts its argument (callers normalize); use the
    classmethods to build values safely.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = terms

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return _P0

    @classmethod
    def one(cls) -> "Poly":
        return _P1

    @classmethod
    def const(cls, c) -> "Poly":
        c = mpq(c)
        return cls({(): c}) if c else _P0

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("polynomial exponents must be >= 0")
        if exp == 0:
            return _P1
        return cls({((v, exp),): _Q1})

    @classmethod
    def from_dict(cls, d: dict) -> "Poly":
        terms = {}
        for m, c in d.items():
            c = mpq(c)
            if c:
                terms[tuple(sorted(m, key=lambda p: _vkey(p[0])))] = c
        return cls(terms)

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self) -> mpq:
        """The value as a scalar; only valid when is_const()."""
        return self.terms.get((), _Q0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(_mono_deg(m) for m in self.terms)

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def window(self):
        """(min, max) u-index occurring, or None if no u variables."""
        lo = hi = None
        for m in self.terms:
            for v, _ in m:
                if type(v) is int:
                    if lo is None or v < lo:
                        lo = v
                    if hi is None or v > hi:
                        hi = v
        return None if lo is None else (lo, hi)

    def leading(self):
        """(monomial, coefficient) largest under the graded order."""
        m = min(self.terms, key=_mono_desc_key)
        return m, self.terms[m]

    # -- arithmetic --------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Poly") -> "Poly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = -c
            else:
                s = s - c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    def __mul__(self, other: "Poly") -> "Poly":
        t1, t2 = self.terms, other.terms
        if not t1 or not t2:
            return _P0
        if len(t1) > len(t2):
            t1, t2 = t2, t1
        out = {}
        for m1, c1 in t1.items():
            for m2, c2 in t2.items():
                m = _mono_mul(m1, m2)
                s = out.get(m)
                if s is None:
                    out[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Poly(out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _P1
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = mpq(c)
        if not c:
            return _P0
        if c == 1:
            return self
        return Poly({m: cc * c for m, cc in self.terms.items()})

    # -- difference-field structure -----------------------------------

    def shift(self, k: int) -> "Poly":
        """Translate every u-index by k; constants fixed."""
        if k == 0 or not self.terms:
            return self
        out = {}
        for m, c in self.terms.items():
            out[tuple((v + k if type(v) is int else v, e) for v, e in m)] = c
        return Poly(out)

    def partial(self, i: int) -> "Poly":
        """Formal partial derivative with respect to u[i]."""
        out = {}
        for m, c in self.terms.items():
            for pos, (v, e) in enumerate(m):
                if v == i:
                    if e == 1:
                        mm = m[:pos] + m[pos + 1:]
                    else:
                        mm = m[:pos] + ((v, e - 1),) + m[pos + 1:]
                    s = out.get(mm)
                    if s is None:
                        out[mm] = c * e
                    else:
                        s = s + c * e
                        if s:
                            out[mm] = s
                        else:
                            del out[mm]
                    break
        return Poly(out)

    # -- normalization helpers ----------------------------------------

    def content(self) -> mpq:
        """Scalar c with self/c integer-primitive and positive leading
        coefficient; content of 0 is 1."""
        if not self.terms:
            return _Q1
        num = reduce(_zgcd, (c.numerator for c in self.terms.values()))
        den = reduce(_zlcm, (c.denominator for c in self.terms.values()))
        c = abs(mpq(num, den))
        _, lead = self.leading()
        return -c if lead < 0 else c

    def mono_content(self) -> Monomial:
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        first = next(it, None)
        if first is None:
            return ()
        common = dict(first)
        for m in it:
            if not common:
                break
            d = dict(m)
            for v in list(common):
                e = d.get(v, 0)
                if e == 0:
                    del common[v]
                elif e < common[v]:
                    common[v] = e
        return tuple(sorted(common.items(), key=lambda p: _vkey(p[0])))

    def div_mono(self, m: Monomial) -> "Poly":
        if not m:
            return self
        out = {}
        for mm, c in self.terms.items():
            q = _mono_div(mm, m)
            if q is None:
                raise ValueError("monomial does not divide every term")
            out[q] = c
        return Poly(out)

    def div_exact(self, other: "Poly"):
        """self / other, or None when the division is not exact.

        Sparse division: the remainder lives in a dict and its leading
        monomial comes off a heap (stale entries are skipped), so each
        step costs one heap pop plus one pass over ``other``.
        """
        if not other.terms:
            raise DivisionByZero("polynomial division by zero")
        if not self.terms:
            return _P0
        if other.is_const():
            return self.scale(1 / other.const_value())
        lm, lc = other.leading()
        rem = dict(self.terms)
        heap = [(_mono_desc_key(m), m) for m in rem]
        heapq.heapify(heap)
        oterms = list(other.terms.items())
        quo = {}
        while heap:
            _, rm = heapq.heappop(heap)
            rc = rem.get(rm)
            if rc is None:
                continue
            qm = _mono_div(rm, lm)
            if qm is None:
                return None
            qc = rc / lc
            quo[qm] = qc
            for m2, c2 in oterms:
                t = _mono_mul(qm, m2)
                c = qc * c2
                s = rem.get(t)
                if s is None:
                    rem[t] = -c
                    heapq.heappush(heap, (_mono_desc_key(t), t))
                else:
                    s = s - c
                    if s:
                        rem[t] = s
                    else:
                        del rem[t]
        return Poly(quo)

    # -- equality / printing ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    __hash__ = None

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _mono_desc_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = _mono_str(m)
            else:
                body = f"{abs(c)}*{_mono_str(m)}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"Poly({self})"


_P0 = Poly({})
_P1 = Poly({(): _Q1})


# -- gcd machinery ----------------------------------------------------

_FILTER_MIN_SIZE = 60
_FILTER_PRIME = 2147483647


def _mod_value(c: mpq, p: int):
    d = int(c.denominator) % p
    if d == 0:
        return None
    return int(c.numerator) % p * pow(d, p - 2, p) % p


def _univariate_image(poly: Poly, main: Var, point: dict, p: int):
    """Evaluate all variables but ``main`` mod p; dense coeff list or None."""
    coeffs = {}
    for m, c in poly.terms.items():
        cv = _mod_value(c, p)
        if cv is None:
            return None
        deg = 0
        for v, e in m:
            if v == main:
                deg = e
            else:
                cv = cv * pow(point[v], e, p) % p
        coeffs[deg] = (coeffs.get(deg, 0) + cv) % p
    top = max(coeffs) if coeffs else 0
    out = [0] * (top + 1)
    for d, cv in coeffs.items():
        out[d] = cv
    while out and out[-1] == 0:
        out.pop()
    return out


def _uni_gcd_deg(a: list, b: list, p: int) -> int:
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            if a[-1]:
                f = a[-1] * inv % p
                da = len(a) - 1
                for i, cb in enumerate(b):
                    a[i + da - db] = (a[i + da - db] - f * cb) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _probably_coprime(p1: Poly, p2: Poly) -> bool:
    """Deterministic modular filter.  True means gcd is certainly wanted
    to be skipped: every variable shared with positive degree on both
    sides witnesses a degree-0 univariate gcd at a fixed pseudo-random
    point.  False means "run the real gcd"."""
    import random
    degs1, degs2 = {}, {}
    for poly, degs in ((p1, degs1), (p2, degs2)):
        for m in poly.terms:
            for v, e in m:
                if e > degs.get(v, 0):
                    degs[v] = e
    candidates = [v for v, d in degs1.items() if d > 0 and degs2.get(v, 0) > 0]
    if not candidates:
        return True
    rng = random.Random(0x5EED)
    P = _FILTER_PRIME
    allvars = set(degs1) | set(degs2)
    point = {v: rng.randrange(2, P - 2) for v in sorted(allvars, key=_vkey)}
    for main in sorted(candidates, key=_vkey):
        img1 = _univariate_image(p1, main, point, P)
        img2 = _univariate_image(p2, main, point, P)
        if img1 is None or img2 is None:
            return False
        if len(img1) - 1 != degs1[main] or len(img2) - 1 != degs2[main]:
            return False  # degree collapsed; point not usable
        if _uni_gcd_deg(list(img1), list(img2), P) > 0:
            return False
    return True


def _sympy_gcd(p1: Poly, p2: Poly) -> Poly:
    from sympy.polys.rings import ring
    from sympy.polys.domains import QQ

    variables = sorted(p1.variables() | p2.variables(), key=_vkey)
    index = {v: i for i, v in enumerate(variables)}
    names = []
    for v in variables:
        if type(v) is int:
            names.append(f"u_m{-v}" if v < 0 else f"u_{v}")
        else:
            names.append(f"c_{v}")
    R, *_ = ring(",".join(names), QQ)
    n = len(variables)

    def convert(poly: Poly):
        d = {}
        for m, c in poly.terms.items():
            exps = [0] * n
            for v, e in m:
                exps[index[v]] = e
            d[tuple(exps)] = QQ(int(c.numerator), int(c.denominator))
        return R.from_dict(d)

    g = convert(p1).gcd(convert(p2))
    terms = {}
    for exps, c in g.terms():
        m = tuple((variables[i], e) for i, e in enumerate(exps) if e)
        terms[tuple(sorted(m, key=lambda pr: _vkey(pr[0])))] = mpq(
            int(c.numerator), int(c.denominator))
    return Poly(terms)


def poly_gcd(p1: Poly, p2: Poly) -> Poly:
    """gcd up to a scalar unit; delegated to sympy's multivariate gcd."""
    if p1.is_zero():
        return p2
    if p2.is_zero():
        return p1
    if p1.is_const() or p2.is_const():
        return _P1
    return _sympy_gcd(p1, p2)


def _try_cancel(a: Poly, b: Poly):
    """(a/g, b/g) for a nontrivial g = gcd(a, b), else None.

    Honors the configured gcd threshold and skips the real gcd when
    the modular filter proves the pair coprime.
    """
    if a.is_zero() or b.is_zero() or a.is_const() or b.is_const():
        return None
    size = len(a.terms) + len(b.terms)
    if size <= config.gcd_threshold():
        return None
    if size > _FILTER_MIN_SIZE and _probably_coprime(a, b):
        return None
    g = poly_gcd(a, b)
    if g.is_const():
        return None
    qa = a.div_exact(g)
    qb = b.div_exact(g)
    if qa is None or qb is None:
        return None
    return qa, qb


# -- RatFunc -----------------------------------------------------------


class RatFunc:
    """Element of the difference field: normalized fraction num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = _P1):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num = _P0
            self.den = _P1
            return
        config.checkpoint()
        common = _mono_gcd(num.mono_content(), den.mono_content())
        if common:
            num = num.div_mono(common)
            den = den.div_mono(common)
        red = _try_cancel(num, den)
        if red is not None:
            num, den = red
        c = den.content()
        if c != 1:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        self.num = num
        self.den = den

    @staticmethod
    def _from_reduced(num: Poly, den: Poly) -> "RatFunc":
        """Wrap a fraction already in lowest terms; only the unit of the
        denominator is normalized."""
        if num.is_zero():
            return _R0
        c = den.content()
        if c != 1:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        out = object.__new__(RatFunc)
        out.num = num
        out.den = den
        return out

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFunc":
        return _R0

    @classmethod
    def one(cls) -> "RatFunc":
        return _R1

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly.const(c))

    @classmethod
    def u(cls, i: int = 0) -> "RatFunc":
        return cls(Poly.var(i))

    @classmethod
    def sym(cls, name: str) -> "RatFunc":
        if not name.isidentifier() or name in RESERVED_NAMES:
            raise ValueError(f"bad constant symbol {name!r}")
        return cls(Poly.var(name))

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_const(self) -> bool:
        """Free of every u variable (may contain declared symbols)."""
        return self.num.window() is None and self.den.window() is None

    def is_rational(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> mpq:
        if not self.is_rational():
            raise ValueError("not a rational constant")
        if self.num.is_zero():
            return _Q0
        return self.num.const_value() / self.den.const_value()

    def __bool__(self) -> bool:
        return bool(self.num)

    def window(self):
        """(min,max) u-index of the normalized fraction, or None."""
        wn = self.num.window()
        wd = self.den.window()
        if wn is None:
            return wd
        if wd is None:
            return wn
        return (min(wn[0], wd[0]), max(wn[1], wd[1]))

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    # -- arithmetic --------------------------------------------------

    def __neg__(self) -> "RatFunc":
        if self.num.is_zero():
            return self
        out = object.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if d1 == d2:
            return RatFunc(n1 + n2, d1)
        if d1.is_const():
            return RatFunc(n1 * d2 + n2, d2)
        if d2.is_const():
            return RatFunc(n1 + n2 * d1, d1)
        # accumulation chains mostly add fractions whose denominators
        # divide each other; probe before falling back to the gcd
        q = d2.div_exact(d1)
        if q is not None:
            return RatFunc(n1 * q + n2, d2)
        q = d1.div_exact(d2)
        if q is not None:
            return RatFunc(n1 + n2 * q, d1)
        red = _try_cancel(d1, d2)
        if red is not None:
            c1, c2 = red
            return RatFunc(n1 * c2 + n2 * c1, d1 * c2)
        return RatFunc(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return _R0
        # cross-cancel so the product of reduced fractions is reduced
        # and the gcd runs on the factors, not on the product
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        red = _try_cancel(n1, d2)
        if red is not None:
            n1, d2 = red
        red = _try_cancel(n2, d1)
        if red is not None:
            n2, d1 = red
        return RatFunc._from_reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionByZero("division by zero field element")
        if self.num.is_zero():
            return _R0
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int) -> "RatFunc":
        if n == 0:
            return _R1
        if n < 0:
            return _R1 / self ** (-n)
        out = object.__new__(RatFunc)
        out.num = self.num ** n
        out.den = self.den ** n
        return out

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatFunc._from_reduced(self.den, self.num)

    # -- difference-field structure -----------------------------------

    def shift(self, k: int) -> "RatFunc":
        if k == 0 or (self.num.is_const() and self.den.is_const()):
            return self
        out = object.__new__(RatFunc)
        out.num = self.num.shift(k)
        out.den = self.den.shift(k)
        return out

    def partial(self, i: int) -> "RatFunc":
        dn = self.num.partial(i)
        if self.den.is_const():
            if dn.is_zero():
                return _R0
            return RatFunc(dn, self.den)
        dd = self.den.partial(i)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    # -- comparison / printing ----------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        return (self.num * other.den) == (other.num * self.den)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __str__(self) -> str:
        if self.den == _P1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _mono_gcd(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1 or not m2:
        return ()
    d2 = dict(m2)
    out = []
    for v, e in m1:
        e2 = d2.get(v, 0)
        if e2:
            out.append((v, min(e, e2)))
    return tuple(out)


_MPQ = type(mpq())
_MPZ = type(mpz())


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, _MPQ, _MPZ)):
        return RatFunc.const(x)
    return NotImplemented


_R0 = RatFunc(_P0)
_R1 = RatFunc(_P1)


def rat_sum(items) -> RatFunc:
    """Sum an iterable of RatFuncs.

    Terms are grouped by denominator first, so long accumulations pay
    one polynomial addition per term and one fraction addition per
    distinct denominator.
    """
    groups = {}
    for f in items:
        if f.num.is_zero():
            continue
        key = frozenset(f.den.terms.items())
        g = groups.get(key)
        if g is None:
            groups[key] = [f.num, f.den]
        else:
            g[0] = g[0] + f.num
    total = _R0
    for num, den in sorted(groups.values(), key=lambda g: len(g[1].terms)):
        total = total + RatFunc(num, den)
    return total


# -- convenience constructors used across the package -----------------

def u(i: int = 0) -> RatFunc:
    return RatFunc.u(i)


def sym(name: str) -> RatFunc:
    return RatFunc.sym(name)


def qq(c) -> RatFunc:
    return RatFunc.const(c)
