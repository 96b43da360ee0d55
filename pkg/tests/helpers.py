"""Random generators and a sympy bridge shared by the test modules."""
import sympy

from preham import DiffOp, RatFunc, qq, u


def rand_poly(rng, span=2, terms=3, deg=2, coeff=6):
    """Random polynomial in u_-span..u_span (possibly zero)."""
    out = RatFunc.zero()
    for _ in range(rng.randint(1, terms)):
        t = qq(rng.randint(-coeff, coeff))
        for _ in range(rng.randint(0, deg)):
            t = t * u(rng.randint(-span, span))
        out = out + t
    return out


def rand_poly_nz(rng, **kw):
    while True:
        p = rand_poly(rng, **kw)
        if not p.is_zero():
            return p


def rand_rf(rng, span=2, terms=3, deg=2):
    """Random rational function with a small denominator."""
    num = rand_poly(rng, span=span, terms=terms, deg=deg)
    den = rand_poly_nz(rng, span=span, terms=2, deg=1)
    return num / den


def rand_dop(rng, width=2, span=1, terms=2, deg=2, coeff=6, rational=False):
    """Random nonzero difference operator on a window of size <= width."""
    while True:
        lo = rng.randint(-width, 0)
        hi = lo + rng.randint(0, width)
        coeffs = {}
        for k in range(lo, hi + 1):
            if rng.random() < 0.8:
                if rational:
                    c = rand_rf(rng, span=span, terms=terms, deg=deg)
                else:
                    c = rand_poly(rng, span=span, terms=terms, deg=deg, coeff=coeff)
                if not c.is_zero():
                    coeffs[k] = c
        if coeffs:
            return DiffOp.from_dict(coeffs)


def _sym_var(v):
    return sympy.Symbol(f"u_{v}" if type(v) is int else str(v))


def to_sympy(x):
    """RatFunc or Poly as a sympy expression, for oracle comparisons."""
    if isinstance(x, RatFunc):
        return to_sympy(x.num) / to_sympy(x.den)
    total = sympy.Integer(0)
    for mono, c in x.terms.items():
        t = sympy.Rational(int(c.numerator), int(c.denominator))
        for v, e in mono:
            t *= _sym_var(v) ** e
        total += t
    return total


def sympy_equal(f: RatFunc, expr) -> bool:
    """Exact equality of f against a sympy expression."""
    n, d = sympy.together(expr).as_numer_denom()
    lhs = to_sympy(f.num) * d - to_sympy(f.den) * n
    return sympy.expand(lhs) == 0
