"""Frechet derivatives, evolutionary derivations, and the Euler operator.

The Frechet derivative of b in F is the difference operator
b_* = sum (db/du_i) S^i; the evolutionary derivation with
characteristic a acts as X_a(b) = b_*[a], and [a,b] = b_*[a] - a_*[b]
makes F a Lie algebra.  For an operator B = sum b^(n) S^n the map
(a,b) -> B_*[b](a) is a bidifference operator with coefficients
c_(n,m) = db^(n)/du_m; fixing the first slot gives the operator (D_B)_a.

``directional_oracle`` recomputes b_*[a] by dual-number substitution
u_i -> u_i + eps*S^i(a) with eps^2 = 0.  It shares no code with
``frechet_elem`` (monomial power rule instead of partial derivatives)
and exists to cross-check every Frechet path in the tests.
"""
from __future__ import annotations

from .errors import PreconditionFailed
from .field import RatFunc, Poly, rat_sum
from .diffop import DiffOp
from .ratop import RatOp


def frechet_elem(b: RatFunc) -> DiffOp:
    """b_* = sum (db/du_i) S^i over the support window of b."""
    w = b.window()
    if w is None:
        return DiffOp.zero()
    out = {}
    for i in range(w[0], w[1] + 1):
        p = b.partial(i)
        if not p.is_zero():
            out[i] = p
    return DiffOp(out)


def evol_apply(a: RatFunc, b: RatFunc) -> RatFunc:
    """X_a(b) = b_*[a]."""
    return frechet_elem(b).apply(a)


def lie_bracket(a: RatFunc, b: RatFunc) -> RatFunc:
    """[a, b] = b_*[a] - a_*[b]."""
    return evol_apply(a, b) - evol_apply(b, a)


class Density:
    """A density f = rat + sum alpha*log(u_k); alpha constant."""

    __slots__ = ("rat", "logs")

    def __init__(self, rat: RatFunc, logs=()):
        merged = {}
        for alpha, k in logs:
            if not isinstance(alpha, RatFunc):
                alpha = RatFunc.const(alpha)
            if not alpha.is_const():
                raise PreconditionFailed(
                    f"log coefficient must be constant, got {alpha}")
            if not alpha.is_zero():
                merged[k] = merged.get(k, RatFunc.zero()) + alpha
        self.rat = rat
        self.logs = tuple(sorted(
            ((a, k) for k, a in merged.items() if not a.is_zero()),
            key=lambda t: t[1]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Density):
            return NotImplemented
        return self.rat == other.rat and self.logs == other.logs

    __hash__ = None

    def __str__(self) -> str:
        parts = [str(self.rat)] if not self.rat.is_zero() else []
        for alpha, k in self.logs:
            arg = "u" if k == 0 else f"u[{k}]"
            if alpha.is_one():
                parts.append(f"log({arg})")
            else:
                parts.append(f"{alpha}*log({arg})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Density({self})"


def euler_operator(f) -> RatFunc:
    """Variational derivative delta_u f = sum S^-i(df/du_i).

    Accepts a RatFunc or a Density; each log term alpha*log(u_k)
    contributes S^-k(alpha/u_k) = alpha/u.
    """
    logs = ()
    if isinstance(f, Density):
        f, logs = f.rat, f.logs
    out = RatFunc.zero()
    w = f.window()
    if w is not None:
        for i in range(w[0], w[1] + 1):
            p = f.partial(i)
            if not p.is_zero():
                out = out + p.shift(-i)
    for alpha, _ in logs:
        out = out + alpha / RatFunc.u(0)
    return out


def is_variational(a: RatFunc) -> bool:
    """True iff a_* is self-adjoint, i.e. a is a variational derivative."""
    d = frechet_elem(a)
    return d == d.adjoint()


class BiDiffOp:
    """Finite map (n,m) -> RatFunc c, meaning (a,b) -> sum c*S^n(a)*S^m(b)."""

    __slots__ = ("c",)

    def __init__(self, c: dict):
        self.c = c

    @classmethod
    def zero(cls) -> "BiDiffOp":
        return cls({})

    @classmethod
    def from_dict(cls, d: dict) -> "BiDiffOp":
        return cls({k: v for k, v in d.items() if not v.is_zero()})

    def is_zero(self) -> bool:
        return not self.c

    def value(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return rat_sum(coef * a.shift(n) * b.shift(m)
                       for (n, m), coef in self.c.items())

    def slot_first(self, a: RatFunc) -> DiffOp:
        """The operator W_a = sum_m (sum_n c_(n,m) S^n(a)) S^m."""
        cols = {}
        for (n, m), coef in self.c.items():
            cols.setdefault(m, []).append(coef * a.shift(n))
        return DiffOp.from_dict({m: rat_sum(v) for m, v in cols.items()})

    def swap(self) -> "BiDiffOp":
        """(a,b) -> value(b,a)."""
        return BiDiffOp({(m, n): coef for (n, m), coef in self.c.items()})

    def __neg__(self) -> "BiDiffOp":
        return BiDiffOp({k: -v for k, v in self.c.items()})

    def __add__(self, other: "BiDiffOp") -> "BiDiffOp":
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s = s + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return BiDiffOp(out)

    def __sub__(self, other: "BiDiffOp") -> "BiDiffOp":
        return self.__add__(-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiDiffOp):
            return NotImplemented
        if self.c.keys() != other.c.keys():
            return False
        return all(v == other.c[k] for k, v in self.c.items())

    __hash__ = None

    def __str__(self) -> str:
        if not self.c:
            return "0"
        items = sorted(self.c.items(), key=lambda kv: kv[0], reverse=True)
        return "; ".join(f"({n},{m}): {v}" for (n, m), v in items)

    def __repr__(self) -> str:
        return f"BiDiffOp({self})"


def frechet_dop(B: DiffOp) -> BiDiffOp:
    """D_B with entry (n,m) = db^(n)/du_m, so value(a,b) = B_*[b](a)."""
    out = {}
    for n, coef in B.coeffs.items():
        w = coef.window()
        if w is None:
            continue
        for m in range(w[0], w[1] + 1):
            p = coef.partial(m)
            if not p.is_zero():
                out[(n, m)] = p
    return BiDiffOp(out)


def dop_directional(B: DiffOp, x: RatFunc) -> DiffOp:
    """B_*[x]: each coefficient replaced by its derivative along x."""
    return DiffOp.from_dict(
        {n: evol_apply(x, coef) for n, coef in B.coeffs.items()})


def frechet_rop(L: RatOp, x: RatFunc) -> RatOp:
    """(A*B^-1)_*[x] = A_*[x]*B^-1 - A*B^-1*B_*[x]*B^-1."""
    dA = RatOp(dop_directional(L.num, x), L.den)
    dB = RatOp(dop_directional(L.den, x), L.den)
    return dA - L * dB


def compose_left(W: BiDiffOp, H: DiffOp) -> BiDiffOp:
    """a -> H * W_a."""
    out = {}
    for (n, m), coef in W.c.items():
        for k, h in H.coeffs.items():
            out.setdefault((n + k, m + k), []).append(h * coef.shift(k))
    return BiDiffOp.from_dict({k: rat_sum(v) for k, v in out.items()})


def compose_right(W: BiDiffOp, H: DiffOp) -> BiDiffOp:
    """a -> W_a * H."""
    out = {}
    for (n, m), coef in W.c.items():
        for k, h in H.coeffs.items():
            out.setdefault((n, m + k), []).append(coef * h.shift(m))
    return BiDiffOp.from_dict({k: rat_sum(v) for k, v in out.items()})


def adjoint_slot(W: BiDiffOp) -> BiDiffOp:
    """a -> (W_a)^†."""
    out = {}
    for (n, m), coef in W.c.items():
        key = (n - m, -m)
        v = coef.shift(-m)
        s = out.get(key)
        out[key] = v if s is None else s + v
    return BiDiffOp.from_dict(out)


def bd_algebra(W: BiDiffOp, H: DiffOp, kind: str) -> BiDiffOp:
    """Dispatch on kind: compose_left, compose_right, or adjoint_slot."""
    if kind == "compose_left":
        return compose_left(W, H)
    if kind == "compose_right":
        return compose_right(W, H)
    if kind == "adjoint_slot":
        return adjoint_slot(W)
    raise PreconditionFailed(f"unknown bd_algebra kind: {kind}")


def directional_map(B: DiffOp, A: DiffOp) -> BiDiffOp:
    """The bidifference operator (a,b) -> B_*[A(a)](b).

    compose_right composes the second slot, so swapping afterwards puts
    the direction A(a) into the first argument.
    """
    return compose_right(frechet_dop(B), A).swap()


def directional_oracle(b: RatFunc, a: RatFunc) -> RatFunc:
    """b_*[a] by dual-number substitution u_i -> u_i + eps*S^i(a), eps^2 = 0.

    Evaluates numerator and denominator monomial-by-monomial with the
    power rule, then applies the quotient rule once; no partial
    derivatives are taken anywhere.
    """
    num, dnum = _dual_poly(b.num, a)
    den, dden = _dual_poly(b.den, a)
    return (dnum * den - num * dden) / (den * den)


def _dual_poly(p: Poly, a: RatFunc):
    """(value, derivative-part) of p under the dual substitution."""
    val = RatFunc.zero()
    der = RatFunc.zero()
    for mono, coef in p.terms.items():
        f = RatFunc.const(coef)
        df = RatFunc.zero()
        for v, e in mono:
            if type(v) is int:
                base = RatFunc.u(v)
                dbase = a.shift(v)
            else:
                base = RatFunc.sym(v)
                dbase = RatFunc.zero()
            powv = base ** e
            dpow = RatFunc.const(e) * base ** (e - 1) * dbase
            f, df = f * powv, df * powv + f * dpow
        val = val + f
        der = der + df
    return val, der
