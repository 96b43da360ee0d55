"""Decision procedures for preHamiltonian and Hamiltonian structure.

An operator A is preHamiltonian when the image of A is closed under
the Lie bracket, equivalently when there is a 2-form omega with
A(omega(a,b)) = A_*[A(a)](b) - A_*[A(b)](a) identically.  Matching
coefficients of S^n(a)S^m(b) splits that equation along the diagonals
d = n - m into exact left-division problems A*X_d = T_d in the operator
ring, so the candidate omega is forced and every check terminates with
a Verified certificate or a re-checkable nonzero residual.
"""
from __future__ import annotations

from .errors import PreconditionFailed
from .field import Poly, RatFunc, poly_gcd
from .diffop import DiffOp, dop, left_divide, right_gcd, right_lcm
from .ratop import RatOp
from .variational import (
    BiDiffOp,
    adjoint_slot,
    compose_left,
    compose_right,
    directional_map,
    dop_directional,
    frechet_dop,
    frechet_elem,
    frechet_rop,
    lie_bracket,
)

VERIFIED = "Verified"
REFUTED = "Refuted"
INCONCLUSIVE = "Inconclusive"


class OmegaForm:
    """2-form omega(a,b) = sum omega_(n,m)*(S^n(a)S^m(b) - S^n(b)S^m(a)).

    Only entries with n > m are stored; antisymmetry is structural.
    """

    __slots__ = ("c",)

    def __init__(self, c: dict):
        for (n, m), v in c.items():
            if n <= m:
                raise PreconditionFailed(f"omega entry ({n},{m}) needs n > m")
        self.c = {k: v for k, v in c.items() if not v.is_zero()}

    @classmethod
    def zero(cls) -> "OmegaForm":
        return cls({})

    @classmethod
    def from_bidiff(cls, W: BiDiffOp) -> "OmegaForm":
        """Extract the form from an antisymmetric coefficient map."""
        out = {}
        for (n, m), v in W.c.items():
            if n == m:
                raise PreconditionFailed(
                    f"diagonal entry ({n},{n}) breaks antisymmetry")
            if W.c.get((m, n), RatFunc.zero()) != -v:
                raise PreconditionFailed(
                    f"entries ({n},{m}) and ({m},{n}) are not antisymmetric")
            if n > m:
                out[(n, m)] = v
        return cls(out)

    def as_bidiff(self) -> BiDiffOp:
        out = {}
        for (n, m), v in self.c.items():
            out[(n, m)] = v
            out[(m, n)] = -v
        return BiDiffOp(out)

    def value(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self.as_bidiff().value(a, b)

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        if not isinstance(other, OmegaForm):
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
        return f"OmegaForm({self})"


class Verdict:
    """Outcome of a check: status plus certificate/residual/diagnostics.

    A Verified verdict's certificate re-substitutes to a zero residual;
    a Refuted one carries a nonzero residual object; Inconclusive only
    arises from the bounded ansatz search in apply_rop.
    """

    __slots__ = ("status", "certificate", "residual", "diagnostics", "payload")

    def __init__(self, status, certificate=None, residual=None,
                 diagnostics=None, payload=None):
        self.status = status
        self.certificate = certificate
        self.residual = residual
        self.diagnostics = diagnostics or {}
        self.payload = payload

    @classmethod
    def verified(cls, certificate=None, diagnostics=None, payload=None):
        return cls(VERIFIED, certificate=certificate,
                   diagnostics=diagnostics, payload=payload)

    @classmethod
    def refuted(cls, residual, diagnostics=None):
        return cls(REFUTED, residual=residual, diagnostics=diagnostics)

    @classmethod
    def inconclusive(cls, diagnostics=None):
        return cls(INCONCLUSIVE, diagnostics=diagnostics)

    def __bool__(self) -> bool:
        return self.status == VERIFIED

    def __str__(self) -> str:
        return self.status

    def __repr__(self) -> str:
        return f"Verdict({self.status})"


class EvolutionEq:
    """A named evolution equation u_t = rhs with optional structures."""

    __slots__ = ("name", "rhs", "recursion", "hamiltonians")

    def __init__(self, name, rhs, recursion=None, hamiltonians=()):
        self.name = name
        self.rhs = rhs
        self.recursion = recursion
        self.hamiltonians = tuple(hamiltonians)

    def __repr__(self) -> str:
        return f"EvolutionEq({self.name})"


# -- preHamiltonian ------------------------------------------------------


def _lie_image_defect(A: DiffOp, B: DiffOp) -> BiDiffOp:
    """(a,b) -> A_*[B(a)](b) + B_*[A(a)](b), antisymmetrized."""
    t = directional_map(A, B) + directional_map(B, A)
    return t - t.swap()


def preham_certificate(A: DiffOp) -> Verdict:
    """Decide whether A is preHamiltonian; the omega candidate is forced.

    The coefficient equations for omega decouple along diagonals
    d = n - m > 0 into A*X_d = T_d, solved by exact left division.
    The candidate is then re-substituted, so a Verified certificate has
    already survived an independent evaluation.
    """
    if A.is_zero():
        raise PreconditionFailed("zero operator has no preHamiltonian form")
    t1 = directional_map(A, A)
    T = t1 - t1.swap()
    MA, NA = A.order()
    if T.is_zero():
        return Verdict.verified(OmegaForm.zero(),
                                {"first_slot_window": None})
    firsts = [n for (n, _) in T.c]
    bounds = {
        "first_slot_window": (min(firsts), max(firsts)),
        "omega_window": (min(firsts) - NA, max(firsts) - MA),
    }
    diagonals = {}
    for (n, m), v in T.c.items():
        diagonals.setdefault(n - m, {})[n] = v
    omega = {}
    for d in sorted(k for k in diagonals if k > 0):
        q, _ = left_divide(DiffOp(diagonals[d]), A)
        for n, coef in q.coeffs.items():
            omega[(n, n - d)] = coef
    form = OmegaForm(omega)
    residual = compose_left(form.as_bidiff(), A) - T
    if residual.is_zero():
        return Verdict.verified(form, bounds)
    return Verdict.refuted(residual, bounds)


def preham_pair_check(A: DiffOp, B: DiffOp, lambda_route: bool = False) -> Verdict:
    """Decide whether A + lambda*B is preHamiltonian for every constant.

    Default route certifies A and B separately and then checks the
    mixed identity A(omega_B(a,b)) + B(omega_A(a,b)) = T_mix(a,b).
    The lambda route adjoins a fresh transcendental constant and runs
    the single certificate on A + lambda*B; the two must agree.
    """
    if A.is_zero() or B.is_zero():
        raise PreconditionFailed("pair check needs nonzero operators")
    if lambda_route:
        lam = RatFunc.sym("lambda")
        v = preham_certificate(A + dop(lam) * B)
        v.diagnostics["route"] = "lambda"
        return v
    va = preham_certificate(A)
    if not va:
        va.diagnostics["failed_member"] = "A"
        return va
    vb = preham_certificate(B)
    if not vb:
        vb.diagnostics["failed_member"] = "B"
        return vb
    t_mix = _lie_image_defect(A, B)
    residual = (compose_left(vb.certificate.as_bidiff(), A)
                + compose_left(va.certificate.as_bidiff(), B)
                - t_mix)
    diagnostics = {"route": "certificates"}
    if residual.is_zero():
        return Verdict.verified((va.certificate, vb.certificate), diagnostics)
    diagnostics["failed_member"] = "pair identity"
    return Verdict.refuted(residual, diagnostics)


# -- Hamiltonian ---------------------------------------------------------


def ham_check_direct(H: DiffOp) -> Verdict:
    """Hamiltonian test for a difference operator.

    Skew-symmetry plus the exact identity
    H_*[Ha] = (D_H)_a*H + H*(D_H)_a^†; when it holds the certificate
    omega_H(a,b) = (D_H)_a^†(b) is returned as a form.
    """
    skew = H.adjoint() + H
    if not skew.is_zero():
        return Verdict.refuted(skew, {"reason": "not skew-symmetric"})
    dh = frechet_dop(H)
    v = adjoint_slot(dh)
    residual = (directional_map(H, H)
                - compose_right(dh, H)
                - compose_left(v, H))
    if residual.is_zero():
        return Verdict.verified(OmegaForm.from_bidiff(v))
    return Verdict.refuted(residual)


def ham_check_thm2(H: DiffOp) -> Verdict:
    """Hamiltonian test via the coefficient-dependence criterion.

    H must have the skew form sum_i (h_i*S^i - S^-i*h_i); then H is
    Hamiltonian iff each h_i depends only on u, ..., u_i and H is
    preHamiltonian.
    """
    if H.is_zero():
        return Verdict.verified(OmegaForm.zero(), {"form": "zero"})
    if not H.coeff(0).is_zero():
        return Verdict.refuted(dop(H.coeff(0)),
                               {"reason": "not skew-form"})
    MH, NH = H.order()
    k = max(NH, -MH)
    coeffs = {}
    for i in range(1, k + 1):
        hi = H.coeff(i)
        if H.coeff(-i) != -hi.shift(-i):
            return Verdict.refuted(H.adjoint() + H,
                                   {"reason": "not skew-form"})
        if not hi.is_zero():
            coeffs[i] = hi
    for i, hi in coeffs.items():
        w = hi.window()
        if w is not None and (w[0] < 0 or w[1] > i):
            return Verdict.refuted(
                DiffOp.from_dict({i: hi}),
                {"reason": "coefficient dependence",
                 "coefficient": i, "window": w, "allowed": (0, i)})
    v = preham_certificate(H)
    v.diagnostics["skew_form_orders"] = sorted(coeffs)
    return v


def ham_check_rational(H: RatOp, decomposition=None) -> Verdict:
    """Hamiltonian test for a rational operator via a minimal A*B^-1.

    Requires skew-symmetry, a preHamiltonian numerator A with form
    omega_A, and the exact identity
    B_*[Aa] - (D_B)_a*A + (D_B)_a^†*A + (D_A)_a^†*B = B*omega_A(a,.).

    The stored normal form is used unless an explicit right-coprime
    pair (A, B) with H = A*B^-1 is passed; the verdict is the same
    either way but the certificate is relative to the numerator used.
    """
    if H.is_zero():
        return Verdict.verified(OmegaForm.zero())
    skew = H.den.adjoint() * H.num + H.num.adjoint() * H.den
    if not skew.is_zero():
        return Verdict.refuted(skew, {"reason": "not skew-symmetric"})
    if decomposition is not None:
        A, B = decomposition
        if right_gcd(A, B).total_order() != 0:
            raise PreconditionFailed("decomposition is not minimal")
        if RatOp(A, B) != H:
            raise PreconditionFailed("decomposition does not equal the operator")
    else:
        A, B = H.num, H.den
    va = preham_certificate(A)
    if not va:
        va.diagnostics["reason"] = "numerator not preHamiltonian"
        return va
    da, db = frechet_dop(A), frechet_dop(B)
    lhs = (directional_map(B, A)
           - compose_right(db, A)
           + compose_right(adjoint_slot(db), A)
           + compose_right(adjoint_slot(da), B))
    residual = lhs - compose_left(va.certificate.as_bidiff(), B)
    diagnostics = {"minimal_num_order": A.order(),
                   "minimal_den_order": B.order()}
    diagnostics.update(va.diagnostics)
    if residual.is_zero():
        return Verdict.verified(va.certificate, diagnostics)
    return Verdict.refuted(residual, diagnostics)


def compat_check(H: RatOp, K: RatOp, lambda_route: bool = False) -> Verdict:
    """Compatibility of two Hamiltonian operators.

    Default route: L = H*K^-1 = A*B^-1 minimal, then (A,B) must be a
    preHamiltonian pair, H skew-symmetric and K Hamiltonian.  The
    lambda route instead runs the rational Hamiltonian check on
    H + lambda*K with a fresh constant lambda.
    """
    if lambda_route:
        lam = RatFunc.sym("lambda")
        v = ham_check_rational(H + lam * K)
        v.diagnostics["route"] = "lambda"
        return v
    diagnostics = {"route": "quotient-pair"}
    skew = H.den.adjoint() * H.num + H.num.adjoint() * H.den
    if not skew.is_zero():
        return Verdict.refuted(skew,
                               {**diagnostics, "reason": "H not skew-symmetric"})
    vk = ham_check_rational(K)
    if not vk:
        vk.diagnostics.update(diagnostics)
        vk.diagnostics["reason"] = "K not Hamiltonian"
        return vk
    L = H * K.inverse()
    diagnostics["quotient_num_order"] = L.num.order()
    diagnostics["quotient_den_order"] = L.den.order()
    vp = preham_pair_check(L.num, L.den)
    vp.diagnostics.update(diagnostics)
    vp.diagnostics["hamiltonian_K_certificate"] = vk.certificate
    return vp


def preham_pair_from_ham_pair(H: RatOp, K: RatOp):
    """The preHamiltonian pair behind two compatible Hamiltonians.

    With minimal H = C*D^-1 and K = P*Q^-1, a common right multiple
    D*M = Q*N gives the pair A = C*M, B = P*N with H*K^-1 = A*B^-1.
    """
    vh = ham_check_rational(H)
    if not vh:
        raise PreconditionFailed("H fails the rational Hamiltonian check")
    vk = ham_check_rational(K)
    if not vk:
        raise PreconditionFailed("K fails the rational Hamiltonian check")
    c, d = H.num, H.den
    p, q = K.num, K.den
    _, n, m = right_lcm(d, q)
    return c * m, p * n


# -- flows, symmetries, correspondence ------------------------------------


def _cleared_check(L: RatOp, Q: DiffOp, P: DiffOp) -> Verdict:
    """Q = L*P with Q, P local; the residual is scaled back by den^-1."""
    w, r = left_divide(P, L.den)
    if r.is_zero():
        d = L.num * w - Q
        if d.is_zero():
            return Verdict.verified()
        return Verdict.refuted(RatOp(d, L.den))
    residual = RatOp(Q) - L * RatOp(P)
    if residual.is_zero():
        return Verdict.verified()
    return Verdict.refuted(residual * RatOp(DiffOp.one(), L.den))


def recursion_check(R: RatOp, f: RatFunc) -> Verdict:
    """R_*[f] = f_* R - R f_* in Q: R maps symmetries to symmetries.

    With R = A*B^-1 the identity, multiplied on the right by B, becomes
    Q = R*P for the local operators Q = A_*[f] - f_* A and
    P = B_*[f] - f_* B, which is checked without rational arithmetic
    whenever B divides P on the left.
    """
    fs = frechet_elem(f)
    A, B = R.num, R.den
    Q = dop_directional(A, f) - fs * A
    P = dop_directional(B, f) - fs * B
    return _cleared_check(R, Q, P)


def invariance_check(H: RatOp, f: RatFunc) -> Verdict:
    """H_*[f] = f_* H + H f_*^† in Q: H is invariant along u_t = f.

    Cleared of the denominator as in recursion_check, with
    P = B_*[f] + f_*^† B picking up the adjoint term.
    """
    fs = frechet_elem(f)
    A, B = H.num, H.den
    Q = dop_directional(A, f) - fs * A
    P = dop_directional(B, f) + fs.adjoint() * B
    return _cleared_check(H, Q, P)


def symmetry_check(f: RatFunc, g: RatFunc) -> Verdict:
    """[f, g] = 0: the flows commute."""
    residual = lie_bracket(f, g)
    if residual.is_zero():
        return Verdict.verified()
    return Verdict.refuted(residual)


def skew_check(L: RatOp) -> Verdict:
    """L^† = -L; the residual is the nonzero L^† + L."""
    t = L.adjoint() + L
    if t.num.is_zero():
        return Verdict.verified()
    return Verdict.refuted(t)


# -- applying a rational operator ------------------------------------------


def apply_rop(L: RatOp, b: RatFunc, witness: RatFunc = None,
              decomposition=None, ansatz_degree: int = None,
              ansatz_window: int = None) -> Verdict:
    """a = L(b) through the correspondence: find c with den(c) = b.

    With a witness c the equation B(c) = b is checked exactly and
    A(c) returned.  Without one, c is sought as a polynomial ansatz
    whose support window is window(b) widened by the den's order span
    and whose total degree is bounded by b's; failure of that bounded
    linear search is Inconclusive, not a refutation.

    A witness certifies relative to a decomposition of L; pass the
    pair (A, B) the witness refers to when it is not the stored
    normal form (any decomposition is sound here).
    """
    if decomposition is not None:
        A, B = decomposition
        if RatOp(A, B) != L:
            raise PreconditionFailed("decomposition does not equal the operator")
    else:
        A, B = L.num, L.den
    if witness is not None:
        got = B.apply(witness)
        if got != b:
            return Verdict.refuted(got - b, {"reason": "witness mismatch"})
        return Verdict.verified(certificate=witness, payload=A.apply(witness))
    if B == DiffOp.one():
        return Verdict.verified(certificate=b, payload=A.apply(b))
    if b.is_zero():
        return Verdict.verified(certificate=RatFunc.zero(),
                                payload=RatFunc.zero())
    MB, NB = B.order()
    w = b.window() or (0, 0)
    if ansatz_window is not None:
        lo, hi = -ansatz_window, ansatz_window
    else:
        lo, hi = w[0] - NB, w[1] - MB
    degree = b.num.degree() if b.den.is_const() else b.num.degree() + b.den.degree()
    if ansatz_degree is not None:
        degree = ansatz_degree
    bounds = {"window": (lo, hi), "degree": degree}
    monos = _monomials(lo, hi, degree)
    images = [B.apply(m) for m in monos]
    sol = _solve_linear(images, b)
    if sol is None:
        return Verdict.inconclusive(bounds)
    c = RatFunc.zero()
    for t, m in zip(sol, monos):
        if not t.is_zero():
            c = c + t * m
    if B.apply(c) != b:
        return Verdict.inconclusive(bounds)
    return Verdict.verified(certificate=c, payload=A.apply(c),
                            diagnostics=bounds)


def _monomials(lo: int, hi: int, degree: int):
    """All monomials in u_lo..u_hi of total degree <= degree."""
    out = [RatFunc.one()]
    layer = [RatFunc.one()]
    vs = [RatFunc.u(i) for i in range(lo, hi + 1)]
    for _ in range(degree):
        nxt = []
        seen = set()
        for p in layer:
            for v in vs:
                q = p * v
                key = next(iter(q.num.terms))
                if key not in seen:
                    seen.add(key)
                    nxt.append(q)
        out.extend(nxt)
        layer = nxt
    return out


def _split_umono(mono):
    """Monomial -> (u-part, constant-part)."""
    upart = tuple((v, e) for v, e in mono if type(v) is int)
    cpart = tuple((v, e) for v, e in mono if type(v) is not int)
    return upart, cpart


def _poly_rows(p, rows, col, width):
    """Scatter a u-free-coefficient decomposition of p into rows."""
    for mono, coef in p.terms.items():
        upart, cpart = _split_umono(mono)
        row = rows.setdefault(upart, [RatFunc.zero()] * width)
        row[col] = row[col] + RatFunc(Poly.from_dict({cpart: coef}), Poly.one())


def _solve_linear(images, b):
    """Solve sum t_j*images[j] = b for constants t_j; None if unsolvable."""
    den = b.den
    for img in images:
        den = _poly_lcm(den, img.den)
    denf = RatFunc(den)
    width = len(images) + 1
    rows = {}
    for j, img in enumerate(images):
        cleared = img * denf
        _poly_rows(cleared.num, rows, j, width)
    cleared_b = b * denf
    _poly_rows(cleared_b.num, rows, len(images), width)
    matrix = list(rows.values())
    n = len(images)
    sol = [RatFunc.zero()] * n
    pivot_rows = []
    for col in range(n):
        pr = None
        for r in matrix:
            if not r[col].is_zero() and all(r[c].is_zero() for c in range(col)):
                pr = r
                break
        if pr is None:
            continue
        inv = pr[col].inverse()
        for c in range(col, width):
            pr[c] = pr[c] * inv
        for r in matrix:
            if r is not pr and not r[col].is_zero():
                f = r[col]
                for c in range(col, width):
                    r[c] = r[c] - f * pr[c]
        pivot_rows.append((col, pr))
    for r in matrix:
        if all(r[c].is_zero() for c in range(n)) and not r[n].is_zero():
            return None
    for col, pr in pivot_rows:
        sol[col] = pr[n]
    return sol


def _poly_lcm(p, q):
    g = poly_gcd(p, q)
    return p * q.div_exact(g)


# -- transport of forms -----------------------------------------------------


def omega_transport(omega_A: OmegaForm, A: DiffOp, Q: DiffOp) -> OmegaForm:
    """The form for B = A*Q when Q is a unit:

    omega_B(a,b) = Q^-1(omega_A(Qa,Qb) + Q_*[Ba](b) - Q_*[Bb](a)).
    """
    if not Q.is_unit():
        raise PreconditionFailed("transport requires a unit (single monomial)")
    B = A * Q
    w = omega_A.as_bidiff()
    t1 = compose_right(w, Q)
    t1 = compose_right(t1.swap(), Q).swap()
    t2 = directional_map(Q, B)
    total = t1 + t2 - t2.swap()
    k, qc = next(iter(Q.coeffs.items()))
    qinv = DiffOp({-k: qc.shift(-k).inverse()})
    return OmegaForm.from_bidiff(compose_left(total, qinv))
