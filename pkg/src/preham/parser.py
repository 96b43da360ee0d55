"""Text forms for field elements, operators, and densities.

One grammar serves every sort.  Atoms are integers, constant symbols,
``u`` or ``u[k]``, ``S`` (shift), and ``log(u[k])``; the operators are
``+ - * / ^`` with the usual precedence, parentheses, and ``inv(...)``
for operator inversion.  Multiplication is always explicit (``u*S``,
never ``uS``), which keeps coefficient-times-shift unambiguous.  The
right operand of ``/`` must be a field element; ``log`` may appear
only as a top-level summand of a density.  Every printer in the
package emits this grammar back, so parsing a printed value yields an
equal value.
"""
from .diffop import DiffOp, S, dop
from .errors import ParseError, SortError
from .field import RatFunc
from .ratop import RatOp
from .variational import Density

COEFFICIENT = "coefficient"
DIFFOP = "diffop"
RATOP = "ratop"
DENSITY = "density"
SORTS = (COEFFICIENT, DIFFOP, RATOP, DENSITY)

_PUNCT = "[]()+-*/^"


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _show(tok: _Token) -> str:
    return "end of input" if tok.kind == "eof" else f"'{tok.text}'"


def _tokenize(text: str):
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c.isspace():
            col += 1
            i += 1
        elif c in _PUNCT:
            toks.append(_Token(c, c, line, col))
            col += 1
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(_Token("eof", "", line, col))
    return toks


class _LogTerm:
    __slots__ = ("coef", "k")

    def __init__(self, coef: RatFunc, k: int):
        self.coef = coef
        self.k = k


# -- value lattice: RatFunc < DiffOp < RatOp ---------------------------

def _sort_of(v) -> str:
    if isinstance(v, RatFunc):
        return COEFFICIENT
    if isinstance(v, DiffOp):
        return DIFFOP
    if isinstance(v, RatOp):
        return RATOP
    return DENSITY


def _level(v) -> int:
    return 0 if isinstance(v, RatFunc) else 1 if isinstance(v, DiffOp) else 2


def _lift(v, level: int):
    if level >= 1 and isinstance(v, RatFunc):
        v = dop(v)
    if level >= 2 and isinstance(v, DiffOp):
        v = RatOp(v)
    return v


def _demote(v):
    """Strip exact operator wrappers: unit-free RatOp, then 0-order DiffOp."""
    if isinstance(v, RatOp) and v.den == DiffOp.one():
        v = v.num
    if isinstance(v, DiffOp) and v.is_elem():
        v = v.coeff(0)
    return v


def _as_ratop(v) -> RatOp:
    if isinstance(v, RatFunc):
        v = dop(v)
    if isinstance(v, DiffOp):
        v = RatOp(v)
    return v


def _binary(op: str, a, b):
    lv = max(_level(a), _level(b))
    a = _lift(a, lv)
    b = _lift(b, lv)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    return a * b


def _neg(v):
    if isinstance(v, _LogTerm):
        return _LogTerm(-v.coef, v.k)
    return -v


class _Parser:
    def __init__(self, toks, sort: str, env=None):
        self.toks = toks
        self.pos = 0
        self.sort = sort
        self.env = env or {}

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected '{kind}', found {_show(tok)}",
                             tok.line, tok.col)
        return tok

    # -- grammar -------------------------------------------------------

    def expr(self, depth: int):
        parts = [(1, self.term(depth))]
        while self.peek().kind in "+-":
            sign = 1 if self.take().kind == "+" else -1
            parts.append((sign, self.term(depth)))
        if any(isinstance(v, _LogTerm) for _, v in parts):
            rat = RatFunc.zero()
            logs = []
            for sign, v in parts:
                if isinstance(v, _LogTerm):
                    logs.append((v.coef if sign > 0 else -v.coef, v.k))
                else:
                    v = _demote(v)
                    if not isinstance(v, RatFunc):
                        raise SortError(DENSITY, _sort_of(v))
                    rat = rat + v if sign > 0 else rat - v
            return Density(rat, logs)
        total = None
        for sign, v in parts:
            v = v if sign > 0 else _neg(v)
            total = v if total is None else _binary("+", total, v)
        return total

    def term(self, depth: int):
        v = self.unary(depth)
        while self.peek().kind in "*/":
            tok = self.take()
            rhs = self.unary(depth)
            if tok.kind == "*":
                v = self.mul(v, rhs, tok)
            else:
                v = self.div(v, rhs, tok)
        return v

    def mul(self, a, b, tok: _Token):
        if isinstance(a, _LogTerm) or isinstance(b, _LogTerm):
            if isinstance(b, _LogTerm) and not isinstance(a, _LogTerm):
                a, b = b, a
            if isinstance(b, RatFunc) and b.is_const():
                return _LogTerm(a.coef * b, a.k)
            raise SortError("constant multiple of log(u[k])",
                            "log(u[k]) times a non-constant")
        return _binary("*", a, b)

    def div(self, a, b, tok: _Token):
        if isinstance(a, _LogTerm) or isinstance(b, _LogTerm):
            raise ParseError("log(u[k]) cannot appear in a division",
                             tok.line, tok.col)
        b = _demote(b)
        if not isinstance(b, RatFunc):
            raise SortError("coefficient after '/'", _sort_of(b))
        if isinstance(a, RatFunc):
            return a / b
        return _binary("*", a, b.inverse())

    def unary(self, depth: int):
        negate = False
        while self.peek().kind in "+-":
            if self.take().kind == "-":
                negate = not negate
        v = self.power(depth)
        return _neg(v) if negate else v

    def power(self, depth: int):
        v = self.atom(depth)
        while self.peek().kind == "^":
            tok = self.take()
            v = self.pow_value(v, self.int_exponent(), tok)
        return v

    def int_exponent(self) -> int:
        sign = 1
        tok = self.take()
        if tok.kind in "+-":
            sign = 1 if tok.kind == "+" else -1
            tok = self.take()
        if tok.kind != "int":
            raise ParseError(f"integer exponent expected, found {_show(tok)}",
                             tok.line, tok.col)
        return sign * int(tok.text)

    def pow_value(self, v, k: int, tok: _Token):
        if isinstance(v, _LogTerm):
            raise ParseError("log(u[k]) cannot be raised to a power",
                             tok.line, tok.col)
        if isinstance(v, RatFunc):
            return v ** k
        if k < 0:
            v = _demote(_as_ratop(v).inverse())
            k = -k
        if isinstance(v, RatFunc):
            return v ** k
        if isinstance(v, DiffOp):
            return v ** k
        out = RatOp(DiffOp.one())
        for _ in range(k):
            out = out * v
        return out

    def atom(self, depth: int):
        tok = self.take()
        if tok.kind == "int":
            return RatFunc.const(int(tok.text))
        if tok.kind == "(":
            v = self.expr(depth + 1)
            self.expect(")")
            return v
        if tok.kind == "name":
            if tok.text == "u":
                return RatFunc.u(self.opt_index())
            if tok.text == "S":
                return S(1)
            if tok.text == "inv":
                self.expect("(")
                v = self.expr(depth + 1)
                self.expect(")")
                return _demote(_as_ratop(v).inverse())
            if tok.text == "log":
                if self.sort != DENSITY:
                    raise SortError(self.sort, "log(u[k]) density term")
                if depth > 0:
                    raise SortError("top-level log(u[k]) summand",
                                    "log(u[k]) inside a subexpression")
                self.expect("(")
                arg = self.take()
                if arg.kind != "name" or arg.text != "u":
                    raise ParseError(
                        f"log argument must be u or u[k], found {_show(arg)}",
                        arg.line, arg.col)
                k = self.opt_index()
                self.expect(")")
                return _LogTerm(RatFunc.one(), k)
            if tok.text in self.env:
                return self.env[tok.text]
            return RatFunc.sym(tok.text)
        raise ParseError(f"unexpected {_show(tok)}", tok.line, tok.col)

    def opt_index(self) -> int:
        if self.peek().kind != "[":
            return 0
        self.take()
        sign = 1
        tok = self.take()
        if tok.kind == "-":
            sign = -1
            tok = self.take()
        if tok.kind != "int":
            raise ParseError(f"integer index expected, found {_show(tok)}",
                             tok.line, tok.col)
        self.expect("]")
        return sign * int(tok.text)


def _to_sort(v, sort: str):
    if sort == DENSITY:
        if isinstance(v, Density):
            return v
        if isinstance(v, _LogTerm):
            return Density(RatFunc.zero(), [(v.coef, v.k)])
        v = _demote(v)
        if isinstance(v, RatFunc):
            return Density(v)
        raise SortError(DENSITY, _sort_of(v))
    if sort == RATOP:
        return _as_ratop(v)
    v = _demote(v)
    if sort == DIFFOP:
        if isinstance(v, RatFunc):
            return dop(v)
        if isinstance(v, DiffOp):
            return v
        raise SortError(DIFFOP, RATOP)
    if isinstance(v, RatFunc):
        return v
    return _raise_coefficient(v)


def _raise_coefficient(v):
    raise SortError(COEFFICIENT, _sort_of(v))


def parse(text: str, sort: str = RATOP, env=None):
    """Evaluate ``text`` in the requested sort.

    Returns a RatFunc, DiffOp, RatOp, or Density.  Raises ParseError
    on malformed input and SortError when the expression does not live
    in ``sort`` (an operator where a coefficient is expected, a
    genuinely rational operator for sort diffop, a misplaced log).
    ``env`` maps extra names to previously built values; a bare name
    not found there denotes a constant symbol.
    """
    if sort not in SORTS:
        raise ValueError(f"unknown sort {sort!r}")
    p = _Parser(_tokenize(text), sort, env)
    v = p.expr(0)
    tok = p.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected {_show(tok)}", tok.line, tok.col)
    return _to_sort(v, sort)


def parse_right_fraction(text: str, env=None):
    """(A, B) when ``text`` is literally P1*...*Pk*inv(Q), else None.

    Commands whose certificates are decomposition-relative use this to
    keep the user's own numerator/denominator pair instead of the
    stored normal form.  Both parts must evaluate to plain difference
    operators.
    """
    try:
        toks = _tokenize(text)
    except ParseError:
        return None
    depth = 0
    inv_at = None
    for i, t in enumerate(toks):
        if t.kind == "(":
            depth += 1
        elif t.kind == ")":
            depth -= 1
        elif depth == 0:
            if t.kind in "+-" and toks[i - 1].kind != "^":
                return None
            if t.kind == "name" and t.text == "inv":
                if inv_at is not None:
                    return None
                inv_at = i
    if inv_at is None:
        return None
    if inv_at > 0 and toks[inv_at - 1].kind != "*":
        return None
    if toks[inv_at + 1].kind != "(" or toks[-2].kind != ")":
        return None
    eof = toks[-1]

    def run(sub):
        p = _Parser(sub + [eof], DIFFOP, env)
        v = p.expr(0)
        if p.peek().kind != "eof":
            return None
        v = _demote(v)
        if isinstance(v, RatFunc):
            return dop(v)
        return v if isinstance(v, DiffOp) else None

    try:
        num = run(toks[:inv_at - 1]) if inv_at > 0 else DiffOp.one()
        den = run(toks[inv_at + 2:-2])
    except (ParseError, SortError, ValueError, ZeroDivisionError):
        return None
    if num is None or den is None or den.is_zero():
        return None
    return num, den
