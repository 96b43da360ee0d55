"""Registry of known equations and structures, stored as text files.

Each file under ``data/`` declares named elements, densities, and
operators in the package grammar, followed by the checks they are
expected to pass.  Tests and the CLI re-verify entries by parsing
these files, so the stored data stays the single source of truth.

File grammar, one statement per line ('#' starts a comment):

    name: <slug>                          must match the file stem
    rhs: <coefficient expr>               the flow, also bound as `rhs`
    element <name>: <coefficient expr>
    density <name>: <density expr>
    operator <name>: <operator expr>      earlier names are in scope
    check <kind> <names...>: <status>     kinds mirror the CLI
    identity <label>: <expr> == <expr>
    coeff <operator> <k>: <coefficient expr>
    omega <name>: 0                       certificate assertions,
    omega <name> entries: <int>           referring to the most recent
    omega <name> (n,m): <coefficient expr>  check that certified <name>
"""
import re
from pathlib import Path

from .diffop import DiffOp, dop
from .errors import TimeLimitExceeded
from .field import RatFunc
from .parser import (
    COEFFICIENT, DENSITY, RATOP, parse, parse_right_fraction)
from .ratop import RatOp
from .structures import (
    OmegaForm, Verdict, compat_check, ham_check_direct, ham_check_rational,
    ham_check_thm2, invariance_check, preham_certificate, preham_pair_check,
    recursion_check, skew_check, symmetry_check)

_DATA = Path(__file__).parent / "data"
_STATUSES = ("Verified", "Refuted", "Inconclusive")
_CHECK_KINDS = ("preham", "preham-pair", "ham", "ham-rational", "compat",
                "skew", "recursion", "invariance", "symmetry")


class RegistryEntry:
    """A parsed data file: named values plus the checks to replay."""

    __slots__ = ("name", "path", "rhs", "values", "decompositions", "program")

    def __init__(self, name, path, rhs, values, decompositions, program):
        self.name = name
        self.path = path
        self.rhs = rhs
        self.values = values
        self.decompositions = decompositions
        self.program = program

    def __repr__(self) -> str:
        return f"RegistryEntry({self.name})"


class CheckResult:
    __slots__ = ("label", "expected", "actual", "ok")

    def __init__(self, label, expected, actual, ok):
        self.label = label
        self.expected = expected
        self.actual = actual
        self.ok = ok

    def __str__(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        want = f" (expected {self.expected})" if not self.ok else ""
        return f"[{mark}] {self.label}: {self.actual}{want}"


class EntryReport:
    __slots__ = ("name", "results", "ok")

    def __init__(self, name, results):
        self.name = name
        self.results = results
        self.ok = all(r.ok for r in results)


def _fail(path, lineno, msg):
    raise ValueError(f"{path.name}:{lineno}: {msg}")


def load_entry(path) -> RegistryEntry:
    path = Path(path)
    name = None
    rhs = None
    values = {}
    decompositions = {}
    program = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            _fail(path, lineno, "missing ':'")
        head, _, body = line.partition(":")
        words = head.split()
        body = body.strip()
        kind = words[0]
        if kind == "name":
            name = body
        elif kind == "rhs":
            rhs = parse(body, COEFFICIENT, env=values)
            values["rhs"] = rhs
        elif kind == "element":
            values[words[1]] = parse(body, COEFFICIENT, env=values)
        elif kind == "density":
            values[words[1]] = parse(body, DENSITY, env=values)
        elif kind == "operator":
            v = parse(body, RATOP, env=values)
            if v.den == DiffOp.one():
                v = v.num
            values[words[1]] = v
            fr = parse_right_fraction(body, env=values)
            if fr is not None:
                decompositions[words[1]] = fr
        elif kind == "check":
            if len(words) < 2 or words[1] not in _CHECK_KINDS:
                _fail(path, lineno, f"unknown check in {head!r}")
            if body not in _STATUSES:
                _fail(path, lineno, f"expected status, got {body!r}")
            program.append(("check", " ".join(words[1:]), words[1],
                            tuple(words[2:]), body))
        elif kind == "identity":
            lhs, sep, rhs_text = body.partition("==")
            if not sep:
                _fail(path, lineno, "identity needs '=='")
            program.append(("identity", " ".join(words[1:]),
                            lhs.strip(), rhs_text.strip()))
        elif kind == "coeff":
            program.append(("coeff", words[1], int(words[2]), body))
        elif kind == "omega":
            if len(words) == 2 and body == "0":
                program.append(("omega-zero", words[1]))
            elif len(words) == 3 and words[2] == "entries":
                program.append(("omega-size", words[1], int(body)))
            else:
                m = re.fullmatch(r"\((-?\d+),(-?\d+)\)", words[2])
                if len(words) != 3 or not m:
                    _fail(path, lineno, f"bad omega line {head!r}")
                program.append(("omega-entry", words[1],
                                (int(m.group(1)), int(m.group(2))), body))
        else:
            _fail(path, lineno, f"unknown statement {kind!r}")
    if name != path.stem:
        _fail(path, 0, f"name {name!r} does not match file stem")
    return RegistryEntry(name, path, rhs, values, decompositions, program)


def names():
    return sorted(p.stem for p in _DATA.glob("*.txt"))


def load(name: str) -> RegistryEntry:
    path = _DATA / f"{name}.txt"
    if not path.is_file():
        raise KeyError(f"no registry entry named {name!r}")
    return load_entry(path)


def _operand(entry, name, rational=False):
    v = entry.values.get(name)
    if v is None:
        raise ValueError(f"{entry.name}: unknown name {name!r}")
    if rational:
        if isinstance(v, RatFunc):
            v = dop(v)
        return RatOp(v) if isinstance(v, DiffOp) else v
    if isinstance(v, RatFunc):
        return dop(v)
    if not isinstance(v, DiffOp):
        raise ValueError(f"{entry.name}: {name} is not a difference operator")
    return v


def _element(entry, name) -> RatFunc:
    v = entry.values.get(name)
    if not isinstance(v, RatFunc):
        raise ValueError(f"{entry.name}: {name} is not a field element")
    return v


def _run_check(entry, kind, args, certs):
    if kind == "preham":
        v = preham_certificate(_operand(entry, args[0]))
        if v:
            certs[args[0]] = v.certificate
        return v
    if kind == "preham-pair":
        v = preham_pair_check(_operand(entry, args[0]),
                              _operand(entry, args[1]))
        if v:
            certs[args[0]], certs[args[1]] = v.certificate
        return v
    if kind == "ham":
        H = _operand(entry, args[0])
        v = ham_check_direct(H)
        v2 = ham_check_thm2(H)
        assert v.status == v2.status, "route disagreement"
        if v:
            certs[args[0]] = v.certificate
        return v
    if kind == "ham-rational":
        H = _operand(entry, args[0], rational=True)
        if len(args) == 4 and args[1] == "via":
            dec = (_operand(entry, args[2]), _operand(entry, args[3]))
            cert_name = args[2]
        else:
            dec = entry.decompositions.get(args[0])
            cert_name = args[0]
        v = ham_check_rational(H, decomposition=dec)
        if v:
            certs[cert_name] = v.certificate
        return v
    if kind == "compat":
        return compat_check(_operand(entry, args[0], rational=True),
                            _operand(entry, args[1], rational=True))
    if kind == "skew":
        return skew_check(_operand(entry, args[0], rational=True))
    if kind == "recursion":
        return recursion_check(_operand(entry, args[0], rational=True),
                               entry.rhs)
    if kind == "invariance":
        return invariance_check(_operand(entry, args[0], rational=True),
                                entry.rhs)
    if kind == "symmetry":
        return symmetry_check(_element(entry, args[0]),
                              _element(entry, args[1]))
    raise ValueError(f"unknown check kind {kind!r}")


def verify(entry: RegistryEntry) -> EntryReport:
    """Replay an entry's program; every step must reproduce its record."""
    results = []
    certs = {}
    for step in entry.program:
        if step[0] == "check":
            _, label, kind, args, expected = step
            try:
                v = _run_check(entry, kind, args, certs)
                actual = v.status
            except TimeLimitExceeded:
                actual = "Inconclusive (time limit)"
            results.append(CheckResult(f"check {label}", expected, actual,
                                       actual == expected))
        elif step[0] == "identity":
            _, label, lhs, rhs = step
            same = (parse(lhs, RATOP, env=entry.values)
                    == parse(rhs, RATOP, env=entry.values))
            results.append(CheckResult(f"identity {label}", "holds",
                                       "holds" if same else "fails", same))
        elif step[0] == "coeff":
            _, opname, k, text = step
            got = _operand(entry, opname).coeff(k)
            want = parse(text, COEFFICIENT, env=entry.values)
            results.append(CheckResult(f"coeff {opname} {k}", "matches",
                                       "matches" if got == want else "differs",
                                       got == want))
        elif step[0] == "omega-zero":
            form = certs.get(step[1])
            ok = isinstance(form, OmegaForm) and form.is_zero()
            results.append(CheckResult(f"omega {step[1]} = 0", "holds",
                                       "holds" if ok else "fails", ok))
        elif step[0] == "omega-size":
            form = certs.get(step[1])
            ok = isinstance(form, OmegaForm) and len(form.c) == step[2]
            results.append(CheckResult(f"omega {step[1]} entries = {step[2]}",
                                       "holds", "holds" if ok else "fails",
                                       ok))
        else:
            _, name, key, text = step
            form = certs.get(name)
            want = parse(text, COEFFICIENT, env=entry.values)
            ok = (isinstance(form, OmegaForm)
                  and key in form.c and form.c[key] == want)
            results.append(CheckResult(f"omega {name} {key}", "matches",
                                       "matches" if ok else "differs", ok))
    return EntryReport(entry.name, results)


def verify_all():
    return [verify(load(n)) for n in names()]
