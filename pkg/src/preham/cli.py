"""Command line front end.

Every subcommand parses its operands with the shared expression grammar,
runs one check or computation, and prints a human or structured report.
Exit codes: 0 Verified (or a computed value), 1 Refuted, 2 Inconclusive,
3 usage, parse, or input errors.
"""

import argparse
import sys
import time

from . import config, registry
from .diffop import left_divide, left_lcm, right_divide, right_gcd, right_lcm
from .errors import (
    DivisionByZero,
    ParseError,
    PreconditionFailed,
    SortError,
    TimeLimitExceeded,
)
from .parser import COEFFICIENT, DENSITY, DIFFOP, RATOP, parse, parse_right_fraction
from .report import emit_registry, emit_report, emit_value
from .structures import (
    Verdict,
    apply_rop,
    compat_check,
    ham_check_direct,
    ham_check_rational,
    ham_check_thm2,
    invariance_check,
    preham_certificate,
    preham_pair_check,
    recursion_check,
    skew_check,
    symmetry_check,
)
from .variational import euler_operator, frechet_elem, lie_bracket

_GRAMMAR = """\
commands
  check preham A | preham-pair A B | ham H | ham-rational H [A B]
        | compat H K | skew L | symmetry f g | recursion R f | invariance H f
  op    mul A B | add A B | adjoint A | normalize A | divr A B | divl A B
        | gcdr A B | lcmr A B | lcml A B
  calc  frechet a | euler f | bracket a b | apply L b
  registry  list | verify NAME | verify-all

flags
  --format human|structured   --lambda-route   --ansatz-degree N
  --ansatz-window W   --gcd-threshold T   --time-limit SECONDS

expressions (explicit *, no juxtaposition; put -- before an operand
that starts with a minus sign)
  atoms        integers, constant names, u[k] (u means u[0]), S, S^k,
               inv(X), log(u[k])
  coefficient  rational function of the u[k]; the right operand of /
               must itself be a coefficient
  operator     Laurent polynomial in S with coefficient factors,
               e.g.  u*u[1]*S - S^-1*u*u[1]
  rational     operator expression with inv(...); a literal trailing
               *inv(Y) is kept as the displayed decomposition for
               certificates and witnesses
  density      coefficient plus constant multiples of log(u[k]) as
               top-level summands
"""

_EXIT = {"Verified": 0, "Refuted": 1, "Inconclusive": 2}

# operand name and parse sort per command, in positional order
_CHECK_SIG = {
    "preham": (("A", DIFFOP),),
    "preham-pair": (("A", DIFFOP), ("B", DIFFOP)),
    "ham": (("H", DIFFOP),),
    "ham-rational": (("H", RATOP),),
    "compat": (("H", RATOP), ("K", RATOP)),
    "skew": (("L", RATOP),),
    "symmetry": (("f", COEFFICIENT), ("g", COEFFICIENT)),
    "recursion": (("R", RATOP), ("f", COEFFICIENT)),
    "invariance": (("H", RATOP), ("f", COEFFICIENT)),
}
_OP_SIG = {
    "mul": (("A", RATOP), ("B", RATOP)),
    "add": (("A", RATOP), ("B", RATOP)),
    "adjoint": (("A", RATOP),),
    "normalize": (("A", RATOP),),
    "divr": (("A", DIFFOP), ("B", DIFFOP)),
    "divl": (("A", DIFFOP), ("B", DIFFOP)),
    "gcdr": (("A", DIFFOP), ("B", DIFFOP)),
    "lcmr": (("A", DIFFOP), ("B", DIFFOP)),
    "lcml": (("A", DIFFOP), ("B", DIFFOP)),
}
_CALC_SIG = {
    "frechet": (("a", COEFFICIENT),),
    "euler": (("f", DENSITY),),
    "bracket": (("a", COEFFICIENT), ("b", COEFFICIENT)),
    "apply": (("L", RATOP), ("b", COEFFICIENT)),
}


class _UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _ArgParser:
    p = _ArgParser(prog="preham", description="exact checks for difference operators")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    p.add_argument("--lambda-route", action="store_true",
                   help="check compatibility directly on H + lambda*K")
    p.add_argument("--ansatz-degree", type=int, metavar="N")
    p.add_argument("--ansatz-window", type=int, metavar="W")
    p.add_argument("--gcd-threshold", type=int, metavar="T")
    p.add_argument("--time-limit", type=float, metavar="SECONDS")
    sub = p.add_subparsers(dest="group", required=True)
    for group, kinds in (("check", _CHECK_SIG), ("op", _OP_SIG), ("calc", _CALC_SIG)):
        g = sub.add_parser(group)
        g.add_argument("kind", choices=sorted(kinds))
        g.add_argument("operands", nargs="*")
    r = sub.add_parser("registry")
    r.add_argument("kind", choices=("list", "verify", "verify-all"))
    r.add_argument("operands", nargs="*")
    return p


def _parse_operands(ns, signature):
    sig = signature[ns.kind]
    texts = ns.operands
    # ham-rational accepts an optional explicit decomposition pair
    extra = 2 if ns.kind == "ham-rational" and len(texts) == 3 else 0
    if len(texts) != len(sig) + extra:
        names = " ".join(name for name, _ in sig)
        raise _UsageError(
            f"{ns.group} {ns.kind} takes operands: {names}"
            + (" [A B]" if ns.kind == "ham-rational" else ""))
    values = {}
    inputs = {}
    for (name, sort), text in zip(sig, texts):
        values[name] = parse(text, sort)
        inputs[name] = str(values[name])
    if extra:
        values["dec"] = (parse(texts[1], DIFFOP), parse(texts[2], DIFFOP))
        inputs["A"], inputs["B"] = map(str, values["dec"])
    return values, inputs


def _shape_decomposition(ns, values, inputs, slot):
    """A literal X*inv(Y) operand is kept as the working decomposition."""
    if "dec" in values:
        return values["dec"]
    sig = (_CHECK_SIG if ns.group == "check" else _CALC_SIG)[ns.kind]
    pos = [name for name, _ in sig].index(slot)
    dec = parse_right_fraction(ns.operands[pos])
    if dec is not None:
        inputs["A"], inputs["B"] = str(dec[0]), str(dec[1])
    return dec


def _run_check_cmd(ns, values, inputs):
    kind = ns.kind
    if kind == "preham":
        return preham_certificate(values["A"])
    if kind == "preham-pair":
        return preham_pair_check(values["A"], values["B"],
                                 lambda_route=ns.lambda_route)
    if kind == "ham":
        v = ham_check_direct(values["H"])
        v2 = ham_check_thm2(values["H"])
        if v.status != v2.status:
            raise AssertionError(
                f"internal: Hamiltonian routes disagree "
                f"({v.status} vs {v2.status})")
        return v
    if kind == "ham-rational":
        dec = _shape_decomposition(ns, values, inputs, "H")
        return ham_check_rational(values["H"], decomposition=dec)
    if kind == "compat":
        return compat_check(values["H"], values["K"],
                            lambda_route=ns.lambda_route)
    if kind == "skew":
        return skew_check(values["L"])
    if kind == "symmetry":
        return symmetry_check(values["f"], values["g"])
    if kind == "recursion":
        return recursion_check(values["R"], values["f"])
    return invariance_check(values["H"], values["f"])


def _run_op_cmd(ns, values):
    kind = ns.kind
    A = values["A"]
    if kind == "mul":
        return A * values["B"]
    if kind == "add":
        return A + values["B"]
    if kind == "adjoint":
        return A.adjoint()
    if kind == "normalize":
        return A
    B = values["B"]
    if kind == "divr":
        q, r = right_divide(A, B)
        return {"quotient": q, "remainder": r}
    if kind == "divl":
        q, r = left_divide(A, B)
        return {"quotient": q, "remainder": r}
    if kind == "gcdr":
        return right_gcd(A, B)
    if kind == "lcmr":
        return right_lcm(A, B)
    return left_lcm(A, B)


def _run_calc_cmd(ns, values, inputs):
    kind = ns.kind
    if kind == "frechet":
        return frechet_elem(values["a"])
    if kind == "euler":
        return euler_operator(values["f"])
    if kind == "bracket":
        return lie_bracket(values["a"], values["b"])
    dec = _shape_decomposition(ns, values, inputs, "L")
    return apply_rop(values["L"], values["b"], decomposition=dec,
                     ansatz_degree=ns.ansatz_degree,
                     ansatz_window=ns.ansatz_window)


def _registry_cmd(ns, fmt, t0) -> int:
    if ns.kind == "list":
        for name in registry.names():
            print(name)
        return 0
    if ns.kind == "verify":
        if len(ns.operands) != 1:
            raise _UsageError("registry verify takes exactly one entry name")
        name = ns.operands[0]
        if name not in registry.names():
            raise _UsageError(
                f"unknown entry {name!r}; have: {', '.join(registry.names())}")
        reports = [registry.verify(registry.load(name))]
    else:
        if ns.operands:
            raise _UsageError("registry verify-all takes no operands")
        reports = registry.verify_all()
    ms = int((time.monotonic() - t0) * 1000)
    out = emit_registry(reports, format=fmt,
                        command=f"registry {ns.kind}", wall_time_ms=ms)
    sys.stdout.buffer.write(out)
    if all(r.ok for r in reports):
        return 0
    bad = [c for r in reports for c in r.results if not c.ok]
    if bad and all(c.actual.startswith("Inconclusive") for c in bad):
        return 2
    return 1


def main(argv=None) -> int:
    t0 = time.monotonic()
    try:
        ns = _build_parser().parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        print(_GRAMMAR, file=sys.stderr)
        return 3
    command = f"{ns.group} {ns.kind}"
    try:
        with config.limits(gcd_threshold=ns.gcd_threshold,
                           time_limit=ns.time_limit):
            if ns.group == "registry":
                return _registry_cmd(ns, ns.format, t0)
            sig = {"check": _CHECK_SIG, "op": _OP_SIG, "calc": _CALC_SIG}[ns.group]
            values, inputs = _parse_operands(ns, sig)
            try:
                if ns.group == "check":
                    result = _run_check_cmd(ns, values, inputs)
                elif ns.group == "op":
                    result = _run_op_cmd(ns, values)
                else:
                    result = _run_calc_cmd(ns, values, inputs)
            except TimeLimitExceeded:
                result = Verdict.inconclusive({"time_limit": ns.time_limit})
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        print(_GRAMMAR, file=sys.stderr)
        return 3
    except (ParseError, SortError, DivisionByZero, PreconditionFailed) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    ms = int((time.monotonic() - t0) * 1000)
    if isinstance(result, Verdict):
        out = emit_report(result, format=ns.format, command=command,
                          inputs=inputs, wall_time_ms=ms)
        code = _EXIT[result.status]
    else:
        out = emit_value(result, format=ns.format, command=command,
                         inputs=inputs, wall_time_ms=ms)
        code = 0
    sys.stdout.buffer.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
