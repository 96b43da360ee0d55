"""Verdict and value reports: human text and a stable structured form.

The structured form is a single JSON object with the fields command,
inputs, status, certificate, residual, bounds, and wall_time_ms.  All
mathematical values are rendered through their canonical printers and
keys are emitted sorted, so the bytes depend only on the inputs; the
caller measures elapsed time and passes it in explicitly.
"""
import json

from .structures import OmegaForm

HUMAN = "human"
STRUCTURED = "structured"
FORMATS = (HUMAN, STRUCTURED)


def _omega_obj(form: OmegaForm) -> dict:
    return {f"({n},{m})": str(v) for (n, m), v in form.c.items()}


def _certificate_obj(cert):
    if cert is None:
        return None
    if isinstance(cert, OmegaForm):
        return _omega_obj(cert)
    if isinstance(cert, tuple) and all(isinstance(c, OmegaForm) for c in cert):
        return dict(zip(("omega_A", "omega_B"), map(_omega_obj, cert)))
    return str(cert)


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, OmegaForm):
        return _omega_obj(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _omega_lines(form: OmegaForm, indent: str):
    if not form.c:
        return [f"{indent}0 (empty form)"]
    items = sorted(form.c.items(), reverse=True)
    return [f"{indent}({n},{m}): {v}" for (n, m), v in items]


def emit_report(verdict, format: str = HUMAN, command: str = "",
                inputs=None, wall_time_ms: int = 0) -> bytes:
    """Render a check verdict; ``inputs`` maps names to printed values."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}")
    inputs = {k: str(v) for k, v in (inputs or {}).items()}
    if format == STRUCTURED:
        obj = {
            "command": command,
            "inputs": inputs,
            "status": verdict.status,
            "certificate": _certificate_obj(verdict.certificate),
            "residual": None if verdict.residual is None else str(verdict.residual),
            "bounds": _jsonable(verdict.diagnostics),
            "wall_time_ms": wall_time_ms,
        }
        if verdict.payload is not None:
            obj["result"] = str(verdict.payload)
        return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()

    lines = [f"{command}: {verdict.status}" if command else verdict.status]
    for name, text in inputs.items():
        lines.append(f"  input {name} = {text}")
    cert = verdict.certificate
    if isinstance(cert, OmegaForm):
        lines.append("  certificate omega:")
        lines.extend(_omega_lines(cert, "    "))
    elif isinstance(cert, tuple) and all(isinstance(c, OmegaForm) for c in cert):
        for label, form in zip(("omega_A", "omega_B"), cert):
            lines.append(f"  certificate {label}:")
            lines.extend(_omega_lines(form, "    "))
    elif cert is not None:
        lines.append(f"  certificate: {cert}")
    if verdict.residual is not None:
        lines.append(f"  residual: {verdict.residual}")
    for key in sorted(verdict.diagnostics):
        lines.append(f"  {key}: {_plain(verdict.diagnostics[key])}")
    if verdict.payload is not None:
        lines.append(f"  result: {verdict.payload}")
    lines.append(f"  wall time: {wall_time_ms} ms")
    return ("\n".join(lines) + "\n").encode()


def _plain(x):
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(str(v) for v in x) + ")"
    return x


def emit_value(result, format: str = HUMAN, command: str = "",
               inputs=None, wall_time_ms: int = 0) -> bytes:
    """Render an operator/element computation that is not a verdict.

    ``result`` is a printable value or a dict of named printable parts
    (e.g. quotient and remainder of a division).
    """
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}")
    inputs = {k: str(v) for k, v in (inputs or {}).items()}
    if format == STRUCTURED:
        obj = {
            "command": command,
            "inputs": inputs,
            "result": ({k: str(v) for k, v in result.items()}
                       if isinstance(result, dict) else str(result)),
            "wall_time_ms": wall_time_ms,
        }
        return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()
    lines = [f"{command}:" if command else "result:"]
    for name, text in inputs.items():
        lines.append(f"  input {name} = {text}")
    if isinstance(result, dict):
        for k, v in result.items():
            lines.append(f"  {k}: {v}")
    else:
        lines.append(f"  result: {result}")
    lines.append(f"  wall time: {wall_time_ms} ms")
    return ("\n".join(lines) + "\n").encode()


def emit_registry(reports, format: str = HUMAN, command: str = "",
                  wall_time_ms: int = 0) -> bytes:
    """Render registry verification reports in entry order."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}")
    if format == STRUCTURED:
        obj = {
            "command": command,
            "entries": [
                {
                    "name": r.name,
                    "ok": r.ok,
                    "results": [
                        {"label": c.label, "expected": c.expected,
                         "actual": c.actual, "ok": c.ok}
                        for c in r.results
                    ],
                }
                for r in reports
            ],
            "wall_time_ms": wall_time_ms,
        }
        return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()
    lines = [f"{command}:" if command else "registry:"]
    for r in reports:
        lines.append(f"  {r.name}: {'ok' if r.ok else 'FAILED'}")
        for c in r.results:
            lines.append(f"    {c}")
    lines.append(f"  wall time: {wall_time_ms} ms")
    return ("\n".join(lines) + "\n").encode()
