"""Command-line front end.

Subcommands ``classify``, ``scan-boundary``, ``witness-curve`` and ``loophole``
read a JSON config (or, for ``classify``, a matrix file) and write CSV or JSON.

Exit codes: 0 success, 2 config/parse error, 3 numerical-invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Optional

import numpy as np

from . import states
from .core import DensityOperator, DimensionError, InvariantError, Ket, UnitaryOperator, as_dims
from .criteria import classify
from .linalg import hyperspherical_ket
from .scan import critical_etas, fmt, loophole_table, scan_boundary, witness_curves
from .witness import NonlinearSpec, WitnessSpec, bell_basis, computational_basis, make_functional, optimal_phi

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

CSV_HELP = """\
CSV columns:
  scan-boundary   b, p_abs, p_nppt_u, p_nppt_u1   (empty cell = no crossing in (0, 1])
  witness-curve   p, one column per curve name
  loophole        x_nl, one wup column per efficiency (header wup_eta=<eta>)
Numbers use '.' as decimal separator and 12 significant digits.
"""


class ConfigError(ValueError):
    pass


_ANGLE = re.compile(r"^\s*(?:([-+]?\d*\.?\d+)\s*\*?\s*)?pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def parse_number(value: Any, what: str = "value") -> float:
    """A JSON number or a string like ``"pi/3"``, ``"5*pi/6"``, ``"-pi"``."""
    if isinstance(value, bool):
        raise ConfigError(f"{what}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        s = value.strip()
        sign = 1.0
        if s.startswith("-") and "pi" in s and not re.match(r"^-\d", s):
            sign, s = -1.0, s[1:]
        m = _ANGLE.match(s)
        if m:
            coef = float(m.group(1)) if m.group(1) else 1.0
            div = float(m.group(2)) if m.group(2) else 1.0
            return sign * coef * np.pi / div
        try:
            return float(s)
        except ValueError:
            pass
    raise ConfigError(f"{what}: cannot parse {value!r} as a number")


def _get(cfg: dict, key: str, what: str = "config"):
    if key not in cfg:
        raise ConfigError(f"{what}: missing key {key!r}")
    return cfg[key]


def parse_grid(spec: Any, what: str) -> np.ndarray:
    """``{"start", "stop", "num"}`` or an explicit list of numbers."""
    if isinstance(spec, list):
        return np.array([parse_number(v, what) for v in spec])
    if not isinstance(spec, dict):
        raise ConfigError(f"{what}: expected a grid object or list")
    start = parse_number(_get(spec, "start", what), what)
    stop = parse_number(_get(spec, "stop", what), what)
    num = int(_get(spec, "num", what))
    if num < 1:
        raise ConfigError(f"{what}: num must be positive")
    return np.linspace(start, stop, num)


def parse_complex_vector(spec: dict, what: str) -> np.ndarray:
    re_part = np.array([parse_number(v, what) for v in _get(spec, "re", what)])
    im_part = np.array([parse_number(v, what) for v in spec.get("im", [0.0] * len(re_part))])
    if re_part.shape != im_part.shape:
        raise ConfigError(f"{what}: re and im lengths differ")
    return re_part + 1j * im_part


def parse_phase(spec: Any, what: str) -> complex:
    if spec is None:
        return 1.0
    if isinstance(spec, dict):
        z = parse_number(spec.get("re", 0.0), what) + 1j * parse_number(spec.get("im", 0.0), what)
    else:
        z = complex(parse_number(spec, what))
    if abs(abs(z) - 1.0) > 1e-12:
        z = z / abs(z)
    return z


def parse_unitary(spec: Any, dims, seed: Optional[int] = None) -> UnitaryOperator:
    if spec is None:
        return states.identity_unitary(dims.total)
    kind = _get(spec, "kind", "unitary")
    if kind == "identity":
        return states.identity_unitary(dims.total)
    if kind == "u_2q":
        return states.u_2q()
    if kind == "pauli":
        phi1 = parse_number(_get(spec, "phi1", "unitary"), "phi1")
        phi2 = parse_number(_get(spec, "phi2", "unitary"), "phi2")
        if not (0 <= phi1 <= np.pi and 0 <= phi2 <= 2 * np.pi):
            raise ConfigError(f"pauli angles out of range: phi1={phi1}, phi2={phi2}")
        if dims.total == 8:
            return states.u_pauli_2x4(phi1, phi2)
        if dims.total == 9:
            return states.u_pauli_3x3(phi1, phi2)
        raise ConfigError("pauli unitary needs a 2x4 or 3x3 family")
    if kind == "appendix":
        return states.u_appendix(dims.total)
    if kind == "random":
        from scipy.stats import unitary_group

        s = spec.get("seed", seed)
        return UnitaryOperator(unitary_group.rvs(dims.total, random_state=s))
    raise ConfigError(f"unknown unitary kind {kind!r}")


def make_family(cfg: dict):
    """``(p -> DensityOperator, dims)`` for the config's state family."""
    family = _get(cfg, "family")
    if family == "gen_werner":
        alpha = parse_number(_get(cfg, "alpha"), "alpha")
        phase = parse_number(cfg.get("phase", 0.0), "phase")
        return (lambda p: states.gen_werner(p, alpha, phase)), states.DIMS_2X2
    if family == "rho2":
        b = parse_number(_get(cfg, "b"), "b")
        if not 0 <= b <= 1:
            raise ConfigError(f"rho2 needs b in [0, 1], got {b}")
        return (lambda p: states.rho2(b, p)), states.DIMS_2X4
    if family == "rho3":
        b = parse_number(_get(cfg, "b"), "b")
        if not 1 <= b <= 4:
            raise ConfigError(f"rho3 needs b in [1, 4], got {b}")
        return (lambda p: states.rho3(b, p)), states.DIMS_3X3
    raise ConfigError(f"unknown family {family!r}")


def parse_ket(spec: Any, dims, what: str, family=None, unitary=None) -> Ket:
    """A ket from ``{"re", "im"}`` (normalized), ``{"angles"}``, ``{"index", "phase"}``
    or ``{"optimal_at": p}`` (most negative eigenvector at that family parameter)."""
    if not isinstance(spec, dict):
        raise ConfigError(f"{what}: expected an object")
    if "re" in spec:
        vec = parse_complex_vector(spec, what)
        if vec.size != dims.total:
            raise ConfigError(f"{what}: expected {dims.total} amplitudes, got {vec.size}")
        return Ket.normalized(vec, dims)
    if "angles" in spec:
        try:
            return hyperspherical_ket([parse_number(a, what) for a in spec["angles"]], dims)
        except ValueError as exc:
            raise ConfigError(f"{what}: {exc}") from exc
    if "index" in spec:
        k = Ket.basis(int(spec["index"]), dims)
        return Ket(k.amplitudes * parse_phase(spec.get("phase"), what), dims)
    if "optimal_at" in spec:
        if family is None or unitary is None:
            raise ConfigError(f"{what}: optimal_at needs a family and unitary")
        return optimal_phi(family(parse_number(spec["optimal_at"], what)), unitary)
    raise ConfigError(f"{what}: unrecognized ket specification")


def parse_basis(spec: Any, dims) -> tuple:
    if spec is None or spec == "computational":
        return computational_basis(dims)
    if spec == "bell":
        if dims.total != 4:
            raise ConfigError("bell basis needs 2x2 dims")
        return bell_basis()
    if isinstance(spec, dict) and "phase" in spec:
        return computational_basis(dims, phase=parse_phase(spec["phase"], "basis phase"))
    if isinstance(spec, list):
        return tuple(parse_ket(k, dims, "basis vector") for k in spec)
    raise ConfigError(f"unrecognized basis {spec!r}")


def build_curves(cfg: dict, family, dims, seed=None) -> dict:
    """Named functionals from ``curves`` entries; missing keys fall back to top-level defaults."""
    u_default = cfg.get("unitary")
    curves = cfg.get("curves") or [{"name": k, "functional": k} for k in cfg.get("functionals", ["linear", "F1", "F2"])]
    out = {}
    for entry in curves:
        kind = _get(entry, "functional", "curve")
        name = entry.get("name", kind)
        if name in out:
            raise ConfigError(f"duplicate curve name {name!r}")
        u = parse_unitary(entry.get("unitary", u_default), dims, seed)
        phi = parse_ket(_get({**cfg, **entry}, "phi", f"curve {name}"), dims, f"{name}.phi", family, u)
        base = WitnessSpec(u, phi)
        if kind == "linear":
            spec = base
        elif kind == "F1":
            spec = NonlinearSpec(base, psi=parse_ket(_get({**cfg, **entry}, "psi", f"curve {name}"), dims, "psi"))
        elif kind == "F2":
            spec = NonlinearSpec(base, basis=parse_basis({**cfg, **entry}.get("basis"), dims))
        else:
            raise ConfigError(f"unknown functional {kind!r}")
        out[name] = make_functional(kind, spec)
    return out


def _write_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(x) for x in row])
    return buf.getvalue()


def _round(x):
    return None if x is None else float(fmt(x))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    try:
        with open(args.matrix, encoding="utf-8") as fh:
            data = json.load(fh)
        dims = as_dims(args.dims if args.dims else _get(data, "dims", "matrix file"))
        re_part = np.array(_get(data, "re", "matrix file"), dtype=float)
        im_part = np.array(data.get("im", np.zeros_like(re_part)), dtype=float)
        if re_part.shape != im_part.shape:
            raise ConfigError("matrix file: re and im shapes differ")
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise ConfigError(f"cannot read matrix file {args.matrix}: {exc}") from exc
    rho = DensityOperator.from_matrix(re_part + 1j * im_part, dims)
    cls, report = classify(rho)
    payload = {
        "dims": [dims.dA, dims.dB],
        "class": cls.value,
        "absolutely_separable": report.absolutely_separable,
        "report": {k: (None if v is None else float(f"{v:.17g}")) for k, v in report.as_dict().items()},
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_scan_boundary(args, cfg: dict) -> int:
    family = _get(cfg, "family")
    if family not in ("rho2", "rho3"):
        raise ConfigError(f"scan-boundary supports rho2 and rho3, got {family!r}")
    dims = states.DIMS_2X4 if family == "rho2" else states.DIMS_3X3
    default_b = {"start": 0.0, "stop": 1.0, "num": 50} if family == "rho2" else {"start": 1.0, "stop": 4.0, "num": 50}
    b_values = parse_grid(cfg.get("b_grid", default_b), "b_grid")
    lo, hi = (0.0, 1.0) if family == "rho2" else (1.0, 4.0)
    if b_values.min() < lo or b_values.max() > hi:
        raise ConfigError(f"b_grid for {family} must lie in [{lo}, {hi}]")
    u = parse_unitary(_get(cfg, "unitary"), dims, args.seed)
    u1 = parse_unitary(cfg["unitary_u1"], dims, args.seed) if cfg.get("unitary_u1") else None
    p_tol = parse_number(cfg.get("p_tol", 1e-6), "p_tol")
    if p_tol <= 0:
        raise ConfigError("p_tol must be positive")
    rows = scan_boundary(family, b_values, u, u1, p_tol=p_tol, threads=args.threads)
    header = ["b", "p_abs", "p_nppt_u", "p_nppt_u1"]
    table = [(r.b, r.p_abs, r.p_nppt_u, r.p_nppt_u1) for r in rows]
    if args.format == "json":
        text = json.dumps({"columns": header, "rows": [[_round(x) for x in r] for r in table]}, indent=2) + "\n"
    else:
        text = _write_csv(header, table)
    _emit(text, args.out or cfg.get("out"))
    return EXIT_OK


def cmd_witness_curve(args, cfg: dict) -> int:
    family, dims = make_family(cfg)
    p_values = parse_grid(cfg.get("p_grid", {"start": 0.0, "stop": 1.0, "num": 101}), "p_grid")
    if p_values.min() < 0 or p_values.max() > 1:
        raise ConfigError("p_grid must lie in [0, 1]")
    functionals = build_curves(cfg, family, dims, args.seed)
    names, rows, thresholds = witness_curves(family, functionals, p_values, threads=args.threads)
    summary = {"thresholds": {k: _round(v) for k, v in thresholds.items()}}
    if args.format == "json":
        text = json.dumps({"columns": ["p", *names], "rows": [[_round(x) for x in r] for r in rows], **summary}, indent=2)
        _emit(text + "\n", args.out or cfg.get("out"))
    else:
        out = args.out or cfg.get("out")
        _emit(_write_csv(["p", *names], rows), out)
        (sys.stdout if out else sys.stderr).write(json.dumps(summary) + "\n")
    return EXIT_OK


def cmd_loophole(args, cfg: dict) -> int:
    c0 = parse_number(_get(cfg, "c0"), "c0")
    s_eff = parse_number(cfg.get("s_eff", 1.0), "s_eff")
    if s_eff <= 0:
        raise ConfigError("s_eff must be positive")
    etas = [parse_number(e, "etas") for e in _get(cfg, "etas")]
    if any(not 0 < e <= 1 for e in etas):
        raise ConfigError("efficiencies must lie in (0, 1]")
    x_values = parse_grid(cfg.get("x_grid", {"start": 0.0, "stop": 0.8, "num": 81}), "x_grid")
    if x_values.min() < 0:
        raise ConfigError("x_grid must be nonnegative")
    header = ["x_nl", *(f"wup_eta={fmt(e)}" for e in etas)]
    rows = loophole_table(etas, x_values, c0, s_eff)
    summary = {}
    crit = cfg.get("critical")
    if crit:
        xs = [parse_number(x, "critical.x_values") for x in _get(crit, "x_values", "critical")]
        assumed = parse_number(crit.get("assumed_measured", 0.0), "assumed_measured")
        summary = {"critical_eta": [{"x_nl": x, "eta": _round(v)} for x, v in critical_etas(xs, c0, s_eff, assumed).items()]}
    out = args.out or cfg.get("out")
    if args.format == "json":
        text = json.dumps({"columns": header, "rows": [[_round(x) for x in r] for r in rows], **summary}, indent=2)
        _emit(text + "\n", out)
    else:
        _emit(_write_csv(header, rows), out)
        if summary:
            (sys.stdout if out else sys.stderr).write(json.dumps(summary) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--threads", type=int, default=1, help="workers for grid evaluation")
    common.add_argument("--seed", type=int, default=None, help="seed for random unitaries")

    parser = argparse.ArgumentParser(
        prog="nonabsep",
        description="Absolute-PPT criteria, nonlinear witnesses and detector-loss thresholds.",
        epilog=CSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common], help="classify a density matrix file")
    p.add_argument("matrix", help='JSON file {"dims": [dA, dB], "re": [[...]], "im": [[...]]}')
    p.add_argument("--dims", type=int, nargs=2, metavar=("DA", "DB"))
    for name, text in [
        ("scan-boundary", "absolute-PPT and NPPT-after-U boundaries over a b grid"),
        ("witness-curve", "linear/F1/F2 witness values over a p grid"),
        ("loophole", "wup bound versus nonlinearity for several efficiencies"),
    ]:
        sub.add_parser(name, parents=[common], help=text, epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        if args.command == "classify":
            return cmd_classify(args)
        if not args.config:
            raise ConfigError(f"{args.command} requires --config")
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a JSON object")
        handler = {
            "scan-boundary": cmd_scan_boundary,
            "witness-curve": cmd_witness_curve,
            "loophole": cmd_loophole,
        }[args.command]
        return handler(args, cfg)
    except InvariantError as exc:
        print(f"nonabsep: invariant violation ({exc.quantity}): {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, DimensionError, ValueError, KeyError, TypeError) as exc:
        print(f"nonabsep: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
