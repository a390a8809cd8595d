"""Command-line entry points.

One invocation produces exactly one artifact: a CSV table or a JSON
summary.  Every artifact starts with a metadata record carrying the
sha256 of the resolved configuration and the package/library versions,
and all floats are written with 17 significant digits, so a rerun of
the same command reproduces the file byte for byte.

Commands can be driven by flags or by ``run config.json`` with a JSON
object holding ``"command"`` plus the same keys the flags would set;
unknown keys are rejected by name.  Exit codes: 0 on success, 2 on a
validation problem, 3 when a computation fails numerically.
"""

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .bandop import build_truncation, trace_table, variance_bound, variance_moment
from .errors import (
    CharpolyOverflow,
    ConfigError,
    ContinuationError,
    NumericalFailure,
    OracleScaleError,
    SchemeError,
)
from .freeprob import (
    curve_hermite,
    curve_laguerre,
    curve_moments,
    free_add,
    free_mul,
    stieltjes_density,
)
from .measures import (
    ArcsineMixture,
    AtomicMeasure,
    MarchenkoPasturLaw,
    SemicircleLaw,
    kva_moment,
)
from .mop import mop_scheme
from .recurrence import classical_scheme, kva_functions
from .sampler import MatrixModelSpec, mc_moments, realize_diagonal
from .zeros import reality_check, spectrum, zero_moments

__all__ = ["main"]

_CLASSICAL = ("gue", "wishart", "jacobi", "charlier", "meixner")
_MOP_KINDS = ("multiple-hermite", "multiple-laguerre")
_CURVE_KINDS = ("hermite", "laguerre")
_MODELS = ("gue", "wishart", "gue_source", "wishart_cov")


# ---------------------------------------------------------------------------
# config plumbing


def _require(config, key):
    if key not in config:
        raise ConfigError(f"missing key {key!r}")
    return config[key]


def _as_int(value, key):
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise ConfigError(f"{key}: expected an integer, got {value!r}")
    try:
        out = int(str(value), 10) if isinstance(value, str) else int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None
    if isinstance(value, float) and value != out:
        raise ConfigError(f"{key}: expected an integer, got {value!r}")
    return out


def _as_float(value, key):
    try:
        return float(Fraction(value) if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ConfigError(f"{key}: expected a number, got {value!r}") from None


def _as_number(value, key):
    """Exact-friendly scalar: strings parse as fractions/decimals."""
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{key}: expected a number, got {value!r}") from None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return value
    raise ConfigError(f"{key}: expected a number, got {value!r}")


def _split(value, key):
    if isinstance(value, str):
        parts = [p for p in value.split(",") if p.strip() != ""]
    elif isinstance(value, (list, tuple)):
        parts = list(value)
    else:
        raise ConfigError(f"{key}: expected a comma list or array, got {value!r}")
    if not parts:
        raise ConfigError(f"{key}: empty list")
    return parts


def _int_list(value, key):
    return [_as_int(p, key) for p in _split(value, key)]


def _number_list(value, key):
    return [_as_number(p, key) for p in _split(value, key)]


def _float_list(value, key):
    return [_as_float(p, key) for p in _split(value, key)]


def _config_sha(config) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _meta(command, config) -> dict:
    return {
        "command": command,
        "config_sha256": _config_sha(config),
        "versions": {
            "bandedzeros": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
        },
    }


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.17g" % float(value)


def _write_csv(path, meta, columns, rows):
    lines = ["# meta " + json.dumps(meta, sort_keys=True, separators=(",", ":"))]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def _write_json(path, payload):
    Path(path).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _scheme_from(config):
    """Recurrence scheme from either classical or multi-index keys."""
    if "scheme" in config and "kind" in config:
        raise ConfigError("give either scheme or kind, not both")
    if "scheme" in config:
        name = config["scheme"]
        if name not in _CLASSICAL:
            raise ConfigError(f"scheme: unknown ensemble {name!r}")
        params = {}
        for key in ("alpha", "beta"):
            if config.get(key) is not None:
                params[key] = _as_float(config[key], key)
        try:
            return classical_scheme(name, **params)
        except SchemeError as exc:
            raise ConfigError(str(exc)) from None
    if "kind" in config:
        return _mop_scheme_from(config)
    raise ConfigError("missing key 'scheme' (or 'kind')")


def _mop_scheme_from(config):
    kind = _require(config, "kind")
    if kind not in _MOP_KINDS:
        raise ConfigError(f"kind: unknown multi-index kind {kind!r}")
    a = _number_list(_require(config, "a"), "a")
    q = _number_list(_require(config, "q"), "q")
    alpha = config.get("alpha")
    if alpha is not None:
        alpha = _as_float(alpha, "alpha")
    try:
        return mop_scheme(kind, a=a, q=q, alpha=alpha)
    except SchemeError as exc:
        raise ConfigError(str(exc)) from None


def _single_n(config):
    ns = _int_list(_require(config, "n"), "n")
    if len(ns) != 1:
        raise ConfigError("n: this command takes a single truncation rank")
    if ns[0] < 1:
        raise ConfigError(f"n: need a positive rank, got {ns[0]}")
    return ns[0]


def _sweep_ns(config):
    ns = _int_list(_require(config, "n"), "n")
    if any(n < 1 for n in ns):
        raise ConfigError("n: ranks must be positive")
    if list(ns) != sorted(set(ns)):
        raise ConfigError("n: sweep ranks must be strictly ascending")
    return ns


def _moment_order(config, default=None):
    raw = config.get("moments", default)
    if raw is None:
        raise ConfigError("missing key 'moments'")
    order = _as_int(raw, "moments")
    if order < 0:
        raise ConfigError(f"moments: need a nonnegative order, got {order}")
    return order


def _out_path(config, command, ext):
    return config.get("out") or command.replace("-", "_") + "." + ext


def _loglog_slope(ns, values):
    """Least-squares slope of log(value) against log(N); nan if fewer
    than two positive entries survive."""
    pts = [(n, v) for n, v in zip(ns, values) if v > 0]
    if len(pts) < 2:
        return float("nan")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


_TRACE_COLUMNS = (
    "N",
    "ell",
    "mean",
    "zero_side",
    "gap",
    "gap_bound",
    "variance",
    "variance_bound",
)


def _ell0_row(N):
    # Length-zero paths cannot leave the starting site, so every ell = 0
    # statistic is pinned: both traces are N/N and nothing crosses the
    # boundary.
    return (N, 0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_traces(config, meta):
    scheme = _scheme_from(config)
    ns = _sweep_ns(config)
    order = _moment_order(config)
    rows = []
    for n in ns:
        rows.append(_ell0_row(n))
        rows.extend(trace_table(scheme, n, order))
    out = _out_path(config, "traces", "csv")
    _write_csv(out, meta, _TRACE_COLUMNS, rows)
    return out


def _zero_summary(config, meta, scheme, stem):
    n = _single_n(config)
    order = _moment_order(config)
    form = config.get("format", "csv")
    if form not in ("csv", "json"):
        raise ConfigError(f"format: expected csv or json, got {form!r}")
    measure = spectrum(build_truncation(scheme, n, 0))
    if form == "csv":
        rows = [
            (idx, z.real, z.imag) for idx, z in enumerate(measure.points)
        ]
        out = config.get("out") or stem + ".csv"
        _write_csv(out, meta, ("index", "re", "im"), rows)
        return out
    moments, residuals = zero_moments(measure, order)
    payload = {
        "meta": meta,
        "N": n,
        "moments": moments.floats(),
        "imag_residuals": residuals,
        "max_imag": float(np.max(np.abs(measure.points.imag))),
        "real": bool(reality_check(measure)[0]),
    }
    out = config.get("out") or stem + ".json"
    _write_json(out, payload)
    return out


def _cmd_zeros(config, meta):
    return _zero_summary(config, meta, _scheme_from(config), "zeros")


def _cmd_mop_zeros(config, meta):
    return _zero_summary(config, meta, _mop_scheme_from(config), "mop_zeros")


def _cmd_gap_sweep(config, meta):
    scheme = _scheme_from(config)
    ns = _sweep_ns(config)
    order = _moment_order(config)
    table = {n: dict((row[1], row) for row in trace_table(scheme, n, order)) for n in ns}
    rows = []
    for ell in range(order + 1):
        if ell == 0:
            gaps = [0.0] * len(ns)
            slope = _loglog_slope(ns, gaps)
            rows.extend((n, 0, 1.0, 1.0, 0.0, 0.0, slope) for n in ns)
            continue
        gaps = [table[n][ell][4] for n in ns]
        slope = _loglog_slope(ns, gaps)
        for n in ns:
            _, _, mean, zero, gap, bound, _, _ = table[n][ell]
            rows.append((n, ell, mean, zero, gap, bound, slope))
    out = _out_path(config, "gap-sweep", "csv")
    _write_csv(
        out,
        meta,
        ("N", "ell", "mean", "zero_side", "gap", "gap_bound", "slope"),
        rows,
    )
    return out


def _cmd_variance_sweep(config, meta):
    scheme = _scheme_from(config)
    ns = _sweep_ns(config)
    order = _moment_order(config)
    rows = []
    for ell in range(order + 1):
        if ell == 0:
            variances = [0.0] * len(ns)
            bounds = [0.0] * len(ns)
        else:
            variances = [variance_moment(scheme, n, ell) for n in ns]
            bounds = [variance_bound(scheme, n, ell) for n in ns]
        slope = _loglog_slope(ns, variances)
        rows.extend(
            (n, ell, v, b, slope) for n, v, b in zip(ns, variances, bounds)
        )
    out = _out_path(config, "variance-sweep", "csv")
    _write_csv(
        out, meta, ("N", "ell", "variance", "variance_bound", "slope"), rows
    )
    return out


def _cmd_kva(config, meta):
    name = _require(config, "scheme")
    if name not in _CLASSICAL:
        raise ConfigError(f"scheme: unknown ensemble {name!r}")
    params = {}
    for key in ("alpha", "beta"):
        if config.get(key) is not None:
            params[key] = _as_float(config[key], key)
    try:
        a_fn, b_fn = kva_functions(name, **params)
    except SchemeError as exc:
        raise ConfigError(str(exc)) from None
    quad_order = _as_int(config.get("order", 200), "order")
    if quad_order < 1:
        raise ConfigError(f"order: need a positive quadrature order, got {quad_order}")
    mixture = ArcsineMixture(a_fn, b_fn, order=quad_order)
    if config.get("density") is not None:
        xs = _float_list(config["density"], "density")
        rows = [(x, mixture.density(x)) for x in xs]
        out = _out_path(config, "kva", "csv")
        _write_csv(out, meta, ("x", "density"), rows)
        return out
    order = _moment_order(config)
    rows = [(ell, kva_moment(mixture, ell)) for ell in range(order + 1)]
    out = _out_path(config, "kva", "csv")
    _write_csv(out, meta, ("ell", "moment"), rows)
    return out


def _parse_law(text, key):
    """Measure from a compact spec: sc | mp:RATE | point:X | atoms:X@W,...

    Numbers may be fractions ("1/2") and are kept exact.
    """
    if not isinstance(text, str):
        raise ConfigError(f"{key}: expected a law string, got {text!r}")
    head, _, rest = text.partition(":")
    try:
        if head == "sc" and not rest:
            return SemicircleLaw()
        if head == "mp":
            return MarchenkoPasturLaw(Fraction(rest))
        if head == "point":
            return AtomicMeasure([(Fraction(rest), Fraction(1))])
        if head == "atoms":
            atoms = []
            for piece in rest.split(","):
                loc, sep, weight = piece.partition("@")
                if not sep:
                    raise ValueError(piece)
                atoms.append((Fraction(loc), Fraction(weight)))
            return AtomicMeasure(atoms)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{key}: malformed law {text!r} ({exc})") from None
    raise ConfigError(f"{key}: unknown law {text!r} (use sc, mp:RATE, point:X, atoms:X@W,...)")


def _cmd_free_conv(config, meta):
    op = _require(config, "op")
    if op not in ("add", "mul"):
        raise ConfigError(f"op: expected add or mul, got {op!r}")
    mu = _parse_law(_require(config, "mu"), "mu")
    nu = _parse_law(_require(config, "nu"), "nu")
    order = _moment_order(config)
    convolve = free_add if op == "add" else free_mul
    moments = convolve(mu, nu, order)
    payload = {
        "meta": meta,
        "op": op,
        "moments": moments.floats(),
    }
    if all(isinstance(v, (int, Fraction)) for v in moments.values):
        payload["moments_exact"] = [str(v) for v in moments.values]
    out = _out_path(config, "free-conv", "json")
    _write_json(out, payload)
    return out


def _curve_from(config):
    kind = _require(config, "kind")
    q = _number_list(_require(config, "q"), "q")
    a = _number_list(_require(config, "a"), "a")
    try:
        if kind == "hermite":
            if config.get("alpha") is not None:
                raise ConfigError("alpha: the hermite curve takes no alpha")
            return curve_hermite(q, a)
        if kind == "laguerre":
            alpha = _as_number(config.get("alpha", 0), "alpha")
            return curve_laguerre(q, a, alpha)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    raise ConfigError(f"kind: expected hermite or laguerre, got {kind!r}")


def _cmd_curve(config, meta):
    curve = _curve_from(config)
    if config.get("density") is not None:
        xs = _float_list(config["density"], "density")
        eps = _as_float(config.get("eps", 1e-6), "eps")
        if eps <= 0:
            raise ConfigError(f"eps: need a positive offset, got {eps}")
        richardson = bool(config.get("richardson", False))
        rows = [
            (x, stieltjes_density(curve, x, eps=eps, richardson=richardson))
            for x in xs
        ]
        out = _out_path(config, "curve", "csv")
        _write_csv(out, meta, ("x", "density"), rows)
        return out
    payload = {
        "meta": meta,
        "kind": config["kind"],
        "deg_w": curve.deg_w,
        "radius_hint": float(curve.radius_hint),
        "table": [[float(c) for c in row] for row in curve.table],
    }
    if config.get("moments") is not None:
        order = _moment_order(config)
        payload["moments"] = curve_moments(curve, order).floats()
    out = _out_path(config, "curve", "json")
    _write_json(out, payload)
    return out


def _cmd_sample(config, meta):
    model = _require(config, "model")
    if model not in _MODELS:
        raise ConfigError(f"model: unknown matrix model {model!r}")
    n = _as_int(_require(config, "n"), "n")
    if n < 1:
        raise ConfigError(f"n: need a positive size, got {n}")
    alpha = _as_float(config.get("alpha", 0.0), "alpha")
    source = None
    if model in ("gue_source", "wishart_cov"):
        ratios = _number_list(_require(config, "ratios"), "ratios")
        atoms = _float_list(_require(config, "atoms"), "atoms")
        if len(ratios) != len(atoms):
            raise ConfigError("atoms: need one location per ratio")
        source = realize_diagonal(ratios, atoms, n)
    elif "ratios" in config or "atoms" in config:
        raise ConfigError(f"ratios: model {model!r} takes no source diagonal")
    order = _moment_order(config)
    samples = _as_int(_require(config, "samples"), "samples")
    seed = _as_int(config.get("seed", 0), "seed")
    spec = MatrixModelSpec(kind=model, N=n, alpha=alpha, source=source)
    mean, var, se = mc_moments(spec, order, samples, seed)
    payload = {
        "meta": meta,
        "model": model,
        "N": n,
        "samples": samples,
        "seed": seed,
        "mean": mean.floats(),
        "var": [float(v) for v in var],
        "se": [float(s) for s in se],
    }
    out = _out_path(config, "sample", "json")
    _write_json(out, payload)
    return out


# ---------------------------------------------------------------------------
# dispatch

_HANDLERS = {
    "traces": _cmd_traces,
    "zeros": _cmd_zeros,
    "gap-sweep": _cmd_gap_sweep,
    "variance-sweep": _cmd_variance_sweep,
    "kva": _cmd_kva,
    "mop-zeros": _cmd_mop_zeros,
    "free-conv": _cmd_free_conv,
    "curve": _cmd_curve,
    "sample": _cmd_sample,
}

_ALLOWED_KEYS = {
    "traces": {"scheme", "alpha", "beta", "kind", "q", "a", "n", "moments", "out"},
    "zeros": {"scheme", "alpha", "beta", "kind", "q", "a", "n", "moments", "format", "out"},
    "gap-sweep": {"scheme", "alpha", "beta", "kind", "q", "a", "n", "moments", "out"},
    "variance-sweep": {"scheme", "alpha", "beta", "kind", "q", "a", "n", "moments", "out"},
    "kva": {"scheme", "alpha", "beta", "moments", "order", "density", "out"},
    "mop-zeros": {"kind", "q", "a", "alpha", "n", "moments", "format", "out"},
    "free-conv": {"op", "mu", "nu", "moments", "out"},
    "curve": {"kind", "q", "a", "alpha", "moments", "density", "eps", "richardson", "out"},
    "sample": {"model", "n", "alpha", "ratios", "atoms", "samples", "seed", "moments", "out"},
}


def _run_command(command, config) -> str:
    extra = sorted(set(config) - _ALLOWED_KEYS[command])
    if extra:
        raise ConfigError(f"unknown key {extra[0]!r} for command {command!r}")
    meta = _meta(command, config)
    return _HANDLERS[command](config, meta)


def _load_config(path) -> tuple:
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    try:
        config = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object")
    if "command" not in config:
        raise ConfigError("missing key 'command'")
    command = config.pop("command")
    if command not in _HANDLERS:
        raise ConfigError(f"command: unknown command {command!r}")
    return command, config


# ---------------------------------------------------------------------------
# argument parsing


def _add_scheme_flags(sub, mop=True):
    sub.add_argument("--scheme", choices=_CLASSICAL, help="classical ensemble")
    sub.add_argument("--alpha", help="ensemble parameter, where applicable")
    sub.add_argument("--beta", help="second ensemble parameter (jacobi, meixner)")
    if mop:
        sub.add_argument("--kind", choices=_MOP_KINDS, help="multi-index family")
        sub.add_argument("--q", help="comma list of ratios, e.g. 1/2,1/2")
        sub.add_argument("--a", help="comma list of locations, e.g. 1,-1")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandedzeros",
        description="Trace statistics and zero laws of banded recurrence operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("traces", help="moment/gap/variance table over N")
    _add_scheme_flags(p)
    p.add_argument("--n", required=True, help="truncation rank(s), comma list")
    p.add_argument("--moments", required=True, help="highest moment order")
    p.add_argument("--out", help="output CSV path")

    p = sub.add_parser("zeros", help="zeros of the averaged characteristic polynomial")
    _add_scheme_flags(p)
    p.add_argument("--n", required=True, help="truncation rank")
    p.add_argument("--moments", required=True, help="highest moment order")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path")

    for name in ("gap-sweep", "variance-sweep"):
        p = sub.add_parser(name, help=f"{name.split('-')[0]} decay over an N sweep")
        _add_scheme_flags(p)
        p.add_argument("--n", required=True, help="ascending rank list, e.g. 25,50,100")
        p.add_argument("--moments", required=True, help="highest moment order")
        p.add_argument("--out", help="output CSV path")

    p = sub.add_parser("kva", help="limiting zero law from coefficient profiles")
    _add_scheme_flags(p, mop=False)
    p.add_argument("--moments", help="highest moment order")
    p.add_argument("--order", help="quadrature order for the profile integral")
    p.add_argument("--density", help="evaluate the density on these x values instead")
    p.add_argument("--out", help="output CSV path")

    p = sub.add_parser("mop-zeros", help="zeros of a multi-index family")
    p.add_argument("--kind", required=True, choices=_MOP_KINDS)
    p.add_argument("--q", required=True, help="comma list of ratios")
    p.add_argument("--a", required=True, help="comma list of locations")
    p.add_argument("--alpha", help="exponent parameter (multiple-laguerre)")
    p.add_argument("--n", required=True, help="truncation rank")
    p.add_argument("--moments", required=True, help="highest moment order")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path")

    p = sub.add_parser("free-conv", help="free additive/multiplicative convolution")
    p.add_argument("--op", required=True, choices=("add", "mul"))
    p.add_argument("--mu", required=True, help="law: sc | mp:RATE | point:X | atoms:X@W,...")
    p.add_argument("--nu", required=True, help="law: sc | mp:RATE | point:X | atoms:X@W,...")
    p.add_argument("--moments", required=True, help="highest moment order")
    p.add_argument("--out", help="output JSON path")

    p = sub.add_parser("curve", help="algebraic spectral curve: table, moments, density")
    p.add_argument("--kind", required=True, choices=_CURVE_KINDS)
    p.add_argument("--q", required=True, help="comma list of ratios")
    p.add_argument("--a", required=True, help="comma list of locations")
    p.add_argument("--alpha", help="rate parameter (laguerre)")
    p.add_argument("--moments", help="also tabulate contour moments to this order")
    p.add_argument("--density", help="evaluate the density on these x values (CSV mode)")
    p.add_argument("--eps", help="imaginary offset for density evaluation")
    p.add_argument("--richardson", action="store_true", help="extrapolate eps -> 0")
    p.add_argument("--out", help="output path")

    p = sub.add_parser("sample", help="Monte-Carlo moments of a random matrix model")
    p.add_argument("--model", required=True, choices=_MODELS)
    p.add_argument("--n", required=True, help="matrix size")
    p.add_argument("--alpha", help="aspect offset (wishart models)")
    p.add_argument("--ratios", help="source multiplicity ratios (source models)")
    p.add_argument("--atoms", help="source diagonal values (source models)")
    p.add_argument("--samples", required=True, help="number of independent samples")
    p.add_argument("--seed", help="base seed (default 0)")
    p.add_argument("--moments", required=True, help="highest moment order")
    p.add_argument("--out", help="output JSON path")

    p = sub.add_parser("run", help="run a command described by a JSON config")
    p.add_argument("config", help="path to the JSON config")

    return parser


def _config_from_args(args) -> dict:
    skip = {"command", "config"}
    config = {}
    for key, value in vars(args).items():
        if key in skip or value is None:
            continue
        if key == "richardson" and value is False:
            continue
        config[key] = value
    return config


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            command, config = _load_config(args.config)
        else:
            command, config = args.command, _config_from_args(args)
        out = _run_command(command, config)
        print(out)
        return 0
    except (ConfigError, SchemeError, OracleScaleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericalFailure, ContinuationError, CharpolyOverflow) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
