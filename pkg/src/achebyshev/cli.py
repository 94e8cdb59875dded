"""Command-line front end.

Subcommands: ``eval``, ``envelope``, ``zeros``, ``limit-points``, ``salem``.
Output is CSV (header row, comma delimiter, 17 significant digits) or a JSON
object ``{"meta": ..., "rows": [...]}``.

Exit codes: 0 success, 2 invalid tuple or arguments, 3 degree cap exceeded,
4 input not Pisot, 5 root solver did not converge.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import __version__
from .core import ATuple, RealPolynomial, eval_T_A, eval_U_A, parse_numbers
from .envelope import envelope_eval, envelope_expansion_m_le_4, envelope_sq_monomial, envelope_sq_series
from .errors import DegreeCapError, InvalidTupleError, NotPisotError, RootFindingError
from .roots import all_zeros_T, all_zeros_U, limit_set_experiment, real_zeros_theta
from .salem import pisot_to_salem_sequence

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_NOT_PISOT, EXIT_SOLVER = 0, 2, 3, 4, 5

COMMANDS = ("eval", "envelope", "zeros", "limit-points", "salem")


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    command: str = ""
    a: list[float] | None = None
    p: list[float] | None = None
    n: list[int] | None = None
    n_range: list[int] | None = None
    k_range: list[int] | None = None
    grid: list[float] | None = None
    x: list[float] | None = None
    method: str = "theta"
    kind: str | None = None
    format: str = "csv"
    out: str | None = None
    tol: float = 1e-6
    figure: str | None = None

    def validate(self):
        if self.grid is not None:
            lo, hi, count = self.grid
            if count < 2 or int(count) != count or not lo < hi:
                raise ConfigError("grid needs lo < hi and an integer count >= 2")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if self.method not in ("theta", "wplane"):
            raise ConfigError("method must be theta or wplane")
        if self.tol <= 0:
            raise ConfigError("tol must be positive")

    def tuple(self) -> ATuple:
        if not self.a:
            raise ConfigError("--a is required")
        return ATuple(tuple(self.a))

    def points(self, default=(-1.0, 1.0, 1001)) -> np.ndarray:
        if self.x:
            return np.asarray(self.x, dtype=float)
        lo, hi, count = self.grid if self.grid is not None else default
        return np.linspace(lo, hi, int(count))

    def indices(self, default=None) -> list[int]:
        rng = self.n_range or self.k_range
        if rng:
            lo, hi = rng[0], rng[1]
            step = rng[2] if len(rng) > 2 else 1
            return list(range(lo, hi + 1, step))
        if self.n:
            return list(self.n)
        if default is None:
            raise ConfigError("an index (--n, --n-range or --k-range) is required")
        return list(default)


def _parse_range(text) -> list[int]:
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    parts = [int(v) for v in str(text).split(":")]
    if len(parts) not in (2, 3) or parts[0] > parts[1] or (len(parts) == 3 and parts[2] <= 0):
        raise ConfigError(f"range must be lo:hi[:step] with lo <= hi, got {text!r}")
    return parts


def _parse_grid(text) -> list[float]:
    if isinstance(text, (list, tuple)):
        parts = [float(v) for v in text]
    else:
        parts = [float(v) for v in str(text).split(":")]
    if len(parts) != 3:
        raise ConfigError(f"grid must be lo:hi:count, got {text!r}")
    return parts


def _parse_ints(text) -> list[int]:
    if isinstance(text, (int, float)):
        return [int(text)]
    return [int(v) for v in parse_numbers(text)]


_CONVERTERS = {
    "a": lambda v: list(parse_numbers(v)),
    "p": lambda v: list(parse_numbers(v)),
    "x": lambda v: list(parse_numbers(v)),
    "n": _parse_ints,
    "n_range": _parse_range,
    "k_range": _parse_range,
    "grid": _parse_grid,
    "tol": float,
}


def build_config(command: str, args: argparse.Namespace) -> JobConfig:
    values: dict = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            values.update(json.load(fh))
    for f in fields(JobConfig):
        v = getattr(args, f.name, None)
        if v is not None and f.name != "command":
            values[f.name] = v
    values["command"] = command
    unknown = set(values) - {f.name for f in fields(JobConfig)}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for key, conv in _CONVERTERS.items():
        if values.get(key) is not None:
            try:
                values[key] = conv(values[key])
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {exc}") from exc
    cfg = JobConfig(**values)
    cfg.validate()
    return cfg


def fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if np.isfinite(v) else None
    if isinstance(v, np.bool_):
        return bool(v)
    return v


def render(columns: list[str], rows: list[list], meta: dict, cfg: JobConfig, extra: dict | None = None) -> str:
    if cfg.format == "json":
        doc = {"meta": meta, "rows": [dict(zip(columns, r)) for r in rows]}
        if extra:
            doc.update(extra)
        return json.dumps(_jsonable(doc), indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([fmt(v) for v in r])
    return buf.getvalue()


def _meta(cfg: JobConfig, **more) -> dict:
    config = {k: v for k, v in asdict(cfg).items() if v is not None and k not in ("out", "figure")}
    return {"tool": "achebyshev", "version": __version__, "command": cfg.command, "config": config, **more}


def cmd_eval(cfg: JobConfig):
    A = cfg.tuple()
    n = cfg.indices()[0]
    xs = cfg.points()
    T = eval_T_A(A, n, xs)
    U = eval_U_A(A, n, xs)
    rows = [[float(x), float(t), float(u)] for x, t, u in zip(xs, np.atleast_1d(T), np.atleast_1d(U))]
    return ["x", "T", "U"], rows, _meta(cfg), None


def cmd_envelope(cfg: JobConfig):
    A = cfg.tuple()
    overlays = cfg.indices(default=())
    xs = cfg.points()
    series = envelope_sq_series(A)
    esq = series(xs)
    env = envelope_eval(A, xs)
    cols = ["x", "E_sq", "E", "neg_E"] + [f"T_{n}" for n in overlays]
    over = {n: eval_T_A(A, n, xs) for n in overlays}
    rows = []
    for i, x in enumerate(xs):
        rows.append([float(x), float(esq[i]), float(env[i]), 0.0 - float(env[i])]
                    + [float(over[n][i]) for n in overlays])
    mono = envelope_expansion_m_le_4(A) if A.m <= 4 else envelope_sq_monomial(A)
    meta = _meta(cfg, envelope_sq_chebyshev=list(series.coeffs),
                 envelope_sq_monomial=list(mono.coeffs),
                 envelope_sq_text=mono.format())
    if cfg.format == "csv":
        print(f"# E^2 Chebyshev coefficients (T_0..T_m): {', '.join(fmt(c) for c in series.coeffs)}",
              file=sys.stderr)
        print(f"# E^2 = {mono.format()}", file=sys.stderr)
    if cfg.figure:
        from .plotting import plot_envelope

        plot_envelope(xs, env, {f"T_{n}": over[n] for n in overlays}, cfg.figure,
                      title=f"A = {A}")
    return cols, rows, meta, None


def cmd_zeros(cfg: JobConfig):
    A = cfg.tuple()
    n = cfg.indices()[0]
    kind = (cfg.kind or "T").upper()
    if kind not in ("T", "U"):
        raise ConfigError("kind must be T or U for zeros")
    ev = eval_T_A if kind == "T" else eval_U_A
    if cfg.method == "theta":
        zs = np.asarray(real_zeros_theta(A, n, kind), dtype=complex)
    else:
        zs = (all_zeros_T if kind == "T" else all_zeros_U)(A, n).roots
    rows = []
    for z in sorted(zs, key=lambda v: (v.real, v.imag)):
        arg = float(z.real) if z.imag == 0 else complex(z)
        rows.append([float(z.real), float(z.imag), cfg.method, float(abs(ev(A, n, arg)))])
    if cfg.figure:
        from .plotting import plot_zeros

        plot_zeros(zs, cfg.figure, title=f"zeros of {kind}_{{{n},A}}, A = {A}")
    return ["re", "im", "method", "residual"], rows, _meta(cfg, kind=kind, n=n), None


def cmd_limit_points(cfg: JobConfig):
    A = cfg.tuple()
    ns = cfg.indices(default=(8, 16, 32, 64))
    kind = (cfg.kind or "both").upper()
    report = limit_set_experiment(A, ns, kind)
    d = report.as_dict()
    rows = []
    for fam in ("T", "U"):
        for r in d["distances"][fam]:
            rows.append([fam, "distance", r["n"], r["point"]["re"], r["point"]["im"], r["distance"]])
        for r in d["max_gap"][fam]:
            rows.append([fam, "max_gap", r["n"], "", "", r["gap"]])
    cols = ["family", "quantity", "n", "point_re", "point_im", "value"]
    return cols, rows, _meta(cfg, predicted=d["predicted"]), {"report": d}


def cmd_salem(cfg: JobConfig):
    if not cfg.p:
        raise ConfigError("--p is required")
    P = RealPolynomial.from_highest(cfg.p)
    kind = (cfg.kind or "S").upper()
    if kind not in ("R", "S"):
        raise ConfigError("kind must be R or S for salem")
    default = range(max(P.degree, 1), max(P.degree, 1) + 16)
    seq = pisot_to_salem_sequence(P, cfg.indices(default=default), kind, cfg.tol)
    from .salem import pisot_root

    q = pisot_root(P, cfg.tol)
    rows = [[s.index, s.tau, s.residual, s.census.outside, s.census.on_circle, s.census.inside,
             q, s.poly.format("w")] for s in seq]
    cols = ["index", "tau", "residual", "outside", "on_circle", "inside", "target", "poly"]
    if cfg.figure:
        from .plotting import plot_salem

        plot_salem([s.index for s in seq], [s.residual for s in seq], cfg.figure,
                   title=f"{kind} sequence for {P.format()}")
    return cols, rows, _meta(cfg, target=q, kind=kind), None


HANDLERS = {
    "eval": cmd_eval,
    "envelope": cmd_envelope,
    "zeros": cmd_zeros,
    "limit-points": cmd_limit_points,
    "salem": cmd_salem,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="achebyshev", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--a", help="tuple a0,...,am")
        sp.add_argument("--p", help="polynomial coefficients, highest degree first")
        sp.add_argument("--n", help="order, or comma list of orders")
        sp.add_argument("--n-range", dest="n_range", help="lo:hi[:step], inclusive")
        sp.add_argument("--k-range", dest="k_range", help="lo:hi[:step], inclusive")
        sp.add_argument("--grid", help="lo:hi:count")
        sp.add_argument("--x", help="explicit comma list of evaluation points")
        sp.add_argument("--method", choices=("theta", "wplane"))
        sp.add_argument("--kind")
        sp.add_argument("--format", choices=("csv", "json"))
        sp.add_argument("--out", help="output path (default: standard output)")
        sp.add_argument("--tol", type=float)
        sp.add_argument("--figure", help="also render a PNG figure to this path")
        sp.add_argument("--config", help="JSON job config; flags override its values")
    return parser


_VALUE_FLAGS = {"--a", "--p", "--n", "--n-range", "--k-range", "--grid", "--x", "--tol"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--grid -1:1:5`` as ``--grid=-1:1:5`` so argparse accepts it."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and re.match(r"-[\d.]", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        cfg = build_config(args.command, args)
        cols, rows, meta, extra = HANDLERS[args.command](cfg)
    except InvalidTupleError as exc:
        print(f"error: invalid tuple: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DegreeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotPisotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PISOT
    except RootFindingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    text = render(cols, rows, meta, cfg, extra)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
