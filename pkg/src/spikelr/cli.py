"""Command-line front end.

Verbs: envelope, power-figures, test, mc-critical, sup-sim, decay-probe,
simulate. All outputs are CSV or JSON with an embedded provenance block
(version, command line, seed, scale) and no timestamps, so a rerun of the
same command is byte-identical. Exit codes: 0 success, 2 configuration,
3 numeric failure, 4 I/O.
"""
from __future__ import annotations

import argparse
import json
import math
import shlex
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np
from scipy.special import logsumexp

from . import __version__
from .asymptotics import h_of_theta, lr_decay_probe
from .classical import clr_test, john_test, ledoit_wolf_test, tracy_widom_test
from .contour import log_lr_exact
from .eigio import read_eig_file, write_spk1
from .errors import (ConfigError, ContourGeometryError, DataFormatError,
                     DomainError, EigensolverError, FactorizationError,
                     InapplicableTestError, QuadratureError,
                     SaddleCollisionError)
from .power import (asymptotic_critical, capped_theta_grid, classical_power,
                    envelope, lr_power_curve, mc_exact_critical, simulate_sup,
                    wap_power_curve)
from .sampler import SpikedModel, eigen_sample_from_values, sample_eigs

_NUMERIC_ERRORS = (QuadratureError, SaddleCollisionError,
                   ContourGeometryError, FactorizationError, EigensolverError)

# desk scale keeps every verb interactive; paper scale restores the
# original experiment sizes
_SCALES = {
    "desk": {"draws": 100_000, "points": 500, "mc_reps": 500},
    "paper": {"draws": 500_000, "points": 1000, "mc_reps": 5000},
}

_TEST_CHOICES = ("john", "lw", "clr", "tw_lambda", "tw_mu", "lr_sup", "wap")


@dataclass
class RunConfig:
    """Resolved settings for one command, after merging flag, config-file,
    and default layers (flags win, then the file, then defaults)."""

    command: str
    c: float | None = None
    p: int | None = None
    n: int | None = None
    alpha: float = 0.05
    theta: str | None = None
    h: float | None = None
    grid: str | None = None
    reps: int | None = None
    draws: int | None = None
    seed: int = 0
    threads: int = 0
    scale: str = "desk"
    output_path: str | None = None
    format: str | None = None
    kind: str = "mu"
    tests: str | None = None
    data: str | None = None
    sigma2: float = 1.0
    n_list: str | None = None
    command_line: str = ""


# ---------------------------------------------------------------------------
# configuration plumbing

def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="JSON file with RunConfig fields")
    sub.add_argument("--c", type=float, default=None)
    sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--alpha", type=float, default=None)
    sub.add_argument("--theta", default=None,
                     help="theta value, or a:b:k for a grid of alternatives")
    sub.add_argument("--h", type=float, default=None)
    sub.add_argument("--grid", default=None, metavar="M:POINTS",
                     help="theta grid extent and point count")
    sub.add_argument("--reps", type=int, default=None)
    sub.add_argument("--draws", type=int, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads; 0 means all cores")
    sub.add_argument("--scale", choices=("desk", "paper"), default=None)
    sub.add_argument("--out", dest="output_path", default=None)
    sub.add_argument("--format", choices=("csv", "json", "spk1"), default=None)
    sub.add_argument("--kind", choices=("lambda", "mu"), default=None)
    sub.add_argument("--sigma2", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spikelr",
        description="Likelihood-ratio and classical tests of sphericity "
                    "against a single spike, with power analysis tooling.")
    parser.add_argument("--version", action="version",
                        version=f"spikelr {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
            ("envelope", "tabulate the two power envelopes"),
            ("power-figures", "emit the power-curve CSV bundle"),
            ("test", "run sphericity tests on spectra"),
            ("mc-critical", "Monte Carlo critical value for an exact test"),
            ("sup-sim", "simulate the limiting sup distribution"),
            ("decay-probe", "supercritical log-LR decay in n"),
            ("simulate", "write simulated eigenvalue spectra")):
        sub = subs.add_parser(name, help=doc)
        _add_common_flags(sub)
        if name == "test":
            sub.add_argument("--tests", default=None,
                             help="comma list from: " + ",".join(_TEST_CHOICES))
            sub.add_argument("--data", default=None,
                             help="eigenvalue file (SPK1 or CSV); omit to "
                                  "simulate")
        if name == "decay-probe":
            sub.add_argument("--n-list", dest="n_list", default=None,
                             help="comma list of sample sizes")
    return parser


def build_config(ns: argparse.Namespace, argv: list[str]) -> RunConfig:
    file_vals: dict = {}
    if getattr(ns, "config", None):
        try:
            text = Path(ns.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        try:
            file_vals = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(file_vals, dict):
            raise ConfigError("config file must hold a JSON object")
    cfg = RunConfig(command=ns.command)
    known = {f.name for f in fields(RunConfig)} - {"command", "command_line"}
    for key in file_vals:
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
    for name in known:
        flag = getattr(ns, name, None)
        if flag is not None:
            setattr(cfg, name, flag)
        elif name in file_vals:
            setattr(cfg, name, file_vals[name])
    cfg.command_line = "spikelr " + " ".join(shlex.quote(a) for a in argv)
    _validate_config(cfg)
    return cfg


def _validate_config(cfg: RunConfig) -> None:
    if not 0.0 < cfg.alpha < 1.0:
        raise ConfigError("alpha must lie in (0, 1)")
    if cfg.scale not in _SCALES:
        raise ConfigError(f"scale must be desk or paper, got {cfg.scale!r}")
    if not 0 <= cfg.seed < 2 ** 64:
        raise ConfigError("seed must fit in 64 bits")
    if cfg.threads < 0:
        raise ConfigError("threads must be >= 0")
    if cfg.kind not in ("lambda", "mu"):
        raise ConfigError("kind must be lambda or mu")
    if cfg.sigma2 <= 0.0:
        raise ConfigError("sigma2 must be positive")
    for field_name in ("p", "n", "reps", "draws"):
        value = getattr(cfg, field_name)
        if value is not None and value < 1:
            raise ConfigError(f"{field_name} must be a positive integer")


def resolve_dims(cfg: RunConfig) -> tuple[int, int]:
    """One of: both p and n; or c anchored by either p or n."""
    p, n, c = cfg.p, cfg.n, cfg.c
    if p is not None and n is not None:
        if c is not None and abs(c - p / n) > 1e-9:
            raise ConfigError(f"c={c:g} conflicts with p/n={p / n:g}")
        return p, n
    if c is not None:
        if c <= 0.0:
            raise ConfigError("c must be positive")
        if n is not None:
            return max(1, round(c * n)), n
        if p is not None:
            return p, max(1, round(p / c))
    raise ConfigError("need both --p and --n, or --c with one of them")


def parse_grid(text: str | None, default_m: float,
               default_points: int) -> tuple[float, int]:
    if text is None:
        return default_m, default_points
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError(f"--grid takes M:points, got {text!r}")
    try:
        return float(parts[0]), int(parts[1])
    except ValueError:
        raise ConfigError(f"--grid takes M:points, got {text!r}") from None


def parse_theta_grid(text: str | None, default: str) -> np.ndarray:
    spec = default if text is None else text
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) == 3:
            return np.linspace(float(parts[0]), float(parts[1]),
                               int(parts[2]))
    except ValueError:
        pass
    raise ConfigError(f"--theta takes a value or a:b:k, got {spec!r}")


def parse_theta_scalar(text: str | None) -> float | None:
    if text is None:
        return None
    if ":" in text:
        raise ConfigError("this command takes a single --theta value")
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"--theta is not a number: {text!r}") from None


def resolve_spike(cfg: RunConfig, c_p: float) -> float:
    """Spike strength from --h or --theta (exclusive), defaulting to null."""
    theta = parse_theta_scalar(cfg.theta)
    if cfg.h is not None and theta is not None:
        raise ConfigError("give --h or --theta, not both")
    if cfg.h is not None:
        if cfg.h < 0.0:
            raise ConfigError("h must be nonnegative")
        return cfg.h
    if theta is not None:
        if theta < 0.0:
            raise ConfigError("theta must be nonnegative")
        return h_of_theta(theta, c_p) if theta > 0.0 else 0.0
    return 0.0


# ---------------------------------------------------------------------------
# output plumbing

def _provenance(cfg: RunConfig) -> dict:
    return {"version": __version__, "command": cfg.command_line,
            "seed": cfg.seed, "scale": cfg.scale}


def _prov_comments(cfg: RunConfig, extra: tuple[str, ...] = ()) -> list[str]:
    prov = _provenance(cfg)
    lines = [f"# spikelr {prov['version']}",
             f"# command: {prov['command']}",
             f"# seed: {prov['seed']}",
             f"# scale: {prov['scale']}"]
    lines.extend(f"# {item}" for item in extra)
    return lines


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_csv(cfg: RunConfig, path: str, header: list[str],
               rows: list[list[float]],
               extra: tuple[str, ...] = ()) -> None:
    lines = _prov_comments(cfg, extra)
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join("%.12g" % v for v in row))
    _write_text(path, "\n".join(lines) + "\n")


def _write_json(cfg: RunConfig, path: str, payload: dict) -> None:
    payload = {"provenance": _provenance(cfg), **payload}
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _out_path(cfg: RunConfig, default_name: str) -> str:
    return cfg.output_path if cfg.output_path else default_name


# ---------------------------------------------------------------------------
# verbs

def cmd_envelope(cfg: RunConfig) -> int:
    M, points = parse_grid(cfg.grid, 6.0, 200)
    if M <= 0.0 or points < 2:
        raise ConfigError("envelope needs M > 0 and at least two grid points")
    thetas = np.linspace(0.0, M, points)
    rows = [[t, math.sqrt(-math.expm1(-t * t)),
             envelope(t, cfg.alpha, "lambda"), envelope(t, cfg.alpha, "mu")]
            for t in thetas]
    header = ["theta", "h_over_sqrt_c", "envelope_lambda", "envelope_mu"]
    if cfg.format == "json":
        payload = {"alpha": cfg.alpha,
                   "columns": {name: [row[i] for row in rows]
                               for i, name in enumerate(header)}}
        _write_json(cfg, _out_path(cfg, "envelope.json"), payload)
    else:
        _write_csv(cfg, _out_path(cfg, "envelope.csv"), header, rows,
                   (f"alpha: {cfg.alpha:g}",))
    return 0


def cmd_power_figures(cfg: RunConfig) -> int:
    outdir = Path(_out_path(cfg, "figures"))
    outdir.mkdir(parents=True, exist_ok=True)
    theta1 = parse_theta_grid(cfg.theta, "0:6:41")
    scale = _SCALES[cfg.scale]
    draws = cfg.draws if cfg.draws is not None else scale["draws"]
    M, points = parse_grid(cfg.grid, 6.0, scale["points"])
    if cfg.c is not None:
        c = cfg.c
    elif cfg.p is not None and cfg.n is not None:
        c = cfg.p / cfg.n
    else:
        c = 0.5
    if not 0.0 < c < 1.0:
        raise ConfigError("the clr curve needs c in (0, 1)")
    alpha = cfg.alpha

    curves = {}
    for kind in ("lambda", "mu"):
        curves[f"lr_{kind}"] = lr_power_curve(
            kind, theta1, alpha, (M, points), draws, cfg.seed)
        curves[f"wap_{kind}"] = wap_power_curve(
            kind, theta1, alpha, (M, points), draws, cfg.seed)
    rows = [[t,
             curves["lr_lambda"].values[i], curves["wap_lambda"].values[i],
             envelope(t, alpha, "lambda"),
             curves["lr_mu"].values[i], curves["wap_mu"].values[i],
             envelope(t, alpha, "mu")]
            for i, t in enumerate(theta1)]
    _write_csv(cfg, str(outdir / "lr_wap_envelope.csv"),
               ["theta", "lr_lambda", "wap_lambda", "envelope_lambda",
                "lr_mu", "wap_mu", "envelope_mu"], rows,
               (f"alpha: {alpha:g}", f"draws: {draws}",
                f"process grid: {M:g}:{points}"))

    rows = [[t, classical_power(t, alpha, "john"), envelope(t, alpha, "mu")]
            for t in theta1]
    _write_csv(cfg, str(outdir / "john_vs_mu_envelope.csv"),
               ["theta", "beta_john", "envelope_mu"], rows,
               (f"alpha: {alpha:g}",))

    rows = [[t, classical_power(t, alpha, "lw"),
             classical_power(t, alpha, "clr", c),
             envelope(t, alpha, "lambda")] for t in theta1]
    _write_csv(cfg, str(outdir / "classical_vs_lambda_envelope.csv"),
               ["theta", "beta_lw", "beta_clr", "envelope_lambda"], rows,
               (f"alpha: {alpha:g}", f"c: {c:g}"))
    return 0


def _iter_test_records(cfg: RunConfig):
    """Yield (index, EigenSample) from the data file or the simulator."""
    if cfg.data:
        vectors = read_eig_file(cfg.data)
        for i, vec in enumerate(vectors):
            p = len(vec)
            if cfg.n is not None:
                n = cfg.n
            elif cfg.c is not None and cfg.c > 0.0:
                n = max(1, round(p / cfg.c))
            else:
                raise ConfigError("--data needs --n (or --c) to fix the "
                                  "sample size")
            yield i, eigen_sample_from_values(vec, n)
    else:
        p, n = resolve_dims(cfg)
        h = resolve_spike(cfg, p / n)
        model = SpikedModel(p=p, n=n, h=h, sigma2=cfg.sigma2, seed=cfg.seed)
        for i in range(cfg.reps if cfg.reps is not None else 1):
            yield i, sample_eigs(model, i)


def cmd_test(cfg: RunConfig) -> int:
    if cfg.format == "csv":
        raise ConfigError("the test verb emits JSON lines; --format csv is "
                          "not available")
    names = [s.strip() for s in
             (cfg.tests or "john,lw,clr,tw_lambda,tw_mu").split(",")
             if s.strip()]
    for name in names:
        if name not in _TEST_CHOICES:
            raise ConfigError(f"unknown test {name!r}; choose from "
                              + ",".join(_TEST_CHOICES))
    alpha, kind = cfg.alpha, cfg.kind
    scale = _SCALES[cfg.scale]

    sup_grid = None
    crits: dict[str, float] = {}
    if "lr_sup" in names or "wap" in names:
        M, points = parse_grid(cfg.grid, 6.0, 61)
        draws = cfg.draws if cfg.draws is not None else scale["draws"]
        sup_grid = capped_theta_grid(M, points, 1.0)
        for mode, label in (("sup", "lr_sup"), ("wap", "wap")):
            if label in names:
                crits[label] = asymptotic_critical(
                    kind, sup_grid, draws, cfg.seed, alpha, mode)

    sink = open(cfg.output_path, "w", encoding="utf-8") \
        if cfg.output_path else sys.stdout
    try:
        for index, eigs in _iter_test_records(cfg):
            for name in names:
                blob = _one_report(name, eigs, alpha, kind, sup_grid, crits)
                blob["index"] = index
                sink.write(json.dumps(blob, sort_keys=True) + "\n")
    finally:
        if sink is not sys.stdout:
            sink.close()
    return 0


def _one_report(name: str, eigs, alpha: float, kind: str,
                sup_grid, crits: dict[str, float]) -> dict:
    runners = {"john": john_test, "lw": ledoit_wolf_test, "clr": clr_test}
    try:
        if name in runners:
            return runners[name](eigs, alpha).to_json()
        if name == "tw_lambda":
            return tracy_widom_test(eigs, alpha, kind="lambda").to_json()
        if name == "tw_mu":
            return tracy_widom_test(eigs, alpha, kind="mu").to_json()
        # sup-LR and WAP statistics over the guard-capped theta grid,
        # against asymptotic critical values simulated on the same grid
        values = [0.0]
        for theta in sup_grid[1:]:
            h = h_of_theta(float(theta), eigs.c_p)
            values.append(log_lr_exact(eigs, h, kind).value)
        if name == "lr_sup":
            stat = 2.0 * max(values)
        else:
            stat = float(logsumexp(values) - math.log(len(values)))
        crit = crits[name]
        return {"test": f"{name}_{kind}", "stat": stat, "crit": crit,
                "alpha": alpha, "reject": bool(stat > crit),
                "p": eigs.p, "n": eigs.n, "seed": None}
    except InapplicableTestError as exc:
        return {"test": name, "error": "inapplicable", "message": str(exc),
                "p": eigs.p, "n": eigs.n}
    except DomainError as exc:
        return {"test": name, "error": "domain", "message": str(exc),
                "p": eigs.p, "n": eigs.n}


def cmd_mc_critical(cfg: RunConfig) -> int:
    if cfg.format == "csv":
        raise ConfigError("mc-critical emits JSON; --format csv is not "
                          "available")
    p, n = resolve_dims(cfg)
    M, points = parse_grid(cfg.grid, 6.0, 61)
    reps = cfg.reps if cfg.reps is not None else _SCALES[cfg.scale]["mc_reps"]
    res = mc_exact_critical(cfg.kind, p, n, M, reps, cfg.alpha, cfg.seed,
                            points=points, threads=cfg.threads,
                            sigma2=cfg.sigma2)
    payload = {"kind": res.kind, "p": res.p, "n": res.n, "M": res.M,
               "alpha": res.alpha, "critical_value": res.value,
               "reps": res.reps, "seed": res.seed, "failures": res.failures,
               "points": points}
    _write_json(cfg, _out_path(cfg, "mc_critical.json"), payload)
    return 0


def cmd_sup_sim(cfg: RunConfig) -> int:
    scale = _SCALES[cfg.scale]
    M, points = parse_grid(cfg.grid, 6.0, scale["points"])
    draws = cfg.draws if cfg.draws is not None else scale["draws"]
    shift = parse_theta_scalar(cfg.theta)
    dist = simulate_sup(cfg.kind, (M, points), draws, cfg.seed,
                        shift_theta1=shift)
    quantiles = {f"q{int(100 * q)}": dist.quantile(q)
                 for q in (0.90, 0.95, 0.99)}
    if cfg.format == "json":
        payload = dist.to_json()
        payload["quantiles"] = quantiles
        _write_json(cfg, _out_path(cfg, "sup_sim.json"), payload)
    else:
        rows = [[float(i), s] for i, s in enumerate(dist.samples)]
        extra = (f"kind: {cfg.kind}", f"grid: {M:g}:{points}",
                 f"draws: {draws}",
                 f"shift_theta1: {'none' if shift is None else shift}",
                 *(f"{k}: %.12g" % v for k, v in quantiles.items()))
        _write_csv(cfg, _out_path(cfg, "sup_sim.csv"),
                   ["sample_index", "value"], rows, extra)
    return 0


def cmd_decay_probe(cfg: RunConfig) -> int:
    if cfg.c is not None:
        c = cfg.c
    elif cfg.p is not None and cfg.n is not None:
        c = cfg.p / cfg.n
    else:
        raise ConfigError("decay-probe needs --c (or --p with --n)")
    if cfg.h is None:
        raise ConfigError("decay-probe needs --h beyond the transition")
    text = cfg.n_list or "50,100,200"
    try:
        n_values = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"--n-list takes comma-separated integers, got "
                          f"{text!r}") from None
    reps = cfg.reps if cfg.reps is not None else 50
    probe = lr_decay_probe(c, cfg.h, n_values, reps, cfg.seed,
                           threads=cfg.threads)
    if cfg.format == "csv":
        rows = [[float(n), m] for n, m in zip(probe.n_values, probe.medians)]
        _write_csv(cfg, _out_path(cfg, "decay_probe.csv"),
                   ["n", "median_log_lr"], rows,
                   (f"c: {c:g}", f"h: {cfg.h:g}", f"reps: {reps}",
                    "slope: %.12g" % probe.slope))
    else:
        payload = {"c": c, "h": cfg.h, "reps": reps,
                   "n": [int(v) for v in probe.n_values],
                   "median_log_lr": probe.medians.tolist(),
                   "slope": probe.slope}
        _write_json(cfg, _out_path(cfg, "decay_probe.json"), payload)
    return 0


def cmd_simulate(cfg: RunConfig) -> int:
    p, n = resolve_dims(cfg)
    h = resolve_spike(cfg, p / n)
    reps = cfg.reps if cfg.reps is not None else 1
    model = SpikedModel(p=p, n=n, h=h, sigma2=cfg.sigma2, seed=cfg.seed)

    def full_spectrum(i: int) -> np.ndarray:
        eigs = sample_eigs(model, i)
        return np.concatenate([eigs.lam, np.zeros(p - eigs.m)])

    if cfg.format == "json":
        raise ConfigError("simulate writes spk1 or csv eigenvalue files")
    if cfg.format == "csv":
        if reps != 1:
            raise ConfigError("csv holds a single spectrum; use the spk1 "
                              "container for reps > 1")
        path = _out_path(cfg, "simulated.csv")
        lines = _prov_comments(cfg, (f"p: {p}", f"n: {n}", f"h: {h:g}",
                                     f"sigma2: {cfg.sigma2:g}"))
        lines.extend("%.17g" % v for v in full_spectrum(0))
        _write_text(path, "\n".join(lines) + "\n")
    else:
        path = _out_path(cfg, "simulated.spk1")
        write_spk1(path, (full_spectrum(i) for i in range(reps)))
        # the binary container has no comment slot; provenance rides sidecar
        meta = {"p": p, "n": n, "h": h, "sigma2": cfg.sigma2, "reps": reps}
        _write_json(cfg, path + ".meta.json", meta)
    return 0


# ---------------------------------------------------------------------------
# entry point

_DISPATCH = {
    "envelope": cmd_envelope,
    "power-figures": cmd_power_figures,
    "test": cmd_test,
    "mc-critical": cmd_mc_critical,
    "sup-sim": cmd_sup_sim,
    "decay-probe": cmd_decay_probe,
    "simulate": cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = build_config(ns, argv)
        return _DISPATCH[cfg.command](cfg)
    except (ConfigError, DomainError, DataFormatError) as exc:
        print(f"spikelr: {exc}", file=sys.stderr)
        return 2
    except _NUMERIC_ERRORS as exc:
        print(f"spikelr: numeric failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"spikelr: I/O error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
