"""Command-line front end.

Every subcommand writes data to stdout (or ``--out FILE``) as CSV or JSON
and diagnostics to stderr. Exit status is 0 on success, 2 on usage or
validation errors and 1 on anything else.

CSV layouts: ``name,value,unit`` for scalar tables and ``axis1,axis2,value``
for surfaces. JSON layout: ``{"meta": {...}, "data": ...}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .analytic import ev_repeated, ev_single_shot, port_probabilities, success_probability
from .material import emitter_current, material_table
from .model import (
    DEFAULT_DISTANCE,
    ELECTRON_MASS,
    PRESETS,
    AbsorberModel,
    InterferometerSpec,
    InvalidSpecError,
    MaterialParams,
)
from .shotnoise import dimensionful_noise, normalized_noise
from .sweep import min_stages_for_target, noise_surface, probability_surface, required_dw_for_target
from .trajectory import default_workers, estimate_probabilities, partition_noise_mc, partition_noise_stderr
from .wkb import wkb_summary


class UsageError(Exception):
    pass


def _fmt(v):
    if v is None:
        return "not-found"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def _jsonable(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _load_config(path):
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a JSON object")
    return cfg


def _presets(cfg):
    presets = dict(PRESETS)
    for name, fields in cfg.get("presets", {}).items():
        fields = dict(fields)
        if "m_eff_ratio" in fields:
            fields["m_eff"] = fields.pop("m_eff_ratio") * ELECTRON_MASS
        try:
            presets[name] = MaterialParams(name=name, **fields)
        except TypeError as exc:
            raise UsageError(f"bad preset {name!r} in config: {exc}") from None
    return presets


def _distance(args, cfg):
    if args.distance is not None:
        return args.distance
    return float(cfg.get("distance", DEFAULT_DISTANCE))


def _m_eff(args, cfg, presets):
    if getattr(args, "m_eff", None) is not None:
        return args.m_eff * ELECTRON_MASS
    name = cfg.get("preset", "gaas")
    if name not in presets:
        raise UsageError(f"unknown preset {name!r}")
    return presets[name].m_eff


# -- emitters ---------------------------------------------------------------


def _emit_table(rows, meta, args):
    """``rows`` are ``(name, value, unit)``."""
    if args.format == "json":
        payload = {
            "meta": {**meta, "units": {n: u for n, _, u in rows}},
            "data": {n: _jsonable(v) for n, v, _ in rows},
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "value", "unit"])
        for n, v, u in rows:
            w.writerow([n, _fmt(v), u])
        text = buf.getvalue()
    _write(text, args)


def _emit_surface(grid, meta, args):
    if args.format == "json":
        payload = {
            "meta": {**meta, **grid.metadata, "axis1": grid.axis1_name, "axis2": grid.axis2_name},
            "data": [{"axis1": a, "axis2": b, "value": v} for a, b, v in grid.rows()],
        }
        text = json.dumps(payload) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["axis1", "axis2", "value"])
        for a, b, v in grid.rows():
            w.writerow([_fmt(a), _fmt(b), _fmt(v)])
        text = buf.getvalue()
    _write(text, args)


def _write(text, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(args, **extra):
    skip = {"func", "out", "format", "config"}
    flags = {k: v for k, v in vars(args).items() if k not in skip}
    return {"command": args.command, "version": __version__, **flags, **extra}


# -- commands ---------------------------------------------------------------


def cmd_material(args, cfg):
    presets = _presets(cfg)
    explicit = {
        "m_eff": None if args.m_eff is None else args.m_eff * ELECTRON_MASS,
        "fermi_energy": args.fermi_energy,
        "mobility": args.mobility,
    }
    if args.preset is not None:
        if args.preset not in presets:
            raise UsageError(f"unknown preset {args.preset!r}; known: {', '.join(sorted(presets))}")
        base = presets[args.preset]
        fields = {
            "m_eff": base.m_eff,
            "fermi_energy": base.fermi_energy,
            "mobility": base.mobility,
            "work_function_mean": base.work_function_mean,
        }
        fields.update({k: v for k, v in explicit.items() if v is not None})
    else:
        missing = [k for k, v in explicit.items() if v is None]
        if missing:
            flags = ", ".join("--" + k.replace("_", "-") for k in missing)
            raise UsageError(f"missing {flags} (or use --preset)")
        fields = explicit
    mat = MaterialParams(**fields)
    rows = material_table(mat)
    if args.emission_period is not None:
        rows.append(("I_emitter", emitter_current(args.emission_period), "A"))
    _emit_table(rows, _meta(args), args)


def _absorber(args, cfg):
    kw = {"s": _distance(args, cfg), "m_eff": _m_eff(args, cfg, _presets(cfg))}
    if args.delta_w is not None:
        if args.phi is not None or args.bias is not None:
            raise UsageError("give either --delta-w or --phi/--bias, not both")
        return AbsorberModel(args.delta_w, **kw)
    if args.phi is None or args.bias is None:
        raise UsageError("need --delta-w, or both --phi and --bias")
    dw = args.phi - abs(args.bias) / 2.0
    if dw < 0:
        raise UsageError(
            f"negative effective barrier <Phi> - e|V|/2 = {dw!r} eV; "
            "the WKB tunnelling formula assumes <Phi> - e|V|/2 > 0"
        )
    return AbsorberModel(dw, **kw)


def cmd_wkb(args, cfg):
    absorber = _absorber(args, cfg)
    r = wkb_summary(absorber)
    rows = [
        ("delta_w", absorber.delta_w, "eV"),
        ("kappa", r["kappa"], "1/m"),
        ("kappa_s", r["kappa_s"], ""),
        ("J_ratio", r["tunnelling_ratio"], ""),
        ("eta", r["eta"], ""),
    ]
    _emit_table(rows, _meta(args), args)


def _spec(args, cfg):
    if args.eta is not None:
        if args.delta_w is not None:
            raise UsageError("give either --eta or --delta-w, not both")
        eta = args.eta
    elif args.delta_w is not None:
        eta = wkb_summary(AbsorberModel(args.delta_w, _distance(args, cfg)))["eta"]
    else:
        raise UsageError("need --eta or --delta-w")
    return InterferometerSpec(args.n, eta, getattr(args, "theta", None))


def cmd_ifm(args, cfg):
    spec = _spec(args, cfg)
    pp = port_probabilities(spec)
    rows = [
        ("eta", spec.eta, ""),
        ("theta", spec.theta, "rad"),
        ("P", success_probability(spec), ""),
        ("p_exit_a", pp.p_exit_a, ""),
        ("p_exit_b", pp.p_exit_b, ""),
        ("p_absorbed", pp.p_absorbed, ""),
    ]
    _emit_table(rows, _meta(args), args)


def cmd_noise(args, cfg):
    spec = _spec(args, cfg)
    nr = normalized_noise(spec)
    rows = [
        ("s_ll_sq", nr.s_ll_sq, ""),
        ("s_lu_sq", nr.s_lu_sq, ""),
        ("normalized", nr.normalized, ""),
    ]
    if args.bias is not None:
        rows.append(("S0", dimensionful_noise(spec, args.bias), "A^2/Hz"))
    _emit_table(rows, _meta(args), args)


def cmd_sweep_noise(args, cfg):
    grid = noise_surface(args.n_max, args.eta_steps, workers=args.threads or default_workers())
    _emit_surface(grid, _meta(args), args)


def cmd_sweep_prob(args, cfg):
    grid = probability_surface(
        args.n_max, args.dw_max, args.dw_steps, _distance(args, cfg), workers=args.threads or default_workers()
    )
    _emit_surface(grid, _meta(args), args)


def cmd_mc(args, cfg):
    spec = _spec(args, cfg)
    est = estimate_probabilities(spec, args.samples, args.seed, workers=args.threads)
    rows = [
        ("p_exit_a", est.p_exit_a, ""),
        ("p_exit_b", est.p_exit_b, ""),
        ("p_absorbed", est.p_absorbed, ""),
        ("stderr_a", est.stderr_a, ""),
        ("stderr_b", est.stderr_b, ""),
        ("stderr_abs", est.stderr_abs, ""),
        ("n_samples", est.n_samples, ""),
        ("seed", est.seed, ""),
    ]
    _emit_table(rows, _meta(args), args)


def cmd_partition(args, cfg):
    value = partition_noise_mc(args.theta, args.samples, args.seed, workers=args.threads)
    p = math.cos(args.theta) ** 2
    rows = [
        ("variance_ratio", value, ""),
        ("stderr", partition_noise_stderr(args.theta, args.samples), ""),
        ("expected", p * (1.0 - p), ""),
        ("n_samples", args.samples, ""),
        ("seed", args.seed, ""),
    ]
    _emit_table(rows, _meta(args), args)


def cmd_ev(args, cfg):
    if args.repeated:
        rows = [("p_detect_repeated", ev_repeated(args.reflectivity), "")]
    else:
        pp = ev_single_shot(args.reflectivity)
        rows = [
            ("p_dark", pp.p_exit_a, ""),
            ("p_bright", pp.p_exit_b, ""),
            ("p_absorbed", pp.p_absorbed, ""),
        ]
    _emit_table(rows, _meta(args), args)


def cmd_min_stages(args, cfg):
    n = min_stages_for_target(args.target, args.eta, args.n_cap)
    _emit_table([("N", n, "")], _meta(args), args)


def cmd_required_dw(args, cfg):
    dw = required_dw_for_target(
        args.target, args.n, _distance(args, cfg), tolerance=args.tolerance, dw_hi=args.dw_max
    )
    _emit_table([("delta_w", dw, "eV")], _meta(args), args)


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="FILE", help="write data here instead of stdout")
    common.add_argument("--config", metavar="PATH", help="JSON file with material presets and default distance")

    p = _Parser(prog="ifm2deg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("material", cmd_material, "2DEG transport scales (tau, v_F, l, k_F)")
    sp.add_argument("--preset")
    sp.add_argument("--m-eff", type=float, help="effective mass in units of m_e")
    sp.add_argument("--fermi-energy", type=float, help="eV")
    sp.add_argument("--mobility", type=float, help="m^2/(V s)")
    sp.add_argument("--emission-period", type=float, help="single-electron emission period in s")

    sp = add("wkb", cmd_wkb, "decay constant, tunnelling ratio and transparency")
    sp.add_argument("--delta-w", type=float, help="effective barrier <Phi> - e|V|/2 in eV")
    sp.add_argument("--phi", type=float, help="mean barrier <Phi> in eV")
    sp.add_argument("--bias", type=float, help="tip bias in volts")
    sp.add_argument("--distance", type=float, help="tunnelling distance in m")
    sp.add_argument("--m-eff", type=float, help="effective mass in units of m_e")

    def spec_flags(sp, theta=False):
        sp.add_argument("--n", type=int, required=True, help="number of beam splitters")
        sp.add_argument("--eta", type=float, help="absorber transparency")
        sp.add_argument("--delta-w", type=float, help="derive eta from this barrier (eV)")
        sp.add_argument("--distance", type=float, help="tunnelling distance in m")
        if theta:
            sp.add_argument("--theta", type=float, help="splitter angle override (rad)")

    spec_flags(add("ifm", cmd_ifm, "success and port probabilities"), theta=True)

    sp = add("noise", cmd_noise, "zero-frequency shot noise at the lower-right port")
    spec_flags(sp, theta=True)
    sp.add_argument("--bias", type=float, help="source-drain bias |V| for SI output")

    sp = add("sweep-noise", cmd_sweep_noise, "noise surface over (N, eta)")
    sp.add_argument("--n-max", type=int, default=50)
    sp.add_argument("--eta-steps", type=int, default=101)
    sp.add_argument("--threads", type=int)

    sp = add("sweep-prob", cmd_sweep_prob, "success probability surface over (N, delta_w)")
    sp.add_argument("--n-max", type=int, default=50)
    sp.add_argument("--dw-max", type=float, default=3.0e-4)
    sp.add_argument("--dw-steps", type=int, default=101)
    sp.add_argument("--distance", type=float)
    sp.add_argument("--threads", type=int)

    sp = add("mc", cmd_mc, "Monte Carlo trajectory estimate of port probabilities")
    spec_flags(sp, theta=True)
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int)

    sp = add("partition-noise", cmd_partition, "Monte Carlo partition noise of one lossless splitter")
    sp.add_argument("--theta", type=float, required=True)
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int)

    sp = add("ev", cmd_ev, "single Mach-Zehnder baseline")
    sp.add_argument("--reflectivity", type=float, required=True)
    sp.add_argument("--repeated", action="store_true", help="retry inconclusive outcomes")

    sp = add("min-stages", cmd_min_stages, "smallest N reaching a target success probability")
    sp.add_argument("--target", type=float, required=True)
    sp.add_argument("--eta", type=float, required=True)
    sp.add_argument("--n-cap", type=int, default=1000)

    sp = add("required-dw", cmd_required_dw, "largest delta_w keeping P above a target")
    sp.add_argument("--target", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--distance", type=float)
    sp.add_argument("--tolerance", type=float, default=1e-9)
    sp.add_argument("--dw-max", type=float, default=3.0e-4)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
        args.func(args, cfg)
    except (UsageError, InvalidSpecError) as exc:
        print(f"ifm2deg {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"ifm2deg {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
