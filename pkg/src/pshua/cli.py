"""Command-line front end.

Exit codes: 0 ok, 2 usage/config error, 3 capacity violation, 4 audit
failure.  Output is deterministic for a fixed config and seed; numeric
rows carry their inputs (N, exact gamma fractions, cutoffs) so reports are
self-describing.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bounds, circle, counting, expsums, psprimes, singular
from .errors import CapacityError, SeriesVanishesError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_AUDIT = 4


@dataclass
class RunConfig:
    sieve_limit: int = 2_000_000
    sieve_cache: str | None = None
    sigma: Fraction = circle.DEFAULT_SIGMA
    cutoff: int = 1000
    audit_epsilon: float = bounds.AUDIT_EPSILON
    format: str = "csv"
    jobs: int = 1
    seed: int = bounds.DEFAULT_SEED

    def validate(self):
        if self.sieve_limit < 2:
            raise ValueError("sieve_limit must be >= 2")
        if not (0 < self.sigma <= Fraction(1, 6)):
            raise ValueError("sigma must lie in (0, 1/6]")
        if self.cutoff < 2:
            raise ValueError("cutoff must be >= 2")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if not (0 < self.audit_epsilon < 1):
            raise ValueError("audit_epsilon must lie in (0, 1)")


_CONFIG_PARSERS = {
    "sieve_limit": int,
    "sieve_cache": str,
    "sigma": Fraction,
    "cutoff": int,
    "audit_epsilon": float,
    "format": str,
    "jobs": int,
    "seed": int,
}


def load_config(path: str | None) -> RunConfig:
    cfg = RunConfig()
    if path:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key = value")
                key, value = (part.strip() for part in line.split("=", 1))
                if key not in _CONFIG_PARSERS:
                    raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
                setattr(cfg, key, _CONFIG_PARSERS[key](value))
    cfg.validate()
    return cfg


def _cache_path(cfg: RunConfig, args) -> str | None:
    if getattr(args, "sieve_cache", None):
        return args.sieve_cache
    if cfg.sieve_cache:
        return cfg.sieve_cache
    cache_dir = os.environ.get("PSHUA_CACHE_DIR")
    if cache_dir:
        return os.path.join(cache_dir, f"sieve_{cfg.sieve_limit}.pshua")
    return None


def _sieve_for(cfg: RunConfig, args, needed: int) -> psprimes.PrimeSieve:
    if needed > cfg.sieve_limit:
        raise CapacityError(
            f"request needs primes to {needed} but sieve_limit is "
            f"{cfg.sieve_limit}; raise --sieve-limit"
        )
    path = _cache_path(cfg, args)
    if path and os.path.exists(path):
        sieve = psprimes.PrimeSieve.load(path)
        if sieve.limit >= needed:
            return sieve
    sieve = psprimes.PrimeSieve.build(cfg.sieve_limit)
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        sieve.save(path)
    return sieve


def _emit_rows(rows: list[dict], cfg: RunConfig, out=None):
    out = out or sys.stdout
    if cfg.format == "json":
        json.dump(rows, out, indent=2, sort_keys=True, default=str)
        out.write("\n")
    else:
        writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)


def _fmt_complex(z: complex) -> str:
    re, im = z.real, z.imag
    scale = max(abs(re), abs(im), 1.0)
    if abs(im) < 1e-9 * scale:
        im = 0.0
    if abs(re) < 1e-9 * scale:
        re = 0.0
    return f"{re:.12g}{im:+.12g}i"


def _gamma_opt(text: str | None) -> psprimes.Gamma | None:
    return psprimes.Gamma.parse(text) if text else None


# ----------------------------------------------------------------------
# subcommand handlers
# ----------------------------------------------------------------------

def _cmd_sieve(cfg, args):
    path = _cache_path(cfg, args)
    sieve = psprimes.PrimeSieve.build(args.limit or cfg.sieve_limit)
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        sieve.save(path)
    print(f"limit={sieve.limit} primes={len(sieve.primes())} cache={path or '-'}")
    return EXIT_OK


def _cmd_ps_list(cfg, args):
    gamma = psprimes.Gamma.parse(args.gamma)
    sieve = _sieve_for(cfg, args, args.x)
    for p in psprimes.ps_primes_up_to(args.x, gamma, sieve):
        print(p)
    return EXIT_OK


def _cmd_ps_count(cfg, args):
    gamma = psprimes.Gamma.parse(args.gamma)
    rows = []
    for x in args.x:
        sieve = _sieve_for(cfg, args, x)
        count, ratio = psprimes.ps_count(x, gamma, sieve)
        rows.append({"x": x, "gamma": str(gamma), "count": count, "density_ratio": ratio})
    if args.plot:
        # two-column CSV ready for plotting
        for row in rows:
            print(f"{row['x']},{row['density_ratio']}")
    else:
        _emit_rows(rows, cfg)
    return EXIT_OK


def _cmd_expsum(cfg, args):
    alpha = expsums.Alpha.parse(args.alpha)
    gamma = _gamma_opt(args.gamma)
    needed = args.N if args.kind in ("S1", "T1") else psprimes.kth_root_floor(args.N, 3)
    sieve = _sieve_for(cfg, args, needed)
    if args.kind == "S1":
        acc = expsums.eval_S1(args.N, alpha, sieve)
    elif args.kind == "S3":
        acc = expsums.eval_S3(args.N, alpha, sieve)
    elif args.kind == "T1":
        acc = expsums.eval_T1(args.N, alpha, gamma or psprimes.ONE, sieve)
    else:
        acc = expsums.eval_T3(args.N, alpha, gamma or psprimes.ONE, sieve)
    if args.verbose:
        _emit_rows(
            [{
                "kind": args.kind, "N": args.N, "alpha": str(alpha),
                "gamma": str(gamma) if gamma else "-",
                "re": acc.re, "im": acc.im, "terms": acc.terms,
                "error_budget": acc.error_budget,
            }],
            cfg,
        )
    else:
        print(_fmt_complex(acc.value))
    return EXIT_OK


def _cmd_singular(cfg, args):
    cutoff = args.cutoff or cfg.cutoff
    try:
        if args.vinogradov:
            value = singular.singular_series_vinogradov(args.N, cutoff)
            rows = [{"N": args.N, "series": "vinogradov", "cutoff": cutoff, "value": value}]
        else:
            est = singular.singular_series_hua(args.N, args.k, cutoff)
            rows = [{
                "N": args.N, "series": f"hua_k{args.k}", "cutoff": cutoff,
                "value": est.value, "last_factor_delta": est.last_factor_delta,
            }]
    except SeriesVanishesError as exc:
        rows = [{
            "N": args.N, "series": "vinogradov" if args.vinogradov else f"hua_k{args.k}",
            "cutoff": cutoff, "value": 0.0, "vanishes_at_p": exc.prime,
        }]
    _emit_rows(rows, cfg)
    return EXIT_OK


def _cmd_count(cfg, args):
    gammas = tuple(_gamma_opt(g) for g in (args.gamma1, args.gamma2, args.gamma3))
    sieve = _sieve_for(cfg, args, args.N)
    query = counting.RepQuery(args.N, args.k, gammas, weighted=args.weighted)
    result = counting.count_hua(query, sieve)
    print(f"{result:.12g}" if args.weighted else result)
    return EXIT_OK


def _parse_factor(text: str) -> circle.SumSpec:
    if ":" in text:
        kind, gtext = text.split(":", 1)
        return circle.SumSpec(kind, psprimes.Gamma.parse(gtext))
    return circle.SumSpec(text)


def _cmd_integral(cfg, args):
    factors = tuple(_parse_factor(t) for t in args.factors.split(","))
    sieve = _sieve_for(cfg, args, args.N)
    dissection = None
    if args.domain != "full":
        dissection = circle.ArcDissection.build(args.N, args.sigma or cfg.sigma)
    result = circle.circle_integral(
        args.N, factors, sieve, domain=args.domain, dissection=dissection
    )
    if args.domain == "full":
        print(_fmt_complex(result.value))
    else:
        print(f"{_fmt_complex(result.value)} error_estimate={result.error_estimate:.3g}")
    return EXIT_OK


def _cmd_admissible(cfg, args):
    if args.scenario:
        threshold = bounds.solve_gamma_threshold(args.scenario, args.variant)
        print(threshold)
        return EXIT_OK
    if not (args.gammas and args.deltas):
        print("admissible: need --scenario or both --gammas and --deltas", file=sys.stderr)
        return EXIT_USAGE
    g1, g2, g3 = (Fraction(t) for t in args.gammas.split(","))
    d1, d3 = (Fraction(t) for t in args.deltas.split(","))
    report = bounds.check_theorem_constraints(
        bounds.ParamTuple(g1, g2, g3, d1, d3), args.variant
    )
    rows = [
        {
            "gammas": args.gammas, "deltas": args.deltas, "variant": args.variant,
            "constraint": name, "slack": str(slack), "satisfied": slack > 0,
        }
        for name, slack in report.slacks.items()
    ]
    _emit_rows(rows, cfg)
    print("admissible" if report.admissible else "inadmissible")
    return EXIT_OK


_AUDIT_SCALES = {
    # lemma -> (calibration scale description, runner)
    "vaughan": lambda cfg, args, sieve, grid, m: bounds.audit_vaughan(400 * m, grid, sieve),
    "harman": lambda cfg, args, sieve, grid, m: bounds.audit_harman(32768 * m, grid, sieve),
    "vdc": lambda cfg, args, sieve, grid, m: bounds.audit_vdc(
        bounds.MonomialPhase(0.8, 0.5), 1024 * m, 2048 * m
    ),
    "kth-derivative": lambda cfg, args, sieve, grid, m: bounds.audit_kth_derivative(
        bounds.MonomialPhase(2.0, 1.5), 3, 1024 * m, 2048 * m
    ),
    "spacing": lambda cfg, args, sieve, grid, m: bounds.audit_spacing(
        32 * m, 128 * m, 0.5, 0.6
    ),
    "psi": lambda cfg, args, sieve, grid, m: bounds.audit_psi_truncation(
        np.concatenate([np.random.default_rng(cfg.seed).random(500), [0.0, 0.5]]),
        256 * m,
    ),
    "min-sum": lambda cfg, args, sieve, grid, m: bounds.audit_min_sum(
        bounds.MonomialPhase(0.37, 0.8), 20.0, 256 * m
    ),
    "graham-kolesnik": lambda cfg, args, sieve, grid, m: bounds.audit_graham_kolesnik(
        1000, seed=cfg.seed, scale=float(m)
    ),
    "t1-gap": lambda cfg, args, sieve, grid, m: bounds.audit_t1_gap(
        10000 * m, psprimes.Gamma(9, 10), Fraction(1, 100), grid[:200], sieve
    ),
}


def _cmd_audit(cfg, args):
    sieve = _sieve_for(cfg, args, cfg.sieve_limit)
    grid = bounds.audit_alpha_grid(seed=cfg.seed)
    report = _AUDIT_SCALES[args.lemma](cfg, args, sieve, grid, args.scale)
    payload = {
        "lemma": report.lemma,
        "grid": report.grid,
        "max_ratio": report.max_ratio,
        "fitted_constant": report.fitted_constant,
        "passed": report.passed,
        "details": {k: str(v) for k, v in report.details.items()},
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_AUDIT


def _cmd_compare(cfg, args):
    cutoff = args.cutoff or cfg.cutoff
    rows = []
    for N in range(args.start, args.stop + 1, args.step):
        sieve = _sieve_for(cfg, args, N)
        try:
            row = counting.main_term(N, args.k, cutoff, sieve)
        except SeriesVanishesError:
            continue
        rows.append({
            "N": row.N, "k": row.k, "exact_count": row.exact_count,
            "main_term": row.main_term, "ratio": row.ratio,
            "series_cutoff": row.series_cutoff,
        })
    if args.plot:
        for row in rows:
            print(f"{row['N']},{row['ratio']}")
    else:
        _emit_rows(rows, cfg)
    return EXIT_OK


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--sieve-limit", type=int, dest="sieve_limit")
    common.add_argument("--sieve-cache", dest="sieve_cache")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--seed", type=int)

    parser = argparse.ArgumentParser(
        prog="pshua",
        description="Thin prime sets, prime exponential sums, singular series, "
        "arc dissections, and representation counts at desk scale.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("sieve", help="build (and cache) the prime sieve")
    p.add_argument("--limit", type=int)

    p = add("ps-list", help="set members up to x")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--gamma", required=True)

    p = add("ps-count", help="member count and density ratio")
    p.add_argument("--x", type=int, nargs="+", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--plot", action="store_true", help="two-column x,ratio output")

    p = add("expsum", help="evaluate S1/S3/T1/T3")
    p.add_argument("--kind", choices=("S1", "S3", "T1", "T3"), required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--alpha", required=True, help="a/q, a/q+lam, or float")
    p.add_argument("--gamma")
    p.add_argument("--verbose", action="store_true")

    p = add("singular", help="singular series, truncated Euler product")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--cutoff", type=int)
    p.add_argument("--vinogradov", action="store_true")

    p = add("count", help="representations N = p1 + p2 + p3^k")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--gamma1")
    p.add_argument("--gamma2")
    p.add_argument("--gamma3")
    p.add_argument("--weighted", action="store_true")

    p = add("integral", help="circle integral of a factor product")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--factors", default="S1,S1,S3", help="e.g. S1,S1,S3 or T1:9/10,T1:9/10,T3:9/10")
    p.add_argument("--domain", choices=("full", "major", "minor"), default="full")
    p.add_argument("--sigma", type=Fraction)

    p = add("admissible", help="constraint check / threshold solve")
    p.add_argument("--scenario", choices=bounds.SCENARIOS)
    p.add_argument("--variant", choices=(bounds.AS_STATED, bounds.AS_PROVED),
                   default=bounds.AS_PROVED)
    p.add_argument("--gammas", help="g1,g2,g3 as fractions")
    p.add_argument("--deltas", help="d1,d3 as fractions")

    p = add("audit", help="run a named bound audit")
    p.add_argument("--lemma", choices=sorted(_AUDIT_SCALES), required=True)
    p.add_argument("--scale", type=int, default=1, help="multiple of calibration scale")

    p = add("compare", help="exact count vs main term over an N range")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True)
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--cutoff", type=int)
    p.add_argument("--plot", action="store_true", help="two-column N,ratio output")

    return parser


_HANDLERS = {
    "sieve": _cmd_sieve,
    "ps-list": _cmd_ps_list,
    "ps-count": _cmd_ps_count,
    "expsum": _cmd_expsum,
    "singular": _cmd_singular,
    "count": _cmd_count,
    "integral": _cmd_integral,
    "admissible": _cmd_admissible,
    "audit": _cmd_audit,
    "compare": _cmd_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError, ZeroDivisionError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.sieve_limit is not None:
        cfg.sieve_limit = args.sieve_limit
    if args.sieve_cache is not None:
        cfg.sieve_cache = args.sieve_cache
    if args.format is not None:
        cfg.format = args.format
    if args.seed is not None:
        cfg.seed = args.seed
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](cfg, args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, SeriesVanishesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
