"""``homsim`` command-line front end.

Exit codes: 0 ok, 1 oracle check failed, 2 bad config, 3 photon cap, 4 zero baseline.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .analysis import ScanSpec, ZeroBaselineError, delay_scan, null_transmissivity
from .interferometer import (
    MAX_PHOTONS,
    InputState,
    PhotonCapError,
    bs_from_hwp_angle,
    bs_from_t,
    check_cap,
    output_distribution,
)
from .oracle import ORACLE_MAX_PHOTONS, oracle_distribution
from .temporal_modes import Wavepacket

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_CAP, EXIT_ZERO_BASELINE = 0, 1, 2, 3, 4
ORACLE_TVD_LIMIT = 1e-10


class ConfigError(ValueError):
    pass


def fmt(x: float) -> str:
    # '+ 0.0' turns a -0.0 into 0.0
    return f"{float(x) + 0.0:.12f}"


def _number(obj: Dict[str, Any], key: str, where: str, default=None) -> float:
    if key not in obj:
        if default is None:
            raise ConfigError(f"missing field '{where}{key}'")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"field '{where}{key}' must be a number, got {v!r}")
    return float(v)


def _photons(cfg: Dict[str, Any], port: str) -> List[Wavepacket]:
    key = f"port_{port}"
    items = cfg.get(key, [])
    if not isinstance(items, list):
        raise ConfigError(f"field '{key}' must be an array of photons")
    out = []
    for i, ph in enumerate(items):
        where = f"{key}[{i}]."
        if not isinstance(ph, dict):
            raise ConfigError(f"field '{key}[{i}]' must be an object")
        tau = _number(ph, "tau", where)
        sigma = _number(ph, "sigma", where, default=1.0)
        tag = ph.get("tag", 0)
        if isinstance(tag, bool) or not isinstance(tag, int) or tag < 0:
            raise ConfigError(f"field '{where}tag' must be a non-negative integer, got {tag!r}")
        if not sigma > 0:
            raise ConfigError(f"field '{where}sigma' must be positive, got {sigma!r}")
        out.append(Wavepacket(tau, sigma, tag))
    return out


def parse_config(cfg: Any) -> Dict[str, Any]:
    """Validate a decoded JSON config into library objects."""
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    has_t, has_hwp = "T" in cfg, "hwp_deg" in cfg
    if has_t == has_hwp:
        raise ConfigError("exactly one of fields 'T' and 'hwp_deg' is required")
    try:
        if has_t:
            bs = bs_from_t(_number(cfg, "T", ""))
        else:
            bs = bs_from_hwp_angle(_number(cfg, "hwp_deg", ""))
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"field '{'T' if has_t else 'hwp_deg'}': {exc}") from exc
    state = InputState(_photons(cfg, "a"), _photons(cfg, "b"))
    parsed = {"bs": bs, "state": state, "scan": None}

    if "scan" in cfg:
        sc = cfg["scan"]
        if not isinstance(sc, dict):
            raise ConfigError("field 'scan' must be an object")
        port = sc.get("port", "b")
        if port not in ("a", "b"):
            raise ConfigError(f"field 'scan.port' must be \"a\" or \"b\", got {port!r}")
        lo = _number(sc, "from", "scan.")
        hi = _number(sc, "to", "scan.")
        steps = sc.get("steps")
        if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
            raise ConfigError(f"field 'scan.steps' must be an integer >= 2, got {steps!r}")
        if not hi > lo:
            raise ConfigError("field 'scan.to' must exceed 'scan.from'")
        pattern = sc.get("pattern", [state.m, state.n])
        if (not isinstance(pattern, list) or len(pattern) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in pattern)
                or sum(pattern) != state.total):
            raise ConfigError(f"field 'scan.pattern' must be [p, q] with p + q = {state.total}")
        parsed["scan"] = ScanSpec(state, port, np.linspace(lo, hi, steps), bs, tuple(pattern))
    return parsed


def load_config(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path}: {exc}") from exc
    return parse_config(raw)


def cmd_dist(config_path: str) -> int:
    cfg = load_config(config_path)
    dist = output_distribution(cfg["state"], cfg["bs"])
    print("p,q,probability")
    for (p, q), v in dist.probs.items():
        print(f"{p},{q},{fmt(v)}")
    print(f"sum,{fmt(sum(dist.probs.values()))}")
    return EXIT_OK


def cmd_scan(config_path: str, out_csv_path: str) -> int:
    cfg = load_config(config_path)
    if cfg["scan"] is None:
        raise ConfigError("missing field 'scan'")
    check_cap(cfg["state"])
    scan = delay_scan(cfg["scan"])
    with open(out_csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["delay", "probability"])
        for d, v in zip(scan.delays, scan.probs):
            writer.writerow([fmt(d), fmt(v)])
    print(f"baseline={fmt(scan.baseline)} visibility={fmt(max(scan.visibility, 0.0))}")
    return EXIT_OK


def cmd_null_t(m: int, n: int) -> int:
    roots = null_transmissivity(m, n)
    if not roots:
        print("none")
    for T in roots:
        print(fmt(T))
    return EXIT_OK


def random_config(rng: np.random.Generator, max_photons: int) -> Dict[str, Any]:
    total = int(rng.integers(1, max_photons + 1))
    m = int(rng.integers(0, total + 1))
    photons = [
        {"tau": round(float(rng.uniform(-3.0, 3.0)), 6),
         "sigma": round(float(rng.uniform(0.5, 2.0)), 6),
         "tag": int(rng.integers(0, 3))}
        for _ in range(total)
    ]
    return {"T": round(float(rng.uniform(0.05, 0.95)), 6),
            "port_a": photons[:m], "port_b": photons[m:]}


def cmd_oracle_check(max_photons: int, trials: int, seed: int) -> int:
    if max_photons > ORACLE_MAX_PHOTONS:
        raise PhotonCapError(f"oracle supports at most {ORACLE_MAX_PHOTONS} photons, got {max_photons}")
    if max_photons < 1 or trials < 1:
        raise ConfigError("max-photons and trials must be positive")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        raw = random_config(rng, max_photons)
        cfg = parse_config(raw)
        tvd = output_distribution(cfg["state"], cfg["bs"]).tvd(
            oracle_distribution(cfg["state"], cfg["bs"]))
        worst = max(worst, tvd)
        if not tvd < ORACLE_TVD_LIMIT:
            print(f"max_tvd={tvd:.3e}")
            print(json.dumps(raw, sort_keys=True))
            return EXIT_CHECK_FAILED
    print(f"max_tvd={worst:.3e}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homsim",
        description="Multi-photon Hong-Ou-Mandel interference at an asymmetric beam splitter.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="output photon-number distribution")
    p.add_argument("--config", required=True)

    p = sub.add_parser("scan", help="delay scan, CSV output")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("null-t", help="transmissivities where |m,n> -> (m,n) vanishes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("oracle-check", help="compare against the brute-force oracle")
    p.add_argument("--max-photons", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "dist":
            return cmd_dist(args.config)
        if args.command == "scan":
            return cmd_scan(args.config, args.out)
        if args.command == "null-t":
            if args.m + args.n > MAX_PHOTONS:
                raise PhotonCapError(f"{args.m + args.n} photons exceeds the cap of {MAX_PHOTONS}")
            return cmd_null_t(args.m, args.n)
        return cmd_oracle_check(args.max_photons, args.trials, args.seed)
    except ConfigError as exc:
        print(f"homsim: config error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PhotonCapError as exc:
        print(f"homsim: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ZeroBaselineError as exc:
        print(f"homsim: {exc}", file=sys.stderr)
        return EXIT_ZERO_BASELINE
    except ValueError as exc:
        print(f"homsim: invalid argument: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
