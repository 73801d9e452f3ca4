"""Command-line front end.

Subcommands: dim, count, patterns, pops, monomials, char, branch, verify.
Weights are given in exactly one coordinate system, either --omegas with the
fundamental-weight multiplicities or --lambdas with the weakly decreasing
tuple; --rank is optional and must agree with the tuple length when present.

Listings stream one JSON object per line (--format json) or one display line
per item (--format text) and are deterministic across runs. Exit status is 0
on success, 1 when a requested check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import cache as cache_mod
from .branching import shtepin_branch_l, shtepin_branch_v, verify_identities, weyl_filtration
from .characters import (
    character_direct,
    character_fermionic,
    character_to_csv,
    character_to_json,
    character_to_latex,
    character_to_text,
)
from .oracle import weyl_dim
from .patterns import enumerate_patterns, enumerate_restricted_patterns, pattern_to_json
from .pops import (
    enumerate_pops,
    enumerate_restricted_pops,
    monomial_to_json,
    pop_count_formula,
    pop_monomial,
    pop_to_json,
    restricted_pop_count_formula,
)
from .rootsys import DominantWeight, sweep_dominant_weights

CACHE_ENV_VAR = "CPOPS_CACHE_DIR"

MONOMIAL_GRAMMAR = (
    'monomial text grammar: WORD := "1" | FACTOR (" " FACTOR)* ; '
    'FACTOR := "x-(" I "," J ["~"] ")@t^" S with "~" marking a barred label'
)


@dataclass
class RunConfig:
    """Resolved invocation settings shared by the subcommands."""

    weight: DominantWeight
    method: str = "direct"
    fmt: str = "text"
    cache_dir: Optional[str] = None
    verbose: bool = False


def _parse_int_tuple(text: str, parser: argparse.ArgumentParser, flag: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        parser.error(f"{flag} expects a comma-separated integer list, got {text!r}")


def _resolve_weight(args, parser: argparse.ArgumentParser) -> DominantWeight:
    has_omegas = getattr(args, "omegas", None) is not None
    has_lambdas = getattr(args, "lambdas", None) is not None
    if has_omegas == has_lambdas:
        parser.error("supply exactly one of --omegas or --lambdas")
    try:
        if has_omegas:
            weight = DominantWeight.from_omegas(
                _parse_int_tuple(args.omegas, parser, "--omegas"))
        else:
            weight = DominantWeight.from_lambdas(
                _parse_int_tuple(args.lambdas, parser, "--lambdas"))
    except ValueError as exc:
        parser.error(str(exc))
    if args.rank is not None and args.rank != weight.rank:
        parser.error(f"--rank {args.rank} inconsistent with weight length {weight.rank}")
    return weight


def _add_weight_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--rank", type=int, default=None,
                     help="rank r; optional, checked against the weight length")
    sub.add_argument("--omegas", default=None,
                     help="fundamental-weight multiplicities m_1,...,m_r")
    sub.add_argument("--lambdas", default=None,
                     help="weakly decreasing tuple lam_1,...,lam_r")


def _config(args, parser) -> RunConfig:
    cache_dir = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV_VAR)
    return RunConfig(
        weight=_resolve_weight(args, parser),
        method=getattr(args, "method", "direct"),
        fmt=getattr(args, "format", "text"),
        cache_dir=cache_dir,
        verbose=getattr(args, "verbose", False),
    )


def cmd_dim(args, parser) -> int:
    cfg = _config(args, parser)
    value = weyl_dim(cfg.weight) if args.irreducible else pop_count_formula(cfg.weight)
    if args.check:
        stream = enumerate_patterns(cfg.weight) if args.irreducible \
            else enumerate_pops(cfg.weight)
        counted = sum(1 for _ in stream)
        if counted != value:
            print(f"mismatch: formula {value}, enumeration {counted}",
                  file=sys.stderr)
            return 1
    print(value)
    return 0


def cmd_count(args, parser) -> int:
    cfg = _config(args, parser)
    counts = {
        "patterns": sum(1 for _ in enumerate_patterns(cfg.weight)),
        "pops": sum(1 for _ in enumerate_pops(cfg.weight)),
    }
    if args.restricted:
        eta = cfg.weight.lam
        counts["restricted_patterns"] = sum(
            1 for _ in enumerate_restricted_patterns(eta))
        counts["restricted_pops"] = sum(
            1 for _ in enumerate_restricted_pops(eta))
        counts["restricted_pop_formula"] = restricted_pop_count_formula(eta)
    counts["pop_formula"] = pop_count_formula(cfg.weight)
    if cfg.fmt == "json":
        print(json.dumps(counts, sort_keys=True))
    else:
        for name in sorted(counts):
            print(f"{name}: {counts[name]}")
    return 0


def _print_stream(items, to_json, to_text, fmt: str) -> None:
    for item in items:
        if fmt == "json":
            print(json.dumps(to_json(item), sort_keys=True))
        else:
            print(to_text(item))


def _pattern_text(p) -> str:
    return (f"eta={json.dumps([list(r) for r in p.eta_rows])} "
            f"lambda={json.dumps([list(r) for r in p.lambda_rows])}")


def cmd_patterns(args, parser) -> int:
    cfg = _config(args, parser)
    if args.restricted:
        items = enumerate_restricted_patterns(cfg.weight.lam)
    else:
        items = enumerate_patterns(cfg.weight)
    _print_stream(items, pattern_to_json, _pattern_text, cfg.fmt)
    return 0


def _pop_text(p) -> str:
    overlays = {}
    for (i, j), parts in sorted(p.barred_overlays.items()):
        overlays[f"({i},{j}~)"] = list(parts)
    for (i, j), parts in sorted(p.unbarred_overlays.items()):
        overlays[f"({i},{j})"] = list(parts)
    return _pattern_text(p.pattern) + f" overlays={json.dumps(overlays, sort_keys=True)}"


def cmd_pops(args, parser) -> int:
    cfg = _config(args, parser)
    if args.restricted:
        items = enumerate_restricted_pops(cfg.weight.lam)
    else:
        items = enumerate_pops(cfg.weight)
    _print_stream(items, pop_to_json, _pop_text, cfg.fmt)
    return 0


def cmd_monomials(args, parser) -> int:
    cfg = _config(args, parser)
    words = (pop_monomial(p) for p in enumerate_pops(cfg.weight))
    _print_stream(words, monomial_to_json, lambda w: w.text(), cfg.fmt)
    return 0


def _character_with_cache(cfg: RunConfig, method: str):
    compute = character_direct if method == "direct" else character_fermionic
    if cfg.cache_dir is None:
        return compute(cfg.weight)
    cached = cache_mod.cache_lookup(
        cfg.cache_dir, cfg.weight.rank, cfg.weight.lam, method)
    if cached is not None:
        if cfg.verbose:
            print(f"cache hit: {method} {cfg.weight.lam}", file=sys.stderr)
        return cached
    ch = compute(cfg.weight)
    cache_mod.cache_store(cfg.cache_dir, cfg.weight.rank, cfg.weight.lam, method, ch)
    return ch


def _render_character(ch, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(character_to_json(ch), sort_keys=True)
    if fmt == "csv":
        return character_to_csv(ch).rstrip("\n")
    if fmt == "latex":
        return character_to_latex(ch)
    return character_to_text(ch)


def cmd_char(args, parser) -> int:
    cfg = _config(args, parser)
    if cfg.method == "both":
        direct = _character_with_cache(cfg, "direct")
        fermionic = _character_with_cache(cfg, "fermionic")
        if direct != fermionic:
            print("character mismatch between direct and fermionic methods",
                  file=sys.stderr)
            return 1
        ch = direct
    else:
        ch = _character_with_cache(cfg, cfg.method)
    print(_render_character(ch, cfg.fmt))
    return 0


def cmd_branch(args, parser) -> int:
    cfg = _config(args, parser)
    if args.kind == "filtration":
        if cfg.weight.rank < 2:
            parser.error("--kind filtration needs rank at least 2")
        for term in weyl_filtration(cfg.weight):
            if cfg.fmt == "json":
                print(json.dumps({
                    "ell": list(term.ell), "ellp": list(term.ellp),
                    "mult": term.mult, "target": list(term.target),
                }, sort_keys=True))
            else:
                print(f"ell={list(term.ell)} ellp={list(term.ellp)} "
                      f"mult={term.mult} target={list(term.target)}")
    elif args.kind == "shtepin-v":
        for eta in shtepin_branch_v(cfg.weight):
            print(json.dumps(list(eta)) if cfg.fmt == "json" else str(list(eta)))
    else:  # shtepin-l
        for nu in shtepin_branch_l(cfg.weight.lam):
            print(json.dumps(list(nu)) if cfg.fmt == "json" else str(list(nu)))
    return 0


def cmd_verify(args, parser) -> int:
    if args.rank is None and args.omegas is None and args.lambdas is None:
        parser.error("verify needs --rank (with --max-total) or a weight")
    if args.omegas is not None or args.lambdas is not None:
        weights = [_resolve_weight(args, parser)]
    else:
        weights = list(sweep_dominant_weights(args.rank, args.max_total))
    reports = [verify_identities(w) for w in weights]
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for report in reports:
            print(report.to_text())
        n_fail = sum(0 if r.ok else 1 for r in reports)
        print(f"verified {len(reports)} weight(s), {n_fail} failure(s)")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpops",
        description="Exact symplectic pattern/overlay combinatorics and "
                    "graded Weyl-module characters.",
        epilog=MONOMIAL_GRAMMAR,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension by the product formula")
    _add_weight_flags(p)
    p.add_argument("--irreducible", action="store_true",
                   help="dimension of the irreducible module instead")
    p.add_argument("--check", action="store_true",
                   help="cross-check the formula by enumeration")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("count", help="pattern and overlay counts")
    _add_weight_flags(p)
    p.add_argument("--restricted", action="store_true",
                   help="also count restricted patterns and overlays")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("patterns", help="stream all patterns")
    _add_weight_flags(p)
    p.add_argument("--restricted", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("pops", help="stream all partition-overlaid patterns")
    _add_weight_flags(p)
    p.add_argument("--restricted", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=cmd_pops)

    p = sub.add_parser("monomials", help="stream the basis words, one per overlay")
    _add_weight_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_monomials)

    p = sub.add_parser("char", help="graded character")
    _add_weight_flags(p)
    p.add_argument("--method", choices=("direct", "fermionic", "both"),
                   default="direct",
                   help="'both' compares the two computations and fails on "
                        "any difference")
    p.add_argument("--format", choices=("text", "json", "csv", "latex"),
                   default="text",
                   help="csv columns: grade,a1..ar,mult; "
                        "latex terms: m q^{s} e^{...}")
    p.add_argument("--cache-dir", default=None,
                   help=f"cache directory (default: ${CACHE_ENV_VAR})")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("branch", help="filtration and branching listings")
    _add_weight_flags(p)
    p.add_argument("--kind", choices=("filtration", "shtepin-v", "shtepin-l"),
                   default="filtration")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("verify", help="run the identity suite over a weight sweep")
    _add_weight_flags(p)
    p.add_argument("--max-total", type=int, default=2,
                   help="sweep all weights with multiplicity sum up to this")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
