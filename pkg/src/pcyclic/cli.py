"""pcyclic command line: build | verify | search | solve | audit.

Exit codes: 0 success/optimal, 1 internal error, 2 invalid construction,
3 not optimal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .audit import (
    audit_worked_examples,
    check_lemma_conditions,
    matching_constructions,
    soundness_sweep,
    solve_zero_congruence,
)
from .code_algebra import SameCosetError, build_code
from .cyclotomic import build_cosets
from .distance import optimality_verdict
from .ext_field import make_field
from .field_core import Poly

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_NOT_OPTIMAL = 0, 1, 2, 3
DEFAULT_PAIRS = "3:3,3:5,5:3,7:3"

log = logging.getLogger("pcyclic")


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    m: int | None = None
    v: int | None = None
    u: int = 1
    k: int | None = None
    t: int | None = None
    s: int | None = None
    h: int | None = None
    primitive_poly: str | None = None
    format: str = "json"
    threads: int = 1
    pairs: str = DEFAULT_PAIRS
    out: str | None = None
    max_n: int = 10_000
    witness_budget: int = 0
    all_members: bool = False
    figures: str | None = None

    REQUIRED = {
        "build": ("p", "m", "v"),
        "verify": ("p", "m", "v"),
        "search": ("p", "m"),
        "solve": ("p", "m", "t", "s", "h"),
        "audit": (),
    }

    def validate(self):
        missing = [f for f in self.REQUIRED[self.command] if getattr(self, f) is None]
        if missing:
            raise ValueError(f"{self.command} needs --{' --'.join(missing)}")


class InvalidConstruction(Exception):
    pass


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text if text is not None else json.dumps(obj, indent=2))


def _field(cfg: RunConfig):
    override = Poly.from_string(cfg.p, cfg.primitive_poly) if cfg.primitive_poly else None
    try:
        return make_field(cfg.p, cfg.m, override)
    except ValueError as exc:
        raise InvalidConstruction(str(exc)) from exc


def _code(cfg: RunConfig):
    field = _field(cfg)
    table = build_cosets(cfg.p, field.n)
    try:
        return field, table, build_code(field, table, cfg.u, cfg.v)
    except SameCosetError as exc:
        raise InvalidConstruction(f"SameCoset: {exc}") from exc


# ------------------------------------------------------------------ commands


def cmd_build(cfg: RunConfig) -> int:
    _, _, code = _code(cfg)
    d = code.describe()
    text = (
        f"C_{code.p}({code.u},{code.v})  n={code.n}  dimension={code.dimension}\n"
        f"generator: {code.generator.pretty()}"
    )
    _emit(d, cfg.format, text)
    return EXIT_OK


def verify_record(cfg: RunConfig):
    field, table, code = _code(cfg)
    rep = optimality_verdict(code, witness_budget=cfg.witness_budget)
    out = rep.as_dict()
    if field.has_tables:
        out["lemma_conditions"] = check_lemma_conditions(field, table, code.v).as_dict()
    out["hypotheses"] = [h.as_dict() for h in matching_constructions(code.p, code.m, code.v)]
    return rep, out


def cmd_verify(cfg: RunConfig) -> int:
    rep, out = verify_record(cfg)
    n, k, d = rep.triple
    text = "\n".join(
        [
            f"C_{rep.parameters['p']}({rep.parameters['u']},{rep.parameters['v']}): [{n}, {k}, {d}]",
            f"verdict: {rep.distance.verdict}   optimal: {rep.optimal}",
            f"sphere packing: V(n,2) = {rep.distance.bound_value} vs p^(n-k) = {rep.distance.bound_capacity}",
            f"lemma conditions: {out.get('lemma_conditions')}",
        ]
        + [f"construction {h['tag']}: {h['prediction']}" for h in out["hypotheses"]]
    )
    _emit(out, cfg.format, text)
    return EXIT_OK if rep.optimal else EXIT_NOT_OPTIMAL


def _search_one(field, table, v, budget):
    code = build_code(field, table, 1, v)
    rep = optimality_verdict(code, witness_budget=budget)
    conds = check_lemma_conditions(field, table, v)
    return {
        "v": v,
        "optimal": rep.optimal,
        "verdict": rep.distance.verdict,
        "cond1": conds.cond1,
        "cond2": conds.cond2,
        "cond3": conds.cond3,
    }


def cmd_search(cfg: RunConfig) -> int:
    field = _field(cfg)
    if field.n > cfg.max_n:
        raise InvalidConstruction(f"n = {field.n} exceeds the search cap {cfg.max_n} (--max-n)")
    table = build_cosets(cfg.p, field.n)
    cands = [v for v in table.leaders if table.length(v) == cfg.m and not table.same_coset(v, 1)]
    with ThreadPoolExecutor(max_workers=max(1, cfg.threads)) as pool:
        rows = list(pool.map(lambda v: _search_one(field, table, v, cfg.witness_budget), cands))
    optimal = [r for r in rows if r["optimal"]]
    if cfg.all_members:
        for r in optimal:
            r["coset"] = list(table.coset(r["v"]))
    out = {
        "p": cfg.p,
        "m": cfg.m,
        "n": field.n,
        "candidates": len(cands),
        "optimal_v": [r["v"] for r in optimal],
        "results": optimal,
    }
    text = f"p={cfg.p} m={cfg.m} n={field.n}: {len(optimal)}/{len(cands)} optimal\n" + "\n".join(
        f"  v={r['v']:>6}  cond1={r['cond1']!s:5} cond2={r['cond2']!s:5} cond3={r['cond3']!s:5}"
        for r in optimal
    )
    _emit(out, cfg.format, text)
    if cfg.figures:
        from .plotting import plot_sphere_packing

        Path(cfg.figures).mkdir(parents=True, exist_ok=True)
        plot_sphere_packing(cfg.p, range(2, max(cfg.m, 2) + 3), Path(cfg.figures) / f"sphere_packing_p{cfg.p}.png")
    return EXIT_OK


def cmd_solve(cfg: RunConfig) -> int:
    sol = solve_zero_congruence(cfg.p, cfg.m, cfg.t, cfg.s, cfg.h)
    out = sol.as_dict()
    if sol.solvable:
        text = (
            f"({cfg.p}^{cfg.t}-1) v = {cfg.p}^{cfg.s}-{cfg.p}^{cfg.h} (mod {cfg.p**cfg.m - 1})\n"
            f"v = {sol.base_solution} (mod {sol.step})  [{sol.gcd} solutions mod p^m-1]\n"
            f"mod n: {sol.all_solutions_mod_n}"
        )
    else:
        out["violation"] = f"gcd(p^t-1, p^m-1) = {sol.gcd} does not divide p^s-p^h = {cfg.p**cfg.s - cfg.p**cfg.h}"
        text = "no solutions: " + out["violation"]
    _emit(out, cfg.format, text)
    return EXIT_OK


def parse_pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        a, _, b = item.strip().partition(":")
        out.append((int(a), int(b)))
    return out


def cmd_audit(cfg: RunConfig) -> int:
    records = audit_worked_examples()
    pairs = parse_pairs(cfg.pairs)
    with ThreadPoolExecutor(max_workers=max(1, cfg.threads)) as pool:
        sweeps = list(pool.map(lambda pm: soundness_sweep(*pm), pairs))
    report = {"examples": records, "sweeps": [s.as_dict() for s in sweeps]}
    out_path = Path(cfg.out or "audit_report.json")
    out_path.write_text(json.dumps(report, indent=2) + "\n")
    figures = []
    if cfg.figures:
        from .plotting import render_sweep_figures

        figures = [str(f) for f in render_sweep_figures(sweeps, cfg.figures)]
    lines = [f"{'example':40} status"]
    lines += [f"{r['example_id']:40} {r['status']}" for r in records]
    lines.append("")
    lines.append(f"{'sweep':10} {'checked':>8} {'pass':>6} {'counterex':>10}")
    for s in sweeps:
        lines.append(f"p={s.p} m={s.m:<4} {s.checked:>8} {len(s.passing):>6} {len(s.counterexamples):>10}")
    lines.append(f"report written to {out_path}")
    lines += [f"figure: {f}" for f in figures]
    _emit({**report, "report_file": str(out_path), "figures": figures}, cfg.format, "\n".join(lines))
    bad = any(s.counterexamples for s in sweeps)
    return EXIT_NOT_OPTIMAL if bad else EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "search": cmd_search,
    "solve": cmd_solve,
    "audit": cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        for flag in ("p", "m", "v", "k", "t", "s", "h"):
            sp.add_argument(f"--{flag}", type=int)
        sp.add_argument("--u", type=int, default=1)
        sp.add_argument("--primitive-poly", help="modulus override, coefficients lowest first")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--pairs", default=DEFAULT_PAIRS, help="audit sweep pairs p:m,...")
        sp.add_argument("--out", help="audit report path")
        sp.add_argument("--max-n", type=int, default=10_000)
        sp.add_argument("--witness-budget", type=int, default=0, help="weight-4 witness probes")
        sp.add_argument("--all-members", action="store_true", help="search: list full cosets")
        sp.add_argument("--figures", help="directory for rendered figures")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k.replace("-", "_"): v for k, v in vars(args).items()})
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except (InvalidConstruction, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error: %s", exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
