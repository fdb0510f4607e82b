"""Batch front-end: verification sweeps, counterexample hunting, reports.

Subcommands
-----------
verify     run the selected checks over surfaces x parameter grid, write one
           CSV row per report plus a JSON summary.
hunt       generate random nonneg-coefficient polynomial surfaces and sweep
           parameters looking for cases where an as-written bound falls below
           the verified left side.
corpus     list registered surfaces.
constants  print the kink-moment table over a theta grid.

Exit codes: 0 clean; 1 a proof-form bound was violated on an input whose
membership refuter found no violation (an acceptance failure); 2 usage or
configuration error.

Reports are deterministic for a given config and seed: rows are emitted in
sorted order and floats are written with shortest round-trip repr.  Wall time
lives only in the JSON summary, never in the CSVs.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .bounds import (
    AS_WRITTEN,
    CLASSICAL,
    DIRECT,
    HOLDER,
    POWER_MEAN,
    PROOF_FORM,
    VARIANTS,
    BOUND_VIOLATED,
    BoundReport,
    DeviationTerms,
    bound_classical,
    bound_direct,
    bound_holder,
    bound_power_mean,
    deviation_terms,
    hh_chain_2d,
    identity_report,
    kink_moment,
)
from .convexity import (
    NO_VIOLATION,
    MembershipReport,
    SamplingPlan,
    check_class_first,
    check_class_second,
    check_def1_coordinated,
)
from .errors import ConfigError, OutOfDomainError, ParameterError
from .geometry import GenParams, Rect
from .oracle import RationalPoly2, deviation_exact
from .surfaces import Surface, corpus, mixed_partial_func, poly_surface

ALL_CHECKS = ("identity", "chain", CLASSICAL, DIRECT, HOLDER, POWER_MEAN, "membership")
BOUND_CHECKS = (CLASSICAL, DIRECT, HOLDER, POWER_MEAN)
SKIPPED = "skipped"

OUT_ENV_VAR = "HHVERIFY_OUT"

PARAM_KEYS = ("s1", "s2", "alpha1", "alpha2", "m1", "m2", "q")

BOUNDS_HEADER = [
    "surface", "theorem", "variant",
    "s1", "s2", "alpha1", "alpha2", "m1", "m2", "q",
    "lhs", "rhs", "slack", "error_budget", "verdict",
]
MEMBERSHIP_HEADER = [
    "surface", "target", "notion",
    "s1", "s2", "alpha1", "alpha2", "m1", "m2", "q",
    "verdict", "worst_margin",
    "witness_x", "witness_y", "witness_z", "witness_w", "witness_lam", "witness_mu",
    "samples_checked",
]
CHAINS_HEADER = [
    "surface", "center", "midline_mean", "double_mean", "edge_mean", "corner_avg",
    "monotone", "worst_gap", "error_budget",
]
IDENTITY_HEADER = ["surface", "residual", "error_budget", "within_budget"]


@dataclass
class RunConfig:
    surfaces: list[str]
    rect: Rect
    param_grid: dict[str, list[float]]
    variants: list[str]
    checks: list[str]
    plan: SamplingPlan
    output_dir: Path
    seed: int
    hunt_count: int = 20
    hunt_degree: int = 4
    jobs: int = 1


def _as_list(value, name):
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{name} must be a non-empty list")
    return value


def build_config(raw: dict, *, seed=None, out=None, jobs=None, default_variants=(PROOF_FORM,)) -> RunConfig:
    """Validate a parsed config mapping and apply CLI/env overrides."""
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")
    known = {
        "surfaces", "rect", "param_grid", "variants", "checks", "plan",
        "output_dir", "seed", "hunt",
    }
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    registry = corpus()
    names = raw.get("surfaces", ["all"])
    names = _as_list(names, "surfaces")
    if names == ["all"]:
        names = list(registry)
    for n in names:
        if n not in registry:
            raise ConfigError(
                f"unknown surface {n!r}; registered: {', '.join(registry)}"
            )

    rect_raw = raw.get("rect", [0.0, 1.0, 0.0, 1.0])
    if not (isinstance(rect_raw, list) and len(rect_raw) == 4):
        raise ConfigError("rect must be a list [a, b, c, d]")
    try:
        rect = Rect(*map(float, rect_raw))
    except (ParameterError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad rect: {exc}") from exc

    grid_raw = raw.get("param_grid", {})
    if not isinstance(grid_raw, dict):
        raise ConfigError("param_grid must be an object of value lists")
    unknown = set(grid_raw) - set(PARAM_KEYS)
    if unknown:
        raise ConfigError(f"unknown param_grid keys: {sorted(unknown)}")
    grid: dict[str, list[float]] = {}
    for key in PARAM_KEYS:
        values = grid_raw.get(key, [1.0])
        if not isinstance(values, list) or not values:
            raise ConfigError(f"no parameters to sweep: param_grid.{key} is empty")
        grid[key] = [float(v) for v in values]

    variants = raw.get("variants", list(default_variants))
    variants = _as_list(variants, "variants")
    for v in variants:
        if v not in VARIANTS:
            raise ConfigError(f"unknown variant {v!r}; expected subset of {VARIANTS}")

    checks = raw.get("checks", list(ALL_CHECKS))
    checks = _as_list(checks, "checks")
    for c in checks:
        if c not in ALL_CHECKS:
            raise ConfigError(f"unknown check {c!r}; expected subset of {ALL_CHECKS}")

    run_seed = int(raw.get("seed", 0)) if seed is None else int(seed)

    plan_raw = raw.get("plan", {})
    if not isinstance(plan_raw, dict):
        raise ConfigError("plan must be an object")
    try:
        plan = SamplingPlan(
            grid_per_axis=int(plan_raw.get("grid_per_axis", 9)),
            random_trials=int(plan_raw.get("random_trials", 10000)),
            seed=int(plan_raw.get("seed", run_seed)),
            tolerance=float(plan_raw.get("tolerance", 1e-9)),
        )
    except ValueError as exc:
        raise ConfigError(f"bad plan: {exc}") from exc

    out_dir = raw.get("output_dir", "out")
    out_dir = os.environ.get(OUT_ENV_VAR, out_dir)
    if out is not None:
        out_dir = out

    hunt_raw = raw.get("hunt", {})
    if not isinstance(hunt_raw, dict):
        raise ConfigError("hunt must be an object")

    cfg = RunConfig(
        surfaces=list(names),
        rect=rect,
        param_grid=grid,
        variants=list(variants),
        checks=list(checks),
        plan=plan,
        output_dir=Path(out_dir),
        seed=run_seed,
        hunt_count=int(hunt_raw.get("count", 20)),
        hunt_degree=int(hunt_raw.get("degree", 4)),
        jobs=max(1, int(jobs)) if jobs is not None else 1,
    )
    param_combos(cfg.param_grid)  # validates every grid cell
    return cfg


def load_config(path, **overrides) -> RunConfig:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return build_config(raw, **overrides)


def param_combos(grid: dict[str, list[float]]) -> list[GenParams]:
    """Cartesian product of the parameter grid, in deterministic key order."""
    values = [grid[k] for k in PARAM_KEYS]
    combos = []
    for combo in itertools.product(*values):
        kwargs = dict(zip(PARAM_KEYS, combo))
        try:
            combos.append(GenParams(**kwargs))
        except ParameterError as exc:
            raise ConfigError(f"bad param grid cell {kwargs}: {exc}") from exc
    if not combos:
        raise ConfigError("no parameters to sweep")
    return combos


# --------------------------------------------------------------------------
# row formatting


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _param_cols(p: GenParams) -> dict:
    return {k: _fmt(float(getattr(p, k))) for k in PARAM_KEYS}


def _bound_row(surface: str, rep: BoundReport, p: GenParams) -> dict:
    return {
        "surface": surface,
        "theorem": rep.theorem,
        "variant": rep.variant,
        **_param_cols(p),
        "lhs": _fmt(rep.lhs),
        "rhs": _fmt(rep.rhs),
        "slack": _fmt(rep.slack),
        "error_budget": _fmt(rep.error_budget),
        "verdict": rep.verdict,
    }


def _skipped_bound_row(surface, theorem, variant, p) -> dict:
    return {
        "surface": surface,
        "theorem": theorem,
        "variant": variant,
        **_param_cols(p),
        "lhs": "",
        "rhs": "",
        "slack": "",
        "error_budget": "",
        "verdict": SKIPPED,
    }


def _membership_row(surface, target, notion, p, rep: MembershipReport | None) -> dict:
    row = {
        "surface": surface,
        "target": target,
        "notion": notion,
        **_param_cols(p),
    }
    if rep is None:
        row.update(
            verdict=SKIPPED,
            worst_margin="",
            witness_x="", witness_y="", witness_z="",
            witness_w="", witness_lam="", witness_mu="",
            samples_checked="",
        )
    else:
        wx, wy, wz, ww, wl, wm = rep.witness
        row.update(
            verdict=rep.verdict,
            worst_margin=_fmt(rep.worst_margin),
            witness_x=_fmt(wx), witness_y=_fmt(wy), witness_z=_fmt(wz),
            witness_w=_fmt(ww), witness_lam=_fmt(wl), witness_mu=_fmt(wm),
            samples_checked=str(rep.samples_checked),
        )
    return row


def _sort_rows(rows, header):
    rows.sort(key=lambda row: tuple(row[col] for col in header))
    return rows


def _write_csv(path: Path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


# --------------------------------------------------------------------------
# verify


def abs_mixed_surface(s: Surface, q: float) -> Surface:
    """The hypothesis function of the generalized bounds: |d2f|^q as a surface."""
    d2f = mixed_partial_func(s)
    if q == 1.0:
        fn = lambda x, y: np.abs(d2f(x, y))
    else:
        fn = lambda x, y: np.abs(d2f(x, y)) ** q
    return Surface(name=f"|d2f[{s.name}]|^{q:g}", domain=s.domain, f=fn)


class _HypothesisCache:
    """Membership verdicts for bound hypotheses, computed once per key."""

    def __init__(self, rect: Rect, plan: SamplingPlan):
        self.rect = rect
        self.plan = plan
        self._store: dict = {}

    def report(self, s: Surface, kind: str, p: GenParams) -> MembershipReport | None:
        """None when the evaluation hull leaves the surface's domain."""
        if kind == CLASSICAL:
            key = (s.name, "def1")
        else:
            key = (s.name, "first", p.q, p.s1, p.s2, p.alpha1, p.alpha2, p.m1, p.m2)
        if key not in self._store:
            target = abs_mixed_surface(s, 1.0 if kind == CLASSICAL else p.q)
            try:
                if kind == CLASSICAL:
                    rep = check_def1_coordinated(target, self.rect, self.plan)
                else:
                    rep = check_class_first(target, self.rect, p, self.plan)
            except OutOfDomainError:
                rep = None
            self._store[key] = rep
        return self._store[key]

    def passes(self, s: Surface, kind: str, p: GenParams) -> bool:
        rep = self.report(s, kind, p)
        return rep is not None and rep.verdict == NO_VIOLATION


def _applicable_kinds(checks, q: float):
    kinds = []
    if DIRECT in checks and q == 1.0:
        kinds.append(DIRECT)
    if HOLDER in checks and q > 1.0:
        kinds.append(HOLDER)
    if POWER_MEAN in checks:
        kinds.append(POWER_MEAN)
    return kinds


_BOUND_FNS = {DIRECT: bound_direct, HOLDER: bound_holder, POWER_MEAN: bound_power_mean}


def _verify_surface(name, entry, cfg, combos, hyp_cache):
    """All rows for one surface; returns (rows-by-file, violations)."""
    s = entry.surface
    rect = cfg.rect
    bound_rows, membership_rows, chain_rows, identity_rows = [], [], [], []
    violations = []  # (kind, params) for violated proof-form rows
    classical_p = GenParams()
    needs_dev = any(c in cfg.checks for c in BOUND_CHECKS)

    dev = deviation_terms(s, rect) if needs_dev else None

    if "identity" in cfg.checks:
        rep = identity_report(s, rect)
        identity_rows.append(
            {
                "surface": name,
                "residual": _fmt(rep.residual),
                "error_budget": _fmt(rep.error_budget),
                "within_budget": _fmt(abs(rep.residual) <= rep.error_budget),
            }
        )
    if "chain" in cfg.checks:
        chain = hh_chain_2d(s, rect)
        c1, c2, c3, c4, c5 = chain.values
        chain_rows.append(
            {
                "surface": name,
                "center": _fmt(c1),
                "midline_mean": _fmt(c2),
                "double_mean": _fmt(c3),
                "edge_mean": _fmt(c4),
                "corner_avg": _fmt(c5),
                "monotone": _fmt(chain.monotone),
                "worst_gap": _fmt(chain.worst_gap),
                "error_budget": _fmt(chain.error_budget),
            }
        )
    if CLASSICAL in cfg.checks:
        rep = bound_classical(s, rect, dev=dev)
        bound_rows.append(_bound_row(name, rep, classical_p))
        if rep.verdict == BOUND_VIOLATED:
            violations.append((CLASSICAL, classical_p))

    if "membership" in cfg.checks:
        membership_rows.append(
            _membership_row(
                name, "f", "coordinated", classical_p,
                check_def1_coordinated(s, rect, cfg.plan),
            )
        )

    for p in combos:
        for kind in _applicable_kinds(cfg.checks, p.q):
            for variant in cfg.variants:
                try:
                    rep = _BOUND_FNS[kind](s, rect, p, variant=variant, dev=dev)
                except OutOfDomainError:
                    bound_rows.append(_skipped_bound_row(name, kind, variant, p))
                    continue
                bound_rows.append(_bound_row(name, rep, p))
                if rep.verdict == BOUND_VIOLATED and variant == PROOF_FORM:
                    violations.append((kind, p))
        if "membership" in cfg.checks:
            for notion, checker in (
                ("first-sense", check_class_first),
                ("second-sense", check_class_second),
            ):
                try:
                    rep = checker(s, rect, p, cfg.plan)
                except OutOfDomainError:
                    rep = None
                membership_rows.append(_membership_row(name, "f", notion, p, rep))

    failing = []
    for kind, p in violations:
        if hyp_cache.passes(s, kind, p):
            failing.append((name, kind, p))
    return (
        {
            "bounds": bound_rows,
            "membership": membership_rows,
            "chains": chain_rows,
            "identity": identity_rows,
        },
        failing,
    )


def run_verify(cfg: RunConfig) -> int:
    """Execute the configured checks; returns the process exit code."""
    t0 = time.time()
    combos = param_combos(cfg.param_grid)
    registry = corpus()
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    hyp_cache = _HypothesisCache(cfg.rect, cfg.plan)

    tasks = [(name, registry[name]) for name in cfg.surfaces]
    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(
                pool.map(
                    lambda t: _verify_surface(t[0], t[1], cfg, combos, hyp_cache),
                    tasks,
                )
            )
    else:
        results = [
            _verify_surface(name, entry, cfg, combos, hyp_cache)
            for name, entry in tasks
        ]

    files = {"bounds": [], "membership": [], "chains": [], "identity": []}
    failing = []
    for rows, bad in results:
        for key in files:
            files[key].extend(rows[key])
        failing.extend(bad)

    _sort_rows(files["bounds"], BOUNDS_HEADER)
    _sort_rows(files["membership"], MEMBERSHIP_HEADER)
    _sort_rows(files["chains"], CHAINS_HEADER)
    _sort_rows(files["identity"], IDENTITY_HEADER)

    if files["bounds"]:
        _write_csv(cfg.output_dir / "bounds.csv", BOUNDS_HEADER, files["bounds"])
    if files["membership"]:
        _write_csv(cfg.output_dir / "membership.csv", MEMBERSHIP_HEADER, files["membership"])
    if files["chains"]:
        _write_csv(cfg.output_dir / "chains.csv", CHAINS_HEADER, files["chains"])
    if files["identity"]:
        _write_csv(cfg.output_dir / "identity.csv", IDENTITY_HEADER, files["identity"])

    slacks = [
        float(row["slack"]) for row in files["bounds"] if row["verdict"] != SKIPPED
    ]
    exit_code = 1 if failing else 0
    chain_counts = _count_by(files["chains"], "monotone")
    identity_counts = _count_by(files["identity"], "within_budget")
    summary = {
        "counts": {
            "bounds": _count_by(files["bounds"], "verdict"),
            "membership": _count_by(files["membership"], "verdict"),
            "chains": {
                "monotone": chain_counts.get("true", 0),
                "non-monotone": chain_counts.get("false", 0),
            },
            "identity": {
                "within-budget": identity_counts.get("true", 0),
                "out-of-budget": identity_counts.get("false", 0),
            },
        },
        "worst_slack": min(slacks) if slacks else None,
        "proof_form_failures": [
            {"surface": n, "theorem": k, **{key: getattr(p, key) for key in PARAM_KEYS}}
            for n, k, p in failing
        ],
        "rows": sum(len(v) for v in files.values()),
        "wall_time_s": round(time.time() - t0, 3),
        "exit_code": exit_code,
    }
    with open(cfg.output_dir / "summary.json", "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return exit_code


def _count_by(rows, col):
    counts: dict[str, int] = {}
    for row in rows:
        counts[row[col]] = counts.get(row[col], 0) + 1
    return counts


# --------------------------------------------------------------------------
# hunt


def _random_nonneg_poly(rng, degree: int) -> RationalPoly2:
    """Random polynomial with nonnegative rational coefficients and at least
    one genuinely mixed term, so the mixed partial is nonzero and |d2f| is
    co-ordinated convex on nonnegative rectangles at classical parameters."""
    terms: dict[tuple[int, int], object] = {}
    n_terms = int(rng.integers(3, 9))
    for _ in range(n_terms):
        i = int(rng.integers(0, degree + 1))
        j = int(rng.integers(0, degree + 1))
        num = int(rng.integers(0, 5))
        den = int(rng.integers(1, 5))
        if num:
            terms[(i, j)] = terms.get((i, j), 0) + Fraction(num, den)
    i = int(rng.integers(1, max(2, degree + 1)))
    j = int(rng.integers(1, max(2, degree + 1)))
    terms[(i, j)] = terms.get((i, j), 0) + Fraction(int(rng.integers(1, 5)))
    return RationalPoly2(terms)


def _hunt_domain(rect: Rect, combos) -> Rect:
    """A domain wide enough for every scaled evaluation hull in the sweep."""
    from .surfaces import scaled_eval_hull

    hulls = [scaled_eval_hull(rect, p) for p in combos]
    pad = 1.0
    return Rect(
        min(h.a for h in hulls) - pad,
        max(h.b for h in hulls) + pad,
        min(h.c for h in hulls) - pad,
        max(h.d for h in hulls) + pad,
    )


HUNT_HEADER = BOUNDS_HEADER + ["hypothesis"]


def run_hunt(cfg: RunConfig) -> int:
    """Sweep random polynomial surfaces hunting for as-written bound failures."""
    t0 = time.time()
    if AS_WRITTEN not in cfg.variants:
        raise ConfigError("hunt requires the as-written variant to be enabled")
    combos = param_combos(cfg.param_grid)
    kinds_selected = [c for c in cfg.checks if c in BOUND_CHECKS]
    if not kinds_selected:
        kinds_selected = list(BOUND_CHECKS)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(cfg.seed)
    domain = _hunt_domain(cfg.rect, combos)
    hyp_cache = _HypothesisCache(cfg.rect, cfg.plan)

    rows = []
    findings = []
    failing = []
    classical_p = GenParams()
    for k in range(cfg.hunt_count):
        poly = _random_nonneg_poly(rng, cfg.hunt_degree)
        name = f"hunt-{k:03d}"
        s = poly_surface(name, poly, domain)
        signed = float(deviation_exact(poly, cfg.rect))
        dev = DeviationTerms(
            corner_avg=0.0,
            integral_mean=0.0,
            marginal_a=0.0,
            signed_deviation=signed,
            abs_deviation=abs(signed),
            error_budget=0.0,
        )

        def record(kind, p, rep):
            hyp = hyp_cache.report(s, kind, p)
            hyp_verdict = SKIPPED if hyp is None else hyp.verdict
            row = _bound_row(name, rep, p)
            row["hypothesis"] = hyp_verdict
            rows.append(row)
            if rep.verdict == BOUND_VIOLATED and hyp_verdict == NO_VIOLATION:
                entry = {
                    "surface": name,
                    "theorem": rep.theorem,
                    "variant": rep.variant,
                    **{key: getattr(p, key) for key in PARAM_KEYS},
                    "lhs": rep.lhs,
                    "rhs": rep.rhs,
                }
                findings.append(entry)
                if rep.variant == PROOF_FORM:
                    failing.append(entry)

        if CLASSICAL in kinds_selected:
            record(CLASSICAL, classical_p, bound_classical(s, cfg.rect, dev=dev))
        for p in combos:
            for kind in _applicable_kinds(kinds_selected, p.q):
                for variant in cfg.variants:
                    try:
                        rep = _BOUND_FNS[kind](s, cfg.rect, p, variant=variant, dev=dev)
                    except OutOfDomainError:
                        row = _skipped_bound_row(name, kind, variant, p)
                        row["hypothesis"] = SKIPPED
                        rows.append(row)
                        continue
                    record(kind, p, rep)

    _sort_rows(rows, HUNT_HEADER)
    _write_csv(cfg.output_dir / "hunt.csv", HUNT_HEADER, rows)
    exit_code = 1 if failing else 0
    summary = {
        "surfaces_generated": cfg.hunt_count,
        "degree": cfg.hunt_degree,
        "rows": len(rows),
        "as_written_findings": [f for f in findings if f["variant"] == AS_WRITTEN],
        "proof_form_failures": failing,
        "wall_time_s": round(time.time() - t0, 3),
        "exit_code": exit_code,
    }
    with open(cfg.output_dir / "hunt_summary.json", "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return exit_code


# --------------------------------------------------------------------------
# small subcommands


def print_corpus(file=None):
    file = file if file is not None else sys.stdout
    for name, entry in corpus().items():
        s = entry.surface
        print(
            f"{name:12s} f = {entry.formula:12s} domain {s.domain}  d2f {s.d2f_kind}",
            file=file,
        )


def print_constants(points: int = 11, file=None):
    file = file if file is not None else sys.stdout
    print("theta,moment", file=file)
    for i in range(points):
        theta = i / (points - 1) if points > 1 else 0.0
        print(f"{theta!r},{kink_moment(theta)!r}", file=file)


# --------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhverify",
        description="Verification workbench for Hermite-Hadamard-type trapezoid bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd in ("verify", "hunt"):
        p = sub.add_parser(cmd)
        p.add_argument("--config", required=True, help="path to JSON run config")
        p.add_argument("--seed", type=int, default=None, help="override config seed")
        p.add_argument("--out", default=None, help="override output directory")
        p.add_argument("--jobs", type=int, default=1, help="parallel surface workers")
    sub.add_parser("corpus")
    c = sub.add_parser("constants")
    c.add_argument("--points", type=int, default=11)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "corpus":
            print_corpus()
            return 0
        if args.command == "constants":
            if args.points < 1:
                raise ConfigError("--points must be >= 1")
            print_constants(args.points)
            return 0
        defaults = (PROOF_FORM,) if args.command == "verify" else VARIANTS
        cfg = load_config(
            args.config,
            seed=args.seed,
            out=args.out,
            jobs=args.jobs,
            default_variants=defaults,
        )
        if args.command == "verify":
            return run_verify(cfg)
        return run_hunt(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
