"""Command-line front end: property check suites and small demos.

Exit codes: 0 all properties held, 1 a property violation was found (the
counterexample is in the report), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import dynamics, gen, hyperconvex
from .dynamics import (
    DOUBLE_SHIFT,
    SINGLE_SHIFT,
    OperatorDescriptor,
    UnexpectedFixedPoint,
    check_ball_invariance,
    check_nonexpansive,
    discrepancy_witness,
    forced_sign_values,
    gap_map,
    ppoint_map,
)
from .ordinal import ZERO, cmp
from .pl import (
    clamp_shift,
    interpolate_sequence,
    pl_dist,
    pl_discrepancy,
    sample_sequence,
    seq_dist,
)
from .stepfn import StepFn, dist, sign

SEED_ENV_VAR = "BALLFIX_SEED"


@dataclass
class Failure:
    inputs: list[str]
    witness: str
    expected: str
    actual: str

    def to_json_obj(self) -> dict:
        return {"inputs": self.inputs, "witness": self.witness,
                "expected": self.expected, "actual": self.actual}


@dataclass
class Report:
    suite: str
    trials: int
    seed: int
    failures: list[Failure] = field(default_factory=list)
    elapsed_millis: int = 0

    def to_json(self) -> str:
        return json.dumps({
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "failures": [f.to_json_obj() for f in self.failures],
            "elapsedMillis": self.elapsed_millis,
        })

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"trials: {self.trials}",
            f"seed: {self.seed}",
            f"failures: {len(self.failures)}",
        ]
        for i, f in enumerate(self.failures, 1):
            lines.append(f"failure {i}:")
            for text in f.inputs:
                lines.append(f"  input: {text}")
            lines.append(f"  witness: {f.witness}")
            lines.append(f"  expected: {f.expected}")
            lines.append(f"  actual: {f.actual}")
        lines.append(f"elapsedMillis: {self.elapsed_millis}")
        return "\n".join(lines)


def _run_suite(name: str, trials: int, seed: int, trial_fn) -> Report:
    start = time.monotonic()
    report = Report(name, trials, seed)
    for i in range(trials):
        failure = trial_fn(gen.trial_rng(seed, i))
        if failure is not None:
            report.failures.append(failure)
    report.elapsed_millis = int((time.monotonic() - start) * 1000)
    return report


def _nonexpansive_failure(op: OperatorDescriptor, f: StepFn, g: StepFn) -> Failure | None:
    v = check_nonexpansive(op, f, g)
    if v is None:
        return None
    return Failure([str(v.f), str(v.g)], str(v.witness),
                   f"output gap <= {v.input_dist}", str(v.output_gap))


def _ball_failure(op: OperatorDescriptor, f: StepFn) -> Failure | None:
    v = check_ball_invariance(op, f)
    if v is None:
        return None
    return Failure([str(v.f)], str(v.witness),
                   f"distance to center <= {v.radius}", str(v.distance))


def _witness_failure(op: OperatorDescriptor, f: StepFn) -> Failure | None:
    try:
        w = discrepancy_witness(op, f)
    except UnexpectedFixedPoint:
        return Failure([str(f)], "-", "a position where the image differs", "unexpected fixed point")
    image = op(f)
    if image(w) == f(w):
        return Failure([str(f)], str(w), "image differs at witness", "values equal")
    return None


def run_nonexpansive(op_name: str, g_text: str | None, trials: int, seed: int, wide: bool) -> Report:
    pool = gen.ordinal_pool(wide)
    fixed_g = StepFn.parse(g_text) if g_text is not None else None

    def trial(rng) -> Failure | None:
        if op_name in ("double-shift", "single-shift"):
            op = DOUBLE_SHIFT if op_name == "double-shift" else SINGLE_SHIFT
            f = gen.rand_stepfn(rng, pool, unit=True)
            g = gen.rand_stepfn(rng, pool, unit=True)
            return _nonexpansive_failure(op, f, g) or _ball_failure(op, f)
        if op_name == "gap":
            g0 = fixed_g if fixed_g is not None else gen.rand_stepfn(rng, pool, unit=True)
            op = OperatorDescriptor("gap", dynamics.UNIT_BALL, lambda h: gap_map(g0, h))
            f = gen.rand_stepfn(rng, pool, unit=True)
            g = gen.rand_stepfn(rng, pool, unit=True)
            return _nonexpansive_failure(op, f, g) or _ball_failure(op, f)
        if op_name == "ppoint":
            g0 = fixed_g if fixed_g is not None else gen.rand_stepfn(
                rng, pool, unit=True, nonneg=True, tail_zero=True)
            op = OperatorDescriptor("ppoint", dynamics.UNIT_BALL, lambda h: ppoint_map(g0, h))
            f = gen.rand_stepfn(rng, pool, unit=True)
            g = gen.rand_stepfn(rng, pool, unit=True)
            return _nonexpansive_failure(op, f, g) or _ball_failure(op, f)
        # clamp-shift on [-1, 1]
        f = gen.rand_unit_pl(rng)
        g = gen.rand_unit_pl(rng)
        tf, tg = clamp_shift(f), clamp_shift(g)
        if pl_dist(tf, tg) > pl_dist(f, g):
            return Failure([str(f), str(g)], "-", f"output gap <= {pl_dist(f, g)}", str(pl_dist(tf, tg)))
        if max(abs(y) for _, y in tf.points) > 1:
            return Failure([str(f)], "-", "image inside the unit ball", str(tf))
        return None

    return _run_suite(f"nonexpansive:{op_name}", trials, seed, trial)


def run_no_fixed_point(op_name: str, trials: int, seed: int, wide: bool) -> Report:
    pool = gen.ordinal_pool(wide)

    def trial(rng) -> Failure | None:
        if op_name == "double-shift":
            return _witness_failure(DOUBLE_SHIFT, gen.rand_stepfn(rng, pool, unit=True))
        if op_name == "single-shift0":
            return _witness_failure(SINGLE_SHIFT, gen.rand_stepfn(rng, pool, unit=True, tail_zero=True))
        # clamp-shift
        f = gen.rand_unit_pl(rng)
        try:
            t = pl_discrepancy(f)
        except UnexpectedFixedPoint:
            return Failure([str(f)], "-", "a point where the image differs", "unexpected fixed point")
        if clamp_shift(f)(t) == f(t):
            return Failure([str(f)], str(t), "image differs at witness", "values equal")
        return None

    return _run_suite(f"no-fixed-point:{op_name}", trials, seed, trial)


def run_helly(trials: int, seed: int, wide: bool) -> Report:
    pool = gen.ordinal_pool(wide)

    def trial(rng) -> Failure | None:
        balls = gen.rand_intersecting_balls(rng, pool, rng.randint(2, 8))
        texts = [str(b) for b in balls]
        if hyperconvex.pairwise_intersect(balls) is not None:
            return Failure(texts, "-", "constructed family mutually intersects", "a pair misses")
        witness = hyperconvex.helly_witness(balls)
        for i, b in enumerate(balls):
            if witness not in b:
                return Failure(texts, str(witness), f"witness inside ball {i}", str(dist(witness, b.center)))
        hull = hyperconvex.interval_hull(balls)
        if not hull.nonempty or hull.lower != witness:
            return Failure(texts, str(witness), "hull nonempty with lower bound = witness", str(hull.lower))
        disjoint = gen.disjoint_ball_pair(rng, pool)
        if hyperconvex.pairwise_intersect(disjoint) != (0, 1):
            return Failure([str(b) for b in disjoint], "-", "pairwise check reports (0, 1)", "no violation found")
        try:
            hyperconvex.helly_witness(disjoint)
        except ValueError:
            return None
        return Failure([str(b) for b in disjoint], "-", "witness precondition rejects family", "witness produced")

    return _run_suite("helly", trials, seed, trial)


def run_retraction(trials: int, seed: int) -> Report:
    def trial(rng) -> Failure | None:
        a = gen.rand_seqrep(rng)
        b = gen.rand_seqrep(rng)
        if sample_sequence(interpolate_sequence(a)) != a:
            return Failure([str(a)], "-", str(a), str(sample_sequence(interpolate_sequence(a))))
        if pl_dist(interpolate_sequence(a), interpolate_sequence(b)) > seq_dist(a, b):
            return Failure([str(a), str(b)], "-", f"interpolation gap <= {seq_dist(a, b)}",
                           str(pl_dist(interpolate_sequence(a), interpolate_sequence(b))))
        f = gen.rand_halfline_pl(rng)
        g = gen.rand_halfline_pl(rng)
        if seq_dist(sample_sequence(f), sample_sequence(g)) > pl_dist(f, g):
            return Failure([str(f), str(g)], "-", f"sample gap <= {pl_dist(f, g)}",
                           str(seq_dist(sample_sequence(f), sample_sequence(g))))
        transferred = dynamics.transfer_fixed_point(
            sample_sequence, interpolate_sequence, lambda x: x, interpolate_sequence(a))
        if transferred != a:
            return Failure([str(a)], "-", str(a), str(transferred))
        return None

    return _run_suite("retraction", trials, seed, trial)


def run_ordinal_laws(trials: int, seed: int, wide: bool) -> Report:
    pool = gen.ordinal_pool(wide)

    def trial(rng) -> Failure | None:
        a, b, c = (rng.choice(pool) for _ in range(3))
        texts = [str(a), str(b), str(c)]
        if (a + b) + c != a + (b + c):
            return Failure(texts, "-", "associativity", f"{(a + b) + c} != {a + (b + c)}")
        if a + ZERO != a or ZERO + a != a:
            return Failure(texts, "-", "additive identity", str(a + ZERO))
        if b < c and not a + b < a + c:
            return Failure(texts, "-", "right strict monotonicity", f"{a + b} vs {a + c}")
        limit_part, n = a.split_finite()
        if limit_part + n != a:
            return Failure(texts, "-", "split/add round trip", f"{limit_part} + {n}")
        if cmp(a, b) != -cmp(b, a):
            return Failure(texts, "-", "comparison antisymmetry", f"cmp={cmp(a, b)},{cmp(b, a)}")
        lo, mid, hi = sorted([a, b, c])
        if not (lo <= mid <= hi and lo <= hi):
            return Failure(texts, "-", "comparison transitivity", "sorted triple out of order")
        return None

    return _run_suite("ordinal-laws", trials, seed, trial)


def demo_shift(input_text: str, steps: int, fmt: str, out) -> int:
    f = StepFn.parse(input_text)
    orbit = [f]
    witnesses = []
    for _ in range(steps):
        witnesses.append(discrepancy_witness(DOUBLE_SHIFT, orbit[-1]))
        orbit.append(dynamics.double_shift(orbit[-1]))
    if fmt == "json":
        print(json.dumps({"orbit": [h.to_json_obj() for h in orbit],
                          "witnesses": [str(w) for w in witnesses]}), file=out)
        return 0
    print(f"f = {orbit[0]}", file=out)
    for k in range(1, steps + 1):
        print(f"T^{k} f = {orbit[k]}   (differs from previous at {witnesses[k - 1]})", file=out)
    return 0


def demo_sign(g_text: str, fmt: str, out) -> int:
    g = StepFn.parse(g_text)
    s = sign(g)
    ok = s * abs(g) == g and g * s == abs(g)
    if fmt == "json":
        print(json.dumps({"g": g.to_json_obj(), "sign": s.to_json_obj(), "identityHolds": ok}), file=out)
        return 0 if ok else 1
    print(f"g       = {g}", file=out)
    print(f"sign(g) = {s}", file=out)
    print(f"sign identity g = sign(g)*|g|: {'holds' if ok else 'VIOLATED'}", file=out)
    return 0 if ok else 1


def demo_obstruction(n: int, fmt: str, out) -> int:
    samples = [(f"x{k}", Fraction((-1) ** k, k)) for k in range(1, n + 1)]
    forced, obstruction = forced_sign_values(samples)
    if fmt == "json":
        print(json.dumps({
            "samples": [{"label": lbl, "value": str(v), "sign": s}
                        for (lbl, v), (_, s) in zip(samples, forced)],
            "obstruction": obstruction,
        }), file=out)
        return 0
    for (label, value), (_, s) in zip(samples, forced):
        rendered = f"{s:+d}" if s else "unconstrained"
        print(f"g({label}) = {value}   forced sign: {rendered}", file=out)
    if obstruction:
        print("obstruction: forced values have no limit", file=out)
    else:
        print("no obstruction: forced values stabilize", file=out)
    return 0


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int, default=100, help="number of random trials (default 100)")
    p.add_argument("--seed", type=int, default=None,
                   help=f"master seed (default: ${SEED_ENV_VAR} or 0)")
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="report format (default text)")
    p.add_argument("--wide", action="store_true",
                   help="widen the ordinal pool beyond w^3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballfix",
        description="Exact property checks for nonexpansive maps on sup-norm balls.",
        epilog=f"The environment variable {SEED_ENV_VAR} supplies the default --seed.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a property suite")
    checks = check.add_subparsers(dest="suite", required=True)

    p = checks.add_parser("nonexpansive", help="distance contraction and ball invariance")
    p.add_argument("--op", required=True,
                   choices=("double-shift", "single-shift", "gap", "ppoint", "clamp-shift"))
    p.add_argument("--g", help="fixed parameter function for gap/ppoint (step function text)")
    _add_common(p)

    p = checks.add_parser("no-fixed-point", help="every trial must produce a discrepancy witness")
    p.add_argument("--op", required=True, choices=("double-shift", "single-shift0", "clamp-shift"))
    _add_common(p)

    p = checks.add_parser("helly", help="ball families: common point from the sup formula")
    _add_common(p)

    p = checks.add_parser("retraction", help="sampling/interpolation pair: identity and nonexpansiveness")
    _add_common(p)

    p = checks.add_parser("ordinal-laws", help="ordinal arithmetic laws")
    _add_common(p)

    demo = sub.add_parser("demo", help="run a small demonstration")
    demos = demo.add_subparsers(dest="what", required=True)

    p = demos.add_parser("shift", help="orbit of the double shift")
    p.add_argument("--input", required=True, help="starting step function text")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = demos.add_parser("sign", help="pointwise sign and the identity g = sign(g)*|g|")
    p.add_argument("--g", required=True, help="step function text")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = demos.add_parser("obstruction", help="forced signs for g(x_n) = (-1)^n/n")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _emit(report: Report, fmt: str, out) -> int:
    print(report.to_json() if fmt == "json" else report.to_text(), file=out)
    return 0 if not report.failures else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "check":
            seed = args.seed if args.seed is not None else _default_seed()
            if args.suite == "nonexpansive":
                report = run_nonexpansive(args.op, args.g, args.trials, seed, args.wide)
            elif args.suite == "no-fixed-point":
                report = run_no_fixed_point(args.op, args.trials, seed, args.wide)
            elif args.suite == "helly":
                report = run_helly(args.trials, seed, args.wide)
            elif args.suite == "retraction":
                report = run_retraction(args.trials, seed)
            else:
                report = run_ordinal_laws(args.trials, seed, args.wide)
            return _emit(report, args.format, out)
        if args.what == "shift":
            return demo_shift(args.input, args.steps, out)
        if args.what == "sign":
            return demo_sign(args.g, out)
        return demo_obstruction(args.n, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
