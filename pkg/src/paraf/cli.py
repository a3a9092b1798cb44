"""Command-line entry point: ``paraf {solve,translate,gen,xcheck}``."""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .af import ArgSet
from .errors import InputError, ParafError
from .generators import PreferenceProfile, fixtures, gen_cycle, gen_radial_star, gen_random, gen_srp
from .io import InputFormat, parse_program, read_framework, render_framework, render_program
from .paraco import af_to_program, ht_transform, kappa_simplified, kappa_transform, mes_program
from .reasoning import Task, credulous, skeptical, solve
from .semantics import Semantics
from .stabilizer import guarded_shadow_framework
from .xcheck import check_framework, failed

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


def _fmt(ext: ArgSet) -> str:
    return "[" + ",".join(ext.names()) + "]"


def cmd_solve(ns: argparse.Namespace) -> int:
    task = Task(ns.task.upper())
    needs_arg = task in (Task.DC, Task.DS)
    expected = 2 if needs_arg else 1
    if len(ns.operands) != expected:
        what = "ARG FILE" if needs_arg else "FILE"
        raise InputError(f"task {task.value} expects {what}")
    path = ns.operands[-1]
    framework = read_framework(path, ns.format)
    sem = Semantics.parse(ns.sem)
    if needs_arg:
        arg = ns.operands[0]
        if task is Task.DS:
            if not solve(framework, sem, ns.max_args):
                print("# no extensions", file=sys.stderr)
            ok = skeptical(framework, sem, arg, ns.max_args)
        else:
            ok = credulous(framework, sem, arg, ns.max_args)
        print("YES" if ok else "NO")
        return EXIT_OK if ok else EXIT_NO
    found = solve(framework, sem, ns.max_args)
    if task is Task.EE:
        if not found:
            print("# no extensions", file=sys.stderr)
        for ext in found:
            print(_fmt(ext))
        return EXIT_OK
    if not found:
        print("NO")
        return EXIT_NO
    print(_fmt(found[0]))
    return EXIT_OK


_PROGRAM_TARGETS = {
    "lp": None,
    "kappa": kappa_transform,
    "kappa-simple": kappa_simplified,
    "ht": ht_transform,
    "mes": mes_program,
}


def cmd_translate(ns: argparse.Namespace) -> int:
    kind = InputFormat.detect(ns.file, ns.format)
    if ns.to == "shadow-af":
        framework = read_framework(ns.file, ns.format)
        sys.stdout.write(render_framework(guarded_shadow_framework(framework), ns.out_format))
        return EXIT_OK
    if kind is InputFormat.LP:
        if ns.to == "lp":
            raise InputError("'--to lp' translates a framework; the input is already a program")
        program = parse_program(Path(ns.file).read_text())
    else:
        program = af_to_program(read_framework(ns.file, ns.format))
    transform = _PROGRAM_TARGETS[ns.to]
    sys.stdout.write(render_program(transform(program) if transform else program))
    return EXIT_OK


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}") from None


def cmd_gen(ns: argparse.Namespace) -> int:
    kind, params = ns.family, ns.params
    arity = {"radial-star": 1, "cycle": 1, "srp": 1, "fixture": 1, "random": 3}
    if len(params) != arity[kind]:
        raise InputError(f"gen {kind} takes {arity[kind]} parameter(s)")
    if kind == "radial-star":
        framework = gen_radial_star(_int(params[0], "N"))
    elif kind == "cycle":
        framework = gen_cycle(_int(params[0], "N"))
    elif kind == "srp":
        framework = gen_srp(PreferenceProfile.parse(Path(params[0]).read_text()))
    elif kind == "fixture":
        table = fixtures()
        if params[0] not in table:
            raise InputError(f"unknown fixture {params[0]!r}; choose from {', '.join(table)}")
        framework = table[params[0]]
    else:
        try:
            p = float(params[1])
        except ValueError:
            raise InputError(f"P must be a number, got {params[1]!r}") from None
        framework = gen_random(_int(params[0], "N"), p, _int(params[2], "SEED"))
    sys.stdout.write(render_framework(framework, ns.format))
    return EXIT_OK


def _trial(trial: tuple[int, float, int]):
    n, p, seed = trial
    framework = gen_random(n, p, seed)
    return trial, failed(check_framework(framework))


def trial_specs(max_args: int, trials: int, seed: int) -> list[tuple[int, float, int]]:
    rng = random.Random(seed)
    return [(rng.randint(0, max_args), round(rng.uniform(0.05, 0.6), 3), rng.randrange(2**31)) for _ in range(trials)]


def cmd_xcheck(ns: argparse.Namespace) -> int:
    specs = trial_specs(ns.max_args, ns.trials, ns.seed)
    if ns.jobs > 1:
        with ProcessPoolExecutor(ns.jobs) as pool:
            outcomes = list(pool.map(_trial, specs))
    else:
        outcomes = [_trial(s) for s in specs]
    bad = 0
    for (n, p, seed), failures in outcomes:
        for name in failures:
            bad += 1
            print(f"FAIL n={n} p={p} seed={seed}: {name}")
    print(f"{len(specs)} frameworks checked, {bad} violation(s)")
    return EXIT_OK if not bad else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paraf", description="Paracoherent and classical AF semantics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate or query extensions")
    p.add_argument("--sem", required=True, choices=[s.value for s in Semantics])
    p.add_argument("--task", required=True, type=str.upper, choices=[t.value for t in Task])
    p.add_argument("--format", choices=["tgf", "apx"])
    p.add_argument("--max-args", type=int, default=None, help="override the enumeration cap")
    p.add_argument("operands", nargs="+", metavar="[ARG] FILE")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("translate", help="render a derived program or framework")
    p.add_argument("--to", required=True, choices=[*_PROGRAM_TARGETS, "shadow-af"])
    p.add_argument("--format", choices=["tgf", "apx", "lp"])
    p.add_argument("--out-format", choices=["tgf", "apx"], default="apx")
    p.add_argument("file")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("gen", help="generate a framework")
    p.add_argument("family", choices=["radial-star", "cycle", "srp", "fixture", "random"])
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=["tgf", "apx"], default="apx")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("xcheck", help="check every invariant on random frameworks")
    p.add_argument("--max-args", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output is unchanged")
    p.set_defaults(func=cmd_xcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (ParafError, OSError) as exc:
        print(f"paraf: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
