"""Command-line interface: classify, decide, reduce, closure, selftest.

Record output is one JSON line with sorted keys, so identical inputs and
flags always produce byte-identical output.  The process exit status encodes
tool success, not the implication answer.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .boolfn import ArityError
from .classify import Fragment, classify_base, classify_base_single_premise, closure_fixed_arity
from .decide import DEFAULT_VARIABLE_CAP, Mode, VariableCapError, dispatch
from .formula import Base, FragmentError, ParseError, read_instance, write_instance
from .gf2 import read_system
from .reductions import (
    read_dnf,
    reduce_linsys_to_imp,
    reduce_mod2_single_linear,
    reduce_mod2_unary,
    reduce_tautdnf_d2,
    reduce_tautdnf_monotone,
)
from .selftest import run_selftest

REDUCTION_KINDS = ("tautdnf-monotone", "tautdnf-d2", "linsys", "mod2-unary", "mod2-single")


@dataclass
class RunConfig:
    command: str
    base: Optional[str] = None
    instance: Optional[str] = None
    single_premise: bool = False
    force_fragment: Optional[str] = None
    max_vars: int = DEFAULT_VARIABLE_CAP
    seed: int = 0
    cases: int = 1000
    out_format: str = "human"
    kind: Optional[str] = None
    input: Optional[str] = None
    out_instance: str = "instance.txt"
    out_base: str = "base.txt"
    arity: int = 3


def _record(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True)


def run_classify(cfg: RunConfig):
    base = Base.load(cfg.base)
    if cfg.single_premise:
        verdict = classify_base_single_premise(base)
    else:
        verdict = classify_base(base)
    mode = Mode.SINGLE_PREMISE if cfg.single_premise else Mode.SET_PREMISE
    record = {
        "problem": mode.value,
        "class": verdict.complexity.value,
        "fragment": verdict.fragment.value,
        "witness": verdict.witness,
    }
    human = (
        f"{mode.value}({{{', '.join(base.names)}}}): {verdict.complexity.value} "
        f"[fragment {verdict.fragment.value}] -- {verdict.witness}"
    )
    return record, human


def run_decide(cfg: RunConfig):
    base = Base.load(cfg.base) if cfg.base else None
    inst = read_instance(cfg.instance, base)
    mode = Mode.SINGLE_PREMISE if cfg.single_premise else Mode.SET_PREMISE
    override = Fragment(cfg.force_fragment) if cfg.force_fragment else None
    decision = dispatch(inst, mode, override=override, max_vars=cfg.max_vars)
    record = {
        "implies": decision.implies,
        "fragment_used": decision.fragment_used.value,
    }
    if decision.counterexample is not None:
        record["counterexample"] = decision.counterexample
    human = f"implies: {'yes' if decision.implies else 'no'} [fragment {decision.fragment_used.value}] -- {decision.detail}"
    if decision.counterexample is not None:
        shown = " ".join(f"{k}={v}" for k, v in decision.counterexample.items())
        human += f"; counterexample: {shown}"
    return record, human


def run_reduce(cfg: RunConfig):
    if cfg.kind in ("tautdnf-monotone", "tautdnf-d2"):
        if not cfg.input:
            raise ValueError(f"reduce {cfg.kind} needs a DNF file argument")
        dnf = read_dnf(cfg.input)
        inst = reduce_tautdnf_monotone(dnf) if cfg.kind == "tautdnf-monotone" else reduce_tautdnf_d2(dnf)
    elif cfg.kind == "linsys":
        if not cfg.input:
            raise ValueError("reduce linsys needs a linear-system file argument")
        inst, _goal = reduce_linsys_to_imp(read_system(cfg.input))
    elif cfg.kind == "mod2-unary":
        inst = reduce_mod2_unary(cfg.input or "")
    elif cfg.kind == "mod2-single":
        inst = reduce_mod2_single_linear(cfg.input or "")
    else:
        raise ValueError(f"unknown reduction kind {cfg.kind!r}")
    inst.base.save(cfg.out_base)
    ref = os.path.relpath(
        os.path.abspath(cfg.out_base), os.path.dirname(os.path.abspath(cfg.out_instance))
    )
    write_instance(inst, cfg.out_instance, base_ref=ref)
    record = {
        "kind": cfg.kind,
        "instance": cfg.out_instance,
        "base": cfg.out_base,
        "premises": len(inst.premises),
        "variables": len(inst.variables),
    }
    human = (
        f"wrote {cfg.kind} instance to {cfg.out_instance} (base {cfg.out_base}): "
        f"{len(inst.premises)} premise(s), {len(inst.variables)} variable(s)"
    )
    return record, human


def run_closure(cfg: RunConfig):
    base = Base.load(cfg.base)
    closure = closure_fixed_arity(base, cfg.arity)
    tables = sorted(f.bits() for f in closure)
    record = {
        "arity": cfg.arity,
        "count": len(tables),
        "functions": tables,
    }
    human = f"closure of {{{', '.join(base.names)}}} at arity {cfg.arity}: {len(tables)} function(s)\n"
    human += "\n".join(tables)
    return record, human


def run_selftest_command(cfg: RunConfig):
    started = time.perf_counter()
    report = run_selftest(seed=cfg.seed, cases=cfg.cases)
    elapsed = time.perf_counter() - started
    lines = []
    for fragment, entry in sorted(report["fragments"].items()):
        lines.append(
            f"{fragment}: {entry['cases']} cases, {entry['disagreements']} disagreement(s)"
        )
    lines.append(
        f"total disagreements: {report['total_disagreements']} (elapsed {elapsed:.2f}s)"
    )
    return report, "\n".join(lines), report["total_disagreements"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="postimp",
        description="Classify and decide propositional implication over restricted connective sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "record"), default="human", dest="out_format")

    p_classify = sub.add_parser("classify", help="classify a base file into its complexity region")
    p_classify.add_argument("--base", required=True)
    p_classify.add_argument("--single-premise", action="store_true", dest="single_premise")
    add_format(p_classify)

    p_decide = sub.add_parser("decide", help="decide an implication instance file")
    p_decide.add_argument("--instance", required=True)
    p_decide.add_argument("--base", help="overrides the instance file's base: header")
    p_decide.add_argument("--single-premise", action="store_true", dest="single_premise")
    p_decide.add_argument(
        "--force-fragment",
        choices=tuple(f.value for f in Fragment if f is not Fragment.TRIVIAL),
        dest="force_fragment",
    )
    p_decide.add_argument("--max-vars", type=int, default=DEFAULT_VARIABLE_CAP, dest="max_vars")
    add_format(p_decide)

    p_reduce = sub.add_parser("reduce", help="emit a reduction instance plus its base file")
    p_reduce.add_argument("kind", choices=REDUCTION_KINDS)
    p_reduce.add_argument(
        "input",
        nargs="?",
        default="",
        help="DNF file, linear-system file, or parity word depending on the kind",
    )
    p_reduce.add_argument("--out-instance", default="instance.txt", dest="out_instance")
    p_reduce.add_argument("--out-base", default="base.txt", dest="out_base")
    add_format(p_reduce)

    p_closure = sub.add_parser("closure", help="enumerate the composition closure at a fixed arity")
    p_closure.add_argument("--base", required=True)
    p_closure.add_argument("--arity", type=int, default=3)
    add_format(p_closure)

    p_selftest = sub.add_parser("selftest", help="random cross-check of fragment deciders vs the oracle")
    p_selftest.add_argument("--seed", type=int, default=0)
    p_selftest.add_argument("--cases", type=int, default=1000)
    add_format(p_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        if cfg.command == "classify":
            record, human = run_classify(cfg)
        elif cfg.command == "decide":
            record, human = run_decide(cfg)
        elif cfg.command == "reduce":
            record, human = run_reduce(cfg)
        elif cfg.command == "closure":
            record, human = run_closure(cfg)
        else:
            record, human, failures = run_selftest_command(cfg)
            print(_record(record) if cfg.out_format == "record" else human)
            return 1 if failures else 0
    except (ValueError, ArityError, ParseError, FragmentError, VariableCapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(_record(record) if cfg.out_format == "record" else human)
    return 0
