#!/usr/bin/env python3
"""Time the fragment-optimal linear decider against exhaustive enumeration.

Each instance is a handful of random parity constraints over all n variables,
so the oracle's work doubles per extra variable while the parity-system
decider stays polynomial.
"""

import random
import time

from postimp import App, Base, Formula, Instance, TOP, Var, XOR2, decide_linear, decide_oracle

BASE = Base.of(XOR2, TOP)


def parity_formula(rng, names):
    chosen = [Var(n) for n in names if rng.random() < 0.5] or [Var(names[0])]
    node = chosen[0]
    for leaf in chosen[1:]:
        node = App("xor", (node, leaf))
    if rng.random() < 0.5:
        node = App("xor", (node, App("top")))
    return Formula.build(node, BASE)


def build_instance(rng, width):
    names = [f"v{i}" for i in range(width)]
    node = Var(names[0])
    for name in names[1:]:  # the first premise mentions every variable
        node = App("xor", (node, Var(name)))
    premises = [Formula.build(node, BASE)] + [parity_formula(rng, names) for _ in range(2)]
    # the xor of the three premises is always implied, so the oracle has to
    # sweep the whole assignment space before answering
    combined = App("xor", (App("xor", (premises[0].root, premises[1].root)), premises[2].root))
    conclusion = Formula.build(combined, BASE)
    return Instance.build(BASE, premises, conclusion)


def timed(fn, instances):
    started = time.perf_counter()
    answers = [fn(inst).implies for inst in instances]
    return time.perf_counter() - started, answers


def main():
    rng = random.Random(0)
    print(f"{'vars':>4} {'instances':>9} {'linear (s)':>11} {'oracle (s)':>11} {'speedup':>8}")
    for width in (10, 14, 18, 22):
        instances = [build_instance(rng, width) for _ in range(20)]
        fast_t, fast_a = timed(decide_linear, instances)
        slow_t, slow_a = timed(lambda i: decide_oracle(i, max_vars=24), instances)
        assert fast_a == slow_a
        print(
            f"{width:>4} {len(instances):>9} {fast_t:>11.4f} {slow_t:>11.4f} "
            f"{slow_t / max(fast_t, 1e-9):>7.1f}x"
        )


if __name__ == "__main__":
    main()
