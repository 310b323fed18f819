"""Independent brute-force references shared across the test suite.

Everything here re-derives answers by direct enumeration, deliberately
avoiding the library's bit-sliced and normal-form code paths.
"""

import itertools

from postimp.formula import App, Var


def naive_value(node, base, env):
    """Recursive scalar evaluation straight off the truth tables."""
    if isinstance(node, Var):
        return env[node.name]
    f = base[node.fn]
    index = 0
    for i, child in enumerate(node.args):
        index |= naive_value(child, base, env) << i
    return f.table >> index & 1


def naive_implies(inst):
    """(implies?, falsifying environment or None) by full enumeration."""
    for bits in itertools.product((0, 1), repeat=len(inst.variables)):
        env = dict(zip(inst.variables, bits))
        if all(naive_value(p.root, inst.base, env) for p in inst.premises) and not naive_value(
            inst.conclusion.root, inst.base, env
        ):
            return False, env
    return True, None


def naive_table(node, base, names):
    """Truth table of the node over the given variable order, as an int."""
    table = 0
    for j in range(1 << len(names)):
        env = {name: j >> i & 1 for i, name in enumerate(names)}
        table |= naive_value(node, base, env) << j
    return table


def brute_consistent(system):
    """Exhaustive satisfiability of a Z2 system (n <= ~16)."""
    for assignment in range(1 << system.n):
        if all(
            bin(mask & assignment).count("1") % 2 == rhs for mask, rhs in system.rows
        ):
            return True
    return False


def satisfies_all(system, solution):
    assignment = 0
    for i, b in enumerate(solution):
        assignment |= (b & 1) << i
    return all(bin(mask & assignment).count("1") % 2 == rhs for mask, rhs in system.rows)


def semantic_formulas(base, names, max_depth):
    """One representative formula per reachable truth table, for every tree of
    connective depth <= max_depth over the given variables.

    Enumerating representatives by table keeps exhaustive sweeps tiny while
    still covering every semantically distinct shape.
    """
    from postimp.formula import Formula

    reps = {}
    for name in names:
        reps.setdefault(naive_table(Var(name), base, names), Var(name))
    for f in base.functions:
        if f.arity == 0:
            node = App(f.name)
            reps.setdefault(naive_table(node, base, names), node)
    for _ in range(max_depth):
        current = list(reps.items())
        for f in base.functions:
            if f.arity == 0:
                continue
            for combo in itertools.product(current, repeat=f.arity):
                node = App(f.name, tuple(n for _, n in combo))
                reps.setdefault(naive_table(node, base, names), node)
    return {t: Formula.build(node, base) for t, node in reps.items()}
