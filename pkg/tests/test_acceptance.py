"""End-to-end acceptance checks, each printed as one pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete; every check carries an explicit wall-clock budget.
"""

import itertools
import random
import sys
import time

from helpers import brute_consistent, naive_implies, satisfies_all, semantic_formulas
from postimp.boolfn import (
    AND2,
    AND_OR3,
    BOT,
    BooleanFunction,
    MAJ3,
    NOT,
    OR2,
    OR_AND3,
    TOP,
    XOR2,
    XOR3,
)
from postimp.classify import (
    ImpClass,
    classify_base,
    classify_base_single_premise,
    generators_in_closure,
)
from postimp.decide import (
    decide_and_fragment,
    decide_linear,
    decide_or_fragment,
    decide_oracle,
    decide_single_linear,
    decide_unary_fragment,
)
from postimp.formula import (
    App,
    Base,
    Formula,
    Instance,
    Var,
    connective_count,
    depth,
    extract_linear_nf,
)
from postimp.gf2 import Gf2System, is_consistent, solve
from postimp.reductions import (
    DnfInput,
    reduce_linsys_to_imp,
    reduce_mod2_single_linear,
    reduce_mod2_unary,
    reduce_tautdnf_d2,
    reduce_tautdnf_monotone,
)
from postimp.selftest import FRAGMENT_BASES, random_instance

LIN_CONST = Base.of(XOR2, TOP)
V = Base.of(OR2, BOT, TOP)
E = Base.of(AND2, BOT, TOP)
N = Base.of(NOT, TOP)
L2 = Base.of(XOR3)


class budget:
    """Assert a wall-clock budget and print the acceptance line."""

    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.started = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.started
        status = "PASS" if exc_type is None else "FAIL"
        print(
            f"[acceptance] {self.name}: {status} ({elapsed:.2f}s, budget {self.seconds}s)",
            file=sys.stderr,
        )
        if exc_type is None:
            assert elapsed < self.seconds, f"{self.name} exceeded {self.seconds}s ({elapsed:.2f}s)"
        return False


CANONICAL_TABLE = [
    ("and+not", (AND2, NOT), "coNP-complete"),
    ("or+and", (OR2, AND2), "coNP-complete"),
    ("x_or_yz", (OR_AND3,), "coNP-complete"),
    ("x_and_yz", (AND_OR3,), "coNP-complete"),
    ("maj", (MAJ3,), "coNP-complete"),
    ("xor+top", (XOR2, TOP), "ParityL-complete"),
    ("xor3", (XOR3,), "ParityL-complete"),
    ("or+consts", (OR2, BOT, TOP), "AC0"),
    ("and+consts", (AND2, BOT, TOP), "AC0"),
    ("not+top", (NOT, TOP), "AC0[2]"),
    ("not", (NOT,), "AC0[2]"),
]


def test_criterion_1_classification_table():
    with budget("classification table", 1.0):
        for label, functions, expected in CANONICAL_TABLE:
            base = Base.of(*functions)
            got = classify_base(base).complexity.value
            assert got == expected, f"{label}: {got} != {expected}"
            single = classify_base_single_premise(base).complexity.value
            expected_single = "AC0[2]" if expected == "ParityL-complete" else expected
            assert single == expected_single, f"{label} single-premise: {single}"


def test_criterion_2_dichotomy_cross_validation():
    witnesses = (OR_AND3, AND_OR3, MAJ3)
    with budget("dichotomy cross-validation", 60.0):
        bases = []
        for arity in (0, 1, 2):  # includes all 16 binary singletons
            for table in range(1 << (1 << arity)):
                bases.append((f"singleton a{arity} t{table}", Base.of(BooleanFunction("g", arity, table))))
        rng = random.Random("acceptance:dichotomy")
        while len(bases) < 22 + 200:
            fns = []
            for i in range(rng.randint(1, 2)):
                arity = rng.randint(0, 3)
                fns.append(BooleanFunction(f"g{i}", arity, rng.randrange(1 << (1 << arity))))
            bases.append((f"random {len(bases)}", Base.of(*fns)))
        mismatches = []
        for label, base in bases:
            hard = classify_base(base).complexity is ImpClass.CONP_COMPLETE
            found = bool(generators_in_closure(base, witnesses, stop_on_first=True))
            if hard != found:
                mismatches.append(label)
        assert not mismatches, mismatches


FRAGMENT_CHECKS = {
    "linear": decide_linear,
    "or": decide_or_fragment,
    "and": decide_and_fragment,
    "unary": decide_unary_fragment,
    "single-linear": None,  # handled via decide_single_linear
}

MICRO_FRAGMENT_BASES = {
    "linear": Base.of(XOR2, XOR3, TOP, BOT),
    "or": V,
    "and": E,
    "unary": N,
}


def _fragment_answer(fragment, instance):
    decider = FRAGMENT_CHECKS[fragment]
    if decider is None:
        return decide_single_linear(instance.premises[0], instance.conclusion)
    return decider(instance)


def test_criterion_3_fragment_oracle_agreement():
    cases_per_fragment = 10_000
    with budget("fragment vs oracle agreement", 120.0):
        for fragment in sorted(FRAGMENT_CHECKS):
            rng = random.Random(f"acceptance:{fragment}")
            single = fragment == "single-linear"
            for k in range(cases_per_fragment):
                base = rng.choice(FRAGMENT_BASES[fragment])
                instance = random_instance(rng, base, max_vars=10, max_premises=4, single=single)
                fast = _fragment_answer(fragment, instance)
                slow = decide_oracle(instance)
                assert fast.implies == slow.implies, (fragment, k)
        # exhaustive micro-instances: every semantic class of depth <= 3 trees
        for fragment, base in MICRO_FRAGMENT_BASES.items():
            reps = list(semantic_formulas(base, ("x", "y", "z"), 3).values())
            for goal in reps:
                for count in (0, 1, 2):
                    for premises in itertools.product(reps, repeat=count):
                        instance = Instance.build(base, premises, goal)
                        fast = _fragment_answer(fragment, instance)
                        assert fast.implies == naive_implies(instance)[0]
        reps = list(semantic_formulas(L2, ("x", "y", "z"), 3).values())
        micro_lin = list(semantic_formulas(MICRO_FRAGMENT_BASES["linear"], ("x", "y", "z"), 3).values())
        for pool in (reps, micro_lin):
            for premise in pool:
                for goal in pool:
                    instance = Instance.build(pool[0].base, (premise,), goal)
                    fast = decide_single_linear(premise, goal)
                    assert fast.implies == naive_implies(instance)[0]


def _linear_formula(c0, coeffs, names, base):
    node = None
    for c, name in zip(coeffs, names):
        if c:
            node = Var(name) if node is None else App("xor", (node, Var(name)))
    if c0:
        node = App("top") if node is None else App("xor", (node, App("top")))
    if node is None:
        node = App("xor", (App("top"), App("top")))
    return Formula.build(node, base)


def test_criterion_4_single_linear_rule():
    names = ("x", "y", "z")
    with budget("single-premise linear rule", 5.0):
        # base with constants realizes every linear normal form on 3 variables
        forms = [
            _linear_formula(c0, coeffs, names, LIN_CONST)
            for c0 in (0, 1)
            for coeffs in itertools.product((0, 1), repeat=3)
        ]
        published_disagreements = []
        for premise in forms:
            for goal in forms:
                instance = Instance.build(LIN_CONST, (premise,), goal)
                corrected = decide_single_linear(premise, goal).implies
                truth = naive_implies(instance)[0]
                assert corrected == truth
                lnf = extract_linear_nf(premise, instance.variables)
                rnf = extract_linear_nf(goal, instance.variables)
                published = (lnf.c0 == 0 and not any(lnf.coeffs)) or lnf == rnf
                if published != truth:
                    published_disagreements.append((lnf, rnf))
        assert published_disagreements, "expected the two-part rule to fail somewhere"
        # the concrete witness: x implies the constant-true conclusion
        witness = decide_single_linear(
            _linear_formula(0, (1, 0, 0), names, LIN_CONST),
            _linear_formula(1, (0, 0, 0), names, LIN_CONST),
        )
        assert witness.implies
        # without constants every form is 0- and 1-reproducing; rule still exact
        reps = list(semantic_formulas(L2, names, 3).values())
        for premise in reps:
            for goal in reps:
                instance = Instance.build(L2, (premise,), goal)
                assert decide_single_linear(premise, goal).implies == naive_implies(instance)[0]


def _all_small_dnfs():
    literal_sets = []
    for signs in itertools.product((0, 1, -1), repeat=3):
        term = tuple(s * (i + 1) for i, s in enumerate(signs) if s)
        if term:
            literal_sets.append(term)
    for count in range(1, 4):
        for combo in itertools.combinations(literal_sets, count):
            yield DnfInput.build(list(combo))


def test_criterion_5_reduction_correctness():
    with budget("reduction correctness", 120.0):
        checked = 0
        for dnf in _all_small_dnfs():
            expected = dnf.is_tautology()
            assert decide_oracle(reduce_tautdnf_monotone(dnf)).implies == expected
            assert decide_oracle(reduce_tautdnf_d2(dnf)).implies == expected
            checked += 1
        assert checked == 2951  # 26 literal sets, up to 3 terms
        rng = random.Random("acceptance:linsys")
        for _ in range(500):
            n = rng.randint(1, 6)
            rows = tuple(
                (rng.randrange(1 << n), rng.randint(0, 1)) for _ in range(rng.randint(1, 6))
            )
            system = Gf2System(n, rows)
            instance, _goal = reduce_linsys_to_imp(system)
            assert decide_oracle(instance).implies == (not is_consistent(system))
        for length in range(13):
            for bits in itertools.product("01", repeat=length):
                word = "".join(bits)
                odd = word.count("1") % 2 == 1
                assert decide_oracle(reduce_mod2_unary(word)).implies == odd
                assert decide_oracle(reduce_mod2_single_linear(word)).implies == odd


def test_criterion_6_majority_reduction_bounds():
    with budget("majority reduction size bounds", 10.0):
        rng = random.Random("acceptance:shape")
        for _ in range(60):
            term_count = rng.randint(1, 32)
            sizes = [rng.randint(1, 8) for _ in range(term_count)]
            universe = rng.randint(1, sum(sizes))
            body = []
            for size in sizes:
                size = min(size, universe)
                variables = rng.sample(range(1, universe + 1), size)
                body.append([v if rng.random() < 0.5 else -v for v in variables])
            dnf = DnfInput.build(body)
            instance = reduce_tautdnf_d2(dnf)
            lits = sum(len(t) for t in dnf.terms)
            widest = max(len(t) for t in dnf.terms)
            bound = (len(dnf.terms) - 1).bit_length() + (widest - 1).bit_length() + 3
            root = instance.conclusion.root
            assert depth(root) <= bound, (len(dnf.terms), widest, depth(root), bound)
            assert connective_count(root) <= 4 * (lits + len(dnf.terms))


def test_criterion_7_gf2_solver():
    with budget("gf2 solver validation", 30.0):
        rng = random.Random("acceptance:gf2")
        for _ in range(400):
            n = rng.randint(1, 12)
            rows = tuple(
                (rng.randrange(1 << n), rng.randint(0, 1)) for _ in range(rng.randint(0, 14))
            )
            system = Gf2System(n, rows)
            assert is_consistent(system) == brute_consistent(system)
            solution = solve(system)
            if solution is not None:
                assert satisfies_all(system, solution)
            else:
                assert not brute_consistent(system)
