"""Deciding whether premises imply a conclusion.

Each tractable fragment gets the algorithm its normal forms admit: linear
instances become a parity equation system, disjunctive instances a coefficient
dominance check, conjunctive instances a coverage check, unary instances a
literal comparison, and single linear premises a three-way coefficient rule.
The general case enumerates assignments with bit-sliced evaluation; the same
enumerator doubles as the reference oracle for everything else.
"""

import enum
from dataclasses import dataclass
from typing import Optional

from .classify import Fragment, classify_base, classify_base_single_premise
from .formula import (
    Formula,
    Instance,
    evaluate_block,
    extract_and_nf,
    extract_linear_nf,
    extract_or_nf,
    extract_unary_nf,
    variable_word,
)
from .gf2 import Gf2System, solve

DEFAULT_VARIABLE_CAP = 24
_BLOCK_BITS = 16


class Mode(enum.Enum):
    SET_PREMISE = "IMP"
    SINGLE_PREMISE = "IMP1"


class VariableCapError(RuntimeError):
    """The instance is too large for exhaustive enumeration."""

    def __init__(self, count: int, cap: int):
        super().__init__(
            f"instance has {count} variables but the enumeration cap is {cap}; "
            f"raise the cap to proceed"
        )
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class Decision:
    implies: bool
    fragment_used: Fragment
    detail: str
    counterexample: Optional[dict] = None


def decide_oracle(inst: Instance, max_vars: int = DEFAULT_VARIABLE_CAP) -> Decision:
    """Exhaustive check of all assignments, 2^min(n,16) lanes at a time.

    Reports the lexicographically least counterexample (x1 is the least
    significant bit of the assignment index).
    """
    n = len(inst.variables)
    if n > max_vars:
        raise VariableCapError(n, max_vars)
    wbits = min(n, _BLOCK_BITS)
    width = 1 << wbits
    mask = (1 << width) - 1
    low_words = [variable_word(i, 0, width) for i in range(min(n, wbits))]
    for block in range(1 << (n - wbits)):
        start = block << wbits
        words = low_words + [
            mask if start >> i & 1 else 0 for i in range(wbits, n)
        ]
        sat = mask
        for psi in inst.premises:
            sat &= evaluate_block(psi, words, width, inst.variables)
            if not sat:
                break
        if not sat:
            continue
        bad = sat & ~evaluate_block(inst.conclusion, words, width, inst.variables) & mask
        if bad:
            index = start + (bad & -bad).bit_length() - 1
            sigma = {name: index >> i & 1 for i, name in enumerate(inst.variables)}
            return Decision(
                False,
                Fragment.GENERAL,
                f"assignment {index} satisfies every premise and falsifies the conclusion",
                sigma,
            )
    return Decision(True, Fragment.GENERAL, f"all {1 << n} assignments checked", None)


def _pack(coeffs) -> int:
    mask = 0
    for i, c in enumerate(coeffs):
        mask |= (c & 1) << i
    return mask


def decide_linear(inst: Instance) -> Decision:
    """Linear fragment: premises hold and the conclusion fails exactly when a
    parity system is solvable, so implication is its inconsistency.

    The system asserts each premise equal to 1 plus `conclusion xor t = 1` and
    `t = 1` over the instance variables extended by the fresh unknown t.
    """
    order = inst.variables
    n = len(order)
    rows = []
    for psi in inst.premises:
        nf = extract_linear_nf(psi, order)
        rows.append((_pack(nf.coeffs), 1 ^ nf.c0))
    goal = extract_linear_nf(inst.conclusion, order)
    rows.append((_pack(goal.coeffs) | 1 << n, 1 ^ goal.c0))
    rows.append((1 << n, 1))
    solution = solve(Gf2System(n + 1, tuple(rows)))
    if solution is None:
        return Decision(
            True,
            Fragment.LINEAR,
            "the parity system of the premises and the negated conclusion is inconsistent",
        )
    sigma = {name: solution[i] for i, name in enumerate(order)}
    return Decision(
        False,
        Fragment.LINEAR,
        "the parity system of the premises and the negated conclusion is solvable",
        sigma,
    )


def decide_or_fragment(inst: Instance) -> Decision:
    """Disjunctive fragment: implication holds iff the conclusion is constant
    true or some premise's coefficients are dominated by the conclusion's."""
    order = inst.variables
    goal = extract_or_nf(inst.conclusion, order)
    if goal.c0:
        return Decision(True, Fragment.OR, "the conclusion is identically true")
    for pos, psi in enumerate(inst.premises, 1):
        nf = extract_or_nf(psi, order)
        if nf.c0 <= goal.c0 and all(p <= q for p, q in zip(nf.coeffs, goal.coeffs)):
            return Decision(
                True, Fragment.OR, f"premise {pos} is dominated by the conclusion"
            )
    return Decision(
        False, Fragment.OR, "no premise disjunction is dominated by the conclusion"
    )


def decide_and_fragment(inst: Instance) -> Decision:
    """Conjunctive fragment: implication holds iff some premise is constant
    false, or the conclusion is satisfiable and every variable it forces is
    forced by some premise."""
    order = inst.variables
    n = len(order)
    supplied = [0] * n
    for pos, psi in enumerate(inst.premises, 1):
        nf = extract_and_nf(psi, order)
        if nf.c0 == 0:
            return Decision(True, Fragment.AND, f"premise {pos} is identically false")
        supplied = [s | c for s, c in zip(supplied, nf.coeffs)]
    goal = extract_and_nf(inst.conclusion, order)
    if goal.c0 == 0:
        return Decision(
            False,
            Fragment.AND,
            "the conclusion is identically false but the premises are satisfiable",
        )
    if all(c <= s for c, s in zip(goal.coeffs, supplied)):
        return Decision(
            True,
            Fragment.AND,
            "every variable the conclusion forces is forced by a premise",
        )
    return Decision(
        False,
        Fragment.AND,
        "some variable the conclusion forces is not forced by any premise",
    )


def decide_unary_fragment(inst: Instance) -> Decision:
    """Unary fragment: every formula is a literal or a constant.  Premises are
    unsatisfiable only through a constant-false premise or a complementary
    literal pair; otherwise the conclusion must be constant true or one of the
    premise literals."""
    order = inst.variables
    literals = {}
    for pos, psi in enumerate(inst.premises, 1):
        nf = extract_unary_nf(psi, order)
        if nf.is_const:
            if nf.bit == 0:
                return Decision(
                    True, Fragment.UNARY, f"premise {pos} is identically false"
                )
            continue
        other = literals.get((nf.var, nf.bit ^ 1))
        if other is not None:
            return Decision(
                True,
                Fragment.UNARY,
                f"premises {other} and {pos} are complementary literals",
            )
        literals.setdefault((nf.var, nf.bit), pos)
    goal = extract_unary_nf(inst.conclusion, order)
    if goal.is_const:
        if goal.bit:
            return Decision(True, Fragment.UNARY, "the conclusion is identically true")
        return Decision(
            False, Fragment.UNARY, "the conclusion is identically false but the premises hold somewhere"
        )
    pos = literals.get((goal.var, goal.bit))
    if pos is not None:
        return Decision(
            True, Fragment.UNARY, f"the conclusion literal is forced by premise {pos}"
        )
    return Decision(
        False, Fragment.UNARY, "the conclusion literal is not among the premise literals"
    )


def decide_single_linear(premise: Formula, conclusion: Formula) -> Decision:
    """Single linear premise: implication holds iff the premise is constant
    false, the conclusion is constant true, or both have identical parity
    coefficients."""
    inst = Instance.build(premise.base, (premise,), conclusion)
    order = inst.variables
    left = extract_linear_nf(premise, order)
    right = extract_linear_nf(conclusion, order)
    if left.c0 == 0 and not any(left.coeffs):
        return Decision(True, Fragment.LINEAR, "the premise is identically false")
    if right.c0 == 1 and not any(right.coeffs):
        return Decision(True, Fragment.LINEAR, "the conclusion is identically true")
    if left == right:
        return Decision(
            True, Fragment.LINEAR, "premise and conclusion have identical parity coefficients"
        )
    return Decision(
        False,
        Fragment.LINEAR,
        "the coefficients differ, the premise is satisfiable, and the conclusion is refutable",
    )


_SET_DECIDERS = {
    Fragment.OR: decide_or_fragment,
    Fragment.AND: decide_and_fragment,
    Fragment.LINEAR: decide_linear,
    Fragment.UNARY: decide_unary_fragment,
    Fragment.TRIVIAL: decide_unary_fragment,
}


def dispatch(
    inst: Instance,
    mode: Mode = Mode.SET_PREMISE,
    override: Optional[Fragment] = None,
    max_vars: int = DEFAULT_VARIABLE_CAP,
) -> Decision:
    """Route the instance to the decider its base classification selects.

    `override` forces a particular decider (it errors if the instance falls
    outside that decider's fragment).
    """
    if mode is Mode.SINGLE_PREMISE and len(inst.premises) != 1:
        raise ValueError(
            f"single-premise mode needs exactly one premise, got {len(inst.premises)}"
        )
    if override is not None:
        fragment = override
    elif mode is Mode.SINGLE_PREMISE:
        fragment = classify_base_single_premise(inst.base).fragment
    else:
        fragment = classify_base(inst.base).fragment
    if fragment is Fragment.GENERAL:
        return decide_oracle(inst, max_vars)
    if fragment is Fragment.LINEAR and mode is Mode.SINGLE_PREMISE:
        return decide_single_linear(inst.premises[0], inst.conclusion)
    return _SET_DECIDERS[fragment](inst)


def decide_equivalence(
    phi: Formula, psi: Formula, max_vars: int = DEFAULT_VARIABLE_CAP
) -> Decision:
    """Two single-premise implication checks, one per direction."""
    forward = dispatch(
        Instance.build(phi.base, (phi,), psi), Mode.SINGLE_PREMISE, max_vars=max_vars
    )
    if not forward.implies:
        return Decision(
            False,
            forward.fragment_used,
            "the forward implication fails: " + forward.detail,
            forward.counterexample,
        )
    backward = dispatch(
        Instance.build(phi.base, (psi,), phi), Mode.SINGLE_PREMISE, max_vars=max_vars
    )
    if not backward.implies:
        return Decision(
            False,
            backward.fragment_used,
            "the reverse implication fails: " + backward.detail,
            backward.counterexample,
        )
    return Decision(True, forward.fragment_used, "both implication directions hold")
