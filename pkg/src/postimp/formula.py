"""Formulae over a declared connective base: parsing, printing, evaluation.

Formulae are trees of applications of named base connectives to variables.
Variables are positioned by first occurrence; every coefficient extraction
accepts an explicit variable order so that premises and a conclusion can
share one index.  All evaluation walks are iterative, so formula depth is
bounded only by memory.
"""

import os
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import boolfn
from .boolfn import (
    AndNormalForm,
    ArityError,
    BooleanFunction,
    LinearNormalForm,
    MAX_ARITY,
    OrNormalForm,
    UnaryNormalForm,
    read_functions,
    write_functions,
)


class ParseError(ValueError):
    """Formula text rejected; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FragmentError(ValueError):
    """A connective falls outside the fragment a decider requires."""


@dataclass(frozen=True)
class Base:
    """An ordered set of connectives with unique names."""

    functions: tuple

    def __post_init__(self):
        if not self.functions:
            raise ValueError("a base needs at least one function")
        names = [f.name for f in self.functions]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate function names in base: {sorted(names)}")
        object.__setattr__(self, "_by_name", {f.name: f for f in self.functions})

    @classmethod
    def of(cls, *functions: BooleanFunction) -> "Base":
        return cls(tuple(functions))

    @classmethod
    def load(cls, path) -> "Base":
        return cls(tuple(read_functions(path)))

    def save(self, path) -> None:
        write_functions(self.functions, path)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> BooleanFunction:
        return self._by_name[name]

    @property
    def names(self) -> tuple:
        return tuple(f.name for f in self.functions)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple = ()


Node = Union[Var, App]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_VAR_RE = re.compile(r"[a-z][a-z0-9_]*")


def iter_nodes(root: Node):
    """Yield every node of the tree, parents before children."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, App):
            stack.extend(reversed(node.args))


def depth(root: Node) -> int:
    """Connective nesting depth; a bare variable or constant has depth 0."""
    best = {}
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            best[id(node)] = 0
            continue
        if not node.args:
            best[id(node)] = 0
            continue
        if expanded:
            best[id(node)] = 1 + max(best[id(a)] for a in node.args)
            continue
        stack.append((node, True))
        stack.extend((a, False) for a in node.args)
    return best[id(root)]


def connective_count(root: Node) -> int:
    return sum(1 for node in iter_nodes(root) if isinstance(node, App))


@dataclass(frozen=True)
class Formula:
    root: Node
    base: Base
    variables: tuple

    @classmethod
    def build(cls, root: Node, base: Base) -> "Formula":
        """Validate the tree against the base and index variables by first occurrence."""
        seen = {}
        stack = [root]
        while stack:
            node = stack.pop()
            if isinstance(node, Var):
                seen.setdefault(node.name, len(seen))
                continue
            if node.fn not in base:
                raise ValueError(f"unknown connective {node.fn!r}")
            f = base[node.fn]
            if len(node.args) != f.arity:
                raise ArityError(node.fn, f.arity, len(node.args))
            stack.extend(reversed(node.args))
        return cls(root, base, tuple(seen))


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            tokens.append((ch, i))
            i += 1
            continue
        m = _NAME_RE.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", i)
        tokens.append((m.group(), i))
        i = m.end()
    return tokens


def _atom(name: str, pos: int, base: Base) -> Node:
    if name in base:
        f = base[name]
        if f.arity != 0:
            raise ParseError(f"{name} expects {f.arity} argument(s), got 0", pos)
        return App(name, ())
    if not _VAR_RE.fullmatch(name):
        raise ParseError(f"unknown symbol {name!r}", pos)
    return Var(name)


def parse_formula(text: str, base: Base) -> Formula:
    """Parse `NAME(arg, ...)` / `NAME` / variable syntax over the given base."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", 0)

    def expect_name(k):
        if k >= len(tokens):
            raise ParseError("unexpected end of input", len(text))
        tok, pos = tokens[k]
        if tok in "(),":
            raise ParseError(f"expected a name, got {tok!r}", pos)
        return tok, pos

    # frames: (function name, its position, collected arguments)
    frames = []
    k = 0
    node = None
    while True:
        tok, pos = expect_name(k)
        k += 1
        if k < len(tokens) and tokens[k][0] == "(":
            if tok not in base:
                raise ParseError(f"unknown connective {tok!r}", pos)
            k += 1
            if k < len(tokens) and tokens[k][0] == ")":
                k += 1
                node = _reduce_app(tok, pos, [], base)
            else:
                frames.append((tok, pos, []))
                continue
        else:
            node = _atom(tok, pos, base)
        # a complete subformula: fold it into enclosing frames
        while frames:
            fname, fpos, args = frames[-1]
            args.append(node)
            if k >= len(tokens):
                raise ParseError("unexpected end of input", len(text))
            sep, spos = tokens[k]
            if sep == ",":
                k += 1
                node = None
                break
            if sep == ")":
                k += 1
                frames.pop()
                node = _reduce_app(fname, fpos, args, base)
                continue
            raise ParseError(f"expected ',' or ')', got {sep!r}", spos)
        if node is None:
            continue
        if not frames:
            if k != len(tokens):
                tok, pos = tokens[k]
                raise ParseError(f"unexpected trailing token {tok!r}", pos)
            return Formula.build(node, base)


def _reduce_app(name: str, pos: int, args: list, base: Base) -> App:
    f = base[name]
    if len(args) != f.arity:
        raise ParseError(f"{name} expects {f.arity} argument(s), got {len(args)}", pos)
    return App(name, tuple(args))


def format_formula(phi) -> str:
    """Canonical text; `parse_formula(format_formula(phi))` is the identity."""
    root = phi.root if isinstance(phi, Formula) else phi
    out = []
    stack = [root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Var):
            out.append(item.name)
        elif not item.args:
            out.append(item.fn + "()")
        else:
            out.append(item.fn + "(")
            tail = []
            for i, a in enumerate(item.args):
                if i:
                    tail.append(", ")
                tail.append(a)
            tail.append(")")
            stack.extend(reversed(tail))
    return "".join(out)


def _resolve_order(phi: Formula, variables) -> tuple:
    order = phi.variables if variables is None else tuple(variables)
    missing = set(phi.variables) - set(order)
    if missing:
        raise ValueError(f"variable order is missing {sorted(missing)!r}")
    return order


def evaluate(phi: Formula, sigma: Sequence[int], variables=None) -> int:
    """Evaluate under an assignment aligned with the given variable order."""
    order = _resolve_order(phi, variables)
    if len(sigma) < len(order):
        raise ValueError(f"assignment has {len(sigma)} bits for {len(order)} variables")
    env = dict(zip(order, sigma))
    values = []
    stack = [(phi.root, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            values.append(env[node.name])
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((a, False) for a in reversed(node.args))
            continue
        f = phi.base[node.fn]
        index = 0
        if f.arity:
            args = values[-f.arity :]
            del values[-f.arity :]
            for i, b in enumerate(args):
                index |= b << i
        values.append(f.table >> index & 1)
    return values[0]


def evaluate_block(phi: Formula, words: Sequence[int], width: int, variables=None) -> int:
    """Bit-sliced evaluation: lane k of each word holds assignment k.

    Applies each connective lane-wise through its truth table and returns the
    result word; `width` is the number of live lanes.
    """
    order = _resolve_order(phi, variables)
    if len(words) < len(order):
        raise ValueError(f"{len(words)} words supplied for {len(order)} variables")
    env = dict(zip(order, words))
    mask = (1 << width) - 1
    values = []
    stack = [(phi.root, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            values.append(env[node.name] & mask)
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((a, False) for a in reversed(node.args))
            continue
        f = phi.base[node.fn]
        if f.arity:
            args = values[-f.arity :]
            del values[-f.arity :]
        else:
            args = []
        acc = 0
        for m in range(f.rows):
            if not f.table >> m & 1:
                continue
            term = mask
            for i, w in enumerate(args):
                term &= w if m >> i & 1 else ~w & mask
                if not term:
                    break
            acc |= term
        values.append(acc)
    return values[0]


def variable_word(i: int, start: int, width: int) -> int:
    """Lane pattern of variable i over assignments start..start+width-1.

    `start` must be a multiple of `width`, which must be a power of two; lane
    k then carries bit ((start + k) >> i) & 1.
    """
    period = 1 << i
    if period >= width:
        return (1 << width) - 1 if start >> i & 1 else 0
    return (((1 << width) - 1) // ((1 << period) + 1)) << period


def truth_table(phi: Formula, name: str = "f") -> BooleanFunction:
    """The full table of the formula under its variable order."""
    n = len(phi.variables)
    if n > MAX_ARITY:
        raise ValueError(f"{n} variables exceed the {MAX_ARITY}-variable table cap")
    width = 1 << n
    words = [variable_word(i, 0, width) for i in range(n)]
    return BooleanFunction(name, n, evaluate_block(phi, words, width))


def _used_functions(phi: Formula):
    names = {node.fn for node in iter_nodes(phi.root) if isinstance(node, App)}
    return [phi.base[name] for name in sorted(names)]


def _require_fragment(phi: Formula, view, what: str) -> None:
    for f in _used_functions(phi):
        if view(f) is None:
            raise FragmentError(f"connective {f.name!r} is not {what}")


def extract_linear_nf(phi: Formula, variables=None) -> LinearNormalForm:
    """Linear coefficients read off at the zero vector and the unit vectors.

    Sound only when every connective of the formula is linear, which is
    checked up front; uses exactly n+1 evaluations.
    """
    _require_fragment(phi, boolfn.as_linear, "linear")
    order = _resolve_order(phi, variables)
    n = len(order)
    zero = [0] * n
    c0 = evaluate(phi, zero, order)
    coeffs = []
    for i in range(n):
        zero[i] = 1
        coeffs.append(evaluate(phi, zero, order) ^ c0)
        zero[i] = 0
    return LinearNormalForm(c0, tuple(coeffs))


def extract_or_nf(phi: Formula, variables=None) -> OrNormalForm:
    """Disjunction coefficients from the zero vector and the unit vectors."""
    _require_fragment(phi, boolfn.as_disjunction, "a disjunction")
    order = _resolve_order(phi, variables)
    n = len(order)
    zero = [0] * n
    c0 = evaluate(phi, zero, order)
    coeffs = []
    for i in range(n):
        zero[i] = 1
        coeffs.append(0 if c0 == 0 and evaluate(phi, zero, order) == 0 else 1)
        zero[i] = 0
    return OrNormalForm(c0, tuple(coeffs))


def extract_and_nf(phi: Formula, variables=None) -> AndNormalForm:
    """Conjunction coefficients, dually, from the all-ones and co-unit vectors."""
    _require_fragment(phi, boolfn.as_conjunction, "a conjunction")
    order = _resolve_order(phi, variables)
    n = len(order)
    ones = [1] * n
    c0 = evaluate(phi, ones, order)
    coeffs = []
    for i in range(n):
        ones[i] = 0
        coeffs.append(0 if c0 == 1 and evaluate(phi, ones, order) == 1 else 1)
        ones[i] = 1
    return AndNormalForm(c0, tuple(coeffs))


def extract_unary_nf(phi: Formula, variables=None) -> UnaryNormalForm:
    """Follow the single relevant path from the root, composing each node's
    behaviour (identity, negation, or constant)."""
    _require_fragment(phi, boolfn.as_unary, "unary")
    order = _resolve_order(phi, variables)
    node = phi.root
    positive = True
    while True:
        if isinstance(node, Var):
            return UnaryNormalForm.literal(order.index(node.name) + 1, positive)
        behaviour = boolfn.as_unary(phi.base[node.fn])
        if behaviour.is_const:
            return UnaryNormalForm.const(behaviour.bit if positive else behaviour.bit ^ 1)
        if behaviour.is_negative:
            positive = not positive
        node = node.args[behaviour.var - 1]


@dataclass(frozen=True)
class Instance:
    """Premises and a conclusion over one base, with a joint variable index."""

    base: Base
    premises: tuple
    conclusion: Formula
    variables: tuple

    @classmethod
    def build(cls, base: Base, premises, conclusion: Formula) -> "Instance":
        prem = tuple(premises)
        for phi in (*prem, conclusion):
            if phi.base != base:
                raise ValueError("all formulae of an instance must share its base")
        seen = {}
        for phi in (*prem, conclusion):
            for v in phi.variables:
                seen.setdefault(v, len(seen))
        return cls(base, prem, conclusion, tuple(seen))


def read_instance(path, base: Optional[Base] = None) -> Instance:
    """Read `premise:`/`conclusion:` lines, with an optional `base:` header.

    A `base:` path is resolved relative to the instance file's directory; a
    base passed in as an argument takes precedence.
    """
    premises_text = []
    conclusion_text = None
    base_ref = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition(":")
            key, value = key.strip(), value.strip()
            if not sep or key not in ("base", "premise", "conclusion"):
                raise ValueError(f"{path}:{lineno}: expected 'base:', 'premise:' or 'conclusion:'")
            if key == "base":
                if base_ref is not None:
                    raise ValueError(f"{path}:{lineno}: duplicate 'base:' header")
                base_ref = (value, lineno)
            elif key == "premise":
                premises_text.append((value, lineno))
            else:
                if conclusion_text is not None:
                    raise ValueError(f"{path}:{lineno}: more than one 'conclusion:' line")
                conclusion_text = (value, lineno)
    if base is None:
        if base_ref is None:
            raise ValueError(f"{path}: no 'base:' header and no base supplied")
        ref_path = base_ref[0]
        if not os.path.isabs(ref_path):
            ref_path = os.path.join(os.path.dirname(os.path.abspath(path)), ref_path)
        base = Base.load(ref_path)
    if conclusion_text is None:
        raise ValueError(f"{path}: missing 'conclusion:' line")

    def parse_at(text, lineno):
        try:
            return parse_formula(text, base)
        except ParseError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None

    premises = [parse_at(t, ln) for t, ln in premises_text]
    conclusion = parse_at(*conclusion_text)
    return Instance.build(base, premises, conclusion)


def write_instance(inst: Instance, path, base_ref: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if base_ref is not None:
            fh.write(f"base: {base_ref}\n")
        for psi in inst.premises:
            fh.write(f"premise: {format_formula(psi)}\n")
        fh.write(f"conclusion: {format_formula(inst.conclusion)}\n")
