"""Finite Boolean functions as bit-packed truth tables.

A function of arity n is stored as an integer whose bit j holds the value at
the argument tuple encoded by j, with x1 on the least significant index bit:
a_i = (j >> (i - 1)) & 1.  The constants are the 0-ary functions with tables
"0" and "1".
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

MAX_ARITY = 16


class ArityError(ValueError):
    """Argument count does not match a connective's arity."""

    def __init__(self, name: str, expected: int, actual: int):
        super().__init__(f"{name} expects {expected} argument(s), got {actual}")
        self.name = name
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True)
class BooleanFunction:
    name: str
    arity: int
    table: int

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"function name must be an identifier, got {self.name!r}")
        if not 0 <= self.arity <= MAX_ARITY:
            raise ValueError(f"arity must lie in 0..{MAX_ARITY}, got {self.arity}")
        if not 0 <= self.table < (1 << self.rows):
            raise ValueError(f"table of {self.name} does not fit {self.rows} rows")

    @property
    def rows(self) -> int:
        return 1 << self.arity

    @classmethod
    def from_bits(cls, name: str, bits: str) -> "BooleanFunction":
        """Build from a truth-table string; character j is the value at index j."""
        n = len(bits)
        arity = n.bit_length() - 1
        if n == 0 or (1 << arity) != n:
            raise ValueError(f"table length must be a power of two, got {n}")
        if any(c not in "01" for c in bits):
            raise ValueError(f"table for {name} must be over 0/1, got {bits!r}")
        table = sum(1 << j for j, c in enumerate(bits) if c == "1")
        return cls(name, arity, table)

    def bits(self) -> str:
        return "".join("1" if self.table >> j & 1 else "0" for j in range(self.rows))


def evaluate(f: BooleanFunction, args: Sequence[int]) -> int:
    """Value of f at the given argument bits (x1 first)."""
    if len(args) != f.arity:
        raise ArityError(f.name, f.arity, len(args))
    index = 0
    for i, a in enumerate(args):
        index |= (a & 1) << i
    return f.table >> index & 1


def _zero_positions(rows: int, period: int) -> int:
    # mask of table indices whose bit at the given period is clear
    return ((1 << rows) - 1) // ((1 << period) + 1)


def is_c_reproducing(f: BooleanFunction, c: int) -> bool:
    """f(c, ..., c) = c."""
    return evaluate(f, (c,) * f.arity) == c


def is_monotone(f: BooleanFunction) -> bool:
    """No single 0->1 input flip ever decreases the output."""
    for i in range(f.arity):
        period = 1 << i
        low = _zero_positions(f.rows, period)
        if (f.table & low) & ~(f.table >> period):
            return False
    return True


def dual(f: BooleanFunction) -> BooleanFunction:
    """Negate the output and all inputs; an involution on tables."""
    rows = f.rows
    t = 0
    for j in range(rows):
        if not f.table >> (rows - 1 - j) & 1:
            t |= 1 << j
    return BooleanFunction(f.name, f.arity, t)


def is_self_dual(f: BooleanFunction) -> bool:
    return f.table == dual(f).table


def is_c_separating(f: BooleanFunction, c: int) -> bool:
    """Some coordinate equals c on every input mapped to c."""
    if f.arity == 0:
        return False
    preimage = [j for j in range(f.rows) if (f.table >> j & 1) == c]
    return any(all((j >> i & 1) == c for j in preimage) for i in range(f.arity))


def relevant_variables(f: BooleanFunction) -> frozenset:
    """1-based indices of inputs that can flip the output."""
    out = set()
    for i in range(f.arity):
        period = 1 << i
        if (f.table ^ (f.table >> period)) & _zero_positions(f.rows, period):
            out.add(i + 1)
    return frozenset(out)


@dataclass(frozen=True)
class LinearNormalForm:
    """c0 xor c1*x1 xor ... xor cn*xn."""

    c0: int
    coeffs: tuple

    def value(self, args: Sequence[int]) -> int:
        v = self.c0
        for c, a in zip(self.coeffs, args):
            v ^= c & a
        return v


@dataclass(frozen=True)
class OrNormalForm:
    """c0 or the disjunction of the variables with coefficient 1."""

    c0: int
    coeffs: tuple

    def value(self, args: Sequence[int]) -> int:
        if self.c0:
            return 1
        return 1 if any(c & a for c, a in zip(self.coeffs, args)) else 0


@dataclass(frozen=True)
class AndNormalForm:
    """c0 and the conjunction of the variables with coefficient 1."""

    c0: int
    coeffs: tuple

    def value(self, args: Sequence[int]) -> int:
        if not self.c0:
            return 0
        return 0 if any(c and not a for c, a in zip(self.coeffs, args)) else 1


@dataclass(frozen=True)
class UnaryNormalForm:
    """A constant or a single literal.

    `var` is a 1-based input position, or None for constants.  For literals
    `bit` is the polarity (1 = the variable itself, 0 = its negation); for
    constants it is the constant value.
    """

    var: Optional[int]
    bit: int

    @classmethod
    def const(cls, value: int) -> "UnaryNormalForm":
        return cls(None, value)

    @classmethod
    def literal(cls, var: int, positive: bool) -> "UnaryNormalForm":
        return cls(var, 1 if positive else 0)

    @property
    def is_const(self) -> bool:
        return self.var is None

    @property
    def is_negative(self) -> bool:
        return self.var is not None and self.bit == 0

    def value(self, args: Sequence[int]) -> int:
        if self.var is None:
            return self.bit
        return args[self.var - 1] ^ self.bit ^ 1


def _verified(f, nf):
    for j in range(f.rows):
        args = [(j >> i) & 1 for i in range(f.arity)]
        if nf.value(args) != (f.table >> j & 1):
            return None
    return nf


def as_linear(f: BooleanFunction) -> Optional[LinearNormalForm]:
    """Linear form read off at the zero and unit inputs, verified row-exactly."""
    c0 = f.table & 1
    coeffs = tuple((f.table >> (1 << i) & 1) ^ c0 for i in range(f.arity))
    return _verified(f, LinearNormalForm(c0, coeffs))


def as_disjunction(f: BooleanFunction) -> Optional[OrNormalForm]:
    c0 = f.table & 1
    coeffs = tuple(
        0 if c0 == 0 and not f.table >> (1 << i) & 1 else 1 for i in range(f.arity)
    )
    return _verified(f, OrNormalForm(c0, coeffs))


def as_conjunction(f: BooleanFunction) -> Optional[AndNormalForm]:
    ones = f.rows - 1
    c0 = f.table >> ones & 1
    coeffs = tuple(
        0 if c0 == 1 and f.table >> (ones ^ (1 << i)) & 1 else 1 for i in range(f.arity)
    )
    return _verified(f, AndNormalForm(c0, coeffs))


def as_unary(f: BooleanFunction) -> Optional[UnaryNormalForm]:
    relevant = relevant_variables(f)
    if len(relevant) > 1:
        return None
    if not relevant:
        return UnaryNormalForm.const(f.table & 1)
    (i,) = relevant
    return UnaryNormalForm.literal(i, positive=not f.table & 1)


def read_functions(path) -> list:
    """Parse a function-table file: one `name arity bits` entry per line."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 'name arity bits', got {line!r}")
            name, arity_text, bits = parts
            try:
                arity = int(arity_text)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: arity must be an integer, got {arity_text!r}") from None
            if not 0 <= arity <= MAX_ARITY:
                raise ValueError(f"{path}:{lineno}: arity must lie in 0..{MAX_ARITY}, got {arity}")
            if len(bits) != 1 << arity:
                raise ValueError(
                    f"{path}:{lineno}: table for {name} must have {1 << arity} bits, got {len(bits)}"
                )
            try:
                fn = BooleanFunction.from_bits(name, bits)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            out.append(fn)
    return out


def write_functions(functions: Iterable[BooleanFunction], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for f in functions:
            fh.write(f"{f.name} {f.arity} {f.bits()}\n")


def _bf(name, bits):
    return BooleanFunction.from_bits(name, bits)


TOP = _bf("top", "1")
BOT = _bf("bot", "0")
NOT = _bf("not", "10")
AND2 = _bf("and", "0001")
OR2 = _bf("or", "0111")
XOR2 = _bf("xor", "0110")
NAND2 = _bf("nand", "1110")
XOR3 = _bf("xor3", "01101001")
MAJ3 = _bf("maj", "00010111")
OR_AND3 = _bf("or_and", "01010111")  # x or (y and z)
AND_OR3 = _bf("and_or", "00010101")  # x and (y or z)
