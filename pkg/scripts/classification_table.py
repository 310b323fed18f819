#!/usr/bin/env python3
"""Print the complexity landscape of the canonical clone bases.

For each base the table shows the class of the implication problem with
set-valued premises and with a single premise, plus the fragment the
dispatcher would use.
"""

from postimp import (
    AND2,
    AND_OR3,
    BOT,
    MAJ3,
    NOT,
    OR2,
    OR_AND3,
    TOP,
    XOR2,
    XOR3,
    Base,
    classify_base,
    classify_base_single_premise,
)

BASES = [
    ("{and, not}", Base.of(AND2, NOT)),
    ("{or, and}", Base.of(OR2, AND2)),
    ("{x or (y and z)}", Base.of(OR_AND3)),
    ("{x and (y or z)}", Base.of(AND_OR3)),
    ("{maj}", Base.of(MAJ3)),
    ("{xor, 1}", Base.of(XOR2, TOP)),
    ("{x xor y xor z}", Base.of(XOR3)),
    ("{or, 0, 1}", Base.of(OR2, BOT, TOP)),
    ("{and, 0, 1}", Base.of(AND2, BOT, TOP)),
    ("{not, 1}", Base.of(NOT, TOP)),
    ("{not}", Base.of(NOT)),
]


def main():
    width = max(len(label) for label, _ in BASES)
    print(f"{'base':<{width}}  {'set premises':<18} {'single premise':<18} fragment")
    print("-" * (width + 50))
    for label, base in BASES:
        many = classify_base(base)
        one = classify_base_single_premise(base)
        print(
            f"{label:<{width}}  {many.complexity.value:<18} "
            f"{one.complexity.value:<18} {many.fragment.value}"
        )


if __name__ == "__main__":
    main()
