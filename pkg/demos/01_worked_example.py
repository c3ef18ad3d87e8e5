"""One preference relation, three very different numbers behind it.

On a two-element frame, take the relation

    frame > {theta2} > {theta1} > empty

and three set functions that all order the subsets that way: a probability,
a belief function, and a function that is neither.  The relation cannot tell
them apart, which is the point: qualitative comparisons carry less
information than the numbers, and several quantitative theories fit them.
"""

from fractions import Fraction as F

from qualbelief import (
    Frame,
    SetFunction,
    check_measure,
    from_ranking,
    mass_from_set_function,
    verify_compatibility,
)

frame = Frame(["theta1", "theta2"])
EMPTY, T1, T2, BOTH = 0, 1, 2, 3
relation = from_ranking(frame, [[EMPTY], [T1], [T2], [BOTH]])
print("relation:", relation)

candidates = {
    "P": SetFunction(frame, [0, F(2, 5), F(3, 5), 1]),
    "Bel": SetFunction(frame, [0, F(1, 5), F(1, 2), 1]),
    "f": SetFunction(frame, [0, F(3, 5), F(7, 10), 1]),
}

for name, g in candidates.items():
    report = check_measure(g)
    verdict = verify_compatibility(g, relation)
    print(f"\n{name} = {g}")
    print(f"  strongest class: {report.strongest_class}")
    failed = [a for a, ok in report.axioms.items() if not ok]
    print(f"  failed axioms:   {', '.join(failed) or 'none'}")
    print(f"  Moebius masses:  {', '.join(str(v) for v in mass_from_set_function(g).masses)}")
    print(f"  compatible with the relation: {verdict.compatible}")

# The Moebius mass of the whole frame is negative for f, so no mass
# function produces it: f is not a belief function, and since
# f({theta1}) + f({theta2}) = 13/10 != 1 it is not additive either.
