"""Building a belief function from a ranking of subsets.

Walk the classes of the ranking from the bottom up.  Each class gets the
smallest integer value that keeps the order strict and keeps every Moebius
mass nonnegative; dividing by the value of the frame gives a belief function
that reproduces the ranking exactly.
"""

from fractions import Fraction as F

from qualbelief import (
    Frame,
    check_relation,
    construct_belief,
    from_ranking,
    induce_relation,
    partition,
)
from qualbelief.errors import NotQualitativeBeliefError
from qualbelief.representation import probability_from_singletons

frame = Frame(["theta1", "theta2"])
EMPTY, T1, T2, BOTH = 0, 1, 2, 3


def show(title, relation):
    print(f"\n== {title}")
    print("ranking (lowest first):", partition(relation).describe(relation.frame))
    print("structure:", check_relation(relation).structure_class)
    try:
        built = construct_belief(relation)
    except NotQualitativeBeliefError as exc:
        print("no belief representation:", exc)
        return
    print("integer class values:", built.class_values)
    print("belief:", built.measure)
    print("masses:", built.masses)


show("strict chain", from_ranking(frame, [[EMPTY], [T1], [T2], [BOTH]]))
show("two equally likely singletons", from_ranking(frame, [[EMPTY], [T1, T2], [BOTH]]))
show("total ignorance", from_ranking(frame, [[EMPTY, T1, T2], [BOTH]]))
show("everything indifferent", from_ranking(frame, [[EMPTY, T1, T2, BOTH]]))

# A four-element relation with a null element (weight 0).  Every subset is
# tied with its copy that adds the null element, so classes contain nested
# sets.  The recursion must look at each member's strict subsets, not at
# the class as a whole, or the mass of some sets goes negative.
frame4 = Frame.of_size(4)
p = probability_from_singletons(frame4, [F(2, 11), F(4, 11), F(5, 11), F(0)])
relation = induce_relation(p)
built = construct_belief(relation)
print("\n== four elements, one of them null")
print("class values:", built.class_values)
print("all masses nonnegative:", all(v >= 0 for v in built.masses.masses))
