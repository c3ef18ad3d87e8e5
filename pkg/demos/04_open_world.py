"""Open world: mass on the empty set.

If the frame might not contain the true answer, some mass can sit on the
empty set.  The resulting generalized belief has bel(frame) = 1 - m(empty),
and the relation it induces may leave the frame tied with the empty set.
Dropping the nontriviality axiom is exactly what the open world needs.
"""

from fractions import Fraction as F

from qualbelief import (
    Frame,
    MassFunction,
    belief_from_mass,
    check_generalized,
    check_relation,
    construct_generalized_belief,
    from_ranking,
    induce_relation,
)

frame = Frame(["theta1", "theta2"])
EMPTY, T1, T2, BOTH = 0, 1, 2, 3

m = MassFunction(frame, [F(1, 2), F(1, 4), 0, F(1, 4)])
bel = belief_from_mass(m, "open")
report = check_generalized(bel)
print("masses:", m)
print("generalized belief:", bel)
print("passes the generalized axioms:", report.passed, "| inferred m(empty):", report.empty_mass)
print("induced relation:", check_relation(induce_relation(bel)).structure_class)

# Total conflict: all mass on the empty set.  Every subset gets belief 0,
# so the induced relation is complete indifference.
total = from_ranking(frame, [[EMPTY, T1, T2, BOTH]])
built = construct_generalized_belief(total)
print("\ncomplete indifference:", check_relation(total).structure_class)
print("built:", built.measure, "with m(empty) =", built.masses.masses[EMPTY], f"[{built.provenance}]")

# Any relation with the frame above the empty set is handled by the closed-world construction.
built = construct_generalized_belief(from_ranking(frame, [[EMPTY], [T1], [T2], [BOTH]]))
print("strict chain:", built.measure, f"[{built.provenance}]")
