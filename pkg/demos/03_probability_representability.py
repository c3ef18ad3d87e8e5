"""When does a ranking come from a probability?

The monotonicity axioms are necessary but not enough; the decisive test is
a linear program.  Singleton probabilities are the unknowns, every strict
comparison must hold with a margin epsilon and every tie with equality, and
the ranking is representable exactly when the best margin is positive.  The
LP is solved in exact rational arithmetic, so the verdict has no tolerance.
"""

from qualbelief import Frame, check_relation, construct_probability_scott, from_ranking
from qualbelief.oracle import search_probability_grid

frame = Frame(["theta1", "theta2"])
EMPTY, T1, T2, BOTH = 0, 1, 2, 3

cases = {
    "strict chain": [[EMPTY], [T1], [T2], [BOTH]],
    "equal singletons": [[EMPTY], [T1, T2], [BOTH]],
    "frame at the bottom": [[BOTH], [EMPTY], [T1], [T2]],
    "total ignorance": [[EMPTY, T1, T2], [BOTH]],
    "a null element": [[EMPTY, T1], [T2, BOTH]],
}

for name, ranking in cases.items():
    r = from_ranking(frame, ranking)
    result = construct_probability_scott(r)
    print(f"\n== {name}: {check_relation(r).structure_class}")
    print(f"  LP status {result.outcome.status}, best margin {result.epsilon}")
    if result.representable:
        print(f"  probability: {result.probability}")
    grid = search_probability_grid(r, 60)
    print(f"  grid search (sixtieths) {'agrees' if (grid is not None) == result.representable else 'DISAGREES'}")

print("\nThe LP for the strict chain:")
print(construct_probability_scott(from_ranking(frame, cases["strict chain"])).system.dump())
