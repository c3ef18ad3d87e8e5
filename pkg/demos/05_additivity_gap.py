"""A qualitative probability that no probability represents.

The qualitative-probability axioms are necessary for a probability
representation but not sufficient.  Small counterexamples need five
elements.  The search below starts from the strict order induced by a
random probability, swaps one adjacent pair together with every pair that
differs by the same two "core" sets, keeps the result if it still satisfies
the axioms, and asks the exact LP whether a probability fits.
"""

from qualbelief import Frame, check_relation, construct_probability_scott
from qualbelief.oracle import search_unrepresentable_qualitative_probability

frame = Frame.of_size(5)
result = search_unrepresentable_qualitative_probability(frame, seed=1, tries=200)
if not result.found:
    print("no example found with this seed")
else:
    r = result.relation
    print(f"found after {result.tries} tries")
    print("structure:", check_relation(r).structure_class)
    print("swapped pairs:")
    for hi, lo in result.flipped:
        print(f"  {frame.format(hi)} now below {frame.format(lo)}")
    lp = construct_probability_scott(r)
    print(f"LP status {lp.outcome.status}, best margin {lp.epsilon}: representable = {lp.representable}")
