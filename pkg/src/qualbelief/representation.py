"""Moving between numeric measures and preference relations.

``induce_relation`` reads a relation off a set function; the ``construct_*``
functions go the other way, producing a measure of the requested class that
induces exactly the given relation, or raising with the axiom that blocks it.
Every constructor re-checks its own output before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .errors import (
    InternalError,
    NotQualitativeBeliefError,
    NotQualitativeProbabilityError,
    NotWeakOrderError,
    AxiomError,
)
from .frame import Frame, popcount, same_frame, submasks
from .measures import (
    MassFunction,
    SetFunction,
    check_belief,
    check_generalized,
    check_monotonic,
    check_probability,
    mass_from_set_function,
)
from .relations import (
    GENERALIZED_BELIEF_STRUCTURE,
    QUALITATIVE_BELIEF,
    QUALITATIVE_PROBABILITY,
    PreferenceRelation,
    RankedPartition,
    axioms_of,
    check_axioms,
    from_ranks,
    partition,
)

THEOREM3 = "theorem3"
SCOTT = "scott"
THEOREM4 = "theorem4"
THEOREM5_EMPTY = "theorem5-case-i"
THEOREM5_NONTRIVIAL = "theorem5-case-ii"


@dataclass(frozen=True)
class CompatibilityVerdict:
    """Whether a set function and a relation agree on every pair.

    On disagreement ``witness`` is ``(A, B)`` oriented so that one side
    claims ``A > B`` and the other does not.
    """

    compatible: bool
    witness: tuple[int, int] | None = None
    reason: str = ""


@dataclass(frozen=True)
class Construction:
    measure: SetFunction
    masses: MassFunction
    provenance: str
    partition: RankedPartition | None = None
    class_values: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ScottResult:
    representable: bool
    probability: SetFunction | None
    epsilon: Fraction | None
    outcome: lp.LpOutcome
    system: lp.LinearSystem

    @property
    def provenance(self) -> str:
        return SCOTT


def _dense_ranks(values) -> list[int]:
    levels = {v: i for i, v in enumerate(sorted(set(values)))}
    return [levels[v] for v in values]


def induce_relation(g: SetFunction) -> PreferenceRelation:
    """``A > B`` iff ``g(A) > g(B)``; always a weak order."""
    return from_ranks(g.frame, _dense_ranks(g.values))


def verify_compatibility(g: SetFunction, r: PreferenceRelation) -> CompatibilityVerdict:
    frame = same_frame(g.frame, r.frame)
    n = frame.n_subsets
    for a in range(n):
        for b in range(a + 1, n):
            says = int(r.matrix[a, b])
            values = (g[a] > g[b]) - (g[a] < g[b])
            if says != values:
                # Orient the witness so A is the side claimed strictly better.
                if says < 0 or (says == 0 and values < 0):
                    a_, b_ = b, a
                else:
                    a_, b_ = a, b
                rel = {1: ">", 0: "~", -1: "<"}[int(r.matrix[a_, b_])]
                reason = (
                    f"relation has {frame.format(a_)} {rel} {frame.format(b_)} "
                    f"but values are {g[a_]} and {g[b_]}"
                )
                return CompatibilityVerdict(False, (a_, b_), reason)
    return CompatibilityVerdict(True)


def _require(r: PreferenceRelation, structure: str, error: type[AxiomError]) -> None:
    axioms = axioms_of(structure)
    report = check_axioms(r, axioms)
    failure = report.first_failure(axioms)
    if failure is not None:
        axiom, witness = failure
        shown = ", ".join(r.frame.format(a) for a in witness)
        raise error(
            f"relation is not a {structure.replace('_', ' ')}: {axiom} fails at ({shown})",
            axiom=axiom,
            witness=witness,
        )


def ordinal_representation(r: PreferenceRelation) -> SetFunction:
    """Rank function: g(A) = i for A in the i-th indifference class."""
    part = partition(r)
    return SetFunction(r.frame, part.ranks())


def _belief_recursion(r: PreferenceRelation, part: RankedPartition, guard: str) -> list[int]:
    """Unnormalized values f(E_0), ..., f(E_k) on the indifference classes.

    f(E_0) = 0 and f(E_{n+1}) = max(f'(E_{n+1}), f(E_n) + 1) where f'(A) is
    the least value of A that keeps its Moebius mass nonnegative given the
    values of its proper subsets.

    ``guard`` picks how members of a class that contain another member of
    the same class are handled:

    ``"member"`` (default)
        such members are skipped when taking the max of f'; their Moebius
        mass is zero whatever f(E_{n+1}) is, because dominance and partial
        monotonicity force every B with the same difference to collapse.
    ``"class"``
        if any such member exists, f' falls back to f(E_n) + 1 for the whole
        class.  This can leave other members with negative mass (for example
        once a null element is present), which the postconditions reject.
    """
    rank = part.ranks()
    f = [0]
    for n, cls in enumerate(part.classes[1:]):
        level = n + 1
        nested = {
            a for a in cls if any(rank[b] == level for b in submasks(a) if b != a)
        }

        def lower_bound(a: int) -> int:
            total = 0
            for b in submasks(a):
                if b != a:
                    sign = -1 if popcount(a ^ b) % 2 else 1
                    total += sign * f[rank[b]]
            return -total

        step = f[n] + 1
        if guard == "class":
            candidates = [] if nested else list(cls)
        elif guard == "member":
            candidates = [a for a in cls if a not in nested]
        else:
            raise ValueError(f"guard must be 'member' or 'class', not {guard!r}")
        floor = max((lower_bound(a) for a in candidates), default=step)
        f.append(max(floor, step))
    if not all(isinstance(v, int) for v in f):
        raise InternalError("class values are not integers")
    return f


def construct_belief(r: PreferenceRelation, *, guard: str = "member") -> Construction:
    """Belief function compatible with a qualitative belief relation."""
    _require(r, QUALITATIVE_BELIEF, NotQualitativeBeliefError)
    part = partition(r)
    f = _belief_recursion(r, part, guard)
    rank = part.ranks()
    top = f[-1]
    bel = SetFunction(r.frame, [Fraction(f[rank[a]], top) for a in range(r.frame.n_subsets)])
    return _finish(bel, r, THEOREM3, check_belief, "closed", part, tuple(f))


def _finish(measure, r, provenance, checker, world, part=None, class_values=None) -> Construction:
    report = checker(measure)
    if not report.passed:
        raise InternalError(f"constructed measure fails its axioms: {report.axioms}")
    verdict = verify_compatibility(measure, r)
    if not verdict.compatible:
        raise InternalError(f"constructed measure is not compatible: {verdict.reason}")
    masses = mass_from_set_function(measure, world)
    if not isinstance(masses, MassFunction):
        raise InternalError("constructed measure has no valid mass function")
    return Construction(measure, masses, provenance, part, class_values)


def construct_monotonic_belief(r: PreferenceRelation) -> Construction:
    """Monotonic belief function compatible with a qualitative probability relation."""
    _require(r, QUALITATIVE_PROBABILITY, NotQualitativeProbabilityError)
    built = construct_belief(r)
    report = check_monotonic(built.measure)
    if not report.passed:
        raise InternalError(f"belief built from a qualitative probability fails B4 at {report.witness}")
    return Construction(built.measure, built.masses, THEOREM4, built.partition, built.class_values)


def construct_generalized_belief(r: PreferenceRelation) -> Construction:
    """Generalized (open-world) belief function; the frame need not beat the empty set."""
    _require(r, GENERALIZED_BELIEF_STRUCTURE, AxiomError)
    frame = r.frame
    if r.prefers(frame.full, 0):
        built = construct_belief(r)
        return Construction(built.measure, built.masses, THEOREM5_NONTRIVIAL, built.partition, built.class_values)
    if r.strict_pairs():
        raise InternalError("frame ~ empty under dominance, yet a strict pair exists")
    bel = SetFunction(frame, [0] * frame.n_subsets)
    return _finish(bel, r, THEOREM5_EMPTY, check_generalized, "open", partition(r), (0,))


def scott_system(r: PreferenceRelation, *, reduce: bool = True) -> lp.LinearSystem:
    """Linear program whose optimum epsilon is positive iff ``r`` has a probability representation.

    Variables are the singleton probabilities and ``eps``.  Every strict pair
    becomes ``P(A) - P(B) >= eps`` and every indifferent pair an equality.
    With ``reduce`` and a weak order, only consecutive classes and
    within-class equalities are emitted; transitivity makes that equivalent.
    """
    frame = r.frame
    names = list(frame.elements)
    eps = "eps"
    while eps in names:
        eps = "_" + eps
    system = lp.LinearSystem(names + [eps])

    def diff(a, b, with_eps=False):
        vec = [Fraction((a >> i & 1) - (b >> i & 1)) for i in range(frame.size)]
        return vec + [Fraction(-1 if with_eps else 0)]

    system.add([1] * frame.size + [0], "=", 1, "total")
    part = None
    if reduce:
        try:
            part = partition(r)
        except NotWeakOrderError:
            part = None
    f = frame.format
    if part is not None:
        reps = [cls[0] for cls in part.classes]
        for cls in part.classes:
            for a in cls[1:]:
                system.add(diff(a, cls[0]), "=", 0, f"{f(a)} ~ {f(cls[0])}")
        for lo, hi in zip(reps, reps[1:]):
            system.add(diff(hi, lo, True), ">=", 0, f"{f(hi)} > {f(lo)}")
    else:
        n = frame.n_subsets
        for a in range(n):
            for b in range(a + 1, n):
                v = r.matrix[a, b]
                if v > 0:
                    system.add(diff(a, b, True), ">=", 0, f"{f(a)} > {f(b)}")
                elif v < 0:
                    system.add(diff(b, a, True), ">=", 0, f"{f(b)} > {f(a)}")
                else:
                    system.add(diff(a, b), "=", 0, f"{f(a)} ~ {f(b)}")
    system.add([0] * frame.size + [1], "<=", 1, "eps cap")
    system.maximize([0] * frame.size + [1])
    return system


def probability_from_singletons(frame: Frame, p) -> SetFunction:
    return SetFunction(
        frame,
        [sum((p[i] for i in range(frame.size) if a >> i & 1), Fraction(0)) for a in range(frame.n_subsets)],
    )


def construct_probability_scott(r: PreferenceRelation, *, reduce: bool = True) -> ScottResult:
    """Probability function compatible with ``r``, if one exists."""
    system = scott_system(r, reduce=reduce)
    outcome = lp.solve(system)
    eps_name = system.variables[-1]
    if outcome.status != lp.OPTIMAL or outcome.optimal_value <= 0:
        eps = outcome.optimal_value if outcome.status == lp.OPTIMAL else None
        return ScottResult(False, None, eps, outcome, system)
    p = [outcome.assignment[e] for e in r.frame.elements]
    prob = probability_from_singletons(r.frame, p)
    if not check_probability(prob).passed:
        raise InternalError("LP solution is not a probability function")
    verdict = verify_compatibility(prob, r)
    if not verdict.compatible:
        raise InternalError(f"LP solution is not compatible: {verdict.reason}")
    return ScottResult(True, prob, outcome.assignment[eps_name], outcome, system)
