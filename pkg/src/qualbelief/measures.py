"""Set functions, mass functions, Moebius transforms and the quantitative axioms.

All values are exact :class:`fractions.Fraction` instances.  Axiom ids used in
reports:

``B1``  g(empty) = 0
``B2``  g(frame) = 1
``B2'`` g(frame) = 1 - m(empty) with 0 <= m(empty) <= 1
``B3``  additivity over disjoint pairs
``B3'`` sup-additivity, decided by nonnegativity of the Moebius transform
``B4``  g(A) > g(B) <=> g(A|C) > g(B|C) whenever (A|B) & C == 0
``M1``  closed-world mass of the empty set is 0
``M2``  closed-world masses sum to 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    InternalError,
    InvalidMeasureError,
    NonzeroEmptyValueError,
    OpenWorldMassError,
)
from .frame import Frame, check_frame_size, submasks

PROBABILITY = "probability"
MONOTONIC_BELIEF = "monotonic_belief"
BELIEF = "belief"
GENERALIZED_BELIEF = "generalized_belief"
NONE = "none"

# Innermost first.
MEASURE_CLASSES = (PROBABILITY, MONOTONIC_BELIEF, BELIEF, GENERALIZED_BELIEF, NONE)


def as_rational(x) -> Fraction:
    """Exact rational from an int, Fraction, ``"p/q"`` / decimal string or float.

    Floats go through their shortest repr, so ``0.2`` becomes ``1/5``.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidMeasureError(f"cannot parse rational {x!r}") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _table(frame: Frame, values) -> tuple[Fraction, ...]:
    n = frame.n_subsets
    if isinstance(values, Mapping):
        missing = [a for a in range(n) if a not in values]
        if missing:
            raise InvalidMeasureError(
                "set function is not total; missing "
                + ", ".join(frame.format(a) for a in missing)
            )
        extra = [a for a in values if not (isinstance(a, int) and 0 <= a < n)]
        if extra:
            raise InvalidMeasureError(f"invalid subset ids {extra!r}")
        return tuple(as_rational(values[a]) for a in range(n))
    values = tuple(as_rational(v) for v in values)
    if len(values) != n:
        raise InvalidMeasureError(f"expected {n} values for a frame of size {frame.size}, got {len(values)}")
    return values


class SetFunction:
    """A total map from the subsets of ``frame`` to nonnegative rationals.

    ``values`` is either a sequence indexed by subset id or a mapping
    ``{subset id: value}`` covering every subset.  Values above 1 are
    allowed so that unnormalized constructions can be represented.
    """

    __slots__ = ("frame", "values")

    def __init__(self, frame: Frame, values: Sequence | Mapping):
        check_frame_size(frame, "measure")
        table = _table(frame, values)
        negative = [a for a, v in enumerate(table) if v < 0]
        if negative:
            raise InvalidMeasureError(f"negative value at {frame.format(negative[0])}")
        self.frame = frame
        self.values = table

    @classmethod
    def from_labels(cls, frame: Frame, values: Mapping[tuple[str, ...], object]) -> "SetFunction":
        return cls(frame, {frame.subset(k): v for k, v in values.items()})

    def __getitem__(self, a: int) -> Fraction:
        return self.values[a]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, SetFunction):
            return NotImplemented
        return self.frame == other.frame and self.values == other.values

    def __hash__(self):
        return hash((self.frame, self.values))

    def __repr__(self):
        body = ", ".join(f"{self.frame.format(a)}: {v}" for a, v in enumerate(self.values))
        return f"SetFunction({body})"

    def scaled(self) -> np.ndarray:
        """Values times their common denominator, as an exact integer array.

        Order comparisons on the result agree with those on the rationals.
        Falls back to an object array when int64 could overflow.
        """
        denom = lcm(*(v.denominator for v in self.values))
        ints = [int(v * denom) for v in self.values]
        if max(ints) < 2**62:
            return np.array(ints, dtype=np.int64)
        return np.array(ints, dtype=object)


class MassFunction:
    """A basic probability assignment: masses >= 0 summing to exactly 1.

    ``m(empty) > 0`` is allowed and marks an open-world assignment.
    """

    __slots__ = ("frame", "masses")

    def __init__(self, frame: Frame, masses: Sequence | Mapping):
        check_frame_size(frame, "measure")
        table = _table(frame, masses)
        negative = [a for a, v in enumerate(table) if v < 0]
        if negative:
            raise InvalidMeasureError(f"negative mass at {frame.format(negative[0])}")
        total = sum(table)
        if total != 1:
            raise InvalidMeasureError(f"masses sum to {total}, not 1")
        self.frame = frame
        self.masses = table

    @classmethod
    def from_labels(cls, frame: Frame, masses: Mapping[tuple[str, ...], object]) -> "MassFunction":
        """Build from ``{label tuple: mass}``; unlisted subsets get mass 0."""
        table = [Fraction(0)] * frame.n_subsets
        for labels, v in masses.items():
            table[frame.subset(labels)] += as_rational(v)
        return cls(frame, table)

    @property
    def closed_world(self) -> bool:
        return self.masses[0] == 0

    @property
    def focal_sets(self) -> list[int]:
        return [a for a, v in enumerate(self.masses) if v]

    def __getitem__(self, a: int) -> Fraction:
        return self.masses[a]

    def __eq__(self, other):
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self.masses == other.masses

    def __hash__(self):
        return hash((self.frame, self.masses))

    def __repr__(self):
        body = ", ".join(f"{self.frame.format(a)}: {v}" for a, v in enumerate(self.masses) if v)
        return f"MassFunction({body})"


@dataclass(frozen=True)
class SignedMoebius:
    """Moebius transform of a set function that is not a valid mass function."""

    frame: Frame
    masses: tuple[Fraction, ...]
    world: str

    is_mass_function = False

    @property
    def negative(self) -> list[int]:
        return [a for a, v in enumerate(self.masses) if v < 0]


# -- transforms ----------------------------------------------------------------


def zeta(frame: Frame, values: Sequence[Fraction]) -> list[Fraction]:
    """Subset-sum transform: out[A] = sum of values[B] over B subset of A."""
    out = list(values)
    for i in range(frame.size):
        bit = 1 << i
        for a in range(frame.n_subsets):
            if a & bit:
                out[a] += out[a ^ bit]
    return out


def moebius(frame: Frame, values: Sequence[Fraction]) -> list[Fraction]:
    """Inverse of :func:`zeta`: out[A] = sum (-1)**|A-B| values[B], B subset of A."""
    out = list(values)
    for i in range(frame.size):
        bit = 1 << i
        for a in range(frame.n_subsets):
            if a & bit:
                out[a] -= out[a ^ bit]
    return out


def belief_from_mass(m: MassFunction, world: str = "closed") -> SetFunction:
    """Bel(A) = sum of m(B) for B subset of A (open world: nonempty B only)."""
    if world == "closed":
        if not m.closed_world:
            raise OpenWorldMassError(
                f"m(empty) = {m.masses[0]} > 0; use world='open' for a generalized belief"
            )
        return SetFunction(m.frame, zeta(m.frame, m.masses))
    if world == "open":
        masses = list(m.masses)
        masses[0] = Fraction(0)
        return SetFunction(m.frame, zeta(m.frame, masses))
    raise ValueError(f"world must be 'closed' or 'open', not {world!r}")


def mass_from_set_function(g: SetFunction, world: str = "closed") -> MassFunction | SignedMoebius:
    """Recover the basic probability assignment behind ``g``.

    Returns a :class:`MassFunction` when the Moebius transform is a valid
    assignment and a :class:`SignedMoebius` otherwise.  In the open world the
    empty set receives ``1 - g(frame)``.
    """
    if world not in ("closed", "open"):
        raise ValueError(f"world must be 'closed' or 'open', not {world!r}")
    if g[0] != 0:
        raise NonzeroEmptyValueError(f"g(empty) = {g[0]}, must be 0")
    m = moebius(g.frame, g.values)
    if world == "open":
        m[0] = 1 - g[g.frame.full]
    if all(v >= 0 for v in m) and sum(m) == 1:
        return MassFunction(g.frame, m)
    return SignedMoebius(g.frame, tuple(m), world)


# -- reports -------------------------------------------------------------------


@dataclass
class MeasureReport:
    """Axiom verdicts for one set function.

    ``witnesses`` maps each failing axiom to the subset ids exhibiting the
    failure: ``(A,)`` for B1/B2/B2'/B3'/M1/M2, ``(A, B)`` for B3 and
    ``(A, B, C)`` for B4.
    """

    axioms: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)
    strongest_class: str | None = None
    masses: tuple[Fraction, ...] | None = None
    empty_mass: Fraction | None = None

    @property
    def passed(self) -> bool:
        return all(self.axioms.values())

    @property
    def witness(self) -> tuple[int, ...] | None:
        for axiom, ok in self.axioms.items():
            if not ok:
                return self.witnesses[axiom]
        return None

    def record(self, axiom: str, witness: tuple[int, ...] | None) -> None:
        self.axioms[axiom] = witness is None
        if witness is not None:
            self.witnesses[axiom] = witness


def _b1(g: SetFunction):
    return None if g[0] == 0 else (0,)


def _b2(g: SetFunction):
    full = g.frame.full
    return None if g[full] == 1 else (full,)


def _additivity_violation(g: SetFunction):
    """First disjoint pair (A, B), in index order, with g(A|B) != g(A) + g(B)."""
    n = g.frame.n_subsets
    full = g.frame.full
    v = g.values
    for a in range(n):
        rest = full & ~a
        for b in sorted(submasks(rest)):
            if v[a | b] != v[a] + v[b]:
                return (a, b)
    return None


def _singleton_additive(g: SetFunction) -> bool:
    singles = [g[1 << i] for i in range(g.frame.size)]
    for a in range(g.frame.n_subsets):
        if g[a] != sum(singles[i] for i in range(g.frame.size) if a >> i & 1):
            return False
    return True


def _first_negative(values, start: int = 0):
    for a in range(start, len(values)):
        if values[a] < 0:
            return (a,)
    return None


def _b4_violation(g: SetFunction):
    """First (A, B, C) in index order breaking the monotonicity biconditional."""
    vals = g.scaled()
    full = g.frame.full
    best = None
    # C = empty never violates.
    for c in range(1, full + 1):
        subs = np.array(sorted(submasks(full & ~c)), dtype=np.int64)
        v = vals[subs]
        w = vals[subs | c]
        bad = (v[:, None] > v[None, :]) != (w[:, None] > w[None, :])
        if bad.any():
            k = len(subs)
            i = int(np.argmax(bad))
            cand = (int(subs[i // k]), int(subs[i % k]), c)
            if best is None or cand < best:
                best = cand
    return best


def check_probability(g: SetFunction) -> MeasureReport:
    report = MeasureReport()
    report.record("B1", _b1(g))
    report.record("B2", _b2(g))
    pair = _additivity_violation(g)
    if (pair is None) != _singleton_additive(g):
        raise InternalError("pairwise and singleton additivity checks disagree")
    report.record("B3", pair)
    return report


def check_belief(g: SetFunction) -> MeasureReport:
    m = moebius(g.frame, g.values)
    report = MeasureReport(masses=tuple(m))
    report.record("B1", _b1(g))
    report.record("B2", _b2(g))
    # The empty set's Moebius mass is g(empty), covered by B1.
    report.record("B3'", _first_negative(m, start=1))
    return report


def check_monotonic(g: SetFunction) -> MeasureReport:
    """Monotonic belief: the belief axioms plus B4."""
    report = check_belief(g)
    report.record("B4", _b4_violation(g))
    return report


def check_generalized(g: SetFunction) -> MeasureReport:
    m = moebius(g.frame, g.values)
    empty_mass = 1 - g[g.frame.full]
    m[0] = empty_mass
    report = MeasureReport(masses=tuple(m), empty_mass=empty_mass)
    report.record("B1", _b1(g))
    report.record("B3'", _first_negative(m, start=1))
    report.record("B2'", None if 0 <= empty_mass <= 1 else (g.frame.full,))
    return report


def classify_measure(g: SetFunction) -> str:
    """Innermost measure class that ``g`` belongs to, or ``"none"``."""
    return check_measure(g).strongest_class


def check_measure(g: SetFunction) -> MeasureReport:
    """Every axiom verdict plus the strongest class."""
    prob = check_probability(g)
    mono = check_monotonic(g)
    gen = check_generalized(g)
    belief_ok = all(mono.axioms[a] for a in ("B1", "B2", "B3'"))
    verdicts = {
        PROBABILITY: prob.passed,
        MONOTONIC_BELIEF: mono.passed,
        BELIEF: belief_ok,
        GENERALIZED_BELIEF: gen.passed,
    }
    chain = [PROBABILITY, MONOTONIC_BELIEF, BELIEF, GENERALIZED_BELIEF]
    strongest = NONE
    for i, name in enumerate(chain):
        if verdicts[name]:
            if not all(verdicts[outer] for outer in chain[i:]):
                raise InternalError(f"{name} passed but an enclosing class failed")
            strongest = name
            break

    m = mono.masses
    report = MeasureReport(strongest_class=strongest, masses=m, empty_mass=gen.empty_mass)
    witnesses = {**prob.witnesses, **gen.witnesses, **mono.witnesses}
    for axiom in ("B1", "B2", "B2'", "B3", "B3'", "B4"):
        report.record(axiom, witnesses.get(axiom))
    report.record("M1", None if m[0] == 0 else (0,))
    report.record("M2", None if sum(m) == 1 else (g.frame.full,))
    return report
