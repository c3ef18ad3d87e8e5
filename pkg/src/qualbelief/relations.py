"""Preference relations on the power set and the qualitative axioms.

A relation is stored as an antisymmetric verdict matrix ``M`` over subset
ids: ``M[a, b] == 1`` means ``a > b`` (a strictly preferred), ``-1`` means
``b > a`` and ``0`` indifference.  Axiom ids used in reports:

``Q1``  asymmetry
``Q2``  negative transitivity
``Q3``  nontriviality, frame > empty
``Q4``  not (empty > A)
``Q4'`` dominance, A superset of B => not (B > A)
``Q5``  (A|B) & C == 0 => (A > B <=> A|C > B|C)
``Q5'`` A proper superset of B, A & C == 0 => (A > B => A|C > B|C)

Sweeps run in subset-index order (lexicographic over the tuple) and report
the first violation, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ContradictionError, CoverageError, InternalError, NotWeakOrderError
from .frame import Frame, check_frame_size

NOT_WEAK_ORDER = "not_weak_order"
WEAK_ORDER = "weak_order"
GENERALIZED_BELIEF_STRUCTURE = "generalized_belief_structure"
QUALITATIVE_BELIEF = "qualitative_belief"
QUALITATIVE_PROBABILITY = "qualitative_probability"

# Weakest first.
STRUCTURE_CLASSES = (
    NOT_WEAK_ORDER,
    WEAK_ORDER,
    GENERALIZED_BELIEF_STRUCTURE,
    QUALITATIVE_BELIEF,
    QUALITATIVE_PROBABILITY,
)

ALL_AXIOMS = ("Q1", "Q2", "Q3", "Q4", "Q4'", "Q5", "Q5'")

_CLASS_AXIOMS = {
    QUALITATIVE_PROBABILITY: ("Q1", "Q2", "Q3", "Q4", "Q5"),
    QUALITATIVE_BELIEF: ("Q1", "Q2", "Q3", "Q4'", "Q5'"),
    GENERALIZED_BELIEF_STRUCTURE: ("Q1", "Q2", "Q4'", "Q5'"),
    WEAK_ORDER: ("Q1", "Q2"),
}


class PreferenceRelation:
    """A complete preference relation over the subsets of ``frame``."""

    __slots__ = ("frame", "matrix")

    def __init__(self, frame: Frame, matrix):
        check_frame_size(frame, "relation")
        m = np.array(matrix, dtype=np.int8)
        n = frame.n_subsets
        if m.shape != (n, n):
            raise ValueError(f"verdict matrix must be {n}x{n}, got {m.shape}")
        if not np.isin(m, (-1, 0, 1)).all():
            raise ValueError("verdicts must be -1, 0 or 1")
        if (m != -m.T).any():
            a, b = np.argwhere(m != -m.T)[0]
            raise ContradictionError(
                f"verdict matrix is not antisymmetric at ({frame.format(int(a))}, {frame.format(int(b))})",
                pair=(int(a), int(b)),
            )
        m.setflags(write=False)
        self.frame = frame
        self.matrix = m

    @property
    def strict(self) -> np.ndarray:
        """Boolean matrix ``S[a, b] = a > b``."""
        return self.matrix > 0

    def prefers(self, a: int, b: int) -> bool:
        return bool(self.matrix[a, b] > 0)

    def indifferent(self, a: int, b: int) -> bool:
        return bool(self.matrix[a, b] == 0)

    def at_least(self, a: int, b: int) -> bool:
        """``a >= b``, defined as not (b > a)."""
        return bool(self.matrix[b, a] <= 0)

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.matrix > 0)]

    def __eq__(self, other):
        if not isinstance(other, PreferenceRelation):
            return NotImplemented
        return self.frame == other.frame and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.frame, self.matrix.tobytes()))

    def __repr__(self):
        try:
            return f"PreferenceRelation({partition(self).describe(self.frame)})"
        except NotWeakOrderError:
            return f"PreferenceRelation(<{len(self.strict_pairs())} strict pairs, not a weak order>)"


def from_statements(frame: Frame, strict: Iterable[tuple[int, int]]) -> PreferenceRelation:
    """Relation with ``A > B`` for each listed pair and indifference elsewhere."""
    n = frame.n_subsets
    m = np.zeros((n, n), dtype=np.int8)
    for a, b in strict:
        frame.validate(a)
        frame.validate(b)
        if a == b or m[a, b] < 0:
            raise ContradictionError(
                f"both {frame.format(a)} > {frame.format(b)} and the reverse are stated",
                pair=(a, b),
            )
        m[a, b] = 1
        m[b, a] = -1
    return PreferenceRelation(frame, m)


def from_ranking(frame: Frame, ranking: Sequence[Iterable[int]]) -> PreferenceRelation:
    """Relation from indifference groups listed lowest first."""
    n = frame.n_subsets
    rank = [-1] * n
    for i, group in enumerate(ranking):
        for a in group:
            frame.validate(a)
            if rank[a] != -1:
                raise CoverageError(f"{frame.format(a)} appears in more than one group")
            rank[a] = i
    missing = [a for a in range(n) if rank[a] == -1]
    if missing:
        raise CoverageError("ranking misses " + ", ".join(frame.format(a) for a in missing))
    return from_ranks(frame, rank)


def from_ranks(frame: Frame, ranks: Sequence) -> PreferenceRelation:
    """Relation with ``A > B`` iff ``ranks[A] > ranks[B]``."""
    r = np.asarray(ranks)
    return PreferenceRelation(frame, np.sign(r[:, None] - r[None, :]).astype(np.int8))


@dataclass(frozen=True)
class RankedPartition:
    """Indifference classes E_0 < E_1 < ... < E_k, lowest first."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.classes) - 1

    def rank_of(self) -> dict[int, int]:
        return {a: i for i, cls in enumerate(self.classes) for a in cls}

    def ranks(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.classes)
        for i, cls in enumerate(self.classes):
            for a in cls:
                out[a] = i
        return out

    def describe(self, frame: Frame) -> str:
        return " < ".join("[" + ", ".join(frame.format(a) for a in cls) + "]" for cls in self.classes)


@dataclass
class RelationReport:
    """Axiom verdicts for a relation; failing axioms carry witness subset ids."""

    axioms: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)
    structure_class: str | None = None

    @property
    def passed(self) -> bool:
        return all(self.axioms.values())

    def record(self, axiom: str, witness: tuple[int, ...] | None) -> None:
        self.axioms[axiom] = witness is None
        if witness is not None:
            self.witnesses[axiom] = witness

    def holds(self, *axioms: str) -> bool:
        return all(self.axioms[a] for a in axioms)

    def first_failure(self, axioms: Iterable[str]) -> tuple[str, tuple[int, ...]] | None:
        for a in axioms:
            if not self.axioms[a]:
                return a, self.witnesses[a]
        return None


# -- sweeps --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _grids(n: int):
    ids = np.arange(n)
    a = ids[:, None, None]
    b = ids[None, :, None]
    c = ids[None, None, :]
    return a, b, c


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    if not mask.any():
        return None
    return tuple(int(i) for i in np.unravel_index(int(np.argmax(mask)), mask.shape))


def _q2(s: np.ndarray):
    ns = ~s
    return _first(ns[:, :, None] & ns[None, :, :] & s[:, None, :])


def _q3(r: PreferenceRelation):
    full = r.frame.full
    return None if r.prefers(full, 0) else (full, 0)


def _q4(s: np.ndarray):
    return _first(s[0])


def _q4_dominance(s: np.ndarray):
    ids = np.arange(s.shape[0])
    contains = (ids[None, :] & ~ids[:, None]) == 0  # [A, B]: B subset of A
    violations = contains & s.T
    # B = {} repeats a Q4 failure; report a nonempty B when there is one.
    hit = _first(violations[:, 1:])
    if hit is not None:
        return hit[0], hit[1] + 1
    return _first(violations)


def _q5(s: np.ndarray):
    a, b, c = _grids(s.shape[0])
    mask = ((a | b) & c) == 0
    return _first(mask & (s[a, b] != s[a | c, b | c]))


def _q5_partial(s: np.ndarray):
    a, b, c = _grids(s.shape[0])
    mask = ((b & ~a) == 0) & (a != b) & ((a & c) == 0)
    return _first(mask & s[a, b] & ~s[a | c, b | c])


def check_weak_order(r: PreferenceRelation) -> RelationReport:
    report = RelationReport()
    # Antisymmetric storage makes Q1 structural; contradictions are caught on ingestion.
    report.record("Q1", None)
    report.record("Q2", _q2(r.strict))
    return report


def check_axioms(r: PreferenceRelation, which: Iterable[str] = ("Q3", "Q4", "Q4'", "Q5", "Q5'")) -> RelationReport:
    s = r.strict
    sweeps = {
        "Q1": lambda: None,
        "Q2": lambda: _q2(s),
        "Q3": lambda: _q3(r),
        "Q4": lambda: _q4(s),
        "Q4'": lambda: _q4_dominance(s),
        "Q5": lambda: _q5(s),
        "Q5'": lambda: _q5_partial(s),
    }
    report = RelationReport()
    for axiom in which:
        if axiom not in sweeps:
            raise ValueError(f"unknown axiom {axiom!r}")
        report.record(axiom, sweeps[axiom]())
    return report


def _classify(report: RelationReport) -> str:
    for name in (QUALITATIVE_PROBABILITY, QUALITATIVE_BELIEF, GENERALIZED_BELIEF_STRUCTURE, WEAK_ORDER):
        if report.holds(*_CLASS_AXIOMS[name]):
            return name
    return NOT_WEAK_ORDER


def check_relation(r: PreferenceRelation) -> RelationReport:
    """All of Q1-Q5, Q4', Q5' plus the strongest structure class."""
    report = check_axioms(r, ALL_AXIOMS)
    report.structure_class = _classify(report)
    if report.structure_class == QUALITATIVE_PROBABILITY and not report.holds("Q4'", "Q5'"):
        raise InternalError("qualitative probability relation fails Q4' or Q5'")
    return report


def classify_relation(r: PreferenceRelation) -> str:
    return check_relation(r).structure_class


def axioms_of(structure_class: str) -> tuple[str, ...]:
    return _CLASS_AXIOMS[structure_class]


def partition(r: PreferenceRelation) -> RankedPartition:
    """Indifference classes of a weak order, ordered by preference."""
    q2 = _q2(r.strict)
    if q2 is not None:
        f = r.frame.format
        raise NotWeakOrderError(
            f"Q2 fails: not {f(q2[0])} > {f(q2[1])}, not {f(q2[1])} > {f(q2[2])}, "
            f"yet {f(q2[0])} > {f(q2[2])}",
            axiom="Q2",
            witness=q2,
        )
    # In a weak order the number of subsets strictly below A ranks A.
    score = r.strict.sum(axis=1)
    levels = sorted(set(score.tolist()))
    classes = tuple(tuple(int(a) for a in np.flatnonzero(score == lv)) for lv in levels)
    result = RankedPartition(classes)
    if from_ranks(r.frame, result.ranks()) != r:
        raise InternalError("weak order does not match its indifference classes")
    return result


def ranking_labels(frame: Frame, part: RankedPartition) -> list[list[list[str]]]:
    return [[frame.labels(a) for a in cls] for cls in part.classes]
