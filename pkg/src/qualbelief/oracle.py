"""Brute-force checkers and generators used to cross-check the fast paths.

Nothing in the library's production code calls into this module; tests and
the CLI's ``--cross-check`` flag do.  Everything here is deliberately naive:
direct enumeration over collections, sequences and grids.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

import numpy as np

from .frame import Frame
from .measures import MassFunction, SetFunction
from .relations import PreferenceRelation, check_axioms, from_ranking, from_ranks


# -- sup-additivity -------------------------------------------------------------


@dataclass(frozen=True)
class SupadditivityResult:
    passed: bool
    witness: tuple[int, ...] | None = None
    union_value: Fraction | None = None
    bound: Fraction | None = None


def inclusion_exclusion(g: SetFunction, collection: Sequence[int]) -> Fraction:
    """sum over nonempty index sets I of (-1)**(|I|+1) g(intersection of A_i, i in I)."""
    total = Fraction(0)
    full = g.frame.full
    for k in range(1, len(collection) + 1):
        sign = 1 if k % 2 else -1
        for idx in itertools.combinations(range(len(collection)), k):
            inter = full
            for i in idx:
                inter &= collection[i]
            total += sign * g[inter]
    return total


def _first_supadditivity_violation(g, collections):
    for coll in collections:
        union = 0
        for a in coll:
            union |= a
        bound = inclusion_exclusion(g, coll)
        if g[union] < bound:
            return SupadditivityResult(False, tuple(coll), g[union], bound)
    return SupadditivityResult(True)


def check_supadditivity_direct(
    g: SetFunction,
    n_max: int,
    *,
    repeat: bool = True,
    samples: int | None = None,
    seed: int = 0,
) -> SupadditivityResult:
    """Check the sup-additivity inequality on every collection of up to ``n_max`` subsets.

    ``repeat`` allows a subset to occur more than once in a collection.
    With ``samples`` set, that many random collections are drawn instead of
    enumerating them all (for frames too large to sweep).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n = g.frame.n_subsets
    if samples is not None:
        rng = random.Random(seed)

        def draws():
            for _ in range(samples):
                size = rng.randint(2, n_max) if n_max >= 2 else 1
                if repeat:
                    yield [rng.randrange(n) for _ in range(size)]
                else:
                    yield rng.sample(range(n), min(size, n))

        return _first_supadditivity_violation(g, draws())

    def enumerate_all():
        for size in range(1, n_max + 1):
            if repeat:
                yield from itertools.product(range(n), repeat=size)
            else:
                yield from itertools.permutations(range(n), size)

    return _first_supadditivity_violation(g, enumerate_all())


# -- Scott's balance axiom --------------------------------------------------------


@dataclass(frozen=True)
class ScottAxiomResult:
    passed: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    bounded: bool = True  # a pass only covers sequences up to n_max


def _char(frame: Frame, a: int) -> tuple[int, ...]:
    return tuple(a >> i & 1 for i in range(frame.size))


def scott_instance_holds(r: PreferenceRelation, lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    """One instance of the balance axiom for sequences A_0..A_n and B_0..B_n.

    Returns True when the premises fail or the conclusion B_n >= A_n holds.
    """
    frame = r.frame
    if len(lhs) != len(rhs) or not lhs:
        raise ValueError("need two non-empty sequences of equal length")
    counts_a = [sum(c) for c in zip(*(_char(frame, a) for a in lhs))]
    counts_b = [sum(c) for c in zip(*(_char(frame, b) for b in rhs))]
    if counts_a != counts_b:
        return True
    if not all(r.at_least(a, b) for a, b in zip(lhs[:-1], rhs[:-1])):
        return True
    return r.at_least(rhs[-1], lhs[-1])


def check_scott_axiom_direct(r: PreferenceRelation, n_max: int) -> ScottAxiomResult:
    """Bounded refutation search for the balance axiom.

    Enumerates sequences of length up to ``n_max + 1``.  A failure disproves
    the axiom; a pass only says no counterexample this short exists.
    """
    frame = r.frame
    n = frame.n_subsets
    diff = {
        (a, b): tuple(x - y for x, y in zip(_char(frame, a), _char(frame, b)))
        for a in range(n)
        for b in range(n)
    }
    weak_pairs = [(a, b) for a in range(n) for b in range(n) if r.at_least(a, b)]
    # Index final pairs A_n > B_n by the difference vector they need to cancel.
    closing: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for a in range(n):
        for b in range(n):
            if r.prefers(a, b):
                closing.setdefault(diff[(a, b)], []).append((a, b))
    zero = (0,) * frame.size
    for length in range(0, n_max + 1):
        for prefix in itertools.product(weak_pairs, repeat=length):
            total = list(zero)
            for pair in prefix:
                for i, d in enumerate(diff[pair]):
                    total[i] += d
            need = tuple(-t for t in total)
            hits = closing.get(need)
            if hits:
                a_n, b_n = hits[0]
                lhs = tuple(p[0] for p in prefix) + (a_n,)
                rhs = tuple(p[1] for p in prefix) + (b_n,)
                return ScottAxiomResult(False, (lhs, rhs))
    return ScottAxiomResult(True)


# -- probability grid -------------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def search_probability_grid(r: PreferenceRelation, denominator: int) -> SetFunction | None:
    """A probability with singleton values k/denominator compatible with ``r``.

    Grid points are tried nearest-to-uniform first (squared distance, then
    lexicographic), so the result is deterministic and as central as the
    grid allows.
    """
    frame = r.frame
    s = frame.size
    if s > 3:
        raise ValueError("grid search is meant for frames of size <= 3")
    if not 1 <= denominator <= 60:
        raise ValueError("denominator must be in [1, 60]")
    points = list(_compositions(denominator, s))
    points.sort(key=lambda k: (sum((s * x - denominator) ** 2 for x in k), k))
    n = frame.n_subsets
    bits = np.array([[a >> i & 1 for i in range(s)] for a in range(n)], dtype=np.int64)
    target = r.matrix
    for k in points:
        values = bits @ np.array(k, dtype=np.int64)
        verdicts = np.sign(values[:, None] - values[None, :])
        if np.array_equal(verdicts, target):
            return SetFunction(frame, [Fraction(int(v), denominator) for v in values])
    return None


# -- random generators ------------------------------------------------------------


def random_mass(frame: Frame, world: str = "closed", seed: int = 0) -> MassFunction:
    """Random rational mass function, deterministic in ``seed``.

    Alternates between sparse supports (one to three focal sets) and dense
    ones; the open world puts mass on the empty set most of the time.
    """
    if world not in ("closed", "open"):
        raise ValueError(f"world must be 'closed' or 'open', not {world!r}")
    rng = random.Random(seed)
    n = frame.n_subsets
    candidates = list(range(1, n))
    if rng.random() < 0.5:
        focal = rng.sample(candidates, rng.randint(1, min(3, len(candidates))))
    else:
        focal = [a for a in candidates if rng.random() < 0.7] or [frame.full]
    weights = [0] * n
    for a in focal:
        weights[a] = rng.randint(1, 12)
    if world == "open" and rng.random() < 0.8:
        weights[0] = rng.randint(1, 12)
    total = sum(weights)
    return MassFunction(frame, [Fraction(w, total) for w in weights])


def random_probability(frame: Frame, seed: int = 0, max_weight: int = 4) -> SetFunction:
    """Additive set function with small integer weights, so ties are common."""
    rng = random.Random(seed)
    w = [rng.randint(0, max_weight) for _ in range(frame.size)]
    if not any(w):
        w[rng.randrange(frame.size)] = 1
    total = sum(w)
    return SetFunction(
        frame,
        [Fraction(sum(w[i] for i in range(frame.size) if a >> i & 1), total) for a in range(frame.n_subsets)],
    )


def _ordered_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    k = len(items)
    for mask in range(1, 1 << k):
        block = [items[i] for i in range(k) if mask >> i & 1]
        rest = [items[i] for i in range(k) if not mask >> i & 1]
        for tail in _ordered_partitions(rest):
            yield [block] + tail


def enumerate_rankings(frame: Frame) -> Iterator[PreferenceRelation]:
    """Every weak order on the subsets (3 at size 1, 75 at size 2)."""
    if frame.size > 2:
        raise ValueError("full enumeration is only feasible for frames of size <= 2; use random_ranking")
    for ranking in _ordered_partitions(list(range(frame.n_subsets))):
        yield from_ranking(frame, ranking)


def random_ranking(frame: Frame, seed: int = 0) -> PreferenceRelation:
    """Weak order from random levels; deterministic in ``seed``."""
    rng = random.Random(seed)
    n = frame.n_subsets
    levels = rng.randint(1, n)
    return from_ranks(frame, [rng.randrange(levels) for _ in range(n)])


def search_relation(
    frame: Frame,
    predicate: Callable[[PreferenceRelation], bool],
    *,
    seed: int = 0,
    tries: int = 2000,
    source: str = "belief",
) -> PreferenceRelation | None:
    """First randomly generated relation satisfying ``predicate``.

    ``source`` is ``"belief"`` (induced from random closed-world masses),
    ``"probability"`` (from small-weight probabilities) or ``"ranking"``.
    """
    from .measures import belief_from_mass
    from .representation import induce_relation

    for i in range(tries):
        if source == "belief":
            r = induce_relation(belief_from_mass(random_mass(frame, "closed", seed + i)))
        elif source == "probability":
            r = induce_relation(random_probability(frame, seed + i))
        elif source == "ranking":
            r = random_ranking(frame, seed + i)
        else:
            raise ValueError(f"unknown source {source!r}")
        if predicate(r):
            return r
    return None


# -- additivity gap (qualitative probability without a probability) ----------------


@dataclass(frozen=True)
class GapSearchResult:
    found: bool
    relation: PreferenceRelation | None
    tries: int
    flipped: tuple[tuple[int, int], ...] = ()


def search_unrepresentable_qualitative_probability(
    frame: Frame, *, seed: int = 0, tries: int = 500
) -> GapSearchResult:
    """Look for a linear qualitative probability with no probability representation.

    Starts from the strict order induced by a random near-degenerate
    probability, finds a pair of neighbouring subsets whose "core" (the two
    set differences) appears only in neighbouring positions, and flips every
    pair with that core.  The flip keeps the monotonicity axioms; the
    probability LP then decides whether additivity survived.  Nothing is
    guaranteed: the smallest such relations need five elements.
    """
    from .representation import construct_probability_scott

    rng = random.Random(seed)
    n = frame.n_subsets
    full = frame.full
    for t in range(tries):
        base = [rng.randint(1, 6) for _ in range(frame.size)]
        p = [Fraction(b) + Fraction(rng.randint(1, 10**6), 10**8) for b in base]
        values = [sum((p[i] for i in range(frame.size) if a >> i & 1), Fraction(0)) for a in range(n)]
        order = sorted(range(n), key=lambda a: values[a])
        if len(set(values)) != n:
            continue
        pos = {a: i for i, a in enumerate(order)}
        adjacent = list(zip(order, order[1:]))
        rng.shuffle(adjacent)
        for lo, hi in adjacent:
            core_hi, core_lo = hi & ~lo, lo & ~hi
            rest = full & ~(core_hi | core_lo)
            pairs = []
            ok = True
            c = rest
            while True:
                x, y = core_hi | c, core_lo | c
                if pos[x] != pos[y] + 1:
                    ok = False
                    break
                pairs.append((x, y))
                if c == 0:
                    break
                c = (c - 1) & rest
            if not ok:
                continue
            new_order = list(order)
            for x, y in pairs:
                i = pos[y]
                new_order[i], new_order[i + 1] = x, y
            ranks = [0] * n
            for i, a in enumerate(new_order):
                ranks[a] = i
            r = from_ranks(frame, ranks)
            report = check_axioms(r, ("Q2", "Q3", "Q4", "Q5"))
            if not report.passed:
                continue
            if not construct_probability_scott(r).representable:
                return GapSearchResult(True, r, t + 1, tuple(pairs))
    return GapSearchResult(False, None, tries)
