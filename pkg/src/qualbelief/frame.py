"""Finite frames of discernment and bitmask-encoded subsets.

A subset of a frame with elements ``(t1, ..., ts)`` is an ``int`` in
``[0, 2**s)``: bit ``i`` is set iff element ``i`` belongs to the subset.
``0`` is the empty set and ``2**s - 1`` the whole frame.
"""

from __future__ import annotations

import contextlib
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FrameMismatchError, FrameSizeError, InvalidSubsetError

# Default caps; triple sweeps are O(8**s) on the relation side.
MAX_RELATION_FRAME = 5
MAX_MEASURE_FRAME = 10

_size_override: int | None = None


def set_max_frame_size(n: int | None) -> None:
    """Override both frame-size caps (``None`` restores the defaults)."""
    global _size_override
    if n is not None:
        if n < 1:
            raise ValueError("max frame size must be >= 1")
        if n > MAX_RELATION_FRAME:
            warnings.warn(
                f"frame size cap raised to {n}; axiom sweeps grow as 8**s",
                RuntimeWarning,
                stacklevel=2,
            )
    _size_override = n


@contextlib.contextmanager
def max_frame_size(n: int | None):
    previous = _size_override
    set_max_frame_size(n)
    try:
        yield
    finally:
        set_max_frame_size(previous)


def check_frame_size(frame: "Frame", kind: str) -> None:
    """Raise :class:`FrameSizeError` if ``frame`` exceeds the cap for ``kind``.

    ``kind`` is ``"relation"`` or ``"measure"``.
    """
    if _size_override is not None:
        cap = _size_override
    elif kind == "relation":
        cap = MAX_RELATION_FRAME
    elif kind == "measure":
        cap = MAX_MEASURE_FRAME
    else:
        raise ValueError(f"unknown size-cap kind {kind!r}")
    if frame.size > cap:
        raise FrameSizeError(
            f"frame of size {frame.size} exceeds the {kind} cap of {cap} "
            "(raise it with set_max_frame_size / --max-frame-size)"
        )


@dataclass(frozen=True)
class Frame:
    """An ordered, finite frame of discernment."""

    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        elements = tuple(elements)
        if not elements:
            raise ValueError("a frame needs at least one element")
        for e in elements:
            if not isinstance(e, str) or not e:
                raise ValueError(f"element labels must be non-empty strings, got {e!r}")
        if len(set(elements)) != len(elements):
            raise ValueError(f"duplicate element labels in {elements!r}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of_size(cls, s: int, prefix: str = "theta") -> "Frame":
        return cls(f"{prefix}{i + 1}" for i in range(s))

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def n_subsets(self) -> int:
        return 1 << self.size

    @property
    def empty(self) -> int:
        return 0

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def validate(self, a: int) -> int:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.n_subsets:
            raise InvalidSubsetError(f"{a!r} is not a subset id for a frame of size {self.size}")
        return a

    # -- conversions -------------------------------------------------------

    def subset(self, labels: Iterable[str]) -> int:
        """Subset id for a collection of element labels."""
        index = {e: i for i, e in enumerate(self.elements)}
        a = 0
        for label in labels:
            try:
                a |= 1 << index[label]
            except KeyError:
                raise InvalidSubsetError(f"unknown element {label!r}") from None
        return a

    def labels(self, a: int) -> list[str]:
        """Element labels of ``a`` in frame order."""
        self.validate(a)
        return [e for i, e in enumerate(self.elements) if a >> i & 1]

    def singleton(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise InvalidSubsetError(f"element index {i} out of range")
        return 1 << i

    def format(self, a: int) -> str:
        if a == 0:
            return "{}"
        return "{" + ", ".join(self.labels(a)) + "}"

    def characteristic_vector(self, a: int) -> list[int]:
        self.validate(a)
        return [a >> i & 1 for i in range(self.size)]

    # -- subset algebra ----------------------------------------------------

    def union(self, a: int, b: int) -> int:
        return self.validate(a) | self.validate(b)

    def intersection(self, a: int, b: int) -> int:
        return self.validate(a) & self.validate(b)

    def difference(self, a: int, b: int) -> int:
        return self.validate(a) & ~self.validate(b)

    def complement(self, a: int) -> int:
        return self.full & ~self.validate(a)

    def is_subset(self, a: int, b: int) -> bool:
        return self.validate(a) & ~self.validate(b) == 0

    def is_proper_subset(self, a: int, b: int) -> bool:
        return self.is_subset(a, b) and a != b

    def cardinality(self, a: int) -> int:
        return bin(self.validate(a)).count("1")

    # -- enumeration -------------------------------------------------------

    def subsets(self, order: str = "by-index") -> list[int]:
        """All subset ids, ``"by-index"`` or ``"by-cardinality"`` (ties by index)."""
        ids = range(self.n_subsets)
        if order == "by-index":
            return list(ids)
        if order == "by-cardinality":
            return sorted(ids, key=lambda a: (popcount(a), a))
        raise ValueError(f"unknown order {order!r}")


def popcount(a: int) -> int:
    return bin(a).count("1")


def submasks(a: int) -> Iterator[int]:
    """Every subset of ``a``, including ``0`` and ``a`` itself (descending)."""
    b = a
    while True:
        yield b
        if b == 0:
            return
        b = (b - 1) & a


def characteristic_vector(frame: Frame, a: int) -> list[int]:
    return frame.characteristic_vector(a)


def enumerate_subsets(frame: Frame, order: str = "by-index") -> list[int]:
    return frame.subsets(order)


def same_frame(*frames: Frame) -> Frame:
    first = frames[0]
    for f in frames[1:]:
        if f != first:
            raise FrameMismatchError(f"frames differ: {first.elements} vs {f.elements}")
    return first

