"""Finite point universes, subsets as bitmasks, and plain topologies.

A universe is an ordered tuple of at most 64 distinct labels; a subset
is the int with bit i set for the i-th label. Set families are stored
deduplicated and ordered canonically: by cardinality first, then
lexicographically on the sorted index lists of their members.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from . import kernel
from .errors import (
    EmptyUniverse,
    MissingEmpty,
    MissingWhole,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    UniverseTooLarge,
)

MAX_POINTS = 64


class PointUniverse:
    """Ordered collection of point labels, capped at 64."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(str(x) for x in labels)
        if len(labels) > MAX_POINTS:
            raise UniverseTooLarge(f"{len(labels)} points exceed the {MAX_POINTS} point budget")
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise ValueError(f"duplicate point label {lab!r}")
            index[lab] = i
        self.labels = labels
        self._index = index

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no point labelled {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, PointUniverse) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"PointUniverse({list(self.labels)!r})"

    def subset(self, labels: Iterable[str]) -> "PointSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return PointSet(self, mask)

    def full_set(self) -> "PointSet":
        return PointSet(self, self.full_mask)

    def empty_set(self) -> "PointSet":
        return PointSet(self, 0)


def mask_indices(mask: int):
    """Ascending bit positions of a mask."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def family_key(mask: int):
    """Canonical sort key of one family member."""
    indices = tuple(mask_indices(mask))
    return (len(indices), indices)


class PointSet:
    """Immutable subset of a universe, backed by one int."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: PointUniverse, mask: int):
        if mask & ~universe.full_mask:
            raise ValueError("mask has bits outside the universe")
        self.universe = universe
        self.mask = mask

    def labels(self) -> tuple:
        return tuple(self.universe.labels[i] for i in mask_indices(self.mask))

    def indices(self) -> tuple:
        return tuple(mask_indices(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.universe.index(label) & 1)

    def __iter__(self):
        return iter(self.labels())

    def _coerce(self, other) -> int:
        if isinstance(other, PointSet):
            if other.universe != self.universe:
                raise ValueError("point sets live in different universes")
            return other.mask
        raise TypeError(f"expected PointSet, got {type(other).__name__}")

    def __or__(self, other) -> "PointSet":
        return PointSet(self.universe, self.mask | self._coerce(other))

    def __and__(self, other) -> "PointSet":
        return PointSet(self.universe, self.mask & self._coerce(other))

    def __sub__(self, other) -> "PointSet":
        return PointSet(self.universe, self.mask & ~self._coerce(other))

    def __invert__(self) -> "PointSet":
        return PointSet(self.universe, self.universe.full_mask & ~self.mask)

    def issubset(self, other) -> bool:
        return not self.mask & ~self._coerce(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.universe == other.universe
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.mask))

    def text(self) -> str:
        """Canonical display: member names ascending, {} when empty."""
        return "{" + ",".join(sorted(self.labels())) + "}"

    def __repr__(self) -> str:
        return self.text()


class TopologyFamily:
    """Deduplicated family of subsets, kept in canonical order.

    ``validate=False`` is reserved for families produced by this
    package's own closure constructions, where the axioms hold by
    construction; everything user-supplied goes through validation.
    """

    __slots__ = ("universe", "mask_set", "__dict__")

    def __init__(self, universe: PointUniverse, masks: Iterable[int], validate: bool = True):
        self.universe = universe
        self.mask_set = frozenset(masks)
        if validate:
            self._validate()

    def _validate(self) -> None:
        full = self.universe.full_mask
        for m in self.mask_set:
            if m & ~full:
                raise ValueError("family member has bits outside the universe")
        if 0 not in self.mask_set:
            raise MissingEmpty("the empty set is missing")
        if full not in self.mask_set:
            raise MissingWhole("the whole universe is missing")
        ordered = self.ordered_masks
        present = self.mask_set
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                if a | b not in present:
                    raise NotClosedUnderUnion(
                        PointSet(self.universe, a), PointSet(self.universe, b)
                    )
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                if a & b not in present:
                    raise NotClosedUnderIntersection(
                        PointSet(self.universe, a), PointSet(self.universe, b)
                    )

    @cached_property
    def ordered_masks(self) -> tuple:
        return tuple(sorted(self.mask_set, key=family_key))

    def members(self) -> tuple:
        return tuple(PointSet(self.universe, m) for m in self.ordered_masks)

    def __len__(self) -> int:
        return len(self.mask_set)

    def __iter__(self):
        return iter(self.members())

    def __contains__(self, item) -> bool:
        if isinstance(item, PointSet):
            return item.universe == self.universe and item.mask in self.mask_set
        return item in self.mask_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TopologyFamily)
            and self.universe == other.universe
            and self.mask_set == other.mask_set
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.mask_set))

    def canonical_key(self) -> tuple:
        return tuple(family_key(m) for m in self.ordered_masks)

    def text(self) -> str:
        return "{" + ", ".join(s.text() for s in self.members()) + "}"

    def __repr__(self) -> str:
        return f"TopologyFamily({self.text()})"


def validate_topology(universe: PointUniverse, sets: Iterable) -> TopologyFamily:
    """Check the finite topology axioms, reporting the first violation.

    Checks run in a fixed order (empty set present, whole set present,
    unions, intersections) with pairs scanned canonically, so the
    witness in the raised error is deterministic.
    """
    masks = set()
    for s in sets:
        masks.add(s.mask if isinstance(s, PointSet) else int(s))
    return TopologyFamily(universe, masks, validate=True)


def generate_topology(universe: PointUniverse, subbasis: Iterable) -> TopologyFamily:
    """Topology generated by an arbitrary subbasis.

    Finite intersections first (the empty intersection contributes the
    whole universe), then all unions, then the empty set.
    """
    base = {universe.full_mask}
    for s in subbasis:
        m = s.mask if isinstance(s, PointSet) else int(s)
        if m & ~universe.full_mask:
            raise ValueError("subbasis member has bits outside the universe")
        base |= {m & r for r in base}
        base.add(m)
    opens = set(kernel.union_closure(sorted(base)))
    opens.add(0)
    return TopologyFamily(universe, opens, validate=False)


class FiniteTopSpace:
    """A finite topological space: universe plus validated topology."""

    __slots__ = ("universe", "topology", "__dict__")

    def __init__(self, universe: PointUniverse, topology: TopologyFamily):
        if topology.universe != universe:
            raise ValueError("topology belongs to a different universe")
        self.universe = universe
        self.topology = topology

    @cached_property
    def minimal_open_masks(self) -> tuple:
        """Intersection of all opens containing each point."""
        out = []
        for i in range(self.universe.n):
            bit = 1 << i
            m = self.universe.full_mask
            for o in self.topology.mask_set:
                if o & bit:
                    m &= o
            out.append(m)
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteTopSpace)
            and self.universe == other.universe
            and self.topology == other.topology
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.topology))

    def __repr__(self) -> str:
        return f"FiniteTopSpace({list(self.universe.labels)!r}, {self.topology.text()})"


def _as_mask(space, a) -> int:
    if isinstance(a, PointSet):
        if a.universe != space.universe:
            raise ValueError("set lives in a different universe")
        return a.mask
    return int(a)


def tau_closure(space: FiniteTopSpace, a) -> PointSet:
    """Smallest closed superset: the complement of every open missing A."""
    am = _as_mask(space, a)
    uncovered = 0
    for o in space.topology.mask_set:
        if not o & am:
            uncovered |= o
    return PointSet(space.universe, space.universe.full_mask & ~uncovered)


def tau_interior(space: FiniteTopSpace, a) -> PointSet:
    """Largest open subset: the union of opens inside A."""
    am = _as_mask(space, a)
    inside = 0
    for o in space.topology.mask_set:
        if not o & ~am:
            inside |= o
    return PointSet(space.universe, inside)


def minimal_open(space: FiniteTopSpace, label: str) -> PointSet:
    """Intersection of every open containing the point.

    On a finite space this is itself open, and it is the smallest open
    neighbourhood of the point.
    """
    return PointSet(space.universe, space.minimal_open_masks[space.universe.index(label)])


def is_tau_connected(space: FiniteTopSpace) -> bool:
    """No proper nonempty clopen set exists."""
    full = space.universe.full_mask
    for o in space.topology.mask_set:
        if o != 0 and o != full and (full & ~o) in space.topology.mask_set:
            return False
    return True


def restrict_topology(topology: TopologyFamily, carrier: PointSet) -> set:
    """Trace of a family on a subset: masks of {U & Y}.

    Returned as a plain mask set against the original universe's bit
    positions restricted to the carrier; callers re-index as needed.
    """
    ym = carrier.mask
    return {o & ym for o in topology.mask_set}


def require_nonempty(universe: PointUniverse) -> None:
    if universe.n == 0:
        raise EmptyUniverse("operation needs at least one point")
