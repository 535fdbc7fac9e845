"""Finite strong generalized topologies and their basic operators.

Subsets of the ground set ``{0, ..., n-1}`` are plain ``int`` bit masks
(bit ``i`` set means point ``i`` is a member).  A set family is a tuple of
distinct masks sorted in ascending numeric order, which is the canonical
order used for every output of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    MissingEmpty,
    NotStrong,
    NotUnionClosed,
    OutOfRange,
    ParseError,
    WidthMismatch,
)

MAX_POINTS = 16

# Spaces up to this size get precomputed operator tables (2**n entries).
TABLE_LIMIT = 10

SubSet = int
SetFamily = tuple


def full_mask(n: int) -> int:
    return (1 << n) - 1


def points_of(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def canonical_family(family: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(family)))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


@dataclass(frozen=True)
class GtSpace:
    """A validated strong generalized topology on ``n`` labelled points.

    Build instances with :func:`validate_gt` (or :func:`space_from_doc`);
    the constructor itself does not check the axioms.
    """

    n: int
    opens: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full ^ u for u in self.opens))

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closed_sets)

    @cached_property
    def opens_by_point(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(u for u in self.opens if u >> x & 1) for x in range(self.n)
        )

    @cached_property
    def interior_table(self) -> tuple[int, ...]:
        if self.n > TABLE_LIMIT:
            raise OutOfRange(f"operator tables need n <= {TABLE_LIMIT}")
        return tuple(_interior(self, b) for b in range(1 << self.n))

    @cached_property
    def closure_table(self) -> tuple[int, ...]:
        if self.n > TABLE_LIMIT:
            raise OutOfRange(f"operator tables need n <= {TABLE_LIMIT}")
        return tuple(_closure(self, b) for b in range(1 << self.n))

    def label_set(self, mask: int) -> list[str]:
        return [self.labels[i] for i in points_of(mask)]

    def mask_from_labels(self, names: Iterable[str]) -> int:
        index = {label: i for i, label in enumerate(self.labels)}
        mask = 0
        for name in names:
            try:
                mask |= 1 << index[str(name)]
            except KeyError:
                raise ParseError(f"unknown point label {name!r}", label=str(name)) from None
        return mask

    def point_index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ParseError(f"unknown point label {label!r}", label=str(label)) from None

    def __repr__(self) -> str:
        sets = ", ".join("{" + ",".join(self.label_set(u)) + "}" for u in self.opens)
        return f"GtSpace(points={list(self.labels)}, opens=[{sets}])"


def _check_width(n: int, mask: int) -> None:
    if mask < 0 or mask >> n:
        raise WidthMismatch(f"subset {mask:#b} does not fit {n} points", mask=mask, n=n)


def validate_gt(
    n: int, family: Iterable[int], labels: Sequence[str] | None = None
) -> GtSpace:
    """Check the strong generalized topology axioms and build a GtSpace.

    Union closure is tested on all binary unions, which is equivalent to
    arbitrary-union closure for a finite family that contains the empty set.
    """
    if not 0 <= n <= MAX_POINTS:
        raise OutOfRange(f"ground set size must be in [0, {MAX_POINTS}], got {n}", n=n)
    if labels is None:
        labels = default_labels(n)
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise ParseError("point labels must be unique")

    opens = canonical_family(family)
    for u in opens:
        _check_width(n, u)
    present = set(opens)
    if 0 not in present:
        raise MissingEmpty("the empty set is not open")
    for i, u in enumerate(opens):
        for v in opens[i + 1 :]:
            if u | v not in present:
                raise NotUnionClosed(
                    f"union of {_fmt(u, labels)} and {_fmt(v, labels)} is not open",
                    pair=(u, v),
                    sets=[_names(u, labels), _names(v, labels)],
                )
    if full_mask(n) not in present:
        raise NotStrong("the whole ground set is not open")
    return GtSpace(n, opens, labels)


def _names(mask: int, labels: Sequence[str]) -> list[str]:
    return [labels[i] for i in points_of(mask)]


def _fmt(mask: int, labels: Sequence[str]) -> str:
    return "{" + ",".join(_names(mask, labels)) + "}"


def is_topology(space: GtSpace) -> bool:
    opens = space.open_set
    return all(u & v in opens for u in space.opens for v in space.opens)


def opens_at(space: GtSpace, x: int) -> tuple[int, ...]:
    """All open sets containing point ``x``."""
    if not 0 <= x < space.n:
        raise OutOfRange(f"point {x} out of range", point=x)
    return space.opens_by_point[x]


def neighborhood_core(space: GtSpace, x: int) -> int:
    """Intersection of all open sets containing ``x``."""
    core = space.full
    for u in opens_at(space, x):
        core &= u
    return core


def _interior(space: GtSpace, b: int) -> int:
    result = 0
    for u in space.opens:
        if u & ~b == 0:
            result |= u
    return result


def _closure(space: GtSpace, b: int) -> int:
    # Intersection of closed supersets X - U, i.e. of those U disjoint from b.
    result = space.full
    for u in space.opens:
        if u & b == 0:
            result &= ~u
    return result & space.full


def interior(space: GtSpace, b: int) -> int:
    """Union of all open subsets of ``b``."""
    _check_width(space.n, b)
    return _interior(space, b)


def closure(space: GtSpace, b: int) -> int:
    """Smallest closed superset of ``b``."""
    _check_width(space.n, b)
    return _closure(space, b)


def derived_set(space: GtSpace, b: int) -> int:
    """Cluster points: every open set around ``x`` meets ``b`` minus ``x``."""
    _check_width(space.n, b)
    result = 0
    for x in range(space.n):
        rest = b & ~(1 << x)
        if all(u & rest for u in space.opens_by_point[x]):
            result |= 1 << x
    return result


def is_open(space: GtSpace, b: int) -> bool:
    _check_width(space.n, b)
    return b in space.open_set


def is_closed(space: GtSpace, b: int) -> bool:
    _check_width(space.n, b)
    return space.full ^ b in space.open_set


# -- JSON documents ---------------------------------------------------------


def space_to_doc(space: GtSpace) -> dict:
    return {
        "points": list(space.labels),
        "opens": [space.label_set(u) for u in space.opens],
    }


def space_from_doc(doc: dict) -> GtSpace:
    """Parse ``{"points": [...], "opens": [[...], ...]}`` and validate it."""
    if not isinstance(doc, dict) or "points" not in doc or "opens" not in doc:
        raise ParseError('space document needs "points" and "opens"')
    points = doc["points"]
    if not isinstance(points, list):
        raise ParseError('"points" must be a list of labels')
    labels = [str(p) for p in points]
    if len(set(labels)) != len(labels):
        raise ParseError("point labels must be unique")
    index = {label: i for i, label in enumerate(labels)}
    family = []
    for member in doc["opens"]:
        if not isinstance(member, list):
            raise ParseError("each open set must be a list of labels")
        mask = 0
        for name in member:
            if str(name) not in index:
                raise ParseError(f"unknown point label {name!r}", label=str(name))
            mask |= 1 << index[str(name)]
        family.append(mask)
    return validate_gt(len(labels), family, labels)
