"""Induced subspaces and operators relative to a carrier set."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import core
from .core import GtSpace, points_of
from .errors import NotInCarrier, WidthMismatch


@dataclass(frozen=True)
class SubspaceEmbedding:
    """A subspace ``child`` on the points of ``carrier``.

    ``to_parent[i]`` is the parent index of child point ``i``; child points
    keep the parent's point order.  All public operations take and return
    masks in parent coordinates.
    """

    parent: GtSpace
    carrier: int
    child: GtSpace
    to_parent: tuple[int, ...]

    def lift(self, child_mask: int) -> int:
        """Child-coordinate mask to parent coordinates."""
        mask = 0
        for i in points_of(child_mask):
            mask |= 1 << self.to_parent[i]
        return mask

    def lower(self, parent_mask: int) -> int:
        """Parent-coordinate mask (inside the carrier) to child coordinates."""
        self._require_inside(parent_mask)
        mask = 0
        for i, p in enumerate(self.to_parent):
            if parent_mask >> p & 1:
                mask |= 1 << i
        return mask

    def _require_inside(self, a: int) -> None:
        if a & ~self.carrier:
            raise NotInCarrier(
                f"{self.parent.label_set(a)} is not inside carrier "
                f"{self.parent.label_set(self.carrier)}"
            )


def _compress(mask: int, to_parent: tuple[int, ...]) -> int:
    out = 0
    for i, p in enumerate(to_parent):
        if mask >> p & 1:
            out |= 1 << i
    return out


@lru_cache(maxsize=1 << 16)
def induce_subspace(space: GtSpace, carrier: int) -> SubspaceEmbedding:
    """Subspace whose opens are the traces ``U & carrier`` of parent opens."""
    if carrier < 0 or carrier >> space.n:
        raise WidthMismatch("carrier does not fit the parent ground set")
    to_parent = tuple(points_of(carrier))
    family = {_compress(u & carrier, to_parent) for u in space.opens}
    labels = [space.labels[p] for p in to_parent]
    child = core.validate_gt(len(to_parent), family, labels)
    return SubspaceEmbedding(space, carrier, child, to_parent)


def relative_closure(emb: SubspaceEmbedding, a: int) -> int:
    """Closure of ``a`` inside the subspace, in parent coordinates."""
    return emb.lift(core.closure(emb.child, emb.lower(a)))


def relative_interior(emb: SubspaceEmbedding, a: int) -> int:
    """Interior of ``a`` inside the subspace, in parent coordinates."""
    return emb.lift(core.interior(emb.child, emb.lower(a)))


def is_relatively_closed(emb: SubspaceEmbedding, b: int) -> bool:
    return core.is_closed(emb.child, emb.lower(b))


def closed_trace_witness(emb: SubspaceEmbedding, b: int) -> int | None:
    """A parent-closed ``F`` with ``F & carrier == b``, or None.

    The returned ``F`` is the parent closure of ``b``; it exists exactly when
    ``b`` is closed in the subspace.
    """
    if not is_relatively_closed(emb, b):
        return None
    f = core.closure(emb.parent, b)
    assert f & emb.carrier == b, "closure trace must reproduce a relatively closed set"
    return f
