"""Surjections between GT-spaces and the five mapping classes.

Every class has a *definition* predicate (``is_g_open`` and friends) and a
``*_conditions`` function returning one boolean per characterization.  The
conditions are evaluated independently of each other, so a disagreement
inside one vector points at an implementation bug rather than being
reconciled away.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from . import core
from .core import GtSpace, is_subset, points_of
from .errors import NotSurjective, OutOfRange, ParseError, WidthMismatch
from .subspace import induce_subspace

CLASSES = ("continuous", "open", "closed", "pseudo_open", "quotient")
HEREDITARY_CLASSES = ("open", "closed", "pseudo_open", "quotient")


@dataclass(frozen=True)
class GtMapping:
    """Surjection ``dom -> cod``; ``table[i]`` is the image index of point ``i``."""

    dom: GtSpace
    cod: GtSpace
    table: tuple[int, ...]

    @cached_property
    def fibers(self) -> tuple[int, ...]:
        fib = [0] * self.cod.n
        for i, y in enumerate(self.table):
            fib[y] |= 1 << i
        return tuple(fib)

    @cached_property
    def image_table(self) -> tuple[int, ...]:
        img = [0] * (1 << self.dom.n)
        for a in range(1, 1 << self.dom.n):
            low = a & -a
            img[a] = img[a ^ low] | 1 << self.table[low.bit_length() - 1]
        return tuple(img)

    @cached_property
    def preimage_table(self) -> tuple[int, ...]:
        pre = [0] * (1 << self.cod.n)
        fib = self.fibers
        for b in range(1, 1 << self.cod.n):
            low = b & -b
            pre[b] = pre[b ^ low] | fib[low.bit_length() - 1]
        return tuple(pre)

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{self.dom.labels[i]}->{self.cod.labels[y]}" for i, y in enumerate(self.table)
        )
        return f"GtMapping({self.dom!r} -> {self.cod!r}; {pairs})"


def make_mapping(dom: GtSpace, cod: GtSpace, table: Sequence[int]) -> GtMapping:
    table = tuple(int(y) for y in table)
    if len(table) != dom.n:
        raise WidthMismatch(f"table has {len(table)} entries for {dom.n} domain points")
    for i, y in enumerate(table):
        if not 0 <= y < cod.n:
            raise OutOfRange(
                f"image of {dom.labels[i]} is outside the codomain", point=dom.labels[i]
            )
    covered = set(table)
    for y in range(cod.n):
        if y not in covered:
            raise NotSurjective(
                f"codomain point {cod.labels[y]} has empty preimage",
                point=y,
                label=cod.labels[y],
            )
    return GtMapping(dom, cod, table)


def image(f: GtMapping, a: int) -> int:
    if a < 0 or a >> f.dom.n:
        raise WidthMismatch("subset does not fit the domain")
    out = 0
    for i in points_of(a):
        out |= 1 << f.table[i]
    return out


def preimage(f: GtMapping, b: int) -> int:
    if b < 0 or b >> f.cod.n:
        raise WidthMismatch("subset does not fit the codomain")
    out = 0
    for y in points_of(b):
        out |= f.fibers[y]
    return out


def restrict(f: GtMapping, carrier: int) -> GtMapping:
    """Restriction to the subspace on ``carrier``, onto the subspace on its image."""
    dom_emb = induce_subspace(f.dom, carrier)
    cod_emb = induce_subspace(f.cod, image(f, carrier))
    position = {p: j for j, p in enumerate(cod_emb.to_parent)}
    table = [position[f.table[p]] for p in dom_emb.to_parent]
    return make_mapping(dom_emb.child, cod_emb.child, table)


# -- definitions ------------------------------------------------------------


def is_g_continuous(f: GtMapping) -> bool:
    pre, opens = f.preimage_table, f.dom.open_set
    return all(pre[v] in opens for v in f.cod.opens)


def is_g_open(f: GtMapping) -> bool:
    img, opens = f.image_table, f.cod.open_set
    return all(img[u] in opens for u in f.dom.opens)


def is_g_closed(f: GtMapping) -> bool:
    img, closed = f.image_table, f.cod.closed_set
    return all(img[c] in closed for c in f.dom.closed_sets)


def is_g_pseudo_open(f: GtMapping) -> bool:
    img, inner = f.image_table, f.cod.interior_table
    for y, fiber in enumerate(f.fibers):
        for u in f.dom.opens:
            if fiber & ~u == 0 and not inner[img[u]] >> y & 1:
                return False
    return True


def is_g_quotient(f: GtMapping) -> bool:
    pre, dom_opens, cod_opens = f.preimage_table, f.dom.open_set, f.cod.open_set
    return all(
        v in cod_opens for v in range(1 << f.cod.n) if pre[v] in dom_opens
    )


DEFINITIONS: dict[str, Callable[[GtMapping], bool]] = {
    "continuous": is_g_continuous,
    "open": is_g_open,
    "closed": is_g_closed,
    "pseudo_open": is_g_pseudo_open,
    "quotient": is_g_quotient,
}


def restrictions_over_codomain(f: GtMapping) -> list[GtMapping]:
    """``f`` restricted to the preimage of every ``Y' ⊆ Y``, in mask order."""
    return [restrict(f, f.preimage_table[y_sub]) for y_sub in range(1 << f.cod.n)]


def is_hereditarily(f: GtMapping, cls: str) -> bool:
    """Whether every restriction over a codomain subset has class ``cls``.

    ``Y' = ∅`` contributes the empty mapping (vacuously in every class) and
    ``Y' = Y`` contributes ``f`` itself.
    """
    if cls not in HEREDITARY_CLASSES:
        raise ValueError(f"no hereditary variant for {cls!r}")
    predicate = DEFINITIONS[cls]
    return all(predicate(h) for h in restrictions_over_codomain(f))


def is_member(f: GtMapping, cls: str) -> bool:
    """Definition-mode membership; accepts ``hereditarily_<class>`` too."""
    cls = cls.replace("-", "_")
    if cls.startswith("hereditarily_"):
        return is_hereditarily(f, cls[len("hereditarily_"):])
    try:
        return DEFINITIONS[cls](f)
    except KeyError:
        raise ValueError(f"unknown mapping class {cls!r}") from None


# -- characterization conditions -------------------------------------------


def continuity_conditions(f: GtMapping) -> tuple[bool, ...]:
    dom, cod = f.dom, f.cod
    img, pre = f.image_table, f.preimage_table
    cx, ix = dom.closure_table, dom.interior_table
    cy, iy = cod.closure_table, cod.interior_table
    subsets_x, subsets_y = range(1 << dom.n), range(1 << cod.n)

    c1 = is_g_continuous(f)
    c2 = all(pre[c] in dom.closed_set for c in cod.closed_sets)
    c3 = all(is_subset(img[cx[a]], cy[img[a]]) for a in subsets_x)
    c4 = all(is_subset(cx[pre[b]], pre[cy[b]]) for b in subsets_y)
    c5 = all(is_subset(pre[iy[b]], ix[pre[b]]) for b in subsets_y)
    c6 = all(
        any(is_subset(img[u], v) for u in dom.opens_by_point[x])
        for x in range(dom.n)
        for v in cod.opens
        if v >> f.table[x] & 1
    )
    return (c1, c2, c3, c4, c5, c6)


def open_conditions(f: GtMapping) -> tuple[bool, ...]:
    dom, cod = f.dom, f.cod
    img, pre = f.image_table, f.preimage_table
    c1 = is_g_open(f)
    c2 = all(
        is_subset(pre[cod.closure_table[b]], dom.closure_table[pre[b]])
        for b in range(1 << cod.n)
    )
    c3 = all(
        is_subset(img[dom.interior_table[a]], cod.interior_table[img[a]])
        for a in range(1 << dom.n)
    )
    c4 = all(
        any(v >> f.table[x] & 1 and is_subset(v, img[u]) for v in cod.opens)
        for x in range(dom.n)
        for u in dom.opens_by_point[x]
    )
    return (c1, c2, c3, c4)


def closed_conditions(f: GtMapping) -> tuple[bool, ...]:
    dom, cod = f.dom, f.cod
    img, pre = f.image_table, f.preimage_table
    c1 = is_g_closed(f)
    c2 = all(
        is_subset(cod.closure_table[img[a]], img[dom.closure_table[a]])
        for a in range(1 << dom.n)
    )
    c3 = all(
        any(is_subset(b, v) and is_subset(pre[v], u) for v in cod.opens)
        for b in range(1 << cod.n)
        for u in dom.opens
        if is_subset(pre[b], u)
    )
    c4 = all(
        any(v >> y & 1 and is_subset(pre[v], u) for v in cod.opens)
        for y, fiber in enumerate(f.fibers)
        for u in dom.opens
        if is_subset(fiber, u)
    )
    return (c1, c2, c3, c4)


def pseudo_open_conditions(
    f: GtMapping, restrictions: Sequence[GtMapping] | None = None
) -> tuple[bool, ...]:
    if restrictions is None:
        restrictions = restrictions_over_codomain(f)
    img, pre = f.image_table, f.preimage_table
    c1 = is_g_pseudo_open(f)
    c2 = all(is_g_quotient(h) for h in restrictions)
    c3 = all(
        is_subset(f.cod.closure_table[b], img[f.dom.closure_table[pre[b]]])
        for b in range(1 << f.cod.n)
    )
    return (c1, c2, c3)


def quotient_conditions(f: GtMapping) -> tuple[bool, ...]:
    pre = f.preimage_table
    subsets = range(1 << f.cod.n)
    c1 = is_g_quotient(f)
    c2 = all(
        f.cod.full ^ c in f.cod.open_set
        for c in subsets
        if f.dom.full ^ pre[c] in f.dom.open_set
    )
    return (c1, c2)


@dataclass(frozen=True)
class ClassificationVector:
    continuity: tuple[bool, ...]
    open: tuple[bool, ...]
    closed: tuple[bool, ...]
    pseudo_open: tuple[bool, ...]
    quotient: tuple[bool, ...]
    hereditary: dict[str, bool] = field(default_factory=dict)

    def conditions(self, cls: str) -> tuple[bool, ...]:
        return getattr(self, "continuity" if cls == "continuous" else cls)

    def flag(self, cls: str) -> bool:
        """Definition-mode value (first condition) of a class."""
        return self.conditions(cls)[0]

    def disagreements(self) -> list[str]:
        return [c for c in CLASSES if len(set(self.conditions(c))) > 1]

    def to_doc(self) -> dict:
        doc = {c: list(self.conditions(c)) for c in CLASSES}
        doc["hereditary"] = dict(self.hereditary)
        return doc


def classify_full(f: GtMapping) -> ClassificationVector:
    """Every characterization condition plus the hereditary flags."""
    restrictions = restrictions_over_codomain(f)
    hereditary = {
        cls: all(DEFINITIONS[cls](h) for h in restrictions) for cls in HEREDITARY_CLASSES
    }
    return ClassificationVector(
        continuity=continuity_conditions(f),
        open=open_conditions(f),
        closed=closed_conditions(f),
        pseudo_open=pseudo_open_conditions(f, restrictions),
        quotient=quotient_conditions(f),
        hereditary=hereditary,
    )


def classify(f: GtMapping) -> dict[str, bool]:
    """Definition-mode flags for the five classes."""
    return {cls: DEFINITIONS[cls](f) for cls in CLASSES}


# -- quotient generalized topology -----------------------------------------


def quotient_gt(
    dom: GtSpace,
    table: Sequence[int],
    cod_size: int,
    labels: Sequence[str] | None = None,
) -> GtSpace:
    """The finest GT on the codomain making ``table`` g-continuous.

    Its opens are exactly the sets whose preimage is open in ``dom``.
    """
    table = tuple(table)
    if len(table) != dom.n:
        raise WidthMismatch(f"table has {len(table)} entries for {dom.n} domain points")
    fibers = [0] * cod_size
    for i, y in enumerate(table):
        if not 0 <= y < cod_size:
            raise OutOfRange(f"image of {dom.labels[i]} is outside the codomain")
        fibers[y] |= 1 << i
    for y, fiber in enumerate(fibers):
        if not fiber:
            raise NotSurjective(f"codomain point {y} has empty preimage", point=y)
    family = []
    for v in range(1 << cod_size):
        pre = 0
        for y in points_of(v):
            pre |= fibers[y]
        if pre in dom.open_set:
            family.append(v)
    return core.validate_gt(cod_size, family, labels)


# -- JSON documents ---------------------------------------------------------


def mapping_to_doc(f: GtMapping) -> dict:
    return {
        "domain": core.space_to_doc(f.dom),
        "codomain": core.space_to_doc(f.cod),
        "map": {f.dom.labels[i]: f.cod.labels[y] for i, y in enumerate(f.table)},
    }


def _load_space(ref, base_dir: str | None) -> GtSpace:
    if isinstance(ref, str):
        path = ref if base_dir is None else os.path.join(base_dir, ref)
        try:
            with open(path, encoding="utf-8") as fh:
                ref = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read space document {path}: {exc}") from exc
    return core.space_from_doc(ref)


def mapping_from_doc(doc: dict, base_dir: str | None = None) -> GtMapping:
    """Parse a mapping document; string ``domain``/``codomain`` are file refs."""
    if not isinstance(doc, dict) or not {"domain", "codomain", "map"} <= doc.keys():
        raise ParseError('mapping document needs "domain", "codomain" and "map"')
    dom = _load_space(doc["domain"], base_dir)
    cod = _load_space(doc["codomain"], base_dir)
    pairs = doc["map"]
    if not isinstance(pairs, dict):
        raise ParseError('"map" must be an object from domain to codomain labels')
    unknown = set(map(str, pairs)) - set(dom.labels)
    if unknown:
        raise ParseError(f"unknown domain labels {sorted(unknown)}")
    table = []
    for label in dom.labels:
        if label not in pairs:
            raise ParseError(f"domain point {label!r} has no image")
        table.append(cod.point_index(pairs[label]))
    return make_mapping(dom, cod, table)
