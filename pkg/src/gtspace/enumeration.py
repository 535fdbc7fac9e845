"""Exhaustive and seeded-random generation of spaces and surjections.

Canonical forms are brute-force minima over all point permutations, which
is affordable at the sizes the exhaustive modes allow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterator, Sequence

from . import core
from .core import GtSpace, full_mask
from .errors import BoundExceeded
from .mapping import GtMapping, make_mapping

MAX_SPACE_POINTS = 5
MAX_SWEEP_POINTS = 4
MAX_SURJECTION_POINTS = 8
MAX_CANON_POINTS = 6


@dataclass(frozen=True)
class EnumBounds:
    """Population bounds.  ``mode`` is ``"exhaustive"`` or ``"random"``."""

    max_dom_points: int
    max_cod_points: int
    mode: str = "exhaustive"
    seed: int = 0
    count: int = 0
    dedupe_iso: bool = False

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_dom_points < 1 or self.max_cod_points < 1:
            raise BoundExceeded("bounds must be at least 1x1")
        if self.max_cod_points > self.max_dom_points:
            raise BoundExceeded("a surjection needs max_cod_points <= max_dom_points")
        if self.mode == "exhaustive":
            if self.max_dom_points > MAX_SPACE_POINTS:
                raise BoundExceeded(
                    f"exhaustive space enumeration is capped at n <= {MAX_SPACE_POINTS}"
                )
        elif self.max_dom_points > core.TABLE_LIMIT:
            raise BoundExceeded(f"random instances are capped at n <= {core.TABLE_LIMIT}")

    def check_sweep(self) -> None:
        """Extra guard for full mapping-pair sweeps."""
        if self.mode == "exhaustive" and self.max_dom_points > MAX_SWEEP_POINTS:
            raise BoundExceeded(
                f"exhaustive mapping sweeps are capped at n <= {MAX_SWEEP_POINTS}"
            )

    def to_doc(self) -> dict:
        doc = {
            "max_dom_points": self.max_dom_points,
            "max_cod_points": self.max_cod_points,
            "mode": self.mode,
            "dedupe_iso": self.dedupe_iso,
        }
        if self.mode == "random":
            doc["seed"] = self.seed
            doc["count"] = self.count
        return doc


# -- spaces -----------------------------------------------------------------


def _union_families(n: int) -> Iterator[int]:
    """Strong GTs on ``n`` points as membership masks over ``range(2**n)``.

    Depth-first over the proper nonempty subsets in ascending order: each
    candidate is either excluded for good or added together with its unions
    with every current member (that is already union-closed).  A branch is
    cut when the closure pulls in an excluded set, so every leaf is a
    distinct family and every node has at least one leaf.
    """
    full = full_mask(n)
    start = 1 | (1 << full)  # {∅, X}
    candidates = list(range(1, full))

    def members(fam: int) -> list[int]:
        out = []
        while fam:
            low = fam & -fam
            out.append(low.bit_length() - 1)
            fam ^= low
        return out

    def walk(k: int, fam: int, excluded: int) -> Iterator[int]:
        while k < len(candidates) and fam >> candidates[k] & 1:
            k += 1
        if k == len(candidates):
            yield fam
            return
        s = candidates[k]
        yield from walk(k + 1, fam, excluded | 1 << s)
        grown = fam
        for u in members(fam):
            grown |= 1 << (u | s)
        if not grown & excluded:
            yield from walk(k + 1, grown, excluded)

    if n == 0:
        yield 1
        return
    yield from walk(0, start, 0)


def _family_members(fam: int) -> tuple[int, ...]:
    out = []
    i = 0
    while fam:
        if fam & 1:
            out.append(i)
        fam >>= 1
        i += 1
    return tuple(out)


def enumerate_strong_gts(
    n: int, dedupe_iso: bool = False, labels: Sequence[str] | None = None
) -> Iterator[GtSpace]:
    """Every strong GT on ``n`` points exactly once, in a fixed order.

    With ``dedupe_iso`` one canonical representative per isomorphism class
    is emitted, in strictly increasing canonical order.
    """
    if not 1 <= n <= MAX_SPACE_POINTS:
        raise BoundExceeded(f"space enumeration needs 1 <= n <= {MAX_SPACE_POINTS}")
    if dedupe_iso:
        forms = sorted({canonicalize(s) for s in enumerate_strong_gts(n)})
        for form in forms:
            yield GtSpace(n, form.opens, tuple(labels or core.default_labels(n)))
        return
    lab = tuple(labels or core.default_labels(n))
    for fam in _union_families(n):
        yield GtSpace(n, _family_members(fam), lab)


@lru_cache(maxsize=None)
def strong_gts(n: int, dedupe_iso: bool = False) -> tuple[GtSpace, ...]:
    """Cached tuple form of :func:`enumerate_strong_gts`, default labels."""
    return tuple(enumerate_strong_gts(n, dedupe_iso))


def count_strong_gts(n: int) -> int:
    return sum(1 for _ in _union_families(n))


# -- surjections ------------------------------------------------------------


def enumerate_surjections(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All surjective tables ``range(n) -> range(m)`` in lexicographic order."""
    if not 0 <= m <= n <= MAX_SURJECTION_POINTS:
        raise BoundExceeded(
            f"surjections need 0 <= m <= n <= {MAX_SURJECTION_POINTS}, got n={n}, m={m}"
        )
    for table in product(range(m), repeat=n):
        if len(set(table)) == m:
            yield table


def surjection_count(n: int, m: int) -> int:
    """Inclusion-exclusion count of surjections from n onto m points."""
    return sum((-1) ** k * comb(m, k) * (m - k) ** n for k in range(m + 1))


# -- canonical forms --------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant encoding.

    For spaces ``cod_points`` is 0 and the codomain fields are empty.  The
    field order makes the natural ordering ``(|X|, |Y|, encoding)``.
    """

    dom_points: int
    cod_points: int
    opens: tuple[int, ...]
    cod_opens: tuple[int, ...] = ()
    table: tuple[int, ...] = ()

    @property
    def is_mapping(self) -> bool:
        return self.cod_points > 0 or bool(self.table)

    def space(self, labels: Sequence[str] | None = None) -> GtSpace:
        return core.validate_gt(self.dom_points, self.opens, labels)

    def mapping(self) -> GtMapping:
        dom = core.validate_gt(self.dom_points, self.opens)
        cod = core.validate_gt(
            self.cod_points, self.cod_opens, codomain_labels(self.cod_points)
        )
        return make_mapping(dom, cod, self.table)

    def to_doc(self) -> dict:
        from .mapping import mapping_to_doc

        if self.is_mapping:
            return mapping_to_doc(self.mapping())
        return core.space_to_doc(self.space())


def codomain_labels(m: int) -> tuple[str, ...]:
    if m <= 26:
        return tuple(chr(ord("a") + i) for i in range(m))
    return tuple(f"y{i + 1}" for i in range(m))


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """For each permutation: (mask image table, point permutation)."""
    out = []
    for perm in permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | 1 << perm[low.bit_length() - 1]
        out.append((tuple(table), perm))
    return tuple(out)


def _check_canon(n: int) -> None:
    if n > MAX_CANON_POINTS:
        raise BoundExceeded(f"canonical forms are brute force, capped at n <= {MAX_CANON_POINTS}")


def _min_relabelings(n: int, opens: tuple[int, ...]):
    """Least relabeled family and every permutation attaining it."""
    best, best_perms = None, []
    for table, perm in _perm_tables(n):
        enc = tuple(sorted(table[u] for u in opens))
        if best is None or enc < best:
            best, best_perms = enc, [perm]
        elif enc == best:
            best_perms.append(perm)
    return best, best_perms


def canonicalize(space: GtSpace) -> CanonicalForm:
    _check_canon(space.n)
    best, _ = _min_relabelings(space.n, space.opens)
    return CanonicalForm(space.n, 0, best)


def canonicalize_pair(f: GtMapping) -> CanonicalForm:
    """Least joint encoding over (domain, codomain) permutation pairs.

    The domain family is minimized first, then the codomain family, then the
    table among the permutation pairs attaining both minima.
    """
    n, m = f.dom.n, f.cod.n
    _check_canon(n)
    dom_best, dom_perms = _min_relabelings(n, f.dom.opens)
    cod_best, cod_perms = _min_relabelings(m, f.cod.opens)
    best_table = None
    for p in dom_perms:
        inverse = [0] * n
        for i, j in enumerate(p):
            inverse[j] = i
        for q in cod_perms:
            table = tuple(q[f.table[inverse[j]]] for j in range(n))
            if best_table is None or table < best_table:
                best_table = table
    return CanonicalForm(n, m, dom_best, cod_best, best_table or ())


# -- random instances -------------------------------------------------------


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_space(n: int, rng) -> GtSpace:
    """Random subfamily closed under union to a fixed point, plus ∅ and X."""
    rng = _rng(rng)
    full = full_mask(n)
    picks = {rng.randrange(1 << n) for _ in range(rng.randrange(1 << min(n, 4)) + 1)}
    family = {0, full} | picks
    frontier = list(family)
    while frontier:
        fresh = []
        members = list(family)
        for u in frontier:
            for v in members:
                w = u | v
                if w not in family:
                    family.add(w)
                    fresh.append(w)
        frontier = fresh
    return core.validate_gt(n, family)


def random_surjection(n: int, m: int, rng) -> tuple[int, ...]:
    rng = _rng(rng)
    table = list(range(m)) + [rng.randrange(m) for _ in range(n - m)]
    rng.shuffle(table)
    return tuple(table)


def random_mapping(n: int, m: int, rng) -> GtMapping:
    rng = _rng(rng)
    dom = random_space(n, rng)
    cod = core.validate_gt(m, random_space(m, rng).opens, codomain_labels(m))
    return make_mapping(dom, cod, random_surjection(n, m, rng))


def instance_rng(seed: int, index: int) -> random.Random:
    """Independent stream for instance ``index`` (partition-friendly)."""
    return random.Random(f"gtspace/{seed}/{index}")


def random_instance(bounds: EnumBounds, kind: str, index: int = 0):
    """Instance ``index`` of the seeded random population described by ``bounds``."""
    rng = instance_rng(bounds.seed, index)
    n = bounds.max_dom_points
    if kind == "space":
        return random_space(n, rng)
    if kind == "mapping":
        m = rng.randint(1, bounds.max_cod_points)
        return random_mapping(n, m, rng)
    raise ValueError(f"kind must be 'space' or 'mapping', got {kind!r}")
