"""Theorem registry, exhaustive sweeps and the counterexample miner.

Sweeps are split into tasks over enumeration-index ranges.  Each task is
stateless given its description, and partial results merge by summing
counts and keeping the canonically least failure or witness, so a report
does not depend on how many worker processes ran it.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import core, subspace
from .core import GtSpace, closure, derived_set, interior, is_closed, is_open, is_subset
from .enumeration import (
    CanonicalForm,
    EnumBounds,
    canonicalize,
    canonicalize_pair,
    codomain_labels,
    enumerate_surjections,
    random_instance,
    strong_gts,
    surjection_count,
)
from .errors import BoundExceeded, GtError, ProvableImplication
from .mapping import (
    GtMapping,
    ClassificationVector,
    classify_full,
    is_g_continuous,
    is_g_quotient,
    is_member,
    make_mapping,
    quotient_gt,
    restrict,
)

# -- per-instance law checks ------------------------------------------------


def _submasks(b: int) -> Iterable[int]:
    sub = b
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & b


def operator_law_violations(space: GtSpace, b: int) -> list[str]:
    """Names of the basic operator laws that fail for the subset ``b``."""
    full = space.full
    i_b, c_b, d_b = interior(space, b), closure(space, b), derived_set(space, b)
    nbhd = space.opens_by_point
    bad = []
    if not (is_subset(i_b, b) and is_subset(b, c_b)):
        bad.append("inclusion")
    if interior(space, i_b) != i_b or closure(space, c_b) != c_b:
        bad.append("idempotence")
    for sub in _submasks(b):
        if not (
            is_subset(interior(space, sub), i_b)
            and is_subset(closure(space, sub), c_b)
            and is_subset(derived_set(space, sub), d_b)
        ):
            bad.append("monotonicity")
            break
    local_open = all(any(is_subset(u, b) for u in nbhd[x]) for x in core.points_of(b))
    if not ((i_b == b) == is_open(space, b) == local_open):
        bad.append("open-characterization")
    outside = full & ~b
    local_closed = all(any(u & b == 0 for u in nbhd[x]) for x in core.points_of(outside))
    if not ((c_b == b) == is_closed(space, b) == local_closed):
        bad.append("closed-characterization")
    if c_b != full & ~interior(space, outside) or i_b != full & ~closure(space, outside):
        bad.append("duality")
    if c_b != core.mask_of(x for x in range(space.n) if all(u & b for u in nbhd[x])):
        bad.append("closure-points")
    if i_b != core.mask_of(
        x for x in range(space.n) if any(is_subset(u, b) for u in nbhd[x])
    ):
        bad.append("interior-points")
    if c_b != b | d_b:
        bad.append("closure-derived")
    if b and b & (b - 1) == 0 and d_b & b:
        bad.append("isolated-self")
    return bad


def check_operator_laws(space: GtSpace) -> bool:
    again = core.validate_gt(space.n, space.opens, space.labels)
    if again != space:
        return False
    return all(not operator_law_violations(space, b) for b in range(1 << space.n))


def _strict_interior_instance(space: GtSpace) -> bool:
    for carrier in range(1 << space.n):
        emb = subspace.induce_subspace(space, carrier)
        i_carrier = interior(space, carrier)
        for a in _submasks(carrier):
            if interior(space, a) != subspace.relative_interior(emb, a) & i_carrier:
                return True
    return False


def check_subspace_laws(space: GtSpace) -> bool:
    closed_sets = space.closed_sets
    for carrier in range(1 << space.n):
        emb = subspace.induce_subspace(space, carrier)
        if carrier == space.full and (
            emb.child.opens != space.opens or emb.child.labels != space.labels
        ):
            return False
        i_carrier = interior(space, carrier)
        for a in _submasks(carrier):
            if subspace.relative_closure(emb, a) != closure(space, a) & carrier:
                return False
            if not is_subset(interior(space, a), subspace.relative_interior(emb, a) & i_carrier):
                return False
            traced = any(f & carrier == a for f in closed_sets)
            if subspace.is_relatively_closed(emb, a) != traced:
                return False
            witness = subspace.closed_trace_witness(emb, a)
            if witness is not None and (
                witness not in space.closed_set or witness & carrier != a
            ):
                return False
            if (witness is not None) != traced:
                return False
    return True


def _closure_identity(f: GtMapping, which: str) -> bool:
    dom, cod = f.dom, f.cod
    img, pre = f.image_table, f.preimage_table
    cx, cy = dom.closure_table, cod.closure_table
    if which == "open":
        return all(pre[cy[b]] == cx[pre[b]] for b in range(1 << cod.n))
    if which == "closed":
        return all(cy[img[a]] == img[cx[a]] for a in range(1 << dom.n))
    return all(cy[b] == img[cx[pre[b]]] for b in range(1 << cod.n))


def check_continuous_identity(f: GtMapping, vec: ClassificationVector, cls: str) -> bool:
    if not vec.flag("continuous"):
        return True
    return vec.flag(cls) == _closure_identity(f, cls)


def check_implications(vec: ClassificationVector) -> bool:
    op, cl, po, q = (vec.flag(c) for c in ("open", "closed", "pseudo_open", "quotient"))
    return (not op or po) and (not po or q) and (not cl or po)


def check_restriction_continuity(f: GtMapping, vec: ClassificationVector) -> bool:
    if not vec.flag("continuous"):
        return True
    return all(is_g_continuous(restrict(f, s)) for s in range(1 << f.dom.n))


def check_hereditary(vec: ClassificationVector) -> bool:
    return all(
        not vec.flag(cls) or vec.hereditary[cls] for cls in ("open", "closed", "pseudo_open")
    )


def check_quotient_topology(dom: GtSpace, table: tuple[int, ...], m: int) -> bool:
    try:
        nu_q = quotient_gt(dom, table, m, codomain_labels(m))
        core.space_from_doc(core.space_to_doc(nu_q))
    except GtError:
        return False
    f = make_mapping(dom, nu_q, table)
    if not (is_g_quotient(f) and is_g_continuous(f)):
        return False
    finest = nu_q.open_set
    for nu in strong_gts(m):
        candidate = GtMapping(dom, nu, table)
        if is_g_continuous(candidate) and not nu.open_set <= finest:
            return False
    return True


SEPARATIONS = {
    "open-not-closed": ("open", "closed"),
    "closed-not-open": ("closed", "open"),
    "pseudo_open-not-open": ("pseudo_open", "open"),
    "pseudo_open-not-closed": ("pseudo_open", "closed"),
    "quotient-not-pseudo_open": ("quotient", "pseudo_open"),
}


def separation_hits(vec: ClassificationVector) -> frozenset[str]:
    return frozenset(
        name for name, (p, c) in SEPARATIONS.items() if vec.flag(p) and not vec.flag(c)
    )


def hereditary_quotient_hits(vec: ClassificationVector) -> frozenset[str]:
    if vec.flag("quotient") and not vec.hereditary["quotient"]:
        return frozenset({"quotient-not-hereditarily_quotient"})
    return frozenset()


def subspace_strict_hits(space: GtSpace) -> frozenset[str]:
    return frozenset({"strict-interior-inclusion"}) if _strict_interior_instance(space) else frozenset()


# -- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCase:
    """One checkable statement.

    ``scope`` picks the population (``space``, ``mapping`` or
    ``surjection``).  Law cases return a bool per instance; strictness cases
    return the set of ``targets`` the instance witnesses.
    """

    id: str
    kind: str
    scope: str
    statement: str
    check: Callable
    targets: tuple[str, ...] = ()


def _constant(cls: str) -> Callable:
    return lambda f, vec: len(set(vec.conditions(cls))) == 1


REGISTRY: tuple[TheoremCase, ...] = (
    TheoremCase(
        "operator-laws", "operator-law", "space",
        "I(B) ⊆ B ⊆ C(B); I, C idempotent; I, C, d monotone; open/closed local "
        "characterizations; C = X - I(X - ·); pointwise I and C; C(B) = B ∪ d(B); x ∉ d({x})",
        check_operator_laws,
    ),
    TheoremCase(
        "subspace-laws", "operator-law", "space",
        "C'(A) = C(A) ∩ X'; I(A) ⊆ I'(A) ∩ I(X'); B closed in X' iff B = F ∩ X' for closed F",
        check_subspace_laws,
    ),
    TheoremCase(
        "subspace-strict", "strictness", "space",
        "some A ⊆ X' has I(A) ≠ I'(A) ∩ I(X')",
        subspace_strict_hits,
        ("strict-interior-inclusion",),
    ),
    TheoremCase(
        "continuity-equivalence", "equivalence", "mapping",
        "six characterizations of g-continuity agree", _constant("continuous"),
    ),
    TheoremCase(
        "restriction-continuity", "implication", "mapping",
        "g-continuous f has g-continuous restriction to every X' ⊆ X",
        check_restriction_continuity,
    ),
    TheoremCase(
        "hereditary-classes", "implication", "mapping",
        "g-open, g-closed and g-pseudo-open maps are hereditarily so",
        lambda f, vec: check_hereditary(vec),
    ),
    TheoremCase(
        "open-equivalence", "equivalence", "mapping",
        "four characterizations of g-open maps agree", _constant("open"),
    ),
    TheoremCase(
        "open-continuous-identity", "equivalence", "mapping",
        "for g-continuous f: g-open iff f⁻¹(C(B)) = C(f⁻¹(B)) for all B",
        lambda f, vec: check_continuous_identity(f, vec, "open"),
    ),
    TheoremCase(
        "closed-equivalence", "equivalence", "mapping",
        "four characterizations of g-closed maps agree", _constant("closed"),
    ),
    TheoremCase(
        "closed-continuous-identity", "equivalence", "mapping",
        "for g-continuous f: g-closed iff C(f(A)) = f(C(A)) for all A",
        lambda f, vec: check_continuous_identity(f, vec, "closed"),
    ),
    TheoremCase(
        "quotient-equivalence", "equivalence", "mapping",
        "open-preimage and closed-preimage forms of g-quotient agree", _constant("quotient"),
    ),
    TheoremCase(
        "pseudo-open-equivalence", "equivalence", "mapping",
        "g-pseudo-open iff hereditarily g-quotient iff C(B) ⊆ f(C(f⁻¹(B)))",
        _constant("pseudo_open"),
    ),
    TheoremCase(
        "pseudo-open-continuous-identity", "equivalence", "mapping",
        "for g-continuous f: g-pseudo-open iff C(B) = f(C(f⁻¹(B))) for all B",
        lambda f, vec: check_continuous_identity(f, vec, "pseudo_open"),
    ),
    TheoremCase(
        "class-implications", "implication", "mapping",
        "open ⟹ pseudo-open ⟹ quotient and closed ⟹ pseudo-open",
        lambda f, vec: check_implications(vec),
    ),
    TheoremCase(
        "quotient-not-hereditary", "strictness", "mapping",
        "some g-quotient map is not hereditarily g-quotient",
        lambda f, vec: hereditary_quotient_hits(vec),
        ("quotient-not-hereditarily_quotient",),
    ),
    TheoremCase(
        "class-separations", "strictness", "mapping",
        "no implication among the four classes beyond open ⟹ pseudo-open ⟹ quotient, "
        "closed ⟹ pseudo-open",
        lambda f, vec: separation_hits(vec),
        tuple(SEPARATIONS),
    ),
    TheoremCase(
        "quotient-topology", "operator-law", "surjection",
        "{V : f⁻¹(V) ∈ μ} is a strong GT making f g-quotient, and it is the finest "
        "GT making f g-continuous",
        check_quotient_topology,
    ),
)

REGISTRY_BY_ID = {case.id: case for case in REGISTRY}


def select_cases(theorems: Iterable[str] | None) -> tuple[TheoremCase, ...]:
    if theorems is None:
        return REGISTRY
    wanted = set(theorems)
    unknown = wanted - REGISTRY_BY_ID.keys()
    if unknown:
        raise KeyError(f"unknown theorem ids: {sorted(unknown)}")
    return tuple(case for case in REGISTRY if case.id in wanted)


# -- sweeps -----------------------------------------------------------------

CHUNK = 8


@dataclass
class _Partial:
    checked: int = 0
    failed: int = 0
    failure: CanonicalForm | None = None
    witnesses: dict[str, CanonicalForm] = field(default_factory=dict)

    def merge(self, other: "_Partial") -> None:
        self.checked += other.checked
        self.failed += other.failed
        if other.failure is not None and (self.failure is None or other.failure < self.failure):
            self.failure = other.failure
        for target, form in other.witnesses.items():
            if target not in self.witnesses or form < self.witnesses[target]:
                self.witnesses[target] = form


def _record(part: _Partial, case: TheoremCase, outcome, form_of: Callable[[], CanonicalForm]):
    part.checked += 1
    if case.kind == "strictness":
        if outcome:
            form = form_of()
            for target in outcome:
                if target not in part.witnesses or form < part.witnesses[target]:
                    part.witnesses[target] = form
    elif not outcome:
        part.failed += 1
        form = form_of()
        if part.failure is None or form < part.failure:
            part.failure = form


def _with_cod_labels(space: GtSpace) -> GtSpace:
    return GtSpace(space.n, space.opens, codomain_labels(space.n))


def _instances(task: tuple):
    scope, kind = task[0], task[1]
    if kind == "random":
        seed, n, max_cod, start, stop = task[2:]
        bounds = EnumBounds(n, max_cod, mode="random", seed=seed, count=stop)
        for index in range(start, stop):
            if scope == "space":
                yield random_instance(bounds, "space", index)
            else:
                f = random_instance(bounds, "mapping", index)
                yield f if scope == "mapping" else (f.dom, f.table, f.cod.n)
        return
    n, m, start, stop, dedupe = task[2:]
    doms = strong_gts(n, dedupe)[start:stop]
    if scope == "space":
        yield from doms
        return
    tables = list(enumerate_surjections(n, m))
    if scope == "surjection":
        for dom in doms:
            for table in tables:
                yield (dom, table, m)
        return
    cods = [_with_cod_labels(c) for c in strong_gts(m, dedupe)]
    for dom in doms:
        for cod in cods:
            for table in tables:
                yield GtMapping(dom, cod, table)


def _run_task(args) -> dict[str, _Partial]:
    task, case_ids = args
    cases = [REGISTRY_BY_ID[c] for c in case_ids]
    parts = {case.id: _Partial() for case in cases}
    scope = task[0]
    for inst in _instances(task):
        if scope == "space":
            for case in cases:
                _record(parts[case.id], case, case.check(inst), lambda: canonicalize(inst))
        elif scope == "mapping":
            vec = classify_full(inst)
            for case in cases:
                _record(parts[case.id], case, case.check(inst, vec), lambda: canonicalize_pair(inst))
        else:
            dom, table, m = inst

            def form_of():
                cod = core.validate_gt(m, [0, core.full_mask(m)], codomain_labels(m))
                return canonicalize_pair(make_mapping(dom, cod, table))

            for case in cases:
                _record(parts[case.id], case, case.check(dom, table, m), form_of)
    return parts


def _tasks(bounds: EnumBounds, scopes: set[str]) -> list[tuple]:
    tasks = []
    if bounds.mode == "random":
        n, m, total = bounds.max_dom_points, bounds.max_cod_points, bounds.count
        for scope in ("space", "mapping", "surjection"):
            if scope in scopes:
                for start in range(0, total, 64):
                    tasks.append(
                        (scope, "random", bounds.seed, n, m, start, min(total, start + 64))
                    )
        return tasks
    dedupe = bounds.dedupe_iso
    for n in range(1, bounds.max_dom_points + 1):
        total = len(strong_gts(n, dedupe))
        if "space" in scopes:
            for start in range(0, total, CHUNK):
                tasks.append(("space", "exhaustive", n, 0, start, start + CHUNK, dedupe))
        for m in range(1, min(n, bounds.max_cod_points) + 1):
            for scope in ("mapping", "surjection"):
                if scope in scopes:
                    for start in range(0, total, CHUNK):
                        tasks.append((scope, "exhaustive", n, m, start, start + CHUNK, dedupe))
    return tasks


def population(bounds: EnumBounds) -> dict[str, int]:
    if bounds.mode == "random":
        return {"spaces": bounds.count, "mappings": bounds.count, "surjections": bounds.count}
    spaces = mappings = surjections = 0
    dedupe = bounds.dedupe_iso
    for n in range(1, bounds.max_dom_points + 1):
        s_n = len(strong_gts(n, dedupe))
        spaces += s_n
        for m in range(1, min(n, bounds.max_cod_points) + 1):
            tables = surjection_count(n, m)
            surjections += s_n * tables
            mappings += s_n * len(strong_gts(m, dedupe)) * tables
    return {"spaces": spaces, "mappings": mappings, "surjections": surjections}


def _run_all(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        return list(pool.map(fn, jobs))


@dataclass(frozen=True)
class CaseResult:
    id: str
    kind: str
    status: str
    checked: int
    failed: int = 0
    failure: CanonicalForm | None = None
    witnesses: dict = field(default_factory=dict)

    def to_doc(self) -> dict:
        doc = {
            "id": self.id,
            "kind": self.kind,
            "status": self.status,
            "checked": self.checked,
            "failed": self.failed,
        }
        if self.failure is not None:
            doc["failure"] = self.failure.to_doc()
        if self.witnesses:
            doc["witnesses"] = {t: w.to_doc() for t, w in sorted(self.witnesses.items())}
        return doc


@dataclass(frozen=True)
class VerifyReport:
    bounds: EnumBounds
    population: dict[str, int]
    results: tuple[CaseResult, ...]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def result(self, case_id: str) -> CaseResult:
        for r in self.results:
            if r.id == case_id:
                return r
        raise KeyError(case_id)

    def to_doc(self, include_timing: bool = False) -> dict:
        witnesses = []
        for r in self.results:
            for target, form in sorted(r.witnesses.items()):
                witnesses.append({"case": r.id, "target": target, "instance": form.to_doc()})
        doc = {
            "bounds": self.bounds.to_doc(),
            "population": dict(self.population),
            "results": [r.to_doc() for r in self.results],
            "witnesses": witnesses,
            "passed": self.passed,
        }
        if include_timing:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_doc(include_timing), indent=2, sort_keys=True, ensure_ascii=False)

    def render_text(self) -> str:
        b = self.bounds
        lines = [
            f"bounds {b.max_dom_points}x{b.max_cod_points} ({b.mode})",
            "population: " + ", ".join(f"{k}={v}" for k, v in sorted(self.population.items())),
        ]
        for r in self.results:
            extra = f" failed={r.failed}" if r.failed else ""
            if r.kind == "strictness":
                extra = f" witnesses={len(r.witnesses)}/{len(REGISTRY_BY_ID[r.id].targets)}"
            lines.append(f"  {r.status:<11} {r.id:<34} checked={r.checked}{extra}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} in {self.wall_time:.2f}s")
        return "\n".join(lines)


def run_suite(
    bounds: EnumBounds, theorems: Iterable[str] | None = None, workers: int = 1
) -> VerifyReport:
    """Evaluate every selected case on every instance of the population.

    Law cases pass with zero failing instances; strictness cases are
    ``witnessed`` when every target shows up somewhere in the population and
    ``unwitnessed`` otherwise (absence within bounds refutes nothing).
    """
    started = time.perf_counter()
    cases = select_cases(theorems)
    scopes = {case.scope for case in cases}
    if "mapping" in scopes or "surjection" in scopes:
        bounds.check_sweep()
    pop = population(bounds)
    merged = {case.id: _Partial() for case in cases}
    if cases:
        jobs = [
            (task, tuple(c.id for c in cases if c.scope == task[0]))
            for task in _tasks(bounds, scopes)
        ]
        for parts in _run_all(_run_task, jobs, workers):
            for case_id, part in parts.items():
                merged[case_id].merge(part)
    results = []
    for case in cases:
        part = merged[case.id]
        if case.kind == "strictness":
            status = "witnessed" if set(case.targets) <= part.witnesses.keys() else "unwitnessed"
        else:
            status = "pass" if part.failed == 0 else "fail"
        results.append(
            CaseResult(case.id, case.kind, status, part.checked, part.failed, part.failure,
                       dict(part.witnesses))
        )
    return VerifyReport(bounds, pop, tuple(results), time.perf_counter() - started)


def clear_caches() -> None:
    """Drop cached enumerations and subspaces (needed after monkeypatching)."""
    strong_gts.cache_clear()
    subspace.induce_subspace.cache_clear()


# -- mining -----------------------------------------------------------------

PRESETS = {
    **SEPARATIONS,
    "quotient-not-hereditarily_quotient": ("quotient", "hereditarily_quotient"),
}

_BASE_EDGES = {
    ("open", "pseudo_open"),
    ("closed", "pseudo_open"),
    ("pseudo_open", "quotient"),
    ("pseudo_open", "hereditarily_quotient"),
    ("hereditarily_quotient", "pseudo_open"),
    ("hereditarily_quotient", "quotient"),
}
for _cls in ("open", "closed", "pseudo_open"):
    _BASE_EDGES |= {(_cls, f"hereditarily_{_cls}"), (f"hereditarily_{_cls}", _cls)}

MINING_CLASSES = ("open", "closed", "pseudo_open", "quotient") + tuple(
    f"hereditarily_{c}" for c in ("open", "closed", "pseudo_open", "quotient")
)


@lru_cache(maxsize=None)
def provable_implications() -> frozenset[tuple[str, str]]:
    """Transitive, reflexive closure of the known implications."""
    reach = {c: {c} for c in MINING_CLASSES}
    for a, b in _BASE_EDGES:
        reach[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in MINING_CLASSES:
            extra = set().union(*(reach[b] for b in reach[a])) - reach[a]
            if extra:
                reach[a] |= extra
                changed = True
    return frozenset((a, b) for a in MINING_CLASSES for b in reach[a])


def _norm_class(name: str) -> str:
    name = name.replace("-", "_")
    if name not in MINING_CLASSES:
        raise ValueError(f"unknown mapping class {name!r}")
    return name


@dataclass(frozen=True)
class Witness:
    """Least mapping (by size, then canonical encoding) with premise and not conclusion.

    ``searched`` lists the smaller (|X|, |Y|) sizes that were exhausted
    without a hit; together with the canonical minimum at the witness's own
    size it is the minimality certificate.
    """

    premise: str
    conclusion: str
    form: CanonicalForm
    signature: dict
    searched: tuple[tuple[int, int], ...]

    @property
    def mapping(self) -> GtMapping:
        return self.form.mapping()

    @property
    def size(self) -> tuple[int, int]:
        return (self.form.dom_points, self.form.cod_points)

    def to_doc(self) -> dict:
        return {
            "target": {"premise": self.premise, "conclusion": self.conclusion},
            "size": list(self.size),
            "mapping": self.form.to_doc(),
            "signature": dict(self.signature),
            "searched_without_witness": [list(s) for s in self.searched],
        }


@dataclass(frozen=True)
class Exhausted:
    premise: str
    conclusion: str
    bounds: EnumBounds
    searched: int
    sizes: tuple[tuple[int, int], ...]

    def to_doc(self) -> dict:
        return {
            "target": {"premise": self.premise, "conclusion": self.conclusion},
            "exhausted": True,
            "bounds": self.bounds.to_doc(),
            "searched_mappings": self.searched,
            "searched_sizes": [list(s) for s in self.sizes],
        }


def _sizes(max_dom: int, max_cod: int) -> list[tuple[int, int]]:
    return [(n, m) for n in range(1, max_dom + 1) for m in range(1, min(n, max_cod) + 1)]


def _mine_chunk(args) -> tuple[int, CanonicalForm | None]:
    premise, conclusion, n, m, start, stop = args
    cods = [_with_cod_labels(c) for c in strong_gts(m, True)]
    tables = list(enumerate_surjections(n, m))
    best, count = None, 0
    for dom in strong_gts(n, True)[start:stop]:
        for cod in cods:
            for table in tables:
                f = GtMapping(dom, cod, table)
                count += 1
                if is_member(f, premise) and not is_member(f, conclusion):
                    form = canonicalize_pair(f)
                    if best is None or form < best:
                        best = form
    return count, best


def mine_counterexample(
    premise: str, conclusion: str, bounds: EnumBounds, workers: int = 1
) -> Witness | Exhausted:
    """Search sizes in (|X|, |Y|) order for a mapping separating two classes.

    Only one representative per isomorphism class of domain and codomain is
    tried, with every surjection between them; all class predicates are
    invariant under relabeling, so nothing is missed.
    """
    premise, conclusion = _norm_class(premise), _norm_class(conclusion)
    if (premise, conclusion) in provable_implications():
        raise ProvableImplication(f"{premise} always implies {conclusion}")
    bounds.check_sweep()
    searched, total = [], 0
    for n, m in _sizes(bounds.max_dom_points, bounds.max_cod_points):
        count = len(strong_gts(n, True))
        jobs = [(premise, conclusion, n, m, s, s + CHUNK) for s in range(0, count, CHUNK)]
        best = None
        for checked, form in _run_all(_mine_chunk, jobs, workers):
            total += checked
            if form is not None and (best is None or form < best):
                best = form
        if best is not None:
            signature = {premise: True, conclusion: False}
            return Witness(premise, conclusion, best, signature, tuple(searched))
        searched.append((n, m))
    return Exhausted(premise, conclusion, bounds, total, tuple(searched))


def mine_preset(name: str, bounds: EnumBounds, workers: int = 1) -> Witness | Exhausted:
    try:
        premise, conclusion = PRESETS[name.replace("pseudo-open", "pseudo_open")]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    return mine_counterexample(premise, conclusion, bounds, workers)


def check_witness(w: Witness) -> bool:
    """Re-classify the witness and compare with its recorded signature."""
    if w.signature != {w.premise: True, w.conclusion: False}:
        return False
    try:
        f = w.mapping
    except GtError:
        return False
    actual = {w.premise: is_member(f, w.premise), w.conclusion: is_member(f, w.conclusion)}
    return actual == w.signature and canonicalize_pair(f) == w.form


def confirm_minimal(w: Witness) -> bool:
    """Brute-force re-search over the raw (non-deduplicated) population.

    No mapping of a lexicographically smaller size may satisfy the target,
    and none of the witness's size may have a smaller canonical form.
    """
    n0, m0 = w.size

    def hit(f: GtMapping) -> bool:
        return is_member(f, w.premise) and not is_member(f, w.conclusion)

    for n, m in _sizes(n0, n0):
        if (n, m) > (n0, m0):
            break
        cods = [_with_cod_labels(c) for c in strong_gts(m)]
        tables = list(enumerate_surjections(n, m))
        doms = strong_gts(n)
        if (n, m) == (n0, m0):
            doms = [d for d in doms if canonicalize(d).opens <= w.form.opens]
        for dom in doms:
            for cod in cods:
                for table in tables:
                    f = GtMapping(dom, cod, table)
                    if hit(f) and ((n, m) < (n0, m0) or canonicalize_pair(f) < w.form):
                        return False
    return True
