from hypothesis import given, settings, strategies as st

from gtspace import core, subspace
from gtspace.enumeration import codomain_labels
from gtspace.mapping import (
    classify_full,
    image,
    is_g_continuous,
    make_mapping,
    preimage,
    quotient_gt,
    restrict,
)
from gtspace.verify import check_implications, operator_law_violations

import oracles


def _close(n, picks):
    family = {0, (1 << n) - 1, *picks}
    while True:
        grown = {a | b for a in family for b in family}
        if grown <= family:
            return family
        family |= grown


@st.composite
def spaces(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    picks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=6))
    return core.validate_gt(n, _close(n, picks))


@st.composite
def mappings(draw, max_n=4):
    dom = draw(spaces(max_n=max_n))
    m = draw(st.integers(1, dom.n))
    cod = draw(spaces(min_n=m, max_n=m))
    cod = core.validate_gt(m, cod.opens, codomain_labels(m))
    rest = draw(st.lists(st.integers(0, m - 1), min_size=dom.n - m, max_size=dom.n - m))
    table = draw(st.permutations(list(range(m)) + rest))
    return make_mapping(dom, cod, table)


@settings(max_examples=200, deadline=None)
@given(spaces(), st.data())
def test_operator_laws(space, data):
    b = data.draw(st.integers(0, space.full))
    assert operator_law_violations(space, b) == []


@settings(max_examples=100, deadline=None)
@given(spaces(max_n=5), st.data())
def test_operators_agree_with_oracle(space, data):
    b = data.draw(st.integers(0, space.full))
    X, opens = oracles.to_sets(space)
    B = frozenset(i for i in range(space.n) if b >> i & 1)
    assert core.closure(space, b) == oracles.to_mask(oracles.closure(X, opens, B))
    assert core.interior(space, b) == oracles.to_mask(oracles.interior(X, opens, B))


@settings(max_examples=100, deadline=None)
@given(spaces(max_n=5), st.data())
def test_subspace_laws(space, data):
    carrier = data.draw(st.integers(0, space.full))
    a = data.draw(st.integers(0, space.full)) & carrier
    emb = subspace.induce_subspace(space, carrier)
    assert subspace.relative_closure(emb, a) == core.closure(space, a) & carrier
    assert core.interior(space, a) & ~(
        subspace.relative_interior(emb, a) & core.interior(space, carrier)
    ) == 0
    f = subspace.closed_trace_witness(emb, a)
    assert (f is not None) == any(c & carrier == a for c in space.closed_sets)


@settings(max_examples=150, deadline=None)
@given(mappings())
def test_characterizations_agree(f):
    vec = classify_full(f)
    assert vec.disagreements() == []
    assert check_implications(vec)
    for cls in ("open", "closed", "pseudo_open"):
        assert not vec.flag(cls) or vec.hereditary[cls]
    assert vec.flag("pseudo_open") == vec.hereditary["quotient"]


@settings(max_examples=100, deadline=None)
@given(mappings(), st.data())
def test_preimage_algebra(f, data):
    a = data.draw(st.integers(0, f.cod.full))
    b = data.draw(st.integers(0, f.cod.full))
    assert preimage(f, a | b) == preimage(f, a) | preimage(f, b)
    assert preimage(f, a & b) == preimage(f, a) & preimage(f, b)
    assert preimage(f, f.cod.full ^ a) == f.dom.full ^ preimage(f, a)
    assert image(f, preimage(f, a)) == a


@settings(max_examples=100, deadline=None)
@given(mappings(), st.data())
def test_restriction_keeps_continuity(f, data):
    carrier = data.draw(st.integers(0, f.dom.full))
    h = restrict(f, carrier)
    assert h.dom.n == bin(carrier).count("1")
    if is_g_continuous(f):
        assert is_g_continuous(h)


@settings(max_examples=100, deadline=None)
@given(mappings())
def test_quotient_gt_is_finest(f):
    nu = quotient_gt(f.dom, f.table, f.cod.n)
    g = make_mapping(f.dom, nu, f.table)
    assert is_g_continuous(g)
    if is_g_continuous(f):
        assert set(f.cod.opens) <= set(nu.opens)
