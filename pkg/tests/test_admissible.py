from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from gencox.admissible.catalog import (
    RANK3_REPRESENTATIVES,
    classify_shapes_rank3,
    probe_cyclic_conjecture,
    relation_loops_close,
)
from gencox.admissible.gamma import (
    bijective_shape,
    build_gamma,
    kn_apply,
    kn_equal,
    m_value,
)
from gencox.admissible.shapes import (
    Shape,
    canonical_shape,
    cyclic_permute,
    is_reducible_shape,
    nabla,
    orbit_closure,
    parse_shape,
)
from gencox.errors import DomainError, InconclusiveError, MalformedInputError
from gencox.fixtures import symmetric_group_graph
from gencox.graph.sequences import check_realisable_233
from gencox.graph.structure import is_irreducible, isomorphic
from gencox.relations import build_qn, gen, generators, parse_word

FIG_SHAPE = {"r": (0, 3), "s": (1, 6), "t": (1, 7)}


def _corpus():
    shapes = [Shape.make(7, ch) for ch in RANK3_REPRESENTATIVES.values()]
    shapes.append(Shape.make(7, FIG_SHAPE))
    shapes.append(Shape.make(2, [(0, 1), (0, 2), (1, 2)]))
    shapes.append(Shape.make(6, [(0, 2), (0, 3), (0, 4), (1, 5)]))
    shapes.append(Shape.make(3, [(1, 2)]))
    return shapes


CORPUS = _corpus()


@st.composite
def shapes(draw, max_n=6, max_rank=4):
    n = draw(st.integers(2, max_n))
    T = generators(n)
    k = draw(st.integers(1, min(max_rank, len(T))))
    chords = draw(st.lists(st.sampled_from(T), min_size=k, max_size=k, unique=True))
    return Shape.make(n, chords)


# --- shapes -----------------------------------------------------------------

def test_nabla_figure_example():
    u = Shape.make(7, FIG_SHAPE)
    assert nabla(u, "t") == Shape.make(7, {"r": (0, 5), "s": (2, 7), "t": (1, 7)})
    assert nabla(u, "t") in orbit_closure(u)


def test_nabla_rank1_identity():
    u = Shape.make(4, [(1, 3)])
    assert nabla(u, "r") == u
    assert orbit_closure(u) == {u}


@pytest.mark.parametrize("u", CORPUS, ids=str)
def test_nabla_is_involution(u):
    for s in u.colours:
        assert nabla(nabla(u, s), s) == u


@pytest.mark.parametrize("u", CORPUS, ids=str)
def test_recursive_clause_matches_closed_form(u):
    Q = build_qn(u.n)
    for s, t in product(u.colours, repeat=2):
        if s != t:
            ut = nabla(u, t)
            assert nabla(ut, s)[t] == Q.star(u[t], [ut[s]])


@given(shapes())
def test_nabla_involution_random(u):
    for s in range(u.rank):
        assert nabla(nabla(u, s), s) == u


def test_l1_orbit_single_chord_pattern():
    u = Shape.make(7, RANK3_REPRESENTATIVES["L1"])
    orbit = orbit_closure(u)
    assert len({canonical_shape(v, "sim_s") for v in orbit}) == 1


def test_canonical_shape_examples():
    u = Shape.make(7, FIG_SHAPE)
    key = canonical_shape(u, "sim")
    assert sorted({x for g in key for x in g}) == [0, 1, 2, 3, 4]
    assert canonical_shape(Shape.make(7, key), "sim") == key
    mirror = Shape.make(7, {c: (7 - b, 7 - a) for c, (a, b) in FIG_SHAPE.items()})
    assert canonical_shape(mirror, "sim") == key
    with pytest.raises(DomainError):
        canonical_shape(u, "other")


@given(shapes())
def test_canonical_shape_idempotent(u):
    key = canonical_shape(u, "sim")
    assert canonical_shape(u.with_assignment(key), "sim") == key


def test_cyclic_permute():
    u = Shape.make(7, RANK3_REPRESENTATIVES["L1"])
    assert cyclic_permute(u, 0) == u
    assert cyclic_permute(u, len(u.support())) == u
    l2 = canonical_shape(Shape.make(7, RANK3_REPRESENTATIVES["L2"]), "sim_s")
    shifts = {canonical_shape(cyclic_permute(u, j), "sim_s") for j in range(5)}
    assert l2 in shifts


def test_reducibility():
    assert is_reducible_shape(Shape.make(2, [(0, 1), (0, 2), (1, 2)]))
    assert not is_reducible_shape(Shape.make(7, RANK3_REPRESENTATIVES["L1"]))
    assert not is_reducible_shape(Shape.make(3, [(0, 2)]))


def test_shape_parsing():
    u = parse_shape("r=0,2;s=1,3;t=2,4", 7)
    assert u == Shape.make(7, RANK3_REPRESENTATIVES["L1"])
    assert str(u) == "r=0,2;s=1,3;t=2,4"
    with pytest.raises(MalformedInputError):
        parse_shape("r=0,2;s", 7)
    with pytest.raises(MalformedInputError):
        parse_shape("r=0,2;r=1,3", 7)
    with pytest.raises(DomainError):
        parse_shape("r=0,2;s=0,2", 7)
    with pytest.raises(DomainError):
        parse_shape("r=0,9", 7)


# --- m values and admissible graphs ------------------------------------------

def test_m_value_examples():
    L1 = Shape.make(7, RANK3_REPRESENTATIVES["L1"])
    assert m_value(L1, "r", "s").m == 3
    assert m_value(L1, "r", "t").m == 2
    L2 = Shape.make(7, RANK3_REPRESENTATIVES["L2"])
    assert (L2["s"], L2["t"]) == (gen(1, 3), gen(1, 4))
    assert m_value(L2, "s", "t").m == 2


@pytest.mark.parametrize("u", CORPUS, ids=str)
def test_alternating_walk_applies_relation_word(u):
    Q = build_qn(u.n)
    for s, t in combinations(u.colours, 2):
        mv = m_value(u, s, t)
        x = u
        for _ in range(mv.p):
            x = nabla(nabla(x, s), t)
        for r in u.colours:
            assert x[r] == Q.star(u[r], mv.relation)


def test_gamma_counts(rank3_gammas):
    assert {k: A.vertex_count for k, A in rank3_gammas.items()} == {
        "L1": 24, "L2": 24, "L3": 24, "L4": 32, "L5": 32, "L6": 32}
    assert build_gamma(Shape.make(3, [(0, 2)])).vertex_count == 2


def test_gamma_l1_is_a3(rank3_gammas):
    assert isomorphic(rank3_gammas["L1"].graph, symmetric_group_graph(4), True) is not None


def test_every_built_gamma_is_a_23_graph(rank3_gammas, rank4_gammas):
    for A in list(rank3_gammas.values()) + list(rank4_gammas.values()):
        assert A.complete
        assert check_realisable_233(A.graph).realisable
        assert {x for blk in A.m for row in blk for x in row} <= {1, 2, 3}
        assert len(set(A.states)) == A.vertex_count


def test_relation_words_close_at_every_vertex(rank3_gammas):
    for A in rank3_gammas.values():
        assert relation_loops_close(A)


def test_equivalent_shapes_give_pointed_isomorphic_graphs():
    u = Shape.make(7, RANK3_REPRESENTATIVES["L4"])
    shifted = u.with_assignment(gen(a + 1, b + 1) for a, b in u.assignment)
    mirrored = u.with_assignment(gen(7 - b, 7 - a) for a, b in u.assignment)
    G = build_gamma(u).graph
    for v in (shifted, mirrored):
        assert canonical_shape(v, "sim") == canonical_shape(u, "sim")
        found = isomorphic(G, build_gamma(v).graph, base_to_base=True)
        assert found is not None
        assert found[0] == {c: c for c in u.colours}


@pytest.mark.parametrize("chords", [[(0, 1), (0, 2), (1, 2)], [(0, 1), (2, 3), (4, 5)]])
def test_reducible_shape_gives_reducible_graph(chords):
    u = Shape.make(6, chords)
    assert is_reducible_shape(u)
    A = build_gamma(u)
    assert A.complete and not is_irreducible(A.graph)


def test_radius_cap_truncates():
    A = build_gamma(Shape.make(7, RANK3_REPRESENTATIVES["L4"]), radius_cap=2)
    assert not A.complete and A.graph is None
    assert A.spheres == [1, 3, 6]
    with pytest.raises(DomainError):
        build_gamma(Shape.make(7, RANK3_REPRESENTATIVES["L4"]), radius_cap=0)


# --- K_n -------------------------------------------------------------------

def test_kn_apply_examples():
    base = kn_apply(2, [])
    assert base.object == bijective_shape(2)
    assert kn_equal(2, parse_word("0,1"), parse_word("0,2 1,2 0,2"))
    assert not kn_equal(2, parse_word("0,1"), parse_word("0,2"))
    with pytest.raises(InconclusiveError):
        kn_apply(2, parse_word("0,1 0,2 1,2"), radius_cap=2)


def test_k2_closure_and_simple_transitivity():
    A = build_gamma(bijective_shape(2))
    assert A.complete and A.vertex_count == 8
    T = generators(2)
    neighbours = {kn_apply(2, [g]) for g in T}
    assert len(neighbours) == 3
    assert all(A.graph.act(0, s) == A.index_of(kn_apply(2, [g])) for s, g in enumerate(T))
    for length in (2, 3):
        for w in product(T, repeat=length):
            state = kn_apply(2, w)
            if state in neighbours:
                # the element is then a generator itself
                assert any(kn_equal(2, w, [g]) for g in T)


@pytest.mark.parametrize("n, order", [(2, 8), (3, 96)])
def test_kn_order_matches_coset_enumeration(n, order):
    T = generators(n)
    F, *gs = free_group(" ".join(f"g{i}" for i in range(len(T))))
    idx = {g: i for i, g in enumerate(T)}
    relators = [x ** 2 for x in gs]
    for w in build_qn(n).words:
        e = F.identity
        for g in w:
            e = e * gs[idx[g]]
        relators.append(e)
    assert FpGroup(F, relators).order() == order
    assert build_gamma(bijective_shape(n)).vertex_count == order


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(generators(3)), max_size=6))
def test_word_times_inverse_is_trivial(word):
    assert kn_equal(3, word + word[::-1], [])


# --- classification experiments ---------------------------------------------

def test_rank3_classification():
    C = classify_shapes_rank3(6)
    assert sorted(c.label for c in C.classes) == ["L1", "L2", "L3", "L4", "L5", "L6"]
    assert sorted(c.label for c in C.merged) == ["L1", "L2+L3", "L4+L5+L6"]
    assert sorted(len(c.representatives) for c in C.merged) == [1, 2, 3]
    with pytest.raises(DomainError):
        classify_shapes_rank3(4)


def test_probe_cyclic():
    L1 = probe_cyclic_conjecture(Shape.make(7, RANK3_REPRESENTATIVES["L1"]))
    assert len(L1) == 5 and all(e.isomorphic for e in L1)
    L4 = probe_cyclic_conjecture(Shape.make(7, RANK3_REPRESENTATIVES["L4"]))
    assert [e.shift for e in L4] == list(range(6))
    assert all(e.complete for e in L4)
    single = probe_cyclic_conjecture(Shape.make(3, [(0, 2)]))
    assert all(e.isomorphic for e in single)
