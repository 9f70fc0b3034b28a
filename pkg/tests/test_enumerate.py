import pytest
from hypothesis import given, settings

from conftest import TRIANGLE, complete_stream, distinct_end_stream, interval_streams
from lsclique.enumerate import (
    EnumCounters,
    EnumFrame,
    ForbidEdges,
    choose_pivot,
    enumerate_maximal_cliques,
    gce,
    pivot_deletions,
    vertex_maximal,
)
from lsclique.instant import InstantCursor
from lsclique.oracle import certify, oracle_enumerate
from lsclique.stream import stream_from_tuples


def labeled(stream, cliques):
    return {c.labeled(stream) for c in cliques}


def ids(stream, *labels):
    return [stream.vertices.id(x) for x in labels]


def test_l_star(l_star):
    cliques, _ = enumerate_maximal_cliques(l_star)
    assert labeled(l_star, cliques) == {
        (1, 5, ("a", "c")),
        (3, 5, ("a", "b", "c")),
        (3, 7, ("a", "b")),
    }
    assert (3, 5, ("b", "c")) not in labeled(l_star, cliques)


def test_l1_contains_triangle_clique(l1):
    cliques, _ = enumerate_maximal_cliques(l1)
    assert labeled(l1, cliques) == {
        (1, 5, ("b", "c")),
        (1, 11, ("c", "d")),
        (2, 4, ("a", "b", "c")),
    }


def test_single_link():
    stream = stream_from_tuples([(2, 9, "u", "v")])
    cliques, counters = enumerate_maximal_cliques(stream)
    assert labeled(stream, cliques) == {(2, 9, ("u", "v"))}
    assert counters.leaves == counters.maximal_leaves == 1


def test_zero_duration_link():
    stream = stream_from_tuples([(4, 4, "u", "v")])
    cliques, _ = enumerate_maximal_cliques(stream)
    assert labeled(stream, cliques) == {(4, 4, ("u", "v"))}


@pytest.mark.parametrize("pivot", [True, False])
def test_triangle_only_full_clique(pivot):
    stream = stream_from_tuples(TRIANGLE)
    cliques, _ = enumerate_maximal_cliques(stream, pivot=pivot)
    assert labeled(stream, cliques) == {(0, 10, ("a", "b", "c"))}


def test_empty_stream():
    stream = stream_from_tuples([])
    cliques, counters = enumerate_maximal_cliques(stream)
    assert cliques == []
    assert counters.maximal_cliques == counters.time_maximal_cliques == counters.leaves == 0


def run_seed(stream, cursor, forbid, u, v, pivot=False):
    visits = []
    gce(
        EnumFrame.seed(cursor, u, v),
        forbid,
        cursor,
        lambda c: None,
        EnumCounters(),
        pivot=pivot,
        visit=lambda frame, _: visits.append(frozenset(stream.vertices.label(x) for x in frame.R)),
    )
    return visits


def test_forbidden_seed_edges_visit_sets(k4_late):
    cursor = InstantCursor(k4_late)
    cursor.advance_to(0)
    cursor.advance_to(5)
    seeds = [(u, v) for _, _, u, v in cursor.starting_links()]
    assert seeds == [tuple(ids(k4_late, "a", "c")), tuple(ids(k4_late, "b", "d"))]
    forbid = ForbidEdges()

    first = run_seed(k4_late, cursor, forbid, *seeds[0])
    assert sorted(first, key=sorted) == sorted(
        map(frozenset, ["ac", "abc", "acd", "abcd"]), key=sorted
    )
    assert len(first) == len(set(first))

    forbid.add(*seeds[0])
    second = run_seed(k4_late, cursor, forbid, *seeds[1])
    assert set(second) == set(map(frozenset, ["bd", "abd", "bcd"]))
    assert len(second) == 3
    assert frozenset("abcd") not in second


def test_seed_without_candidates_is_one_leaf():
    stream = stream_from_tuples([(0, 5, "a", "b"), (0, 5, "c", "d")])
    cursor = InstantCursor(stream)
    cursor.advance_to(0)
    counters = EnumCounters()
    frame = EnumFrame.seed(cursor, *ids(stream, "a", "b"))
    assert frame.P == set()
    gce(frame, ForbidEdges(), cursor, lambda c: None, counters)
    assert counters.time_maximal_cliques == 1
    assert counters.leaves == counters.maximal_leaves == 1


def test_vertex_maximal_examples(l_star):
    cursor = InstantCursor(l_star)
    cursor.advance_to(3)
    a, b, c = ids(l_star, "a", "b", "c")
    assert not vertex_maximal(cursor, [b, c], [a], 5)
    assert vertex_maximal(cursor, [a, b], [c], 7)
    assert vertex_maximal(cursor, [a, b], [], 7)


def test_pivot_on_complete_four_clique():
    stream = complete_stream(4)
    cursor = InstantCursor(stream)
    cursor.advance_to(0)
    a, b, c, d = range(4)
    frame = EnumFrame.seed(cursor, a, b)
    assert frame.P == {c, d} and frame.X == set()
    assert pivot_deletions(frame, cursor.adjacency, c) == {d}
    assert pivot_deletions(frame, cursor.adjacency, d) == {c}
    assert choose_pivot(frame, cursor) == (c, {d})
    with_pivot, _ = enumerate_maximal_cliques(stream, pivot=True)
    without, _ = enumerate_maximal_cliques(stream, pivot=False)
    assert with_pivot == without == [with_pivot[0]]
    assert with_pivot[0].members == (0, 1, 2, 3)


def test_pivot_never_deletes_itself():
    stream = stream_from_tuples(TRIANGLE)
    cursor = InstantCursor(stream)
    cursor.advance_to(0)
    frame = EnumFrame.seed(cursor, 0, 1)
    assert frame.P == {2}
    assert choose_pivot(frame, cursor) == (2, set())


def test_pivot_prefers_candidates_on_ties():
    # pair 2-3 ends early, so neither vertex can delete the other: both |Del| = 0
    stream = stream_from_tuples(
        [(0, 10, "a", "b"), (0, 10, "a", "c"), (0, 10, "b", "c"),
         (0, 10, "a", "d"), (0, 10, "b", "d"), (0, 5, "c", "d")]
    )
    cursor = InstantCursor(stream)
    cursor.advance_to(0)
    a, b, c, d = ids(stream, "a", "b", "c", "d")
    frame = EnumFrame.seed(cursor, a, b)
    frame.P, frame.X = {d}, {c}
    assert choose_pivot(frame, cursor) == (d, set())


def test_pivot_inert_when_no_extension_keeps_final_time():
    # seed a-b at t=1; every candidate pair ends before both candidates' extensions
    stream = stream_from_tuples(
        [(1, 100, "a", "b"), (0, 90, "a", "c"), (0, 91, "b", "c"),
         (0, 92, "a", "d"), (0, 93, "b", "d"), (0, 50, "c", "d")]
    )
    cursor = InstantCursor(stream)
    cursor.advance_to(0)
    cursor.advance_to(1)
    frame = EnumFrame.seed(cursor, *ids(stream, "a", "b"))
    for p in frame.P:
        assert pivot_deletions(frame, cursor.adjacency, p) == set()
    _, with_pivot = enumerate_maximal_cliques(stream, pivot=True, begin_range=(1, None))
    _, without = enumerate_maximal_cliques(stream, pivot=False, begin_range=(1, None))
    assert with_pivot.leaves == without.leaves
    assert with_pivot.time_maximal_cliques == without.time_maximal_cliques


def assert_counter_laws(stream, counters):
    assert counters.maximal_cliques <= counters.time_maximal_cliques
    assert stream.m <= counters.time_maximal_cliques
    assert counters.leaves == counters.maximal_leaves + counters.wasted_leaves
    assert counters.n_instants <= 2 * stream.m
    if stream.m:
        # 1 <= 1/r <= 2^q
        assert counters.maximal_leaves >= 1
        assert counters.leaves <= 2**counters.max_clique_size * counters.maximal_leaves


@settings(max_examples=150, deadline=None)
@given(interval_streams())
def test_matches_oracle_both_pivot_modes(stream):
    expected = oracle_enumerate(stream)
    for pivot in (True, False):
        cliques, counters = enumerate_maximal_cliques(stream, pivot=pivot, check=True)
        assert len(cliques) == len(set(cliques))
        assert set(cliques) == expected
        assert [c.t0 for c in cliques] == sorted(c.t0 for c in cliques)
        assert_counter_laws(stream, counters)


@settings(max_examples=100, deadline=None)
@given(interval_streams())
def test_every_clique_certified(stream):
    cliques, _ = enumerate_maximal_cliques(stream)
    for c in cliques:
        assert certify(stream, c) == []


@settings(max_examples=100, deadline=None)
@given(interval_streams())
def test_max_degree_and_size_counters(stream):
    cliques, counters = enumerate_maximal_cliques(stream)
    assert counters.max_clique_size == max((len(c.members) for c in cliques), default=0)
    cursor = InstantCursor(stream)
    for t in stream.begin_times():
        cursor.advance_to(t)
    assert counters.max_degree == cursor.max_degree


@pytest.mark.parametrize("seed", range(20))
def test_distinct_end_times_give_unit_ratio(seed):
    stream = distinct_end_stream(seed)
    ends = [link.end for link in stream.links]
    assert len(ends) == len(set(ends))
    for pivot in (True, False):
        _, counters = enumerate_maximal_cliques(stream, pivot=pivot)
        assert counters.leaves == counters.maximal_leaves
        assert counters.leaf_ratio == 1.0


def test_counters_merge():
    a = EnumCounters(5, 10, 8, 3, 2, 4, 12, 6, 4, 0.5)
    b = EnumCounters(5, 10, 8, 4, 3, 1, 2, 2, 1, 0.2)
    m = EnumCounters.merge([a, b])
    assert (m.maximal_cliques, m.time_maximal_cliques, m.leaves, m.maximal_leaves) == (5, 14, 8, 5)
    assert (m.max_degree, m.max_clique_size) == (4, 3)
    assert m.leaf_ratio == pytest.approx(5 / 8)
    assert m.as_dict()["leaf_ratio"] == 0.625


def test_forbidden_skip_leaf_with_distinct_ends():
    # b-c at t=1 skips a (a-c is forbidden) and {b,c} shares the final time of {a,b,c}
    stream = stream_from_tuples([(0, 10, "a", "b"), (1, 11, "a", "c"), (1, 7, "b", "c")])
    for pivot in (True, False):
        cliques, counters = enumerate_maximal_cliques(stream, pivot=pivot)
        assert {c.labeled(stream) for c in cliques} == {
            (0, 10, ("a", "b")),
            (1, 11, ("a", "c")),
            (1, 7, ("a", "b", "c")),
        }
        assert (counters.leaves, counters.maximal_leaves) == (3, 2)
