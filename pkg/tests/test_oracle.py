import random
from itertools import combinations

import pytest

from planarturan.canon import canonical_code, is_isomorphic
from planarturan.constructions import icosahedron
from planarturan.embedding import embed_planar, is_triangulation
from planarturan.graphs import Graph
from planarturan.oracle import (
    BudgetExhausted,
    ExpensiveCensusError,
    SearchBudget,
    _vertex_splits,
    enumerate_triangulations,
    exact_planar_turan,
    exists_planar_with_degree_profile,
    search_witness,
)
from planarturan.patterns import Fan, Star, Wheel, is_pattern_free

from conftest import expensive


# ----------------------------------------------------------------------
# census generation, cross-validated
# ----------------------------------------------------------------------

def brute_force_census(n):
    """Independent route: filter every edge set of size 3n-6 on n labeled
    vertices through degree/connectivity/planarity, dedup by code."""
    all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    target = 3 * n - 6
    codes = set()
    for subset in combinations(all_edges, target):
        deg = [0] * n
        for u, v in subset:
            deg[u] += 1
            deg[v] += 1
        if min(deg) < 3:
            continue
        g = Graph(n, subset)
        if not g.is_connected():
            continue
        if embed_planar(g) is None:
            continue
        codes.add(canonical_code(g).decode("ascii"))
    return codes


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_census_matches_brute_force(n):
    census = enumerate_triangulations(n)
    assert set(census.codes) == brute_force_census(n)


def test_census_counts_frozen():
    # counts confirmed against the brute-force filter at small n and by
    # order-randomized regeneration above it
    expected = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249, 12: 7595}
    for n, count in expected.items():
        assert len(enumerate_triangulations(n)) == count


@expensive
def test_census_counts_frozen_13_14():
    assert len(enumerate_triangulations(13, expensive=True)) == 49566
    assert len(enumerate_triangulations(14, expensive=True)) == 339722


@pytest.mark.parametrize("n", [8, 9])
def test_census_order_independent(n):
    """Regenerating from shuffled, relabeled parents gives the same classes."""
    rng = random.Random(100 + n)
    parents = list(enumerate_triangulations(n - 1).graphs())
    rng.shuffle(parents)
    codes = set()
    for p in parents:
        perm = list(range(p.n))
        rng.shuffle(perm)
        p = p.relabel(perm)
        emb = embed_planar(p)
        for child in _vertex_splits(p, emb.rotation):
            codes.add(canonical_code(child).decode("ascii"))
    assert codes == set(enumerate_triangulations(n).codes)


@expensive
def test_census_order_independent_10():
    rng = random.Random(110)
    parents = list(enumerate_triangulations(9).graphs())
    rng.shuffle(parents)
    codes = set()
    for p in parents:
        perm = list(range(p.n))
        rng.shuffle(perm)
        p = p.relabel(perm)
        emb = embed_planar(p)
        for child in _vertex_splits(p, emb.rotation):
            codes.add(canonical_code(child).decode("ascii"))
    assert codes == set(enumerate_triangulations(10).codes)


def test_census_soundness_sampling():
    rng = random.Random(7)
    for n in range(4, 13):
        census = enumerate_triangulations(n)
        graphs = list(census.graphs())
        sample = graphs if len(graphs) <= 1000 else rng.sample(graphs, 1000)
        for g in sample:
            assert is_triangulation(g)
        # codes are pairwise distinct classes by construction
        assert len(set(census.codes)) == len(census)


def test_census_range_and_gating():
    with pytest.raises(ValueError):
        enumerate_triangulations(3)
    with pytest.raises(ValueError):
        enumerate_triangulations(15)
    with pytest.raises(ExpensiveCensusError):
        enumerate_triangulations(13, cache_root="/tmp/planarturan-nocache")


# ----------------------------------------------------------------------
# exact values
# ----------------------------------------------------------------------

def test_exact_values_small(oracle_value):
    assert oracle_value(5, Fan(2, 3)).lo == 7
    assert oracle_value(7, Wheel(5)).lo == 14
    assert oracle_value(9, Wheel(4)).lo == 19
    assert oracle_value(7, Star(5)).lo == 13


def test_exact_matches_brute_force_subset_scan():
    """Dual route for the deletion search itself: the bounded hitting-set
    tree must agree with a plain scan over all edge subsets."""
    def brute(n, spec):
        best = -1
        for g in enumerate_triangulations(n).graphs():
            edges = g.edges()
            for d in range(0, g.edge_count + 1):
                if 3 * n - 6 - d <= best:
                    break
                found = False
                for subset in combinations(range(len(edges)), d):
                    h = Graph(n, [edges[k] for k in range(len(edges))
                                  if k not in subset])
                    if is_pattern_free(h, spec):
                        found = True
                        break
                if found:
                    best = max(best, 3 * n - 6 - d)
                    break
        return best

    for n, spec in [(5, Wheel(4)), (6, Wheel(4)), (6, Star(3)), (6, Fan(2, 3))]:
        assert exact_planar_turan(n, spec).lo == brute(n, spec)


def test_exact_nondecreasing_in_n(oracle_value):
    for spec in (Wheel(4), Wheel(5), Star(4), Fan(2, 3)):
        values = [oracle_value(n, spec).lo for n in range(5, 9)]
        assert values == sorted(values)


def test_budget_interval():
    v = exact_planar_turan(8, Star(3), budget=SearchBudget(max_deletions=2))
    assert not v.exact
    assert v.provenance == "oracle:budget-exhausted"
    assert v.hi == 3 * 8 - 6 - 3  # depth 3 was never attempted
    assert v.lo <= 8 <= v.hi


# ----------------------------------------------------------------------
# witness search and degree profiles
# ----------------------------------------------------------------------

def test_search_witness_basics():
    g = search_witness(8, 15, free_of=[Fan(2, 3)])
    assert g is not None and g.n == 8 and g.edge_count == 15
    assert is_pattern_free(g, Fan(2, 3))
    # impossible: 12 edges with max degree 2 on 6 vertices
    assert search_witness(6, 12, free_of=[Star(3)]) is None


def test_search_witness_profile_and_predicate():
    g = search_witness(11, 25, free_of=[Wheel(4)], profile={3: 5},
                       profile_exact=False)
    assert g is not None
    assert g.degree_profile()[3] == 5
    assert is_pattern_free(g, Wheel(4))


def test_search_witness_unconstrained_11_25():
    # any wheel-free graph at (11, 25) carries at least five 3-vertices
    g = search_witness(11, 25, free_of=[Wheel(4)])
    assert g is not None and g.degree_profile().get(3, 0) >= 5


def test_search_witness_exhaustive_none_is_deterministic():
    assert search_witness(7, 15, max_degree=4) is None  # would be 4-regular-ish


def test_degree_profile_existence():
    assert exists_planar_with_degree_profile(7, {4: 7}) is None
    assert exists_planar_with_degree_profile(11, {4: 1, 5: 10}) is None
    w = exists_planar_with_degree_profile(12, {5: 12})
    assert w is not None and is_isomorphic(w, icosahedron())
    with pytest.raises(ValueError):
        exists_planar_with_degree_profile(7, {3: 7})  # odd degree sum
    with pytest.raises(ValueError):
        exists_planar_with_degree_profile(7, {4: 5})  # profile incomplete


@expensive
def test_degree_profile_nonexistence_13_14():
    assert exists_planar_with_degree_profile(13, {4: 1, 5: 12}, expensive=True) is None
    assert exists_planar_with_degree_profile(14, {5: 14}, expensive=True) is None


def test_time_budget_raises_or_reports():
    with pytest.raises(BudgetExhausted):
        search_witness(10, 19, free_of=[Star(3)],
                       budget=SearchBudget(seconds=0.001))


def test_oracle_sandwiched_by_witness_and_formula(oracle_value):
    """Witness edge count <= oracle exact value <= formula upper bound."""
    from planarturan.constructions import (
        star6_extremal_witness,
        wheel4_extremal_witness,
    )
    from planarturan.formulas import formula_value

    for n in range(5, 12):
        got = oracle_value(n, Wheel(4)).lo
        assert wheel4_extremal_witness(n).edge_count <= got
        assert got <= formula_value(Wheel(4), n).hi
    for n in (7, 8, 9):
        got = oracle_value(n, Star(6)).lo
        assert star6_extremal_witness(n).edge_count <= got
        assert got <= formula_value(Star(6), n).hi


def test_parallel_generation_matches_serial(tmp_path):
    serial = enumerate_triangulations(9)
    parallel = enumerate_triangulations(9, cache_root=tmp_path, processes=2)
    assert serial.codes == parallel.codes
