import random

import networkx as nx
import pytest

from planarturan.canon import canonical_code
from planarturan.constructions import (
    apex_serpentine,
    double_serpentine,
    icosahedron,
    pentagonal_stack,
    serpentine,
    small_wheel_free,
    two_apex_cycle,
)
from planarturan.formulas import (
    FormulaRangeError,
    NoFormulaError,
    formula_value,
    prop13_classify,
    reference_bounds,
    verify_verdict,
)
from planarturan.graphs import (
    Graph,
    complete_graph,
    copies,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
    star_graph,
)
from planarturan.patterns import ConeGraph, ConePath, Explicit, Fan, Star, Wheel
from planarturan.values import TuranValue


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def test_wheel_table():
    assert formula_value(Wheel(5), 7).lo == 14
    assert formula_value(Wheel(4), 12) == TuranValue.exactly(30, provenance="wheel-theorem")
    assert formula_value(Wheel(4), 5).lo == 8
    assert formula_value(Wheel(4), 9).lo == 19
    assert formula_value(Wheel(6), 8).lo == 18
    assert formula_value(Wheel(7), 20).lo == 54
    with pytest.raises(FormulaRangeError):
        formula_value(Wheel(4), 4)
    with pytest.raises(NoFormulaError):
        formula_value(Wheel(3), 10)


def test_star_table():
    assert formula_value(Star(6), 11).lo == 26
    assert formula_value(Star(6), 14).lo == 34
    assert formula_value(Star(6), 13).lo == 31
    assert formula_value(Star(5), 20).lo == 40
    assert formula_value(Star(5), 7).lo == 13
    assert formula_value(Star(3), 9).lo == 9
    assert formula_value(Star(4), 11).lo == 16
    assert formula_value(Star(7), 30).lo == 84
    assert formula_value(Star(6), 40).lo == 100
    with pytest.raises(NoFormulaError):
        formula_value(Star(2), 10)


def test_fan2_interval_and_sharpness():
    v = formula_value(Fan(2, 3), 16)
    assert v.exact and v.lo == 34 and v.sharp
    v = formula_value(Fan(2, 3), 5)
    assert v.exact and v.lo == 7
    v = formula_value(Fan(2, 3), 9)
    assert (v.lo, v.hi, v.sharp) == (15, 17, False)
    v = formula_value(Fan(2, 3), 24)
    assert v.exact and v.lo == 53


def test_fan3_values():
    assert formula_value(Fan(3, 3), 11).lo == 26
    assert formula_value(Fan(3, 3), 12).lo == 30
    v = formula_value(Fan(3, 3), 18)
    assert (v.lo, v.hi) == (45, 46)  # strict bound lands on an integer
    v = formula_value(Fan(3, 3), 16)
    assert (v.lo, v.hi) == (40, 41)  # 17*16/6-4 = 41.33..


def test_cone_bound():
    assert formula_value(ConePath(4), 10).hi == 22
    forest = disjoint_union(path_graph(2), path_graph(2))
    assert formula_value(Fan(2, 3), 10).hi <= formula_value(ConeGraph(forest), 10).hi
    with pytest.raises(NoFormulaError):
        formula_value(ConePath(7), 10)
    with pytest.raises(FormulaRangeError):
        formula_value(ConePath(4), 4)


def test_no_formula_for_arbitrary_patterns():
    with pytest.raises(NoFormulaError):
        formula_value(Explicit(complete_graph(3)), 8)
    with pytest.raises(NoFormulaError):
        formula_value(Fan(4, 3), 30)


def test_all_formula_outputs_bounded_by_3n_minus_6():
    specs = [Wheel(4), Wheel(5), Wheel(9), Star(3), Star(5), Star(6),
             Fan(2, 3), Fan(3, 3), ConePath(4), ConePath(6)]
    for spec in specs:
        for n in range(4, 40):
            try:
                v = formula_value(spec, n)
            except (FormulaRangeError, NoFormulaError):
                continue
            assert 0 <= v.lo <= v.hi <= 3 * n - 6


# ----------------------------------------------------------------------
# formula vs oracle on the searchable window
# ----------------------------------------------------------------------

def test_star_formula_matches_oracle_to_9(oracle_value):
    for t in (3, 4, 5, 6):
        for n in range(t + 1, 10):
            assert oracle_value(n, Star(t)).lo == formula_value(Star(t), n).lo, (t, n)


def test_fan_formulas_match_oracle_small(oracle_value):
    for n in range(5, 9):
        got = oracle_value(n, Fan(2, 3))
        v = formula_value(Fan(2, 3), n)
        assert v.lo <= got.lo <= v.hi
    assert oracle_value(8, Fan(2, 3)).lo == 15  # sharp at 8 | n
    for n in (7, 8):
        assert oracle_value(n, Fan(3, 3)).lo == formula_value(Fan(3, 3), n).lo


def test_reference_bounds_never_below_oracle(oracle_value):
    # C_4 and C_6 are cycles: compare against the generic-pattern oracle
    for n in (5, 6, 7):
        got = oracle_value(n, Explicit(cycle_graph(4)))
        assert got.lo <= reference_bounds("C4", n).hi
    for n in (6, 7):
        got = oracle_value(n, Explicit(cycle_graph(6)))
        assert got.lo <= reference_bounds("C6", n).hi


# ----------------------------------------------------------------------
# reference table
# ----------------------------------------------------------------------

def test_reference_bounds_table():
    assert reference_bounds("C4", 30).hi == 60
    assert reference_bounds("C6", 30).hi == 72
    assert reference_bounds("P9", 20).hi == 46
    assert reference_bounds("C5", 11).hi == 19
    assert reference_bounds("Theta4", 32).sharp
    assert not reference_bounds("Theta4", 30).sharp
    assert reference_bounds("Theta5", 50).sharp
    with pytest.raises(FormulaRangeError):
        reference_bounds("C5", 10)
    with pytest.raises(NoFormulaError):
        reference_bounds("C7", 10)


# ----------------------------------------------------------------------
# sufficient-condition classifier
# ----------------------------------------------------------------------

def _nx_graph(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return Graph(g.number_of_nodes(), list(g.edges()))


def corpus():
    """Fifty pairwise non-isomorphic planar test graphs."""
    rng = random.Random(1234)
    graphs = [
        complete_graph(4),
        complete_graph(5).delete_edge(0, 1),          # K_5 minus an edge
        join(empty_graph(2), cycle_graph(4)),         # octahedron
        icosahedron(),
        _nx_graph(nx.hypercube_graph(3)),             # cube
        _nx_graph(nx.dodecahedral_graph()),
        join(complete_graph(1), cycle_graph(4)),      # wheels
        join(complete_graph(1), cycle_graph(5)),
        join(complete_graph(1), cycle_graph(6)),
        join(complete_graph(1), cycle_graph(7)),
        Graph(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (0, 5), (0, 6),
                  (4, 5), (4, 6), (5, 6)]),           # Moser spindle
        join(empty_graph(2), cycle_graph(5)),         # bipyramids
        join(empty_graph(2), cycle_graph(6)),
        join(empty_graph(2), cycle_graph(7)),
        pentagonal_stack(3),
        double_serpentine(10),
        double_serpentine(13),
        serpentine(9),
        apex_serpentine(9),
        small_wheel_free(6),
        cycle_graph(6),
        path_graph(7),
        star_graph(5),
        copies(3, cycle_graph(3)),
        _nx_graph(nx.circular_ladder_graph(5)),       # pentagonal prism
        _nx_graph(nx.circular_ladder_graph(6)),
    ]
    # antiprisms: 4-regular with many 4-vertices
    for k in (4, 5, 6):
        ap = nx.circulant_graph(2 * k, [1, 2])
        graphs.append(_nx_graph(ap))
    # random stacked (Apollonian) triangulations: contain K_4
    for seed in range(8):
        r = random.Random(500 + seed)
        g = complete_graph(4)
        emb_faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        for _ in range(r.randint(2, 6)):
            f = r.choice(emb_faces)
            g = g.add_vertex(list(f))
            w = g.n - 1
            emb_faces.remove(f)
            emb_faces += [(f[0], f[1], w), (f[0], f[2], w), (f[1], f[2], w)]
        graphs.append(g)
    # random planar graphs: triangulation minus random edges
    base = [double_serpentine(11), two_apex_cycle(11), pentagonal_stack(2)]
    for seed in range(13):
        r = random.Random(900 + seed)
        g = base[seed % 3]
        for _ in range(r.randint(1, 5)):
            if g.edge_count == 0:
                break
            u, v = g.edges()[r.randrange(g.edge_count)]
            g = g.delete_edge(u, v)
        graphs.append(g)
    assert len(graphs) == 50
    assert len({canonical_code(g) for g in graphs}) == 50
    return graphs


def test_corpus_verdicts_verify():
    for h in corpus():
        for n in (h.n, h.n + 2, h.n + 5):
            verdict = prop13_classify(h, n)
            if not verdict.covered:
                continue
            if n < verdict.min_n:
                continue
            assert verify_verdict(verdict, h, n), (h, n, verdict)


def test_specific_verdicts():
    ico = icosahedron()
    v = prop13_classify(ico, 12)
    assert v.condition == "d" and v.witness == "TwoApexCycle"
    assert verify_verdict(v, ico, 14)
    octa = join(empty_graph(2), cycle_graph(4))
    v = prop13_classify(octa, 10)
    assert v.condition == "g" and v.witness == "ApexSerpentine"
    assert verify_verdict(v, octa, 10)
    assert not prop13_classify(cycle_graph(6), 8).covered
    v = prop13_classify(complete_graph(5).delete_edge(0, 1), 7)
    assert v.condition == "contains-K4"
    assert verify_verdict(v, complete_graph(5).delete_edge(0, 1), 7)
    # two non-adjacent 6-vertices: the apex-serpentine subcase of (c)
    bip6 = join(empty_graph(2), cycle_graph(6))
    v = prop13_classify(bip6, 8)
    assert v.condition == "c" and v.witness == "ApexSerpentine"
    # engineered double-serpentine subcase of (c)
    h = join(empty_graph(2), path_graph(4))
    h = h.add_vertex([0]).add_vertex([0]).add_vertex([2]).add_vertex([5])
    v = prop13_classify(h, h.n)
    assert v.condition == "c" and v.witness == "DoubleSerpentine"
    assert verify_verdict(v, h, 12)
    # a seven-vertex graph with Delta=7 would be K_{1,7}-ish: condition (b)
    v = prop13_classify(star_graph(7), 8)
    assert v.condition == "b" and v.witness == "DoubleSerpentine"
    assert verify_verdict(v, star_graph(7), 8)


def test_classifier_rejects_nonplanar():
    with pytest.raises(ValueError):
        prop13_classify(complete_graph(5), 7)
