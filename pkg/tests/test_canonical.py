import random

import pytest

from bentcayley import (
    DenseGraph,
    canonical_form,
    cayley_graph,
    cayley_translations,
    graph6_decode,
    is_extended_cayley_equivalent,
    is_isomorphic,
)


def random_graph(rng, v, p=0.4):
    edges = [(i, j) for i in range(v) for j in range(i + 1, v) if rng.random() < p]
    return DenseGraph.from_edges(v, edges)


def test_permutation_invariance_random():
    rng = random.Random(101)
    for trial in range(10):
        g = random_graph(rng, rng.choice([8, 12, 20]))
        base = canonical_form(g).g6
        for _ in range(10):
            perm = list(range(g.v))
            rng.shuffle(perm)
            assert canonical_form(g.permuted(perm)).g6 == base


def test_certifying_permutation_soundness():
    rng = random.Random(55)
    for _ in range(10):
        g = random_graph(rng, 14)
        c = canonical_form(g)
        assert g.permuted(c.perm) == c.graph
        assert graph6_decode(c.g6) == c.graph


def test_invariance_on_symmetric_cayley_graphs(f41, dim6_reps):
    rng = random.Random(9)
    for f in (f41, dim6_reps["f6_1"], dim6_reps["f6_2"]):
        g = cayley_graph(f)
        base = canonical_form(g).g6
        for _ in range(4):
            perm = list(range(g.v))
            rng.shuffle(perm)
            assert canonical_form(g.permuted(perm)).g6 == base


def test_seeded_automorphisms_do_not_change_result(f41):
    g = cayley_graph(f41)
    seeds = cayley_translations(4)
    assert canonical_form(g).g6 == canonical_form(g, seed_automorphisms=seeds).g6
    with pytest.raises(ValueError):
        bad = [tuple(range(1, 16)) + (0,)]  # not an automorphism of g
        canonical_form(g, seed_automorphisms=bad)


def test_is_isomorphic_examples(f21):
    g = cayley_graph(f21)
    k4 = DenseGraph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert is_isomorphic(g, g)
    assert not is_isomorphic(g, k4)


def test_agrees_with_vf2():
    nx = pytest.importorskip("networkx")

    def to_nx(g):
        out = nx.Graph()
        out.add_nodes_from(range(g.v))
        for i in range(g.v):
            r = g.rows[i]
            while r:
                j = (r & -r).bit_length() - 1
                r &= r - 1
                if j > i:
                    out.add_edge(i, j)
        return out

    rng = random.Random(202)
    for trial in range(60):
        v = rng.choice([8, 10, 12])
        g1 = random_graph(rng, v, rng.choice([0.25, 0.5, 0.75]))
        if rng.random() < 0.5:
            perm = list(range(v))
            rng.shuffle(perm)
            g2 = g1.permuted(perm)
            if rng.random() < 0.5:
                i, j = rng.randrange(v), rng.randrange(v)
                if i != j:
                    rows = list(g2.rows)
                    rows[i] ^= 1 << j
                    rows[j] ^= 1 << i
                    g2 = DenseGraph(v, rows)
        else:
            g2 = random_graph(rng, v, 0.5)
        assert is_isomorphic(g1, g2) == nx.is_isomorphic(to_nx(g1), to_nx(g2))


def test_cross_et_isomorphism_dim6(dim6_reps):
    # the two quadratic-parameter class-0 graphs coincide across ET classes
    f61, f62 = dim6_reps["f6_1"], dim6_reps["f6_2"]
    g1 = canonical_form(cayley_graph(f61)).g6
    g2 = canonical_form(cayley_graph(f62)).g6
    assert g1 == g2
    assert is_extended_cayley_equivalent(f61, f62)


def test_extended_equivalence_with_complement(f41):
    from bentcayley import BooleanFunction
    comp = BooleanFunction(4, f41.table ^ 1)
    assert is_extended_cayley_equivalent(f41, comp)
