from fractions import Fraction

import pytest

from matroidkit import (
    ExactMatrix,
    Matroid,
    complete_graph,
    components,
    direct_sum,
    graph_from_edges,
    graphic_matroid,
    linear_matroid,
    matroid_from_circuits,
    matroid_from_nonbases,
    specific_matroid,
    uniform_matroid,
)
from matroidkit.construct import FANO_NONBASES


def indices(subsets):
    return {s.indices() for s in subsets}


def test_uniform_matroid(u24):
    assert indices(u24.bases) == {(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)}
    assert indices(uniform_matroid(0, 3).bases) == {()}
    assert indices(uniform_matroid(3, 3).bases) == {(0, 1, 2)}
    with pytest.raises(ValueError):
        uniform_matroid(4, 3)


def test_linear_matroid_rational():
    a = ExactMatrix([[0, 4, -1, 6], [0, Fraction(2, 3), 7, 1]])
    m = linear_matroid(a)
    # columns 1 and 3 are parallel, column 0 is a loop (2x2 minor determinants)
    assert indices(m.bases) == {(1, 2), (2, 3)}
    assert m.loops().indices() == (0,)
    assert m.labels == ("(0, 0)", "(4, 2/3)", "(-1, 7)", "(6, 1)")


def test_linear_matroid_identity_gf2():
    eye = ExactMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], field=2)
    assert linear_matroid(eye) == uniform_matroid(3, 3)


def test_linear_matroid_zero():
    z = ExactMatrix([[0, 0]])
    m = linear_matroid(z)
    assert m.rank == 0 and indices(m.bases) == {()}
    assert m.loops().indices() == (0, 1)


def test_linear_matroid_rref_invariant():
    a = ExactMatrix([[1, 2, 0, 1], [2, 4, 1, 0], [0, 1, 1, 1]], field=3)
    assert linear_matroid(a) == linear_matroid(a.rref())


def test_graphic_matroid_counts(m5, m4):
    assert len(m5.bases) == 125  # Cayley: 5^3 spanning trees
    assert len(m4.bases) == 16
    assert m5.labels[0] == "{0, 1}"


def test_graphic_matroid_cayley():
    for n in (2, 3, 4, 5, 6):
        assert len(graphic_matroid(complete_graph(n)).bases) == n ** (n - 2)


def test_graphic_matroid_tree():
    path = graph_from_edges(3, [(0, 1), (1, 2)])
    m = graphic_matroid(path)
    assert len(m.bases) == 1 and m.coloops().indices() == (0, 1)


def test_matroid_from_circuits(running_example):
    m1 = matroid_from_circuits(4, [[1, 2], [3]], 2)
    assert m1 == running_example
    assert matroid_from_circuits(3, []) == uniform_matroid(3, 3)
    all_triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    assert matroid_from_circuits(4, all_triples) == uniform_matroid(2, 4)


def test_matroid_from_circuits_reduces_to_minimal(running_example):
    # {1,2,3} contains the circuit {3} and must be discarded
    assert matroid_from_circuits(4, [[1, 2], [3], [1, 2, 3]], 2) == running_example


def test_matroid_from_circuits_errors():
    with pytest.raises(ValueError):
        matroid_from_circuits(4, [[1, 2], [3]], target_rank=3)
    with pytest.raises(ValueError):
        matroid_from_circuits(4, [[]])


def test_matroid_from_nonbases():
    fano = matroid_from_nonbases(7, FANO_NONBASES, 3)
    assert len(fano.bases) == 28
    assert matroid_from_nonbases(4, [], 2) == uniform_matroid(2, 4)
    with pytest.raises(ValueError):
        matroid_from_nonbases(4, [[0, 1, 2]], 2)
    with pytest.raises(ValueError):
        matroid_from_nonbases(2, [[0], [1]], 1)


def test_specific_matroids(fano, vamos):
    assert len(fano.bases) == 28 and fano.rank == 3
    assert (vamos.n, len(vamos.bases), vamos.rank, sum(vamos.fvector())) == (8, 65, 4, 79)
    with pytest.raises(ValueError):
        specific_matroid("petersen")


def test_direct_sum(u24):
    k3 = graphic_matroid(complete_graph(3))
    s = direct_sum(u24, k3)
    assert s.n == 7 and s.rank == 4
    assert len(s.bases) == len(u24.bases) * len(k3.bases)
    assert s.labels[0] == "(0, 0)" and s.labels[4] == "({0, 1}, 1)"


def test_direct_sum_identity(running_example):
    s = direct_sum(running_example, uniform_matroid(0, 0))
    assert s == running_example  # equality ignores labels


def test_direct_sum_rank_and_circuits(running_example, u24):
    s = direct_sum(u24, running_example)
    assert s.rank == u24.rank + running_example.rank
    shifted = {
        tuple(e + u24.n for e in c.indices()) for c in running_example.circuits()
    }
    expected = {c.indices() for c in u24.circuits()} | shifted
    assert {c.indices() for c in s.circuits()} == expected


def test_components_roundtrip(u24):
    s = direct_sum(u24, graphic_matroid(complete_graph(3)))
    parts = components(s)
    assert len(parts) == 2
    assert direct_sum(parts[0], parts[1]) == s


def test_components_connected(u24):
    assert len(components(u24)) == 1


def test_components_free_matroid():
    parts = components(uniform_matroid(3, 3))
    assert len(parts) == 3
    assert all(p.n == 1 and p.rank == 1 for p in parts)


def test_components_rank_additivity(running_example):
    parts = components(running_example)
    assert sum(p.rank for p in parts) == running_example.rank


def test_components_fold_random_sums():
    from functools import reduce
    from random import Random

    rng = Random(41)
    connected_pool = [
        uniform_matroid(1, 1),
        uniform_matroid(1, 2),
        uniform_matroid(2, 3),
        uniform_matroid(2, 4),
        graphic_matroid(complete_graph(3)),
    ]
    for _ in range(25):
        pieces = [rng.choice(connected_pool) for _ in range(rng.randint(2, 3))]
        total = reduce(direct_sum, pieces)
        parts = components(total)
        assert len(parts) == len(pieces)
        assert reduce(direct_sum, parts) == total
