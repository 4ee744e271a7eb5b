from fractions import Fraction
from random import Random

from matroidkit import (
    ExactMatrix,
    Matroid,
    complete_graph,
    dual,
    graphic_matroid,
    has_minor,
    isomorphism,
    linear_matroid,
    minor,
    uniform_matroid,
)
from matroidkit.search import apply_permutation
from oracles import brute_isomorphic, random_linear_matroid


def rational_column_matroid():
    return linear_matroid(ExactMatrix([[0, 4, -1, 6], [0, Fraction(2, 3), 7, 1]]))


def verify_iso(source, target, witness):
    mapped = {apply_permutation(b, witness.perm) for b in source.basis_masks}
    assert mapped == set(target.basis_masks)


def test_isomorphism_with_witness(running_example):
    ma = rational_column_matroid()
    w = isomorphism(ma, running_example)
    assert w is not None
    verify_iso(ma, running_example, w)


def test_isomorphism_identity_fast_path(running_example):
    w = isomorphism(running_example, running_example)
    assert w.perm == (0, 1, 2, 3)


def test_isomorphism_rejects_mismatch(running_example, u24):
    assert isomorphism(running_example, u24) is None


def test_isomorphism_symmetric(running_example):
    ma = rational_column_matroid()
    w = isomorphism(ma, running_example)
    back = isomorphism(running_example, ma)
    verify_iso(running_example, ma, back)
    inverse = tuple(w.perm.index(i) for i in range(len(w.perm)))
    mapped = {apply_permutation(b, inverse) for b in running_example.basis_masks}
    assert mapped == set(ma.basis_masks)


def test_isomorphism_preserved_under_dual(running_example):
    ma = rational_column_matroid()
    assert isomorphism(dual(ma), dual(running_example)) is not None


def test_isomorphism_matches_brute_force():
    rng = Random(11)
    pairs = []
    for _ in range(25):
        a = random_linear_matroid(rng, max_n=6, fields=(2,))
        b = random_linear_matroid(rng, max_n=6, fields=(2,))
        pairs.append((a, b))
        # also a shuffled copy of a, which must come out isomorphic
        perm = list(range(a.n))
        rng.shuffle(perm)
        shuffled = Matroid(
            a.n, [[perm[e] for e in basis.indices()] for basis in a.bases]
        )
        pairs.append((a, shuffled))
    for a, b in pairs:
        got = isomorphism(a, b)
        assert (got is not None) == brute_isomorphic(a, b)
        if got is not None:
            verify_iso(a, b, got)


def test_has_minor_excluded(m5, fano, u24):
    assert has_minor(m5, u24) is None
    assert has_minor(m5, fano) is None
    assert has_minor(m5, dual(fano)) is None


def test_has_minor_found(m5, m4):
    w = has_minor(m5, m4)
    assert w is not None
    assert len(w.contract) == m5.rank - m4.rank
    assert len(w.delete) == m5.n - len(w.contract) - m4.n
    reduced = minor(m5, w.contract, w.delete)
    verify_iso(reduced, m4, w.iso)


def test_has_minor_trivial_cases(u24):
    w = has_minor(u24, u24)
    assert w is not None and len(w.contract) == 0 and len(w.delete) == 0
    # a bigger pattern can never be a minor
    assert has_minor(u24, uniform_matroid(2, 5)) is None
    assert has_minor(u24, uniform_matroid(3, 3)) is None


def test_has_minor_in_graphic(m4):
    triangle = graphic_matroid(complete_graph(3))
    w = has_minor(m4, triangle)
    assert w is not None
    reduced = minor(m4, w.contract, w.delete)
    verify_iso(reduced, triangle, w.iso)


def test_has_minor_deterministic(m5, m4):
    assert has_minor(m5, m4) == has_minor(m5, m4)
