"""Duality, restriction, deletion, contraction, and general minors."""

from __future__ import annotations

from .core import Matroid, SubsetLike, as_mask
from .subsets import GroundSubset, iter_bits


def dual(matroid: Matroid) -> Matroid:
    """Matroid on the same ground set whose bases are the basis complements."""
    full = (1 << matroid.n) - 1
    return Matroid._from_masks(
        matroid.n, [full ^ b for b in matroid.basis_masks], matroid.labels
    )


def restriction(matroid: Matroid, subset: SubsetLike) -> Matroid:
    """Restrict to a subset, re-indexed densely to 0..|S|-1, labels carried over."""
    s = as_mask(subset, matroid.n)
    keep = list(iter_bits(s))
    pos = {orig: i for i, orig in enumerate(keep)}
    r = matroid._rank_of_mask(s) if keep else 0
    new_masks = set()
    for b in matroid.basis_masks:
        inter = b & s
        if inter.bit_count() == r:
            m = 0
            for e in iter_bits(inter):
                m |= 1 << pos[e]
            new_masks.add(m)
    labels = None
    if matroid.labels is not None:
        labels = tuple(matroid.labels[i] for i in keep)
    return Matroid._from_masks(len(keep), sorted(new_masks), labels)


def deletion(matroid: Matroid, subset: SubsetLike) -> Matroid:
    s = as_mask(subset, matroid.n)
    full = (1 << matroid.n) - 1
    return restriction(matroid, GroundSubset(full & ~s, matroid.n))


def contraction(matroid: Matroid, subset: SubsetLike) -> Matroid:
    """Contraction as the dual of deletion in the dual."""
    s = as_mask(subset, matroid.n)
    return dual(deletion(dual(matroid), GroundSubset(s, matroid.n)))


def minor(matroid: Matroid, contract: SubsetLike, delete: SubsetLike) -> Matroid:
    """The minor (M / X) \\ Y with both X and Y given in M's own indices."""
    x = as_mask(contract, matroid.n)
    y = as_mask(delete, matroid.n)
    if x & y:
        raise ValueError("contract and delete sets overlap")
    contracted = contraction(matroid, GroundSubset(x, matroid.n))
    remaining = [i for i in range(matroid.n) if not x >> i & 1]
    pos = {orig: i for i, orig in enumerate(remaining)}
    y_new = GroundSubset.of((pos[e] for e in iter_bits(y)), contracted.n)
    return deletion(contracted, y_new)
