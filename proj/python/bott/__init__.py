"""Integral cohomology rings of Bott manifolds."""

from ._bott import (
    BottMatrix,
    BottRing,
    DomainError,
    GuardExceeded,
    InputError,
    InvariantViolation,
    OverflowError,
    aut_order,
    betti_profile,
    brute_iso_search,
    brute_square_zero,
    canonical_model,
    classify,
    enumerate_automorphisms,
    is_isomorphic,
    is_q_trivial,
    partition_invariant,
    partitions_of,
    square_zero_primitives,
)


def hirzebruch(a: int) -> BottMatrix:
    """Matrix of the Hirzebruch surface Sigma_a."""
    return BottMatrix(2, [(1, 2, a)])


__all__ = [name for name in dir() if not name.startswith("_")]
