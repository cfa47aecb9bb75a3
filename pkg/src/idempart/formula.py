"""Closed-form counting of idempotents and the partition number.

Averaging stabilizer sizes over all idempotents on [n] counts their
conjugation orbits, which is p(n).  Grouping the sum by fiber-size type
turns it into an explicit product formula: for every weight-n type
vector g, the stabilizer order factor and the number of idempotents of
that type multiply to one summand, and the summands total n! * p(n).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor

from .combinatorics import (
    Partition,
    TypeVector,
    _descending_parts,
    binomial,
    enumerate_type_vectors,
    exact_div,
    factorial,
    p_pentagonal,
    partition_to_type_vector,
)
from .stabilizer import stabilizer_order_formula

__all__ = [
    "count_idempotents_of_type",
    "cumulative_identity",
    "p_via_formula",
    "summand",
    "summand_direct",
    "total_idempotents",
]


def count_idempotents_of_type(n: int, g: TypeVector) -> int:
    """Number of idempotents on [n] whose fiber-size type is g.

    Walking fiber sizes in ascending order, first choose the g(k) roots
    among the points not yet consumed, then fill each of their fibers
    with k-1 further points.  Degenerate binomials zero-extend, so
    malformed inputs count 0 instead of raising.
    """
    if g.weight != n:
        raise ValueError(f"type vector has weight {g.weight}, expected {n}")
    total = 1
    consumed = 0
    for k, gk in g.nonzero():
        remaining = n - consumed
        total *= binomial(remaining, gk)
        for v in range(1, gk + 1):
            total *= binomial(remaining - gk - (v - 1) * (k - 1), k - 1)
        consumed += k * gk
    return total


def summand(n: int, g: TypeVector) -> int:
    """One term of the n! * p(n) sum: stabilizer order times type count."""
    return stabilizer_order_formula(g) * count_idempotents_of_type(n, g)


def summand_direct(n: int, g: TypeVector) -> int:
    """Literal transcription of the fused product form of the summand.

    Kept deliberately separate from summand() and asserted equal in the
    tests, guarding against transcription slips in the nested product.
    """
    total = 1
    for k in range(1, n + 1):
        gk = g.g(k)
        prefix = sum(s * g.g(s) for s in range(1, k))
        total *= (
            factorial(k - 1) ** gk
            * factorial(gk)
            * binomial(n - prefix, gk)
        )
        for v in range(1, gk + 1):
            total *= binomial(n - prefix - gk - (v - 1) * (k - 1), k - 1)
    return total


def _summand_sum_chunk(n: int, parts_chunk: list[tuple[int, ...]]) -> int:
    # worker for the parallel type-vector sum
    return sum(
        summand(n, partition_to_type_vector(Partition._unchecked(parts)))
        for parts in parts_chunk
    )


def _type_sum(n: int, jobs: int | None = None) -> int:
    """Sum of summand(n, g) over all weight-n type vectors."""
    if jobs is not None and jobs > 1:
        all_parts = list(_descending_parts(n))
        chunks = [all_parts[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_summand_sum_chunk, itertools.repeat(n), chunks))
    return sum(summand(n, g) for g in enumerate_type_vectors(n))


def p_via_formula(n: int, *, jobs: int | None = None) -> int:
    """p(n) as the exact quotient of the type-vector sum by n!.

    The division must come out exact; a remainder signals a bug.  With
    jobs set the sum is sharded across processes, with identical result.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return exact_div(_type_sum(n, jobs), factorial(n))


def total_idempotents(n: int) -> int:
    """Number of idempotents on [n], summed over all weight-n types."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(count_idempotents_of_type(n, g) for g in enumerate_type_vectors(n))


def cumulative_identity(m: int) -> tuple[int, int]:
    """Both sides of the cumulative identity up to m, computed independently.

    Left side: sum of n! * p(n) for n = 1..m with p from the pentagonal
    recurrence.  Right side: the raw summands accumulated over all
    weight-n type vectors for n = 1..m.  The two must agree.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    lhs = sum(factorial(n) * p_pentagonal(n) for n in range(1, m + 1))
    rhs = sum(
        summand(n, g) for n in range(1, m + 1) for g in enumerate_type_vectors(n)
    )
    return lhs, rhs
