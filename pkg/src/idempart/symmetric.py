"""The symmetric group acting on idempotents by conjugation.

A permutation s sends the idempotent f to s . f . s^-1.  Conjugation
preserves fiber sizes, so the induced partition of [n] is an orbit
invariant; it is in fact a complete invariant, and this module builds
the witnessing conjugator explicitly.  Exhaustive orbit and stabilizer
oracles are capped at small n (overridable via IDEMPART_BRUTE_CAP) and
back the closed-form counts elsewhere in the package.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Sequence

from .combinatorics import exact_div, factorial
from .transformations import (
    FiniteMap,
    Idempotent,
    enumerate_idempotents,
    type_vector_of,
)

__all__ = [
    "BRUTE_CAP_ENV",
    "Permutation",
    "brute_force_cap",
    "conjugate_idempotent",
    "conjugate_map",
    "conjugator",
    "count_orbits_burnside",
    "enumerate_permutations",
    "orbit_of",
    "same_orbit",
    "stabilizer_bruteforce",
]

PERMUTATION_ENUM_LIMIT = 8
BRUTE_CAP_ENV = "IDEMPART_BRUTE_CAP"


def brute_force_cap() -> int:
    """Largest n the exhaustive conjugation oracles accept (default 6)."""
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw is None:
        return 6
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{BRUTE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{BRUTE_CAP_ENV} must be positive, got {cap}")
    return cap


class Permutation:
    """A bijection of [n] with O(1) inverse lookup.

    forward[x-1] is the image of x; backward is the inverse table.
    The empty permutation (n = 0) is allowed, it is the identity of
    the symmetric group on the empty set.
    """

    __slots__ = ("n", "forward", "backward")

    def __init__(self, forward: Iterable[int]):
        forward = tuple(forward)
        n = len(forward)
        backward = [0] * n
        for x, v in enumerate(forward, start=1):
            if not 1 <= v <= n or backward[v - 1]:
                raise ValueError(f"{forward} is not a bijection of [1..{n}]")
            backward[v - 1] = x
        self.n = n
        self.forward = forward
        self.backward = tuple(backward)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> "Permutation":
        return cls(mapping[x] for x in range(1, n + 1))

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} outside [1..{self.n}]")
        return self.forward[x - 1]

    def apply_inverse(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} outside [1..{self.n}]")
        return self.backward[x - 1]

    def inverse(self) -> "Permutation":
        inv = object.__new__(Permutation)
        inv.n = self.n
        inv.forward = self.backward
        inv.backward = self.forward
        return inv

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x)), q applied first."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        fwd = self.forward
        return Permutation(fwd[v - 1] for v in other.forward)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.forward == other.forward

    def __hash__(self) -> int:
        return hash(self.forward)

    def __repr__(self) -> str:
        return f"Permutation({self.forward})"


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of [n], lexicographic on value tuples."""
    if n < 0 or n > PERMUTATION_ENUM_LIMIT:
        raise ValueError(
            f"n must lie in 0..{PERMUTATION_ENUM_LIMIT} for full enumeration, got {n}"
        )
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)


def _conjugated(values: tuple[int, ...], sigma: Permutation) -> tuple[int, ...]:
    # value tuple of sigma . f . sigma^-1 without building map objects
    fwd = sigma.forward
    bwd = sigma.backward
    return tuple(fwd[values[bwd[i] - 1] - 1] for i in range(len(values)))


def conjugate_map(f: FiniteMap, sigma: Permutation) -> FiniteMap:
    """The map x -> sigma(f(sigma^-1(x)))."""
    if f.n != sigma.n:
        raise ValueError(f"size mismatch: map on [{f.n}], permutation on [{sigma.n}]")
    return FiniteMap(_conjugated(f.values, sigma))


def conjugate_idempotent(f: Idempotent, sigma: Permutation) -> Idempotent:
    """Conjugate of an idempotent; the result is again idempotent."""
    if f.n != sigma.n:
        raise ValueError(f"size mismatch: map on [{f.n}], permutation on [{sigma.n}]")
    return Idempotent(_conjugated(f.values, sigma))


def orbit_of(f: Idempotent) -> set[Idempotent]:
    """All conjugates of f, by exhaustive conjugation.  Oracle use only."""
    cap = brute_force_cap()
    if f.n > cap:
        raise ValueError(f"n = {f.n} exceeds the brute-force cap {cap}")
    seen = {_conjugated(f.values, sigma) for sigma in enumerate_permutations(f.n)}
    return {Idempotent(vals) for vals in seen}


def same_orbit(f: Idempotent, g: Idempotent) -> bool:
    """True iff f and g are conjugate, i.e. share a fiber-size type."""
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    return type_vector_of(f) == type_vector_of(g)


def conjugator(f: Idempotent, g: Idempotent) -> Permutation:
    """A permutation s with s . f . s^-1 = g, for conjugate f and g.

    Image points of equal fiber size are matched in ascending order,
    and each fiber is carried onto its target root-first with the
    remaining elements matched in ascending order.  Any such choice
    works; this one is canonical so the output is deterministic.
    """
    if not same_orbit(f, g):
        raise ValueError("the idempotents are not conjugate")
    by_size_f: dict[int, list[int]] = {}
    by_size_g: dict[int, list[int]] = {}
    for x in f.image:
        by_size_f.setdefault(len(f.fibers[x]), []).append(x)
    for y in g.image:
        by_size_g.setdefault(len(g.fibers[y]), []).append(y)
    mapping: dict[int, int] = {}
    for size, xs in by_size_f.items():
        for x, y in zip(xs, by_size_g[size]):
            mapping[x] = y
            rest_src = [s for s in f.fibers[x] if s != x]
            rest_dst = [t for t in g.fibers[y] if t != y]
            for s, t in zip(rest_src, rest_dst):
                mapping[s] = t
    return Permutation.from_mapping(f.n, mapping)


def stabilizer_bruteforce(f: Idempotent) -> tuple[Permutation, ...]:
    """All permutations fixing f under conjugation, lexicographic order."""
    cap = brute_force_cap()
    if f.n > cap:
        raise ValueError(f"n = {f.n} exceeds the brute-force cap {cap}")
    vals = f.values
    return tuple(
        sigma
        for sigma in enumerate_permutations(f.n)
        if _conjugated(vals, sigma) == vals
    )


def _stab_count(values: tuple[int, ...], perms: Sequence[Permutation]) -> int:
    return sum(1 for sigma in perms if _conjugated(values, sigma) == values)


def _stab_sum_chunk(n: int, chunk: list[tuple[int, ...]]) -> int:
    # worker for the parallel Burnside sum
    perms = list(enumerate_permutations(n))
    return sum(_stab_count(values, perms) for values in chunk)


def count_orbits_burnside(n: int, *, jobs: int | None = None) -> int:
    """Number of conjugation orbits of idempotents on [n], exhaustively.

    Sums brute-force stabilizer sizes over all idempotents and divides
    by n!; the division must be exact, a remainder would mean a bug.
    With jobs set, the sum is sharded over worker processes; exact
    integer addition makes the result identical either way.
    """
    cap = brute_force_cap()
    if not 1 <= n <= cap:
        raise ValueError(f"n must lie in 1..{cap} for the exhaustive sum, got {n}")
    all_values = [f.values for f in enumerate_idempotents(n)]
    if jobs is not None and jobs > 1:
        chunks = [all_values[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            total = sum(pool.map(_stab_sum_chunk, itertools.repeat(n), chunks))
    else:
        perms = list(enumerate_permutations(n))
        total = sum(_stab_count(values, perms) for values in all_values)
    return exact_div(total, factorial(n))
