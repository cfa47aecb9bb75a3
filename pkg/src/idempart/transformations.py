"""Self-maps of [n] = {1, ..., n} and their idempotents.

An idempotent self-map fixes every point of its image and retracts
every other point onto the image, so each one is determined by an
(image, retraction) pair.  That decomposition drives the constructive
enumerator; a filtered scan of all n^n maps serves as the brute-force
cross-check at small n.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .combinatorics import TypeVector

__all__ = [
    "FiniteMap",
    "Idempotent",
    "assemble_idempotent",
    "compose",
    "decompose_idempotent",
    "enumerate_idempotents",
    "enumerate_idempotents_bruteforce",
    "is_idempotent",
    "type_vector_of",
]

BRUTE_FORCE_MAP_LIMIT = 7  # 7^7 maps is the largest tolerable n^n scan


class FiniteMap:
    """A total map [n] -> [n], stored as a 1-based value tuple."""

    __slots__ = ("n", "values")

    def __init__(self, values: Iterable[int]):
        values = tuple(values)
        n = len(values)
        if n == 0:
            raise ValueError("domain must be nonempty")
        for v in values:
            if not 1 <= v <= n:
                raise ValueError(f"value {v} outside [1..{n}]")
        self.n = n
        self.values = values

    @classmethod
    def identity(cls, n: int) -> "FiniteMap":
        return cls(range(1, n + 1))

    @classmethod
    def constant(cls, n: int, target: int) -> "FiniteMap":
        return cls((target,) * n)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} outside [1..{self.n}]")
        return self.values[x - 1]

    def __eq__(self, other: object) -> bool:
        # an Idempotent is equal to the plain map with the same values
        return isinstance(other, FiniteMap) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.values})"


def compose(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """Pointwise composition x -> f(g(x))."""
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    fv = f.values
    return FiniteMap(fv[v - 1] for v in g.values)


def is_idempotent(f: FiniteMap) -> bool:
    """True iff f(f(x)) = f(x) for every x, i.e. every value is fixed."""
    vals = f.values
    return all(vals[v - 1] == v for v in vals)


class Idempotent(FiniteMap):
    """An idempotent self-map with eagerly cached image and fibers.

    image is the sorted tuple of fixed points (equivalently the set of
    attained values); fibers maps each image point x to the sorted
    tuple of its preimage, which always contains x.  Construction
    validates the idempotent law and raises ValueError otherwise.
    """

    __slots__ = ("image", "fibers")

    def __init__(self, values: Iterable[int]):
        super().__init__(values)
        vals = self.values
        for v in vals:
            if vals[v - 1] != v:
                raise ValueError(f"map {vals} is not idempotent")
        buckets: dict[int, list[int]] = {}
        for x, v in enumerate(vals, start=1):
            buckets.setdefault(v, []).append(x)
        self.image = tuple(sorted(buckets))
        self.fibers = {x: tuple(buckets[x]) for x in self.image}

    def fiber(self, x: int) -> tuple[int, ...]:
        """Preimage of the image point x, sorted ascending."""
        try:
            return self.fibers[x]
        except KeyError:
            raise ValueError(f"{x} is not an image point of {self.values}") from None


def decompose_idempotent(f: Idempotent) -> tuple[tuple[int, ...], dict[int, int]]:
    """Split f into its image and the retraction of the complement."""
    image_set = set(f.image)
    retraction = {x: f.values[x - 1] for x in range(1, f.n + 1) if x not in image_set}
    return f.image, retraction


def assemble_idempotent(
    n: int, image: Iterable[int], retraction: Mapping[int, int]
) -> Idempotent:
    """Rebuild the idempotent fixing `image` and retracting the rest.

    The retraction must be total on [1..n] minus the image, with all
    values inside the image.
    """
    image_set = set(image)
    if not image_set:
        raise ValueError("image must be nonempty")
    if not all(1 <= x <= n for x in image_set):
        raise ValueError(f"image {sorted(image_set)} not inside [1..{n}]")
    overlap = image_set & retraction.keys()
    if overlap:
        raise ValueError(f"retraction domain overlaps image at {sorted(overlap)}")
    values = [0] * n
    for x in image_set:
        values[x - 1] = x
    for x, target in retraction.items():
        if target not in image_set:
            raise ValueError(f"retraction value {target} outside image")
        values[x - 1] = target
    if 0 in values:
        missing = [x + 1 for x, v in enumerate(values) if v == 0]
        raise ValueError(f"retraction not total: {missing} unassigned")
    return Idempotent(values)


def enumerate_idempotents_bruteforce(n: int) -> Iterator[Idempotent]:
    """Filter all n^n self-maps for idempotency.  Oracle use only."""
    if not 1 <= n <= BRUTE_FORCE_MAP_LIMIT:
        raise ValueError(
            f"n must lie in 1..{BRUTE_FORCE_MAP_LIMIT} for the n^n scan, got {n}"
        )
    for vals in itertools.product(range(1, n + 1), repeat=n):
        if all(vals[v - 1] == v for v in vals):
            yield Idempotent(vals)


def _nonempty_subsets_lex(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of [1..n] as sorted tuples, lexicographic order."""
    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for x in range(start, n + 1):
            cur = prefix + (x,)
            yield cur
            yield from rec(cur, x + 1)

    yield from rec((), 1)


def enumerate_idempotents(n: int) -> Iterator[Idempotent]:
    """Generate every idempotent on [n] exactly once, constructively.

    Iterates image sets in lexicographic order and, for each, all
    retractions of the complement in mixed-radix order.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    base = list(range(1, n + 1))
    for image in _nonempty_subsets_lex(n):
        image_set = set(image)
        complement = [x for x in base if x not in image_set]
        for assignment in itertools.product(image, repeat=len(complement)):
            values = list(base)
            for x, target in zip(complement, assignment):
                values[x - 1] = target
            yield Idempotent(values)


def type_vector_of(f: Idempotent) -> TypeVector:
    """Fiber-size multiplicities of f: g(k) = #image points with |fiber| = k."""
    n = f.n
    counts = [0] * n
    for x in f.image:
        counts[len(f.fibers[x]) - 1] += 1
    return TypeVector._unchecked(n, tuple(counts), n)
