"""Set representations of the two-element monoid {e, b} with b*b = b.

A representation on [n] is a monoid homomorphism into the self-maps of
[n]; e must act as the identity, so the whole representation is pinned
down by the action of b, which must be idempotent.  Conjugating a
representation by a permutation conjugates that action.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .symmetric import Permutation, conjugate_idempotent, conjugate_map
from .transformations import FiniteMap, Idempotent, is_idempotent

__all__ = [
    "BWord",
    "Representation",
    "apply_rep",
    "check_representation",
    "conjugate_rep",
    "reduce_word",
    "rep_from_idempotent",
]


class BWord(enum.Enum):
    """Element of the free idempotent monoid on one generator."""

    IDENT = "e"
    GEN = "b"

    def __mul__(self, other: "BWord") -> "BWord":
        if not isinstance(other, BWord):
            return NotImplemented
        if self is BWord.IDENT:
            return other
        return BWord.GEN


def reduce_word(letters: int) -> BWord:
    """Class of the word x^letters under x = x^2: empty -> e, else b."""
    if letters < 0:
        raise ValueError(f"letter count must be nonnegative, got {letters}")
    return BWord.IDENT if letters == 0 else BWord.GEN


@dataclass(frozen=True)
class Representation:
    """A representation, stored as the action of the generator b.

    The identity's action is never stored; it is always id on [n].
    action_of_b is kept as a plain FiniteMap so that candidate actions
    can be checked for validity with check_representation.
    """

    action_of_b: FiniteMap

    @property
    def n(self) -> int:
        return self.action_of_b.n


def rep_from_idempotent(f: Idempotent) -> Representation:
    """The unique representation whose generator acts as f."""
    if not isinstance(f, Idempotent):
        f = Idempotent(f.values)  # raises if not idempotent
    return Representation(f)


def apply_rep(rho: Representation, w: BWord, x: int) -> int:
    """Act on the point x by the image of the word w."""
    if not 1 <= x <= rho.n:
        raise ValueError(f"point {x} outside [1..{rho.n}]")
    if w is BWord.IDENT:
        return x
    return rho.action_of_b(x)


def conjugate_rep(rho: Representation, sigma: Permutation) -> Representation:
    """Conjugate representation: the generator acts as sigma.f.sigma^-1."""
    if rho.n != sigma.n:
        raise ValueError(f"size mismatch: {rho.n} vs {sigma.n}")
    action = rho.action_of_b
    if isinstance(action, Idempotent):
        return Representation(conjugate_idempotent(action, sigma))
    return Representation(conjugate_map(action, sigma))


def check_representation(rho: Representation) -> bool:
    """True iff the stored generator action is idempotent."""
    return is_idempotent(rho.action_of_b)
