import itertools
import random

import pytest

from idempart import (
    FiberClass,
    GUElement,
    Idempotent,
    Permutation,
    eta_classes,
    gamma_hom,
    gu_enumerate,
    gu_identity,
    gu_inverse,
    gu_multiply,
    gu_order,
    stabilizer_bruteforce,
    stabilizer_order_formula,
    type_vector_of,
)
from idempart.combinatorics import TypeVector
from idempart.symmetric import _conjugated


def block_idempotent(k, m):
    """Idempotent on [k*m] with m fibers of size k."""
    values = []
    for block in range(m):
        values.extend([block * k + 1] * k)
    return Idempotent(values)


def single_class(f):
    classes = eta_classes(f)
    assert len(classes) == 1
    return classes[0]


# ------------------------------------------------------------ eta classes


def test_eta_classes_identity():
    classes = eta_classes(Idempotent.identity(3))
    assert classes == [FiberClass(1, (1, 2, 3), ())]


def test_eta_classes_constant():
    classes = eta_classes(Idempotent((1, 1, 1)))
    assert classes == [FiberClass(3, (1,), (2, 3))]


def test_eta_classes_mixed():
    classes = eta_classes(Idempotent((1, 2, 1, 4, 4)))
    assert classes == [
        FiberClass(1, (2,), ()),
        FiberClass(2, (1, 4), (3,)),
    ]


def test_eta_class_sizes_match_type_vector(idems_by_n):
    for n in range(1, 6):
        for f in idems_by_n[n]:
            g = type_vector_of(f)
            by_size = {c.fiber_size: len(c.members) for c in eta_classes(f)}
            for k in range(1, n + 1):
                assert by_size.get(k, 0) == g.g(k)
            sizes = [c.fiber_size for c in eta_classes(f)]
            assert sizes == sorted(sizes)


# -------------------------------------------------------------- the group


def test_gu_identity_and_enumerate_counts():
    # k = 1 blocks act on the empty set, only the outer part varies
    cls = single_class(Idempotent.identity(3))
    assert gu_order(cls) == 6
    assert sum(1 for _ in gu_enumerate(cls)) == 6

    cls = single_class(Idempotent((1, 1, 1)))  # k = 3, |U| = 1
    assert gu_order(cls) == 2
    assert sum(1 for _ in gu_enumerate(cls)) == 2

    cls = single_class(block_idempotent(2, 2))  # k = 2, |U| = 2
    assert gu_order(cls) == 2
    assert sum(1 for _ in gu_enumerate(cls)) == 2


def test_gu_enumerate_guard():
    cls = single_class(Idempotent.identity(9))
    with pytest.raises(ValueError):
        list(gu_enumerate(cls))


def test_gu_identity_is_neutral():
    rng = random.Random(91)
    for f in (block_idempotent(3, 2), block_idempotent(2, 3), Idempotent((1, 1, 1))):
        cls = single_class(f)
        ident = gu_identity(cls)
        elems = list(gu_enumerate(cls))
        for z in rng.sample(elems, min(10, len(elems))):
            assert gu_multiply(ident, z) == z
            assert gu_multiply(z, ident) == z


def test_gu_outer_swap_squares_to_identity():
    cls = single_class(block_idempotent(2, 2))
    trivial = Permutation.identity(1)
    z = GUElement(cls, (trivial, trivial), Permutation((2, 1)))
    assert gu_multiply(z, z) == gu_identity(cls)


def test_gu_multiply_rejects_class_mismatch():
    z1 = gu_identity(single_class(Idempotent((1, 1, 1))))
    z2 = gu_identity(single_class(Idempotent.identity(3)))
    with pytest.raises(ValueError):
        gu_multiply(z1, z2)


def test_gu_inverse_examples():
    # identity inverts to itself
    cls = single_class(block_idempotent(3, 2))
    assert gu_inverse(gu_identity(cls)) == gu_identity(cls)

    # pure outer 3-cycle inverts to the reverse cycle
    cls = single_class(Idempotent.identity(3))
    empty = Permutation.identity(0)
    z = GUElement(cls, (empty,) * 3, Permutation((2, 3, 1)))
    assert gu_inverse(z).outer == Permutation((3, 1, 2))

    # pure block element inverts each block in place
    cls = single_class(Idempotent((1, 1, 1, 1)))  # k = 4, reference has 3 points
    cycle = Permutation((2, 3, 1))
    z = GUElement(cls, (cycle,), Permutation.identity(1))
    inv = gu_inverse(z)
    assert inv.outer == Permutation.identity(1)
    assert inv.blocks == (cycle.inverse(),)


def test_gu_inverse_law_everywhere():
    for f in (block_idempotent(3, 2), block_idempotent(2, 3), block_idempotent(4, 1)):
        cls = single_class(f)
        ident = gu_identity(cls)
        for z in gu_enumerate(cls):
            assert gu_multiply(z, gu_inverse(z)) == ident
            assert gu_multiply(gu_inverse(z), z) == ident


def test_gu_associativity_small_shapes():
    for k, m in ((1, 3), (2, 2), (3, 1), (3, 2), (2, 3)):
        cls = single_class(block_idempotent(k, m))
        elems = list(gu_enumerate(cls))
        if len(elems) <= 12:
            triples = itertools.product(elems, repeat=3)
        else:
            rng = random.Random(k * 100 + m)
            triples = (
                (rng.choice(elems), rng.choice(elems), rng.choice(elems))
                for _ in range(500)
            )
        for a, b, c in triples:
            assert gu_multiply(gu_multiply(a, b), c) == gu_multiply(a, gu_multiply(b, c))


def test_gu_element_validation():
    cls = single_class(block_idempotent(2, 2))
    trivial = Permutation.identity(1)
    with pytest.raises(ValueError):
        GUElement(cls, (trivial,), Permutation.identity(2))  # too few blocks
    with pytest.raises(ValueError):
        GUElement(cls, (Permutation.identity(2),) * 2, Permutation.identity(2))
    with pytest.raises(ValueError):
        GUElement(cls, (trivial, trivial), Permutation.identity(3))


def test_gu_block_of_accessor():
    cls = single_class(block_idempotent(3, 2))
    z = gu_identity(cls)
    assert z.block_of(cls.members[0]) == Permutation.identity(2)


# ------------------------------------------------------------- gamma hom


def test_gamma_of_identity_is_identity():
    f = Idempotent((1, 1, 3, 3, 5))
    for cls in eta_classes(f):
        assert gamma_hom(Permutation.identity(5), f, cls) == gu_identity(cls)


def test_gamma_constant_map_example():
    f = Idempotent((1, 1, 1))
    cls = single_class(f)
    z = gamma_hom(Permutation((1, 3, 2)), f, cls)
    assert z.outer == Permutation.identity(1)
    assert z.blocks == (Permutation((2, 1)),)


def test_gamma_rejects_non_stabilizer():
    f = Idempotent((1, 1, 1))
    with pytest.raises(ValueError):
        gamma_hom(Permutation((2, 3, 1)), f, single_class(f))


def test_gamma_rejects_foreign_class():
    f = Idempotent((1, 1, 1))
    other = single_class(Idempotent.identity(3))
    with pytest.raises(ValueError):
        gamma_hom(Permutation.identity(3), f, other)


def test_gamma_is_homomorphism_small(idems_by_n, perms_by_n):
    for n in (3, 4):
        for f in idems_by_n[n]:
            stab = [s for s in perms_by_n[n] if _conjugated(f.values, s) == f.values]
            for cls in eta_classes(f):
                images = {s: gamma_hom(s, f, cls) for s in stab}
                for s in stab:
                    assert images[s.inverse()] == gu_inverse(images[s])
                    for t in stab:
                        assert gu_multiply(images[t], images[s]) == images[t * s]
                # surjectivity: the stabilizer covers the whole class group
                assert len(set(images.values())) == gu_order(cls)


# ------------------------------------------------------- stabilizer order


def test_stabilizer_order_formula_examples():
    assert stabilizer_order_formula(TypeVector(4, (4, 0, 0, 0))) == 24
    assert stabilizer_order_formula(TypeVector(3, (0, 0, 1))) == 2
    assert stabilizer_order_formula(TypeVector(3, (1, 1, 0))) == 1


def test_stabilizer_order_matches_bruteforce(idems_by_n):
    for n in range(1, 6):
        for f in idems_by_n[n]:
            expected = len(stabilizer_bruteforce(f))
            assert stabilizer_order_formula(type_vector_of(f)) == expected


def test_class_group_orders_multiply_to_stabilizer_order(idems_by_n):
    for n in range(1, 6):
        for f in idems_by_n[n]:
            product = 1
            for cls in eta_classes(f):
                product *= gu_order(cls)
            assert product == len(stabilizer_bruteforce(f))
