"""Cross-check harness wiring every identity to its independent oracle.

Each check pits a closed-form computation against exhaustive
enumeration (or two independent computations against each other) and
reports a named pass/fail result.  The CLI `verify` subcommand runs
this harness; the test suite exercises the same identities.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .combinatorics import (
    enumerate_partitions,
    enumerate_type_vectors,
    factorial,
    p_pentagonal,
)
from .formula import (
    _type_sum,
    count_idempotents_of_type,
    cumulative_identity,
    summand,
    summand_direct,
    total_idempotents,
)
from .representations import conjugate_rep, rep_from_idempotent
from .stabilizer import (
    eta_classes,
    gamma_hom,
    gu_enumerate,
    gu_identity,
    gu_inverse,
    gu_multiply,
    gu_order,
    stabilizer_order_formula,
)
from .symmetric import (
    Permutation,
    _conjugated,
    brute_force_cap,
    conjugate_idempotent,
    conjugator,
    enumerate_permutations,
    same_orbit,
)
from .transformations import (
    BRUTE_FORCE_MAP_LIMIT,
    Idempotent,
    enumerate_idempotents,
    enumerate_idempotents_bruteforce,
    type_vector_of,
)

__all__ = ["CheckResult", "run_verification"]

RNG_SEED = 20260810

# shapes (fiber size, class size) whose groups the axiom check covers
GU_CHECK_MAX_ORDER = 10_000
GU_EXHAUSTIVE_ORDER = 500
GU_RANDOM_TRIPLES = 1000


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _result(name: str, ok: bool, detail_fail: str) -> CheckResult:
    return CheckResult(name, ok, "" if ok else detail_fail)


def _orbit_stats(values_list, perms):
    """Per-idempotent stabilizer count and canonical orbit key, one sweep."""
    stab_counts = []
    orbit_keys = []
    for values in values_list:
        stab = 0
        best = values
        for sigma in perms:
            conj = _conjugated(values, sigma)
            if conj == values:
                stab += 1
            if conj < best:
                best = conj
        stab_counts.append(stab)
        orbit_keys.append(best)
    return stab_counts, orbit_keys


def _block_idempotent(k: int, m: int) -> Idempotent:
    """Idempotent on [k*m] with m fibers of size k, for synthetic classes."""
    values = []
    for block in range(m):
        root = block * k + 1
        values.extend([root] * k)
    return Idempotent(values)


def _gu_shapes(max_order: int) -> list[tuple[int, int]]:
    shapes = []
    for k in range(1, 9):
        for m in range(1, 9):
            if factorial(k - 1) ** m * factorial(m) <= max_order:
                shapes.append((k, m))
    return shapes


def _check_gu_axioms(rng: random.Random) -> Iterator[CheckResult]:
    for k, m in _gu_shapes(GU_CHECK_MAX_ORDER):
        cls = eta_classes(_block_idempotent(k, m))[0]
        elems = list(gu_enumerate(cls))
        order = gu_order(cls)
        name = f"gu-axioms k={k} |U|={m}"
        if len(elems) != order:
            yield CheckResult(name, False, f"enumerated {len(elems)} != {order}")
            continue
        ident = gu_identity(cls)
        ok = all(
            gu_multiply(ident, z) == z
            and gu_multiply(z, ident) == z
            and gu_multiply(z, gu_inverse(z)) == ident
            and gu_multiply(gu_inverse(z), z) == ident
            for z in elems
        )
        if not ok:
            yield CheckResult(name, False, "identity/inverse law failed")
            continue
        if order <= GU_EXHAUSTIVE_ORDER:
            # all triples via the Cayley table: (ab)c row must equal a(bc) row
            index = {z: i for i, z in enumerate(elems)}
            table = [[index[gu_multiply(a, b)] for b in elems] for a in elems]
            ok = True
            for a in range(order):
                row_a = table[a]
                for b in range(order):
                    if table[row_a[b]] != [row_a[x] for x in table[b]]:
                        ok = False
                        break
                if not ok:
                    break
            yield _result(name, ok, "associativity failed (exhaustive)")
        else:
            ok = all(
                gu_multiply(gu_multiply(a, b), c) == gu_multiply(a, gu_multiply(b, c))
                for a, b, c in (
                    (rng.choice(elems), rng.choice(elems), rng.choice(elems))
                    for _ in range(GU_RANDOM_TRIPLES)
                )
            )
            yield _result(name, ok, "associativity failed (random triples)")


def _gu_order_product(f: Idempotent) -> int:
    """Stabilizer size as the product of class-group orders."""
    total = 1
    for cls in eta_classes(f):
        total *= gu_order(cls)
    return total


def _check_exhaustive_level(n: int) -> Iterator[CheckResult]:
    idems = list(enumerate_idempotents(n))
    perms = list(enumerate_permutations(n))
    pn = p_pentagonal(n)

    if n <= BRUTE_FORCE_MAP_LIMIT:
        brute = set(enumerate_idempotents_bruteforce(n))
        yield _result(
            f"idempotent-enumeration n={n}",
            set(idems) == brute and len(idems) == len(brute),
            f"constructive {len(idems)} vs brute {len(brute)}",
        )

    values_list = [f.values for f in idems]
    stab_counts, orbit_keys = _orbit_stats(values_list, perms)

    ok = all(
        stabilizer_order_formula(type_vector_of(f)) == stab
        for f, stab in zip(idems, stab_counts)
    )
    yield _result(f"stabilizer-order n={n}", ok, "formula != brute force")

    ok = all(
        _gu_order_product(f) == stab for f, stab in zip(idems, stab_counts)
    )
    yield _result(f"stabilizer-class-product n={n}", ok, "class orders != brute force")

    orbit_sizes = Counter(orbit_keys)
    yield _result(
        f"orbit-count n={n}",
        len(orbit_sizes) == pn,
        f"{len(orbit_sizes)} orbits != p({n}) = {pn}",
    )

    nfact = factorial(n)
    ok = all(
        orbit_sizes[key] * stab == nfact
        for key, stab in zip(orbit_keys, stab_counts)
    )
    yield _result(f"orbit-stabilizer-product n={n}", ok, "orbit * stab != n!")

    tally = Counter(type_vector_of(f) for f in idems)
    ok = all(
        tally.get(g, 0) == count_idempotents_of_type(n, g)
        for g in enumerate_type_vectors(n)
    ) and sum(tally.values()) == total_idempotents(n)
    yield _result(f"type-count n={n}", ok, "per-type count != tally")

    total_stab = sum(stab_counts)
    yield _result(
        f"burnside n={n}",
        total_stab == nfact * pn,
        f"sum |stab| = {total_stab} != n! * p(n) = {nfact * pn}",
    )

    if n <= 4:
        key_of = dict(zip(idems, orbit_keys))
        ok = all(
            same_orbit(f, g) == (key_of[f] == key_of[g])
            for f in idems
            for g in idems
        )
        yield _result(f"orbit-criterion n={n}", ok, "type test != orbit oracle")

        ok = all(
            conjugate_idempotent(f, conjugator(f, g)) == g
            for f in idems
            for g in idems
            if key_of[f] == key_of[g]
        )
        yield _result(f"conjugator n={n}", ok, "conjugator postcondition failed")

        ok = all(
            conjugate_rep(rep_from_idempotent(f), sigma).action_of_b
            == conjugate_idempotent(f, sigma)
            for f in idems
            for sigma in perms
        )
        yield _result(f"equivariance n={n}", ok, "representation path disagrees")

        ok = True
        for f in idems:
            stab = [s for s in perms if _conjugated(f.values, s) == f.values]
            for cls in eta_classes(f):
                ident = gu_identity(cls)
                if gamma_hom(Permutation.identity(n), f, cls) != ident:
                    ok = False
                images = {}
                for s in stab:
                    images[s] = gamma_hom(s, f, cls)
                for s in stab:
                    if gu_inverse(images[s]) != images[s.inverse()]:
                        ok = False
                for s in stab:
                    for t in stab:
                        if gu_multiply(images[t], images[s]) != images[t * s]:
                            ok = False
                if len(set(images.values())) != gu_order(cls):
                    ok = False
        yield _result(f"gamma-homomorphism n={n}", ok, "hom/surjectivity failed")


def _check_formula_level(n: int, jobs: int | None) -> Iterator[CheckResult]:
    pn = p_pentagonal(n)
    nfact = factorial(n)
    total = _type_sum(n, jobs)
    ok = total % nfact == 0 and total // nfact == pn
    yield _result(
        f"formula-pn n={n}",
        ok,
        f"sum {total} vs n! * p(n) = {nfact * pn}",
    )
    if n <= 25:
        count = sum(1 for _ in enumerate_partitions(n))
        yield _result(
            f"partition-count n={n}",
            count == pn,
            f"enumerated {count} != recurrence {pn}",
        )
    if n <= 12:
        ok = all(
            summand(n, g) == summand_direct(n, g) for g in enumerate_type_vectors(n)
        )
        yield _result(f"summand-decomposition n={n}", ok, "factored != literal")


def run_verification(
    nmax_exhaustive: int, nmax_formula: int, *, jobs: int | None = None
) -> Iterator[CheckResult]:
    """Run every cross-check up to the given depth caps.

    nmax_exhaustive bounds the enumeration-backed identities and must
    not exceed the brute-force cap; nmax_formula bounds the pure
    formula identities.  jobs shards the type-vector sums over worker
    processes without changing any result.
    """
    cap = brute_force_cap()
    if not 1 <= nmax_exhaustive <= cap:
        raise ValueError(
            f"exhaustive depth must lie in 1..{cap}, got {nmax_exhaustive}"
        )
    if nmax_formula < 1:
        raise ValueError(f"formula depth must be positive, got {nmax_formula}")
    rng = random.Random(RNG_SEED)
    for n in range(1, nmax_exhaustive + 1):
        yield from _check_exhaustive_level(n)
    yield from _check_gu_axioms(rng)
    for n in range(1, nmax_formula + 1):
        yield from _check_formula_level(n, jobs)
    m = min(nmax_formula, 12)
    lhs, rhs = cumulative_identity(m)
    yield _result(
        f"cumulative-identity m={m}",
        lhs == rhs,
        f"lhs {lhs} != rhs {rhs}",
    )
