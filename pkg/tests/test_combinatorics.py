import pytest

from idempart import (
    Partition,
    TypeVector,
    binomial,
    enumerate_partitions,
    enumerate_type_vectors,
    exact_div,
    factorial,
    p_pentagonal,
    partition_to_type_vector,
)

# ---------------------------------------------------------------- oracles


def factorial_by_multiplication(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def pascal_table(nmax):
    table = [[1]]
    for n in range(1, nmax + 1):
        prev = table[-1]
        row = [1]
        for k in range(1, n):
            row.append(prev[k - 1] + prev[k])
        row.append(1)
        table.append(row)
    return table


def partitions_ascending_dfs(n):
    """Independent enumeration: nondecreasing part tuples by DFS."""
    out = []

    def rec(remaining, minpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for p in range(minpart, remaining + 1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(n, 1, [])
    return out


def partition_count_dp(n):
    """Independent count: classic unbounded-part dynamic program."""
    dp = [0] * (n + 1)
    dp[0] = 1
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            dp[total] += dp[total - part]
    return dp[n]


# ------------------------------------------------------------- factorial


def test_factorial_small_values():
    assert factorial(0) == 1
    assert factorial(5) == 120 == factorial_by_multiplication(5)


def test_factorial_exceeds_machine_range():
    expected = factorial_by_multiplication(21)
    assert expected == 51090942171709440000
    assert factorial(21) == expected


def test_factorial_recurrence():
    for n in range(1, 41):
        assert factorial(n) == n * factorial(n - 1)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


# -------------------------------------------------------------- binomial


def test_binomial_against_pascal_table():
    table = pascal_table(40)
    for n in range(41):
        for k in range(n + 1):
            assert binomial(n, k) == table[n][k]
    assert binomial(5, 2) == 10


def test_binomial_zero_extension():
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(-2, 0) == 0
    for n in (0, 1, 7, 40):
        assert binomial(n, 0) == 1


def test_binomial_pascal_recurrence():
    for n in range(1, 41):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


# ------------------------------------------------------------- exact_div


def test_exact_div():
    assert exact_div(18, 6) == 3
    assert exact_div(factorial(30), factorial(29)) == 30
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)


# ------------------------------------------------------------ partitions


def test_partition_validation():
    assert Partition([3, 1, 1]).parts == (3, 1, 1)
    assert Partition([]).n == 0
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([3, 0])


def test_enumerate_partitions_trivial():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]


def test_enumerate_partitions_of_four():
    got = [p.parts for p in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_partitions_matches_dfs_oracle():
    for n in range(11):
        got = [p.parts for p in enumerate_partitions(n)]
        expected = {tuple(reversed(t)) for t in partitions_ascending_dfs(n)}
        assert set(got) == expected
        assert len(got) == len(expected) == partition_count_dp(n)


def test_enumerate_partitions_reverse_lex_order():
    for n in range(1, 13):
        got = [p.parts for p in enumerate_partitions(n)]
        assert got == sorted(got, reverse=True)


def test_partition_count_n10():
    assert sum(1 for _ in enumerate_partitions(10)) == 42


# ---------------------------------------------------------- type vectors


def test_type_vector_validation():
    tv = TypeVector(3, (1, 1, 0))
    assert tv.weight == 3
    assert tv.g(1) == 1 and tv.g(2) == 1 and tv.g(3) == 0
    with pytest.raises(ValueError):
        TypeVector(3, (1, 1))
    with pytest.raises(ValueError):
        TypeVector(3, (4, 0, 0))
    with pytest.raises(ValueError):
        tv.g(4)


def test_partition_to_type_vector_examples():
    assert partition_to_type_vector(Partition([2, 1])).counts == (1, 1, 0)
    assert partition_to_type_vector(Partition([1, 1, 1])).counts == (3, 0, 0)
    assert partition_to_type_vector(Partition([3])).counts == (0, 0, 1)
    with pytest.raises(ValueError):
        partition_to_type_vector(Partition([]))


def test_enumerate_type_vectors_small():
    assert [tv.counts for tv in enumerate_type_vectors(1)] == [(1,)]
    assert {tv.counts for tv in enumerate_type_vectors(2)} == {(2, 0), (0, 1)}
    assert sum(1 for _ in enumerate_type_vectors(4)) == 5


def test_enumerate_type_vectors_bijective_image():
    for n in range(1, 26):
        parts = list(enumerate_partitions(n))
        tvs = list(enumerate_type_vectors(n))
        assert len(tvs) == len(parts) == len(set(tvs))
        assert all(tv.weight == n for tv in tvs)
        assert tvs == [partition_to_type_vector(p) for p in parts]


def test_enumerate_type_vectors_rejects_zero():
    with pytest.raises(ValueError):
        list(enumerate_type_vectors(0))


# ------------------------------------------------------------ pentagonal


def test_p_pentagonal_base_cases():
    assert p_pentagonal(0) == 1
    assert p_pentagonal(5) == 7
    assert p_pentagonal(10) == 42


def test_p_pentagonal_matches_enumeration():
    for n in range(26):
        assert p_pentagonal(n) == sum(1 for _ in enumerate_partitions(n))


def test_p_pentagonal_matches_dp_count():
    for n in range(0, 80, 7):
        assert p_pentagonal(n) == partition_count_dp(n)


def test_p_pentagonal_rejects_negative():
    with pytest.raises(ValueError):
        p_pentagonal(-3)
