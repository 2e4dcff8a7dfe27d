import pytest

from bentcayley import (
    cayley_graph,
    degree,
    is_bent,
    is_extended_cayley_equivalent,
    sigma,
    srg_params,
    tau,
)


def test_sigma_examples():
    assert sigma(1).table.tolist() == [0, 1, 0, 0]
    # i = 5 is "11" in base 4: two 1-digits, even parity
    assert sigma(2).table[5] == 0
    # hand-counted digits for a few more points
    assert sigma(2).table[1] == 1    # digits (1, 0): one 1-digit
    assert sigma(2).table[4] == 1    # digits (0, 1): one 1-digit
    assert sigma(2).table[6] == 1    # 6 = "12" base 4, digits (2, 1): one 1-digit
    assert sigma(2).table[9] == 1    # 9 = "21" base 4, digits (1, 2): one 1-digit


def test_sigma_digit_parity_oracle():
    for m in (1, 2, 3):
        s = sigma(m)
        for i in range(1 << (2 * m)):
            digits = [(i >> (2 * d)) & 3 for d in range(m)]
            assert s.table[i] == (digits.count(1) & 1)


def test_tau_base_case():
    assert tau(1).table.tolist() == [0, 0, 1, 0]


def test_tau_prefix_blocks():
    size = 4  # 4^(m-1) for m=2
    t2, t1, s1 = tau(2), tau(1), sigma(1)
    assert t2.table[0 * size:1 * size].tolist() == t1.table.tolist()
    assert t2.table[1 * size:2 * size].tolist() == s1.table.tolist()
    assert t2.table[2 * size:3 * size].tolist() == (s1.table ^ 1).tolist()
    assert t2.table[3 * size:4 * size].tolist() == t1.table.tolist()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_sequences_bent(m):
    assert is_bent(sigma(m))
    assert is_bent(tau(m))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_sequence_srg_parameters(m):
    n = 2 * m
    expect = (4 ** m, (1 << (n - 1)) - (1 << (m - 1)),
              (1 << (n - 2)) - (1 << (m - 1)), (1 << (n - 2)) - (1 << (m - 1)))
    for f in (sigma(m), tau(m)):
        p = srg_params(cayley_graph(f))
        assert p is not None and p.as_tuple() == expect


def test_tau_degrees():
    assert degree(tau(3)) == 3
    assert degree(tau(4)) == 4
    assert degree(sigma(3)) == 2
    assert degree(sigma(4)) == 2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sigma_tau_equivalent_small(m):
    assert is_extended_cayley_equivalent(sigma(m), tau(m))
