import random

import numpy as np
import pytest

from bentcayley import (
    Anf,
    BooleanFunction,
    DimensionMismatch,
    EgaElement,
    NotBent,
    NotBentWeight,
    anf_of,
    anf_text,
    apply_ega,
    degree,
    dual,
    dual_via_weight_classes,
    ega_compose,
    ega_identity,
    et_member,
    function_of,
    is_bent,
    parse_anf,
    support,
    walsh_hadamard,
    weight,
    weight_class,
)
from conftest import eval_monomials, random_function, random_invertible, wht_direct


def test_table_validation():
    with pytest.raises(ValueError):
        BooleanFunction(2, [0, 1, 0])
    with pytest.raises(ValueError):
        BooleanFunction(2, [0, 2, 0, 0])
    with pytest.raises(ValueError):
        BooleanFunction(0, [])


def test_anf_of_example_candidates():
    f = BooleanFunction(2, [1, 1, 1, 0])
    a = anf_of(f)
    # oracle: evaluate the claimed ANF x0*x1 + 1 at all four points
    claimed = {0b11, 0}
    for x in range(4):
        assert eval_monomials(claimed, x) == f.table[x]
    assert a.monomials == frozenset(claimed)
    assert anf_text(a) == "x0*x1 + 1"


def test_anf_zero_and_single_term():
    zero = BooleanFunction(2, [0, 0, 0, 0])
    assert anf_of(zero).monomials == frozenset()
    assert anf_text(anf_of(zero)) == "0"
    assert degree(zero) == 0
    prod = function_of(Anf(2, [0b11]))
    assert prod.table.tolist() == [0, 0, 0, 1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_anf_round_trip_exhaustive(n):
    for code in range(1 << (1 << n)):
        table = [(code >> i) & 1 for i in range(1 << n)]
        f = BooleanFunction(n, table)
        assert function_of(anf_of(f)) == f


def test_anf_round_trip_random():
    rng = random.Random(11)
    for n in (4, 6, 8):
        for _ in range(30):
            f = random_function(rng, n)
            a = anf_of(f)
            assert function_of(a) == f
            # and the other direction through the evaluation oracle
            for _ in range(10):
                x = rng.randrange(1 << n)
                assert eval_monomials(a.monomials, x) == f.table[x]


def test_degree_examples(f21):
    assert degree(f21) == 2
    affine = parse_anf("x0 + 1", 2)
    assert degree(affine) == 1


def test_walsh_hadamard_examples(f21):
    assert walsh_hadamard(f21).values.tolist() == [2, 2, 2, -2]
    zero = BooleanFunction(2, [0, 0, 0, 0])
    assert walsh_hadamard(zero).values.tolist() == [4, 0, 0, 0]
    f41 = parse_anf("x0*x1 + x2*x3", 4)
    w = walsh_hadamard(f41).values
    assert wht_direct(f41) == w.tolist()
    assert np.all(np.abs(w) == 4)


def test_walsh_hadamard_matches_direct_summation():
    rng = random.Random(5)
    for n in (2, 3, 4, 5):
        for _ in range(5):
            f = random_function(rng, n)
            assert walsh_hadamard(f).values.tolist() == wht_direct(f)


def test_parseval():
    rng = random.Random(17)
    for code in range(16):  # exhaustive n=2
        f = BooleanFunction(2, [(code >> i) & 1 for i in range(4)])
        w = walsh_hadamard(f).values
        assert int((w.astype(object) ** 2).sum()) == 4 ** 2
    for n in (4, 6, 8):
        for _ in range(20):
            f = random_function(rng, n)
            w = walsh_hadamard(f).values
            assert int((w ** 2).sum()) == 4 ** n


def test_is_bent(f21):
    assert is_bent(f21)
    assert not is_bent(parse_anf("x0", 2))
    assert not is_bent(parse_anf("x0*x1*x2", 3))  # odd dimension


def test_weight_support(f21, f41):
    assert weight(f21) == 1
    assert support(f21) == [3]
    assert weight(f41) == 6 == 2 ** 3 - 2 ** 1
    zero = BooleanFunction(2, [0, 0, 0, 0])
    assert weight(zero) == 0 and support(zero) == []


def test_weight_class(f21, f41):
    assert weight_class(f21) == 0
    comp = BooleanFunction(2, f21.table ^ 1)
    assert weight_class(comp) == 1
    assert weight_class(f41) == 0
    with pytest.raises(NotBentWeight):
        weight_class(parse_anf("x0", 2))  # weight 2 is not a bent weight


def test_weight_class_closed_form():
    # lm-style identity: weight = 2^m * wc + 2^(2m-1) - 2^(m-1)
    rng = random.Random(3)
    f41 = parse_anf("x0*x1 + x2*x3", 4)
    for _ in range(40):
        g = et_member(f41, rng.randrange(16), rng.randrange(16))
        m = g.n // 2
        assert weight(g) == (1 << m) * weight_class(g) + (1 << (g.n - 1)) - (1 << (m - 1))


def test_dual(f21):
    assert dual(f21) == f21
    f81 = parse_anf("x0*x1 + x2*x3 + x4*x5 + x6*x7", 8)
    assert dual(f81) == f81
    f62 = parse_anf("x0*x1*x2 + x0*x3 + x1*x4 + x2*x5", 6)
    assert dual(dual(f62)) == f62
    with pytest.raises(NotBent):
        dual(parse_anf("x0", 2))


def test_dual_via_weight_classes(f21, f41):
    assert dual_via_weight_classes(f21) == dual(f21)
    assert dual_via_weight_classes(f41) == dual(f41)
    rng = random.Random(23)
    f62 = parse_anf("x0*x1*x2 + x0*x3 + x1*x4 + x2*x5", 6)
    for f in (f62, et_member(f62, rng.randrange(64), rng.randrange(64))):
        assert dual_via_weight_classes(f) == dual(f)
    # at x = 0 the value is the weight class of f itself
    assert dual(f41).table[0] == weight_class(f41)


def test_apply_ega_identity_and_translate(f41):
    e = ega_identity(4)
    assert apply_ega(f41, e) == f41
    rng = random.Random(9)
    for _ in range(10):
        b = np.array([rng.randint(0, 1) for _ in range(4)], dtype=np.uint8)
        c = np.array([rng.randint(0, 1) for _ in range(4)], dtype=np.uint8)
        bi = int((b.astype(np.int64) << np.arange(4)).sum())
        e = EgaElement(np.eye(4, dtype=np.uint8), b, c, int(f41.table[bi]))
        assert apply_ega(f41, e) == et_member(f41, b, c)


def test_ega_compose_action_compatibility():
    # exhaustive over n=2 for the translation subgroup, random matrices on top
    rng = random.Random(31)
    for _ in range(30):
        n = 2
        f = random_function(rng, n)
        e1 = EgaElement(random_invertible(rng, n),
                        [rng.randint(0, 1) for _ in range(n)],
                        [rng.randint(0, 1) for _ in range(n)], rng.randint(0, 1))
        e2 = EgaElement(random_invertible(rng, n),
                        [rng.randint(0, 1) for _ in range(n)],
                        [rng.randint(0, 1) for _ in range(n)], rng.randint(0, 1))
        assert apply_ega(apply_ega(f, e1), e2) == apply_ega(f, ega_compose(e1, e2))


def test_ega_group_axioms():
    rng = random.Random(41)
    n = 3
    ident = ega_identity(n)
    for _ in range(20):
        e = EgaElement(random_invertible(rng, n),
                       [rng.randint(0, 1) for _ in range(n)],
                       [rng.randint(0, 1) for _ in range(n)], rng.randint(0, 1))
        e2 = EgaElement(random_invertible(rng, n),
                        [rng.randint(0, 1) for _ in range(n)],
                        [rng.randint(0, 1) for _ in range(n)], rng.randint(0, 1))
        e3 = EgaElement(random_invertible(rng, n),
                        [rng.randint(0, 1) for _ in range(n)],
                        [rng.randint(0, 1) for _ in range(n)], rng.randint(0, 1))
        composed = ega_compose(e, ident)
        assert np.array_equal(composed.A, e.A) and composed.delta == e.delta
        assert np.array_equal(composed.b, e.b) and np.array_equal(composed.c, e.c)
        left = ega_compose(ega_compose(e, e2), e3)
        right = ega_compose(e, ega_compose(e2, e3))
        assert np.array_equal(left.A, right.A) and np.array_equal(left.b, right.b)
        assert np.array_equal(left.c, right.c) and left.delta == right.delta


def test_ega_dimension_mismatch(f41):
    e = ega_identity(6)
    with pytest.raises(DimensionMismatch):
        apply_ega(f41, e)


def test_rm1_coset_distinctness():
    # the 2^(n+1) functions f + <c,.> + delta are pairwise distinct
    rng = random.Random(13)
    n = 3
    f = random_function(rng, n)
    seen = set()
    for c in range(1 << n):
        for delta in (0, 1):
            g = parse_anf("0", n).table ^ f.table  # copy
            from bentcayley.boolean_fn import inner_product_table
            g = f.table ^ inner_product_table(c, n) ^ delta
            seen.add(g.tobytes())
    assert len(seen) == 1 << (n + 1)


def test_bentness_is_ega_invariant(f41):
    rng = random.Random(2)
    for _ in range(20):
        e = EgaElement(random_invertible(rng, 4),
                       [rng.randint(0, 1) for _ in range(4)],
                       [rng.randint(0, 1) for _ in range(4)], rng.randint(0, 1))
        assert is_bent(apply_ega(f41, e))
    nonbent = parse_anf("x0*x1*x2*x3", 4)
    for _ in range(5):
        e = EgaElement(random_invertible(rng, 4),
                       [rng.randint(0, 1) for _ in range(4)],
                       [rng.randint(0, 1) for _ in range(4)], rng.randint(0, 1))
        assert not is_bent(apply_ega(nonbent, e))


def test_dual_of_linear_substitution(f41):
    # dual(f o A) = dual(f) o (A^T)^-1
    from bentcayley import apply_linear
    from bentcayley._gf2 import gf2_inv
    rng = random.Random(7)
    for _ in range(15):
        A = random_invertible(rng, 4)
        lhs = dual(apply_linear(f41, A))
        rhs = apply_linear(dual(f41), gf2_inv(A.T))
        assert lhs == rhs


def test_dual_of_translation():
    # dual(f(x+b) + <c,x>) = dual(f)(x+c) + <b,x> + <b,c>
    from bentcayley.boolean_fn import inner_product_table
    f62 = parse_anf("x0*x1*x2 + x0*x3 + x1*x4 + x2*x5", 6)
    rng = random.Random(19)
    idx = np.arange(64)
    for _ in range(10):
        b = rng.randrange(64)
        c = rng.randrange(64)
        g = BooleanFunction(6, f62.table[idx ^ b] ^ inner_product_table(c, 6))
        lhs = dual(g)
        bc = ((b & c).bit_count()) & 1
        rhs = BooleanFunction(6, dual(f62).table[idx ^ c]
                              ^ inner_product_table(b, 6) ^ bc)
        assert lhs == rhs
