import os
import random

import numpy as np
import pytest

from bentcayley import BooleanFunction, et_member
from bentcayley.catalog import representative

EXTENDED = os.environ.get("BENTCAYLEY_EXTENDED") == "1"

extended = pytest.mark.extended


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="set BENTCAYLEY_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


# --- independent oracles ----------------------------------------------------


def wht_direct(f: BooleanFunction) -> list[int]:
    """Walsh-Hadamard transform by direct summation over all points."""
    n = f.n
    out = []
    for x in range(1 << n):
        total = 0
        for y in range(1 << n):
            total += (-1) ** (int(f.table[y]) + ((x & y).bit_count() & 1))
        out.append(total)
    return out


def eval_monomials(monomials, x: int) -> int:
    """Evaluate a set of monomial bitmasks at point x."""
    val = 0
    for m in monomials:
        if (x & m) == m:
            val ^= 1
    return val


def random_function(rng: random.Random, n: int) -> BooleanFunction:
    return BooleanFunction(n, [rng.randint(0, 1) for _ in range(1 << n)])


def random_et_member(rng: random.Random, f: BooleanFunction) -> BooleanFunction:
    size = 1 << f.n
    return et_member(f, rng.randrange(size), rng.randrange(size))


def random_invertible(rng: random.Random, n: int) -> np.ndarray:
    while True:
        A = np.array([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)],
                     dtype=np.uint8)
        from bentcayley._gf2 import gf2_is_invertible
        if gf2_is_invertible(A):
            return A


# --- shared representatives -------------------------------------------------


@pytest.fixture(scope="session")
def f21():
    return representative("f2_1")


@pytest.fixture(scope="session")
def f41():
    return representative("f4_1")


@pytest.fixture(scope="session")
def dim6_reps():
    return {name: representative(name) for name in ("f6_1", "f6_2", "f6_3", "f6_4")}


@pytest.fixture(scope="session")
def cast_tables():
    from bentcayley import parse_cast128_sboxes
    path = os.path.join(os.path.dirname(__file__), "data", "cast128_sboxes.txt")
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cast128_sboxes(fh.read())
