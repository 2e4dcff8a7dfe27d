"""Boolean functions on F_2^n: truth tables, ANF, Walsh-Hadamard transform,
bentness, duals, weight classes, and the extended general affine group action.

Conventions (used consistently across the package):
  * truth-table index i encodes the point x through x_k = bit k of i,
    so x_0 is the least significant bit;
  * <x, y> is the standard dot product sum_k x_k y_k mod 2.
"""

from __future__ import annotations

import numpy as np

from ._gf2 import gf2_is_invertible, gf2_mul


class NotBent(ValueError):
    """Raised when an operation requires a bent function."""


class NotBentWeight(ValueError):
    """Raised when a Hamming weight matches neither admissible bent weight."""


class DimensionMismatch(ValueError):
    """Raised when operand dimensions disagree."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class BooleanFunction:
    """A Boolean function f: F_2^n -> F_2 stored as a 2^n truth table."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if n < 1:
            raise ValueError("variable count must be >= 1")
        t = np.asarray(table, dtype=np.uint8)
        if t.ndim != 1 or t.size != 1 << n:
            raise ValueError(f"truth table must have length 2^{n}")
        if np.any(t > 1):
            raise ValueError("truth table entries must be 0 or 1")
        self.n = n
        self.table = _freeze(t.copy())

    def value(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other) -> bool:
        return (isinstance(other, BooleanFunction) and self.n == other.n
                and bool(np.array_equal(self.table, other.table)))

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"BooleanFunction(n={self.n}, weight={weight(self)})"


class Anf:
    """Reduced multilinear polynomial: a set of monomial bitmasks over n variables.

    The empty-set monomial (mask 0) is the constant term 1.
    """

    __slots__ = ("n", "monomials")

    def __init__(self, n: int, monomials):
        if n < 1:
            raise ValueError("variable count must be >= 1")
        mons = frozenset(int(m) for m in monomials)
        for m in mons:
            if m < 0 or m >> n:
                raise ValueError(f"monomial {m:#x} uses variables outside x0..x{n - 1}")
        self.n = n
        self.monomials = mons

    @property
    def degree(self) -> int:
        return max((m.bit_count() for m in self.monomials), default=0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Anf) and self.n == other.n
                and self.monomials == other.monomials)

    def __hash__(self) -> int:
        return hash((self.n, self.monomials))

    def __repr__(self) -> str:
        return f"Anf(n={self.n}, {anf_text(self)!r})"


class WalshSpectrum:
    """Walsh-Hadamard spectrum: values[x] = W_f(x), signed integers."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        v = np.asarray(values, dtype=np.int64)
        if v.ndim != 1 or v.size != 1 << n:
            raise ValueError(f"spectrum must have length 2^{n}")
        self.n = n
        self.values = _freeze(v.copy())

    def __repr__(self) -> str:
        return f"WalshSpectrum(n={self.n}, {self.values.tolist()})"


class EgaElement:
    """Element (A, b, c, delta) of the extended general affine group.

    Acts on functions by f |-> (x -> f(Ax + b) + <c, x> + delta).
    The extended translation subgroup is the restriction A = I.
    """

    __slots__ = ("n", "A", "b", "c", "delta")

    def __init__(self, A, b, c, delta: int):
        A = np.asarray(A, dtype=np.uint8) & 1
        b = np.asarray(b, dtype=np.uint8) & 1
        c = np.asarray(c, dtype=np.uint8) & 1
        n = A.shape[0]
        if A.shape != (n, n) or b.shape != (n,) or c.shape != (n,):
            raise DimensionMismatch("A, b, c dimensions disagree")
        if not gf2_is_invertible(A):
            raise ValueError("A must be invertible over GF(2)")
        self.n = n
        self.A = _freeze(A.copy())
        self.b = _freeze(b.copy())
        self.c = _freeze(c.copy())
        self.delta = int(delta) & 1

    def __repr__(self) -> str:
        return f"EgaElement(n={self.n}, delta={self.delta})"


def ega_identity(n: int) -> EgaElement:
    z = np.zeros(n, dtype=np.uint8)
    return EgaElement(np.eye(n, dtype=np.uint8), z, z, 0)


# ---------------------------------------------------------------------------
# truth-table helpers


def index_bits(n: int) -> np.ndarray:
    """(2^n, n) matrix whose row i holds the bits of i, x_0 first."""
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def inner_product_table(c: int, n: int) -> np.ndarray:
    """Table of <c, x> over all x, as uint8."""
    idx = np.arange(1 << n, dtype=np.uint64)
    return (np.bitwise_count(idx & np.uint64(c)) & 1).astype(np.uint8)


def vector_to_index(vec: np.ndarray) -> int:
    return int((np.asarray(vec, dtype=np.int64) << np.arange(len(vec))).sum())


def index_to_vector(i: int, n: int) -> np.ndarray:
    return ((i >> np.arange(n)) & 1).astype(np.uint8)


# ---------------------------------------------------------------------------
# ANF via the binary Moebius transform


def _mobius(table: np.ndarray) -> np.ndarray:
    a = table.astype(np.uint8).copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2, h)
        a[:, 1, :] ^= a[:, 0, :]
        a = a.reshape(-1)
        h *= 2
    return a


def anf_of(f: BooleanFunction) -> Anf:
    """Algebraic normal form of f (binary Moebius transform of the table)."""
    coeffs = _mobius(f.table)
    return Anf(f.n, np.flatnonzero(coeffs).tolist())


def function_of(a: Anf) -> BooleanFunction:
    """Truth table of a reduced ANF; inverse of anf_of."""
    ind = np.zeros(1 << a.n, dtype=np.uint8)
    for m in a.monomials:
        ind[m] = 1
    return BooleanFunction(a.n, _mobius(ind))


def degree(f: BooleanFunction) -> int:
    """Algebraic degree; the zero function has degree 0."""
    return anf_of(f).degree


def _term_sort_key(mask: int, n: int):
    # descending lexicographic order on exponent vectors, x0 most significant
    return tuple(-((mask >> k) & 1) for k in range(n))


def anf_text(a: Anf) -> str:
    """Render an ANF in the package's text syntax, e.g. "x0*x1 + x2*x3 + 1".

    Terms are ordered by descending lexicographic exponent vector, so the
    constant term comes last; the zero function renders as "0".
    """
    if not a.monomials:
        return "0"
    masks = sorted(a.monomials, key=lambda m: _term_sort_key(m, a.n))
    parts = []
    for m in masks:
        if m == 0:
            parts.append("1")
        else:
            parts.append("*".join(f"x{k}" for k in range(a.n) if (m >> k) & 1))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Walsh-Hadamard transform and bentness


def _fwht(signs: np.ndarray) -> np.ndarray:
    """In-place style fast transform of a signed vector (last axis)."""
    a = signs.astype(np.int64).copy()
    shape = a.shape
    n = shape[-1]
    a = a.reshape(-1, n)
    h = 1
    while h < n:
        a = a.reshape(-1, 2, h)
        x = a[:, 0, :].copy()
        y = a[:, 1, :].copy()
        a[:, 0, :] = x + y
        a[:, 1, :] = x - y
        a = a.reshape(-1, n)
        h *= 2
    return a.reshape(shape)


def walsh_hadamard(f: BooleanFunction) -> WalshSpectrum:
    """W_f(x) = sum_y (-1)^(f(y) + <x,y>), by the fast butterfly."""
    signs = 1 - 2 * f.table.astype(np.int64)
    return WalshSpectrum(f.n, _fwht(signs))


def is_bent(f: BooleanFunction) -> bool:
    """True iff n is even and |W_f(x)| = 2^(n/2) for all x."""
    if f.n % 2:
        return False
    w = walsh_hadamard(f).values
    return bool(np.all(np.abs(w) == 1 << (f.n // 2)))


def weight(f: BooleanFunction) -> int:
    return int(f.table.sum())


def support(f: BooleanFunction) -> list[int]:
    return np.flatnonzero(f.table).tolist()


def _weight_class_of_weight(w: int, n: int) -> int:
    # closed form: wc = 2^-m * w - 2^(m-1) + 1/2, scaled to stay in integers
    if n % 2:
        raise NotBentWeight("weight classes exist only in even dimension")
    m = n // 2
    num = 2 * w - (1 << n) + (1 << m)
    if num == 0:
        return 0
    if num == 1 << (m + 1):
        return 1
    raise NotBentWeight(f"weight {w} is not an admissible bent weight for n={n}")


def weight_class(f: BooleanFunction) -> int:
    """0 for weight 2^(2m-1) - 2^(m-1), 1 for 2^(2m-1) + 2^(m-1)."""
    return _weight_class_of_weight(weight(f), f.n)


def dual(f: BooleanFunction) -> BooleanFunction:
    """The dual bent function, via (-1)^dual(x) = 2^-m W_f(x)."""
    if not is_bent(f):
        raise NotBent("dual is defined only for bent functions")
    w = walsh_hadamard(f).values
    return BooleanFunction(f.n, (w < 0).astype(np.uint8))


def dual_via_weight_classes(f: BooleanFunction) -> BooleanFunction:
    """Independent route to the dual: x -> weight class of y -> f(y) + <x,y>."""
    if not is_bent(f):
        raise NotBent("dual is defined only for bent functions")
    n = f.n
    out = np.empty(1 << n, dtype=np.uint8)
    for x in range(1 << n):
        h = f.table ^ inner_product_table(x, n)
        out[x] = _weight_class_of_weight(int(h.sum()), n)
    return BooleanFunction(n, out)


# ---------------------------------------------------------------------------
# EGA action


def apply_ega(f: BooleanFunction, e: EgaElement) -> BooleanFunction:
    """x -> f(Ax + b) + <c, x> + delta."""
    if e.n != f.n:
        raise DimensionMismatch(f"element acts on {e.n} variables, f has {f.n}")
    n = f.n
    bits = index_bits(n).astype(np.int64)
    y = (bits @ e.A.T.astype(np.int64) + e.b) & 1
    yidx = (y << np.arange(n)).sum(axis=1)
    lin = (bits @ e.c.astype(np.int64)) & 1
    return BooleanFunction(n, f.table[yidx] ^ lin.astype(np.uint8) ^ e.delta)


def ega_compose(e: EgaElement, e2: EgaElement) -> EgaElement:
    """Group law (AA', Ab' + b, A'^T c + c', <c, b'> + delta + delta').

    Compatible with the action as apply(apply(f, e), e2) = apply(f, compose(e, e2)).
    """
    if e.n != e2.n:
        raise DimensionMismatch("group elements have different dimensions")
    A = gf2_mul(e.A, e2.A)
    b = (e.A.astype(np.int64) @ e2.b + e.b) & 1
    c = (e2.A.T.astype(np.int64) @ e.c + e2.c) & 1
    delta = (int(e.c.astype(np.int64) @ e2.b) + e.delta + e2.delta) & 1
    return EgaElement(A, b, c, delta)
