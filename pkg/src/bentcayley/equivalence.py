"""Extended-translation class enumeration and extended-Cayley classification,
plus the constructive GL(2m,2) witnesses for quadratic bent functions.

classify_et_class walks the full (b, c) grid of an extended translation class
g_{b,c}(x) = f(x+b) + <c,x> + f(b), canonicalises the Cayley graph of each
member and of its normalised dual, and dedupes by canonical graph6 string.
"""

from __future__ import annotations

import multiprocessing as mp

import numpy as np

from . import _gf2
from ._gf2 import SingularMatrix, gf2_inv, gf2_mul
from .boolean_fn import (
    Anf,
    BooleanFunction,
    DimensionMismatch,
    NotBent,
    _fwht,
    _weight_class_of_weight,
    anf_of,
    anf_text,
    dual,
    index_bits,
    inner_product_table,
    is_bent,
    vector_to_index,
    weight_class,
)
from .graph import DenseGraph, cayley_graph, canonical_form


class WrongParity(ValueError):
    """Raised when a witness is requested for a c with the wrong value of q(c)."""


class Classification:
    """Extended-Cayley census of one ET class.

    graphs lists canonical graph6 strings; bent_index[c, b] and dual_index[c, b]
    give the class of Cay(g_{b,c}) and of Cay(dual(g_{b,c}) + wc(g_{b,c}));
    wc_matrix[c, b] is the weight class of g_{b,c}. Class numbers follow first
    occurrence in row-major order (c outer, b inner; bent graph before dual).
    """

    __slots__ = ("anf", "n", "graphs", "bent_index", "dual_index", "wc_matrix")

    def __init__(self, anf: str, n: int, graphs, bent_index, dual_index, wc_matrix):
        size = 1 << n
        bent_index = np.asarray(bent_index, dtype=np.int32)
        dual_index = np.asarray(dual_index, dtype=np.int32)
        wc_matrix = np.asarray(wc_matrix, dtype=np.uint8)
        for m in (bent_index, dual_index, wc_matrix):
            if m.shape != (size, size):
                raise ValueError("matrices must be 2^n x 2^n")
        ngraphs = len(graphs)
        if int(bent_index.max()) >= ngraphs or int(dual_index.max()) >= ngraphs:
            raise ValueError("matrix entry indexes past the graph list")
        referenced = set(np.unique(bent_index)) | set(np.unique(dual_index))
        if referenced != set(range(ngraphs)):
            raise ValueError("every listed graph must be referenced")
        if wc_matrix.max(initial=0) > 1:
            raise ValueError("weight-class entries must be bits")
        self.anf = anf
        self.n = n
        self.graphs = list(graphs)
        self.bent_index = bent_index
        self.dual_index = dual_index
        self.wc_matrix = wc_matrix
        for m in (self.bent_index, self.dual_index, self.wc_matrix):
            m.flags.writeable = False

    def bent_class_count(self) -> int:
        return int(np.unique(self.bent_index).size)

    def bent_frequencies(self) -> dict[int, int]:
        vals, counts = np.unique(self.bent_index, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def __eq__(self, other) -> bool:
        return (isinstance(other, Classification)
                and self.anf == other.anf and self.n == other.n
                and self.graphs == other.graphs
                and np.array_equal(self.bent_index, other.bent_index)
                and np.array_equal(self.dual_index, other.dual_index)
                and np.array_equal(self.wc_matrix, other.wc_matrix))

    def __repr__(self) -> str:
        return (f"Classification(n={self.n}, classes={self.bent_class_count()}, "
                f"graphs={len(self.graphs)})")


class QuadraticWitness:
    """Invertible A with q(Ax) = q(x) + <c, x> for the canonical quadratic q."""

    __slots__ = ("A", "target_c")

    def __init__(self, A: np.ndarray, target_c: np.ndarray):
        self.A = A
        self.target_c = target_c


# ---------------------------------------------------------------------------
# ET members and classification


def et_member(f: BooleanFunction, b, c) -> BooleanFunction:
    """g_{b,c}(x) = f(x+b) + <c,x> + f(b); evaluates to 0 at the origin."""
    n = f.n
    b_idx = _as_index(b, n)
    c_idx = _as_index(c, n)
    idx = np.arange(1 << n)
    table = f.table[idx ^ b_idx] ^ inner_product_table(c_idx, n) ^ f.table[b_idx]
    return BooleanFunction(n, table)


def _as_index(x, n: int) -> int:
    if isinstance(x, (int, np.integer)):
        i = int(x)
        if i < 0 or i >> n:
            raise DimensionMismatch(f"index {i} outside F_2^{n}")
        return i
    vec = np.asarray(x)
    if vec.shape != (n,):
        raise DimensionMismatch(f"vector must have length {n}")
    return vector_to_index(vec)


def cayley_translations(n: int) -> list[tuple[int, ...]]:
    """Generators i -> i xor 2^k of the translation automorphisms shared by
    every Cayley graph on F_2^n; used to seed the canonical search."""
    size = 1 << n
    return [tuple(i ^ (1 << k) for i in range(size)) for k in range(n)]


def _graph_from_table(table: np.ndarray) -> DenseGraph:
    v = table.size
    idx = np.arange(v)
    rows = [int.from_bytes(np.packbits(table[i ^ idx], bitorder="little").tobytes(),
                           "little") for i in range(v)]
    return DenseGraph(v, rows, _validate=False)


def _classify_chunk(table_bytes: bytes, n: int, start: int, stop: int,
                    cache: dict | None = None) -> list[tuple[int, str, str]]:
    """Canonical g6 strings for the bent and dual graphs of pairs start..stop-1.

    Pair index p encodes (c, b) = divmod(p, 2^n).
    """
    size = 1 << n
    m = n // 2
    mag = 1 << m
    f_table = np.frombuffer(table_bytes, dtype=np.uint8)
    idx = np.arange(size)
    shifted = f_table[idx[:, None] ^ idx[None, :]]  # shifted[b, x] = f(x^b)
    seeds = cayley_translations(n)
    if cache is None:
        cache = {}

    def canon(table: np.ndarray) -> str:
        key = table.tobytes()
        g6 = cache.get(key)
        if g6 is None:
            g6 = canonical_form(_graph_from_table(table), seed_automorphisms=seeds).g6
            cache[key] = g6
        return g6

    out = []
    last_c = -1
    lin = None
    for p in range(start, stop):
        c, b = divmod(p, size)
        if c != last_c:
            lin = inner_product_table(c, n)
            last_c = c
        g_table = shifted[b] ^ lin ^ f_table[b]
        g6_bent = canon(g_table)
        w = _fwht(1 - 2 * g_table.astype(np.int64))
        if np.any(np.abs(w) != mag):
            raise NotBent("ET member is not bent; the input cannot be bent")
        d_table = (w < 0).astype(np.uint8)
        g6_dual = canon(d_table ^ d_table[0])
        out.append((p, g6_bent, g6_dual))
    return out


def _classify_chunk_star(args):
    return _classify_chunk(*args)


def classify_et_class(f: BooleanFunction, workers: int = 1) -> Classification:
    """Full extended-Cayley classification of the ET class of a bent f.

    Deterministic for any worker count: class indices are assigned by first
    occurrence in row-major pair order, bent graph before dual graph.
    """
    if not is_bent(f):
        raise NotBent("classification requires a bent function")
    n = f.n
    size = 1 << n
    npairs = size * size
    table_bytes = f.table.tobytes()
    if workers <= 1:
        results = _classify_chunk(table_bytes, n, 0, npairs)
    else:
        chunk = max(1, (npairs + 4 * workers - 1) // (4 * workers))
        tasks = [(table_bytes, n, s, min(s + chunk, npairs))
                 for s in range(0, npairs, chunk)]
        ctx = mp.get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_classify_chunk_star, tasks)
        results = [item for part in parts for item in part]
        results.sort(key=lambda t: t[0])

    index_of: dict[str, int] = {}
    graphs: list[str] = []
    bent_index = np.empty((size, size), dtype=np.int32)
    dual_index = np.empty((size, size), dtype=np.int32)
    for p, g6_bent, g6_dual in results:
        c, b = divmod(p, size)
        for g6, mat in ((g6_bent, bent_index), (g6_dual, dual_index)):
            k = index_of.get(g6)
            if k is None:
                k = len(graphs)
                index_of[g6] = k
                graphs.append(g6)
            mat[c, b] = k
    return Classification(anf_text(anf_of(f)), n, graphs, bent_index, dual_index,
                          weight_class_matrix(f))


def weight_class_matrix(f: BooleanFunction) -> np.ndarray:
    """Matrix with entry (c, b) = weight class of g_{b,c}, from exact weights.

    The weights come from one fast transform per b: the spectrum of
    x -> f(x+b) gives the weight of every g_{b,c} at once.
    """
    if not is_bent(f):
        raise NotBent("weight classes need a bent function")
    n = f.n
    size = 1 << n
    idx = np.arange(size)
    shifted = f.table[idx[:, None] ^ idx[None, :]]
    w = _fwht(1 - 2 * shifted.astype(np.int64))  # w[b, c] = W_{f(.+b)}(c)
    sign_fb = 1 - 2 * f.table.astype(np.int64)
    weights = (size - sign_fb[:, None] * w) // 2
    lo = (1 << (n - 1)) - (1 << (n // 2 - 1))
    hi = (1 << (n - 1)) + (1 << (n // 2 - 1))
    if not np.all((weights == lo) | (weights == hi)):
        raise NotBent("ET member weight outside the bent pair")
    return (weights == hi).T.astype(np.uint8)


def dillon_schatz_matrix(f: BooleanFunction) -> np.ndarray:
    """Matrix with entry (c, b) = f(b) + <c,b> + dual(f)(c)."""
    duf = dual(f)
    n = f.n
    idx = np.arange(1 << n, dtype=np.uint64)
    parity = (np.bitwise_count(idx[:, None] & idx[None, :]) & 1).astype(np.uint8)
    return duf.table[:, None] ^ f.table[None, :] ^ parity


def is_cayley_equivalent(f: BooleanFunction, g: BooleanFunction) -> bool:
    """Cay(f) isomorphic to Cay(g); both functions must vanish at 0."""
    gf = cayley_graph(f)
    gg = cayley_graph(g)
    if f.n != g.n:
        return False
    seeds = cayley_translations(f.n)
    return (canonical_form(gf, seed_automorphisms=seeds).g6
            == canonical_form(gg, seed_automorphisms=seeds).g6)


def is_extended_cayley_equivalent(f: BooleanFunction, g: BooleanFunction) -> bool:
    """f and g are EC equivalent iff f + f(0) and g + g(0) are Cayley equivalent."""
    if f.n != g.n:
        return False
    fn = BooleanFunction(f.n, f.table ^ f.table[0])
    gn = BooleanFunction(g.n, g.table ^ g.table[0])
    return is_cayley_equivalent(fn, gn)


def apply_linear(f: BooleanFunction, A) -> BooleanFunction:
    """x -> f(Ax) for invertible A."""
    A = np.asarray(A, dtype=np.uint8) & 1
    if A.shape != (f.n, f.n):
        raise DimensionMismatch("matrix shape must match the variable count")
    if not _gf2.gf2_is_invertible(A):
        raise SingularMatrix("linear substitution must be invertible")
    bits = index_bits(f.n).astype(np.int64)
    y = (bits @ A.T.astype(np.int64)) & 1
    yidx = (y << np.arange(f.n)).sum(axis=1)
    return BooleanFunction(f.n, f.table[yidx])


def affine_to_translation(f: BooleanFunction, A, b, c, delta: int):
    """Split f(Ax+b) + <c,x> + delta into a translation part and A.

    Returns (g, A) with g(x) = f(x+b) + <(A^-1)^T c, x> + delta, so that
    h(x) = g(Ax) reproduces the affine form.
    """
    A = np.asarray(A, dtype=np.uint8) & 1
    n = f.n
    if A.shape != (n, n):
        raise DimensionMismatch("matrix shape must match the variable count")
    ainv_t = gf2_inv(A).T
    c2 = (ainv_t.astype(np.int64) @ np.asarray(c, dtype=np.int64)) & 1
    b_idx = _as_index(b, n)
    c2_idx = vector_to_index(c2)
    idx = np.arange(1 << n)
    table = (f.table[idx ^ b_idx] ^ inner_product_table(c2_idx, n)
             ^ (int(delta) & 1))
    return BooleanFunction(n, table), A


def is_prolific(cl: Classification) -> bool:
    """True iff the ET class realises the maximum 4^n distinct bent classes."""
    return cl.bent_class_count() == 1 << (2 * cl.n)


# ---------------------------------------------------------------------------
# quadratic machinery


def canonical_quadratic(m: int) -> BooleanFunction:
    """q(x) = sum_k x_k x_{m+k} on 2m variables; bent and self-dual."""
    if m < 1:
        raise ValueError("m must be >= 1")
    from .boolean_fn import function_of
    masks = [(1 << k) | (1 << (m + k)) for k in range(m)]
    return function_of(Anf(2 * m, masks))


def reduce_translation(q: BooleanFunction, b, c) -> np.ndarray:
    """c' = (L + L^T) b + c, so q(x+b) + <c,x> + q(b) = q(x) + <c',x>."""
    n = q.n
    if n % 2:
        raise DimensionMismatch("the canonical quadratic lives in even dimension")
    m = n // 2
    b = np.asarray(b, dtype=np.uint8)
    c = np.asarray(c, dtype=np.uint8)
    if b.shape != (n,) or c.shape != (n,):
        raise DimensionMismatch("b and c must be length-2m vectors")
    # (L + L^T) swaps the two halves
    swapped = np.concatenate([b[m:], b[:m]])
    return (swapped ^ c).astype(np.uint8)


def _halves_of(c, m: int):
    c = np.asarray(c, dtype=np.uint8) & 1
    if c.shape != (2 * m,):
        raise DimensionMismatch("c must be a length-2m vector")
    return c, c[:m], c[m:]


def _q_value(c_lo: np.ndarray, c_hi: np.ndarray) -> int:
    return int((c_lo.astype(np.int64) * c_hi.astype(np.int64)).sum()) & 1


def gl_witness_q0(c, m: int | None = None) -> QuadraticWitness:
    """Involutive A in GL(2m,2) with q(Ax) = q(x) + <c,x>, for q(c) = 0.

    K = {k : c_k c_{m+k} = 1} has even size; T pairs its elements (ascending,
    adjacent) and A = [[I, T + C11], [T + C00, I]].
    """
    c = np.asarray(c, dtype=np.uint8) & 1
    if m is None:
        if c.size % 2:
            raise DimensionMismatch("c must have even length")
        m = c.size // 2
    c, c_lo, c_hi = _halves_of(c, m)
    if _q_value(c_lo, c_hi):
        raise WrongParity("gl_witness_q0 needs q(c) = 0")
    K = [k for k in range(m) if c_lo[k] and c_hi[k]]
    T = np.zeros((m, m), dtype=np.uint8)
    for i in range(0, len(K), 2):
        a, b2 = K[i], K[i + 1]
        T[a, b2] = T[b2, a] = 1
    c00 = np.diag(c_lo)
    c11 = np.diag(c_hi)
    eye = np.eye(m, dtype=np.uint8)
    A = np.block([[eye, (T ^ c11)], [(T ^ c00), eye]]).astype(np.uint8)
    return QuadraticWitness(A, c.copy())


def _transposition_matrix(k: int, l: int, m: int) -> np.ndarray:
    """Permutation matrix of (k l)(m+k m+l) on 2m coordinates."""
    n = 2 * m
    P = np.eye(n, dtype=np.uint8)
    if k != l:
        for a, b in ((k, l), (m + k, m + l)):
            P[a, a] = P[b, b] = 0
            P[a, b] = P[b, a] = 1
    return P


def _e_vector(k: int, m: int) -> np.ndarray:
    e = np.zeros(2 * m, dtype=np.uint8)
    e[k] = e[m + k] = 1
    return e


def gl_witness_q1(c, c2, m: int | None = None) -> np.ndarray:
    """Invertible M with (q + <c,.>)(Mx) = q(x) + <c2,x>, for q(c) = q(c2) = 1.

    Both sides are normalised through e^(l) with l = min K, permuted to e^(0),
    and the target path inverted; M = A_c P_c P_c2 A_c2 applied left to right
    on the argument, i.e. h(Mx) with M the plain matrix product.
    """
    c = np.asarray(c, dtype=np.uint8) & 1
    if m is None:
        if c.size % 2:
            raise DimensionMismatch("c must have even length")
        m = c.size // 2
    c, c_lo, c_hi = _halves_of(c, m)
    c2, c2_lo, c2_hi = _halves_of(c2, m)
    if not _q_value(c_lo, c_hi) or not _q_value(c2_lo, c2_hi):
        raise WrongParity("gl_witness_q1 needs q(c) = q(c2) = 1")
    l1 = min(k for k in range(m) if c_lo[k] and c_hi[k])
    l2 = min(k for k in range(m) if c2_lo[k] and c2_hi[k])
    a1 = gl_witness_q0(c ^ _e_vector(l1, m), m).A
    a2 = gl_witness_q0(c2 ^ _e_vector(l2, m), m).A
    p1 = _transposition_matrix(l1, 0, m)
    p2 = _transposition_matrix(0, l2, m)
    return gf2_mul(gf2_mul(a1, p1), gf2_mul(p2, a2))


def verify_quadratic_theorem(m: int, workers: int = 1) -> bool:
    """Exactly two extended-Cayley classes in [q], matching the weight classes."""
    q = canonical_quadratic(m)
    cl = classify_et_class(q, workers=workers)
    if cl.bent_class_count() != 2:
        return False
    wc = cl.wc_matrix.astype(np.int32)
    return (np.array_equal(cl.bent_index, wc)
            or np.array_equal(cl.bent_index, 1 - wc))
