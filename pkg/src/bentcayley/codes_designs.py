"""Linear codes spanned by Boolean-function supports, two-weight and
projectivity checks, the code graph R(f), and SDP block designs."""

from __future__ import annotations

import numpy as np

from .boolean_fn import BooleanFunction, NotBent, dual, is_bent, support, weight, weight_class
from .graph import DenseGraph


class TooLarge(ValueError):
    """Raised when an exhaustive check is requested beyond its size bound."""


class BinaryLinearCode:
    """Row span of gen_rows inside F_2^length; rows are little-endian bitsets."""

    __slots__ = ("length", "gen_rows", "dimension")

    def __init__(self, length: int, gen_rows):
        rows = [int(r) for r in gen_rows]
        mask = (1 << length) - 1
        for r in rows:
            if r & ~mask:
                raise ValueError("generator row wider than the code length")
        self.length = length
        self.gen_rows = tuple(rows)
        self.dimension = len(_row_basis(rows))

    def __repr__(self) -> str:
        return f"BinaryLinearCode(length={self.length}, dimension={self.dimension})"


class BlockDesign:
    """Square incidence structure; rows are blocks, columns are points."""

    __slots__ = ("incidence",)

    def __init__(self, incidence):
        a = np.asarray(incidence, dtype=np.uint8) & 1
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("incidence matrix must be square")
        self.incidence = a.copy()
        self.incidence.flags.writeable = False

    @property
    def v(self) -> int:
        return self.incidence.shape[0]

    def block_rows(self) -> list[int]:
        return [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
                for row in self.incidence]

    def __repr__(self) -> str:
        return f"BlockDesign(v={self.v})"


def _row_basis(rows) -> list[int]:
    pivots: dict[int, int] = {}
    for row in rows:
        row = int(row)
        while row:
            h = row.bit_length() - 1
            if h in pivots:
                row ^= pivots[h]
            else:
                pivots[h] = row
                break
    return [pivots[h] for h in sorted(pivots, reverse=True)]


def code_of(f: BooleanFunction) -> BinaryLinearCode:
    """C(f): the span of the n rows of Y, whose columns are the support
    elements of f in ascending index order."""
    sup = support(f)
    if not sup:
        raise ValueError("code_of needs a function of weight >= 1")
    n = f.n
    rows = []
    for i in range(n):
        r = 0
        for j, y in enumerate(sup):
            r |= ((y >> i) & 1) << j
        rows.append(r)
    return BinaryLinearCode(len(sup), rows)


def codewords(code: BinaryLinearCode) -> list[int]:
    """All 2^k distinct codewords, by Gray-code incremental XOR."""
    if code.dimension > 24:
        raise TooLarge("codeword enumeration is limited to dimension 24")
    basis = _row_basis(code.gen_rows)
    k = len(basis)
    words = [0] * (1 << k)
    w = 0
    for i in range(1, 1 << k):
        w ^= basis[(i & -i).bit_length() - 1]
        gray = i ^ (i >> 1)
        words[gray] = w
    return words


def weight_distribution(code: BinaryLinearCode) -> dict[int, int]:
    """Exact histogram weight -> count over all codewords."""
    hist: dict[int, int] = {}
    for w in codewords(code):
        wt = w.bit_count()
        hist[wt] = hist.get(wt, 0) + 1
    return hist


def minimum_distance(code: BinaryLinearCode) -> int:
    """Smallest nonzero codeword weight (0 for the zero code)."""
    dist = weight_distribution(code)
    nonzero = [w for w in dist if w > 0]
    return min(nonzero) if nonzero else 0


def is_projective(code: BinaryLinearCode) -> bool:
    """True iff the columns of a rank-k generator matrix are pairwise
    distinct and nonzero."""
    basis = _row_basis(code.gen_rows)
    cols = []
    for j in range(code.length):
        col = 0
        for i, row in enumerate(basis):
            col |= ((row >> j) & 1) << i
        cols.append(col)
    return 0 not in cols and len(set(cols)) == len(cols)


def graph_R(f: BooleanFunction) -> DenseGraph:
    """Graph on the 2^2m codewords x^T Y of C(f), indexed by x; edge (u, v)
    iff weight(u + v) hits the weight-class-dependent value
    2^(2m-2) - 2^(m-1) (class 0) or 2^(2m-2) + 2^(m-1) (class 1)."""
    if not is_bent(f):
        raise NotBent("R(f) is defined for bent functions")
    n = f.n
    m = n // 2
    sup = np.array(support(f), dtype=np.uint64)
    xs = np.arange(1 << n, dtype=np.uint64)
    # row x of M = X^T Y: bit j is <x, y_j>
    bits = (np.bitwise_count(xs[:, None] & sup[None, :]) & 1).astype(np.uint8)
    target = (1 << (n - 2)) + (1 << (m - 1)) * (1 if weight_class(f) else -1)
    v = 1 << n
    adj = np.zeros((v, v), dtype=np.uint8)
    for u in range(v):
        d = (bits[u][None, :] ^ bits[u + 1:]).sum(axis=1)
        hits = np.flatnonzero(d == target) + u + 1
        adj[u, hits] = 1
        adj[hits, u] = 1
    return DenseGraph.from_adjacency(adj)


def sdp_design(f: BooleanFunction) -> BlockDesign:
    """Incidence matrix with entry (c, x) = f(x) + <c,x> + dual(f)(c)."""
    if not is_bent(f):
        raise NotBent("the SDP design is defined for bent functions")
    duf = dual(f)
    idx = np.arange(1 << f.n, dtype=np.uint64)
    parity = (np.bitwise_count(idx[:, None] & idx[None, :]) & 1).astype(np.uint8)
    return BlockDesign(duf.table[:, None] ^ f.table[None, :] ^ parity)


def has_sdp_property(d: BlockDesign) -> bool:
    """True iff every triple of blocks has B xor C xor D equal to a block or
    a complemented block. Exhaustive; limited to v <= 64."""
    v = d.v
    if v > 64:
        raise TooLarge("the all-triples check is limited to v <= 64")
    rows = d.block_rows()
    mask = (1 << v) - 1
    rowset = set(rows)
    # triples with a repeated block reduce to membership of a block, which
    # holds trivially, so distinct i < j < k triples decide the property
    for i in range(v):
        ri = rows[i]
        for j in range(i + 1, v):
            rij = ri ^ rows[j]
            for k in range(j + 1, v):
                x = rij ^ rows[k]
                if x not in rowset and (x ^ mask) not in rowset:
                    return False
    return True


def min_weight_rows_check(f: BooleanFunction) -> bool:
    """True iff the rows of sdp_design(f) are exactly the minimum-weight words
    of the code spanned by f's truth table together with RM(1, 2m)."""
    if not is_bent(f):
        raise NotBent("the row characterisation applies to bent functions")
    n = f.n
    if n > 6:
        raise TooLarge("span enumeration is limited to 2m <= 6")
    size = 1 << n
    idx = np.arange(size, dtype=np.uint64)
    parity = (np.bitwise_count(idx[:, None] & idx[None, :]) & 1).astype(np.uint8)
    words = []
    for a in (0, 1):
        base = f.table * a
        for c in range(size):
            for delta in (0, 1):
                words.append(base ^ parity[c] ^ delta)
    weights = [int(w.sum()) for w in words]
    wmin = min(w for w in weights if w > 0)
    min_words = {w.tobytes() for w, wt in zip(words, weights) if wt == wmin}
    rows = {row.tobytes() for row in sdp_design(f).incidence}
    return rows == min_words
