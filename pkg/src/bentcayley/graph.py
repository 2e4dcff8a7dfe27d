"""Dense simple graphs: Cayley graphs of Boolean functions, strongly regular
parameter checking, exact canonical labelling, graph6 codec, clique counting
and GF(2) adjacency rank.

Adjacency is stored as one Python int bitset per vertex, which keeps the
refinement and popcount loops fast for the 4..256 vertex graphs handled here.
"""

from __future__ import annotations

from bisect import insort
from collections import deque
from dataclasses import dataclass

import numpy as np

from .boolean_fn import BooleanFunction


class NonzeroAtOrigin(ValueError):
    """Raised when a Cayley graph is requested for f with f(0) = 1."""


class MalformedGraph6(ValueError):
    """Raised on an invalid graph6 byte string."""


class DenseGraph:
    """Undirected simple graph on v vertices; rows[i] is the adjacency bitset."""

    __slots__ = ("v", "rows")

    def __init__(self, v: int, rows, _validate: bool = True):
        rows = tuple(int(r) for r in rows)
        if _validate:
            if len(rows) != v:
                raise ValueError("need one adjacency row per vertex")
            mask = (1 << v) - 1
            for i, r in enumerate(rows):
                if r & ~mask:
                    raise ValueError(f"row {i} has bits outside 0..{v - 1}")
                if (r >> i) & 1:
                    raise ValueError(f"vertex {i} has a loop")
            for i in range(v):
                for j in range(i + 1, v):
                    if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                        raise ValueError(f"adjacency not symmetric at ({i},{j})")
        self.v = v
        self.rows = rows

    @classmethod
    def from_edges(cls, v: int, edges) -> "DenseGraph":
        rows = [0] * v
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(v, rows, _validate=False)

    @classmethod
    def from_adjacency(cls, matrix) -> "DenseGraph":
        a = np.asarray(matrix, dtype=np.uint8) & 1
        v = a.shape[0]
        if a.shape != (v, v):
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if v and np.any(np.diagonal(a)):
            raise ValueError("loops are not allowed")
        rows = [int.from_bytes(np.packbits(a[i], bitorder="little").tobytes(), "little")
                for i in range(v)]
        return cls(v, rows, _validate=False)

    def to_adjacency(self) -> np.ndarray:
        v = self.v
        if v == 0:
            return np.zeros((0, 0), dtype=np.uint8)
        nbytes = (v + 7) // 8
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self.rows)
        bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")
        return bits.reshape(v, 8 * nbytes)[:, :v].copy()

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def permuted(self, perm) -> "DenseGraph":
        """Relabelled copy: new vertex p is old vertex perm[p]."""
        p = np.asarray(perm)
        a = self.to_adjacency()[np.ix_(p, p)]
        return DenseGraph.from_adjacency(a)

    def __eq__(self, other) -> bool:
        return (isinstance(other, DenseGraph) and self.v == other.v
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.v, self.rows))

    def __repr__(self) -> str:
        return f"DenseGraph(v={self.v}, edges={self.edge_count()})"


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters (v, k, lambda, mu)."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError("parameters violate the SRG counting identity")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class CliquePolynomial:
    """coeffs[s] = number of complete subgraphs of size s (coeffs[0] = 1)."""

    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        terms = []
        for s in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[s]
            if c == 0:
                continue
            if s == 0:
                terms.append(f"{c}")
            elif s == 1:
                terms.append(f"{c}t")
            else:
                terms.append(f"{c}t^{s}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative: relabelled graph, its graph6 string, and the
    certifying permutation (perm[p] = input vertex at canonical position p)."""

    graph: DenseGraph
    g6: str
    perm: tuple[int, ...]


# ---------------------------------------------------------------------------
# constructions and invariants


def cayley_graph(f: BooleanFunction) -> DenseGraph:
    """Graph on F_2^n with edge (i, j) iff f(i xor j) = 1; needs f(0) = 0."""
    if f.table[0]:
        raise NonzeroAtOrigin("Cayley graph needs f(0) = 0 to avoid loops")
    n = f.n
    v = 1 << n
    idx = np.arange(v)
    rows = []
    for i in range(v):
        bits = f.table[i ^ idx]
        rows.append(int.from_bytes(np.packbits(bits, bitorder="little").tobytes(),
                                   "little"))
    return DenseGraph(v, rows, _validate=False)


def srg_params(g: DenseGraph):
    """(v, k, lambda, mu) if g is strongly regular, else None.

    Complete and empty graphs return None by convention.
    """
    v = g.v
    if v < 2:
        return None
    rows = g.rows
    k = rows[0].bit_count()
    if any(r.bit_count() != k for r in rows):
        return None
    if k == 0 or k == v - 1:
        return None
    lam = mu = None
    for i in range(v):
        ri = rows[i]
        for j in range(i + 1, v):
            cn = (ri & rows[j]).bit_count()
            if (ri >> j) & 1:
                if lam is None:
                    lam = cn
                elif cn != lam:
                    return None
            else:
                if mu is None:
                    mu = cn
                elif cn != mu:
                    return None
    if lam is None or mu is None:
        return None
    return SrgParams(v, k, lam, mu)


def clique_polynomial(g: DenseGraph) -> CliquePolynomial:
    """Counts of complete subgraphs by size, empty subgraph included."""
    rows = g.rows
    counts = [0] * (g.v + 1)
    counts[0] = 1

    def rec(cand: int, size: int):
        while cand:
            top = cand.bit_length() - 1
            cand ^= 1 << top
            counts[size] += 1
            sub = cand & rows[top]
            if sub:
                rec(sub, size + 1)

    if g.v:
        rec((1 << g.v) - 1, 1)
    omega = max(s for s in range(g.v + 1) if counts[s])
    return CliquePolynomial(tuple(counts[: omega + 1]))


def rank2(g: DenseGraph) -> int:
    """GF(2) rank of the adjacency matrix, by bitset elimination."""
    pivots: dict[int, int] = {}
    for row in g.rows:
        while row:
            h = row.bit_length() - 1
            if h in pivots:
                row ^= pivots[h]
            else:
                pivots[h] = row
                break
    return len(pivots)


# ---------------------------------------------------------------------------
# graph6 codec


def _g6_body_bits(g: DenseGraph) -> np.ndarray:
    # upper-triangle bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
    a = g.to_adjacency()
    return a.T[np.tril_indices(g.v, -1)]


def graph6_encode(g: DenseGraph) -> str:
    """Standard graph6 string (size field, then 6-bit packed triangle)."""
    v = g.v
    if v <= 62:
        head = bytes([v + 63])
    elif v <= 258047:
        head = bytes([126, 63 + ((v >> 12) & 63), 63 + ((v >> 6) & 63), 63 + (v & 63)])
    else:
        raise ValueError("graph too large for the supported graph6 sizes")
    bits = _g6_body_bits(g)
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=bits.dtype)])
    groups = bits.reshape(-1, 6)
    weights = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)
    body = bytes((groups.astype(np.int64) @ weights + 63).astype(np.uint8).tolist())
    return (head + body).decode("ascii")


def graph6_decode(s: str) -> DenseGraph:
    """Inverse of graph6_encode; raises MalformedGraph6 on bad input."""
    data = s.encode("ascii", errors="replace")
    if not data:
        raise MalformedGraph6("empty string")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedGraph6("byte outside the graph6 range 63..126")
    if data[0] == 126:
        if len(data) < 4:
            raise MalformedGraph6("truncated size field")
        if data[1] == 126:
            raise MalformedGraph6("8-byte size fields are not supported")
        v = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        v = data[0] - 63
        body = data[1:]
    nbits = v * (v - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"body length {len(body)} wrong for v={v}")
    bits = np.zeros(len(body) * 6, dtype=np.uint8)
    for i, b in enumerate(body):
        x = b - 63
        for t in range(6):
            bits[6 * i + t] = (x >> (5 - t)) & 1
    if np.any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    a = np.zeros((v, v), dtype=np.uint8)
    if v > 1:
        qs, ps = np.tril_indices(v, -1)
        a[ps, qs] = bits[:nbits]
        a[qs, ps] = bits[:nbits]
    return DenseGraph.from_adjacency(a)


# ---------------------------------------------------------------------------
# exact canonical labelling
#
# Individualisation-refinement search. Each node carries an ordered partition
# refined to equitability; the node invariant is the refinement trace (split
# positions and count signatures), which depends only on the partition
# structure and so is identical for relabelled copies of a graph. The
# canonical leaf minimises (invariant sequence, adjacency bit string); its
# ordering relabels the graph. Subtrees whose invariant prefix exceeds the
# incumbent are pruned, and sibling branches lying in a common orbit of the
# automorphisms discovered so far (leaves with equal certificates) are
# explored only once.


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


class _Canonizer:
    def __init__(self, g: DenseGraph, seeds):
        self.v = g.v
        self.rows = g.rows
        self.full = (1 << g.v) - 1
        self.adj = g.to_adjacency().astype(bool)
        self.tri = np.tril_indices(g.v, -1)
        self.cells: dict[int, int] = {}       # start -> member bitset
        self.sizes: dict[int, int] = {}       # start -> member count
        self.starts: list[int] = []
        self.fixed: list[int] = []
        self.cur_inv: list[tuple] = []
        self.best_inv = None
        self.best_adj = None
        self.best_lab = None
        self.best_fixed: list[int] = []
        self.gens: list[tuple[int, ...]] = []
        self._gen_set: set[tuple[int, ...]] = set()
        for s in seeds or ():
            self._add_generator(tuple(s), verify=True)

    # -- partition plumbing -------------------------------------------------

    def _add_generator(self, perm: tuple[int, ...], verify: bool = False):
        if verify and len(perm) != self.v:
            raise ValueError("seed permutation has wrong length")
        if len(perm) != self.v or perm == tuple(range(self.v)) or perm in self._gen_set:
            return
        if verify:
            p = np.array(perm)
            if not np.array_equal(self.adj[np.ix_(p, p)], self.adj):
                raise ValueError("seed permutation is not an automorphism")
        self.gens.append(perm)
        self._gen_set.add(perm)

    def _initial_partition(self) -> deque:
        groups: dict[int, int] = {}
        for u, r in enumerate(self.rows):
            d = r.bit_count()
            groups[d] = groups.get(d, 0) | (1 << u)
        self.cells = {}
        self.sizes = {}
        self.starts = []
        self.big = []
        queue: deque = deque()
        start = 0
        shape = []
        for d in sorted(groups):
            members = groups[d]
            size = members.bit_count()
            self.cells[start] = members
            self.sizes[start] = size
            self.starts.append(start)
            if size > 1:
                self.big.append(start)
            queue.append(start)
            shape.append((d, size))
            start += size
        self.init_shape = tuple(shape)
        return queue

    def _refine(self, queue: deque) -> tuple:
        rows = self.rows
        cells = self.cells
        sizes = self.sizes
        starts = self.starts
        big = self.big
        trace: list = []
        v = self.v
        while queue:
            if not big:
                queue.clear()
                break
            s = queue.popleft()
            wmask = cells[s]
            singleton = sizes[s] == 1
            if singleton:
                nu = rows[wmask.bit_length() - 1]
            for cs in list(big):
                cl = sizes.get(cs)
                if cl is None or cl == 1:
                    continue
                x = cells[cs]
                if singleton:
                    x1 = x & nu
                    if x1 == 0 or x1 == x:
                        continue
                    x0 = x ^ x1
                    n0 = x0.bit_count()
                    n1 = cl - n0
                    cells[cs] = x0
                    sizes[cs] = n0
                    ns = cs + n0
                    cells[ns] = x1
                    sizes[ns] = n1
                    insort(starts, ns)
                    if n0 == 1:
                        big.remove(cs)
                    if n1 > 1:
                        insort(big, ns)
                    queue.append(cs)
                    queue.append(ns)
                    trace.append((s, cs, (0, n0), (1, n1)))
                    continue
                groups: dict[int, int] = {}
                y = x
                while y:
                    lsb = y & -y
                    y ^= lsb
                    cnt = (rows[lsb.bit_length() - 1] & wmask).bit_count()
                    groups[cnt] = groups.get(cnt, 0) | lsb
                if len(groups) == 1:
                    continue
                items = sorted(groups.items())
                p = cs
                ev = [s, cs]
                first = True
                for cnt, members in items:
                    size = members.bit_count()
                    cells[p] = members
                    sizes[p] = size
                    if not first:
                        insort(starts, p)
                        if size > 1:
                            insort(big, p)
                    elif size == 1:
                        big.remove(cs)
                    queue.append(p)
                    ev.append((cnt, size))
                    p += size
                    first = False
                trace.append(tuple(ev))
        return tuple(trace)

    def _snapshot(self):
        return (dict(self.cells), dict(self.sizes), self.starts[:], self.big[:])

    def _restore(self, snap):
        self.cells = dict(snap[0])
        self.sizes = dict(snap[1])
        self.starts = snap[2][:]
        self.big = snap[3][:]

    def _individualize(self, ts: int, u: int) -> deque:
        rest = self.cells[ts] ^ (1 << u)
        n1 = self.sizes[ts] - 1
        self.cells[ts] = 1 << u
        self.sizes[ts] = 1
        ns = ts + 1
        self.cells[ns] = rest
        self.sizes[ns] = n1
        insort(self.starts, ns)
        self.big.remove(ts)
        if n1 > 1:
            insort(self.big, ns)
        return deque([ts, ns])

    def _target_cell(self):
        best = None
        best_l = None
        for s in self.big:
            l = self.sizes[s]
            if best_l is None or l < best_l:
                best, best_l = s, l
                if l == 2:
                    break
        return best

    def _leaf_lab(self) -> list[int]:
        return [self.cells[s].bit_length() - 1 for s in self.starts]

    def _cert_bytes(self, lab) -> bytes:
        p = np.array(lab)
        b = self.adj[np.ix_(p, p)]
        return np.packbits(b.T[self.tri]).tobytes()

    # -- search -------------------------------------------------------------
    #
    # _leaf and _node return 0 (nothing), 1 (incumbent replaced), or
    # ("aut", i): a leaf tied the incumbent certificate, so the discovered
    # automorphism maps the whole current branch onto an already-explored
    # sibling subtree at individualisation level i; everything in between is
    # abandoned.

    def _leaf(self, tied: bool):
        lab = self._leaf_lab()
        adj = self._cert_bytes(lab)
        if self.best_inv is None or not tied or adj < self.best_adj:
            self.best_inv = tuple(self.cur_inv)
            self.best_adj = adj
            self.best_lab = lab
            self.best_fixed = self.fixed[:]
            return 1
        if tied and adj == self.best_adj:
            bl = self.best_lab
            gamma = [0] * self.v
            for p in range(self.v):
                gamma[lab[p]] = bl[p]
            self._add_generator(tuple(gamma))
            cf, bf = self.fixed, self.best_fixed
            div = len(cf)
            for i in range(len(cf)):
                if cf[i] != bf[i]:
                    div = i
                    break
            return ("aut", div)
        return 0

    def _node(self, inv: tuple, depth: int, tied: bool):
        if self.best_inv is not None and tied:
            if depth < len(self.best_inv):
                ref = self.best_inv[depth]
                if inv > ref:
                    return 0
                if inv < ref:
                    tied = False
            else:
                tied = False
        self.cur_inv.append(inv)
        try:
            ts = self._target_cell()
            if ts is None:
                return self._leaf(tied)
            cell = self.cells[ts]
            k = len(self.fixed)
            updated = False
            explored: list[int] = []
            uf = None
            roots: set[int] = set()
            seen_gens = 0
            y = cell
            while y:
                lsb = y & -y
                y ^= lsb
                u = lsb.bit_length() - 1
                if explored:
                    if seen_gens != len(self.gens):
                        # fold newly discovered generators into the orbit data
                        if uf is None:
                            uf = _UnionFind(self.v)
                            pending = self.gens
                        else:
                            pending = self.gens[seen_gens:]
                        fixed = self.fixed
                        for gperm in pending:
                            if all(gperm[x] == x for x in fixed):
                                for x in range(self.v):
                                    uf.union(x, gperm[x])
                        seen_gens = len(self.gens)
                        roots = {uf.find(e) for e in explored}
                    if roots and uf.find(u) in roots:
                        continue
                snap = self._snapshot()
                q = self._individualize(ts, u)
                self.fixed.append(u)
                child_inv = self._refine(q)
                r = self._node(child_inv, depth + 1, tied)
                self.fixed.pop()
                self._restore(snap)
                explored.append(u)
                if roots and uf is not None:
                    roots.add(uf.find(u))
                if r == 1:
                    updated = True
                    tied = True
                elif type(r) is tuple and r[1] < k:
                    return r
            return 1 if updated else 0
        finally:
            self.cur_inv.pop()

    def run(self) -> list[int]:
        queue = self._initial_partition()
        trace = self._refine(queue)
        self._node((self.init_shape, trace), 0, True)
        return self.best_lab


def canonical_form(g: DenseGraph, seed_automorphisms=None) -> CanonicalForm:
    """Exact canonical representative of g.

    Two graphs are isomorphic iff their canonical g6 strings are equal.
    seed_automorphisms, when given, must be known automorphisms of g (they are
    verified); they only prune the search and never change the result.
    """
    if g.v == 0:
        empty = DenseGraph(0, [], _validate=False)
        return CanonicalForm(empty, graph6_encode(empty), ())
    canon = _Canonizer(g, seed_automorphisms)
    lab = canon.run()
    relabelled = g.permuted(lab)
    return CanonicalForm(relabelled, graph6_encode(relabelled), tuple(lab))


def is_isomorphic(g: DenseGraph, h: DenseGraph) -> bool:
    """Exact isomorphism test by canonical form comparison."""
    if g.v != h.v or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g).g6 == canonical_form(h).g6
