"""Rank/unrank simple bipartite graphs with prescribed degree sequences.

A graph with left degrees a and right degrees b is mapped to the integer
f = ceil(N / prod(b_j!)), where N counts half-edge configurations whose
adjacency vector precedes the graph's lexicographically.  N is computed by
a divide-and-conquer recursion over intervals of left vertices; decoding
inverts it with interval proxies and per-vertex binary search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fenwick import SuffixFenwick
from .intmath import ONE, ZERO, ceil_div, compute_product, mpz, prod_factorial


@dataclass(frozen=True)
class BipartiteInstance:
    """Left/right degree sequences plus per-left-vertex neighbor lists."""

    a: tuple
    b: tuple
    adj: tuple  # adj[v] = increasing right neighbors of left vertex v+1

    def __post_init__(self):
        if len(self.adj) != len(self.a):
            raise ValueError("adjacency size does not match left degrees")
        if sum(self.a) != sum(self.b):
            raise ValueError("degree sums differ between sides")
        n_r = len(self.b)
        right_deg = [0] * (n_r + 1)
        for v, neigh in enumerate(self.adj):
            if len(neigh) != self.a[v]:
                raise ValueError(f"left vertex {v + 1}: degree mismatch")
            prev = 0
            for w in neigh:
                if not prev < w <= n_r:
                    raise ValueError(f"left vertex {v + 1}: bad neighbor list")
                prev = w
                right_deg[w] += 1
        if tuple(right_deg[1:]) != tuple(self.b):
            raise ValueError("right degrees do not match adjacency")

    @property
    def n_l(self) -> int:
        return len(self.a)

    @property
    def n_r(self) -> int:
        return len(self.b)


def _compute_n(a, adj, bres, fen, i, j, trace):
    """Configuration count and l-product for left interval [i, j].

    bres and fen hold the residual right degrees for the prefix before i;
    both are advanced to the state after j.  Returns (N_ij, l_ij).  When a
    trace list is given, (i, j, N_ij, l_ij, r_ij) is appended per interval.
    """
    s_entry = fen.suffix_sum(1) if trace is not None else 0
    if i == j:
        z = ZERO
        l = ONE
        ai = a[i - 1]
        neigh = adj[i - 1]
        for k in range(ai):
            y = compute_product(fen.suffix_sum(1 + neigh[k]), ai - k, 1)
            if y:
                y //= compute_product(ai - k, ai - k, 1)
                z += l * y
            l *= bres[neigh[k]]
            fen.add(neigh[k], -1)
            bres[neigh[k]] -= 1
        n_ij, l_ij = z, l
    else:
        k = (i + j) // 2
        n_ik, l_ik = _compute_n(a, adj, bres, fen, i, k, trace)
        s_k1 = fen.suffix_sum(1)
        n_kj, l_kj = _compute_n(a, adj, bres, fen, k + 1, j, trace)
        s_j1 = fen.suffix_sum(1)
        r = compute_product(s_k1, s_k1 - s_j1, 1) // prod_factorial(a, k + 1, j)
        n_ij = n_ik * r + l_ik * n_kj
        l_ij = l_ik * l_kj
    if trace is not None:
        s_exit = fen.suffix_sum(1)
        r_ij = compute_product(s_entry, s_entry - s_exit, 1) // prod_factorial(a, i, j)
        trace.append((i, j, n_ij, l_ij, r_ij))
    return n_ij, l_ij


def b_configuration_count(inst: BipartiteInstance, trace=None):
    """N(G): configurations lexicographically below the graph's rows."""
    bres = [0] + [int(x) for x in inst.b]
    fen = SuffixFenwick(list(inst.b))
    n, _ = _compute_n(inst.a, inst.adj, bres, fen, 1, inst.n_l, trace)
    return n


def b_encode(inst: BipartiteInstance):
    """Rank of the bipartite graph: ceil(N / prod of right factorials)."""
    if inst.n_l == 0:
        return ZERO
    bres = [0] + [int(x) for x in inst.b]
    fen = SuffixFenwick(list(inst.b))
    n, l = _compute_n(inst.a, inst.adj, bres, fen, 1, inst.n_l, None)
    # l equals prod(b_j!) once the whole interval is consumed.
    return ceil_div(n, l)


def _decode_node(a, bres, fen, i, n_r, ntilde):
    """Recover the neighbor list of left vertex i from its proxy count."""
    z_t = ntilde
    z = ZERO
    l = ONE
    ai = a[i - 1]
    neigh = []
    prev = 0
    for k in range(ai):
        q = ai - k
        lo = prev + 1 if k else 1
        hi = n_r
        qfact = compute_product(q, q, 1)
        while hi > lo:
            mid = (lo + hi) // 2
            y = compute_product(fen.suffix_sum(1 + mid), q, 1) // qfact
            if y <= z_t:
                hi = mid
            else:
                lo = mid + 1
        prev = lo
        neigh.append(lo)
        y = compute_product(fen.suffix_sum(1 + lo), q, 1) // qfact
        z_t = (z_t - y) // bres[lo]
        z += l * y
        l *= bres[lo]
        fen.add(lo, -1)
        bres[lo] -= 1
    return z, neigh, l


def _decode_interval(a, bres, fen, wfen, i, j, n_r, ntilde, out):
    """Decode left vertices [i, j]; returns (N_ij, l_ij)."""
    if i == j:
        n_ii, neigh, l = _decode_node(a, bres, fen, i, n_r, ntilde)
        out[i - 1] = tuple(neigh)
        return n_ii, l
    k = (i + j) // 2
    s_k1 = wfen.suffix_sum(k + 1)
    s_j1 = wfen.suffix_sum(j + 1)
    r = compute_product(s_k1, s_k1 - s_j1, 1) // prod_factorial(a, k + 1, j)
    n_ik, l_ik = _decode_interval(a, bres, fen, wfen, i, k, n_r, ntilde // r, out)
    nt_kj = (ntilde - n_ik * r) // l_ik
    n_kj, l_kj = _decode_interval(a, bres, fen, wfen, k + 1, j, n_r, nt_kj, out)
    return n_ik * r + l_ik * n_kj, l_ik * l_kj


def b_decode(f, a, b) -> tuple:
    """Inverse of b_encode given the two degree sequences.

    Defined only on valid ranks; inconsistent degree sums are rejected,
    anything else garbage-in garbage-out.
    """
    if sum(a) != sum(b):
        raise ValueError("degree sums differ between sides")
    n_l, n_r = len(a), len(b)
    if n_l == 0:
        return ()
    ntilde = mpz(f) * prod_factorial(b, 1, n_r) if n_r else mpz(f)
    bres = [0] + [int(x) for x in b]
    fen = SuffixFenwick(list(b))
    wfen = SuffixFenwick(list(a))
    out = [()] * n_l
    _decode_interval(a, bres, fen, wfen, 1, n_l, n_r, ntilde, out)
    return tuple(out)


def b_count_oracle(inst: BipartiteInstance):
    """Brute-force N(G): enumerate all configurations, count the smaller.

    Half-edges are labeled per right vertex; a configuration assigns each
    left vertex i a set of a_i of them.  Only usable for small S.
    """
    if sum(inst.a) > 12:
        raise ValueError("instance too large for enumeration")
    half_owner = []  # right vertex of each labeled half-edge
    for j, bj in enumerate(inst.b, start=1):
        half_owner.extend([j] * bj)
    n_r = inst.n_r
    target = _row_vector(inst.adj, inst.n_l, n_r)

    count = 0

    def assign(v, remaining, rows):
        nonlocal count
        if v == inst.n_l:
            if rows < target:
                count += 1
            return
        need = inst.a[v]
        rem = sorted(remaining)
        for chosen in combinations(rem, need):
            row = [0] * n_r
            for idx in chosen:
                row[half_owner[idx] - 1] += 1
            # Prune on lexicographic order as soon as the prefix decides.
            new_rows = rows + tuple(row)
            prefix = target[: len(new_rows)]
            if new_rows > prefix:
                continue
            if new_rows < prefix:
                # Everything below stays below; count completions.
                count += _completions(v + 1, set(rem) - set(chosen))
                continue
            assign(v + 1, set(rem) - set(chosen), new_rows)

    def _completions(v, remaining):
        total = 1
        rem = len(remaining)
        for u in range(v, inst.n_l):
            need = inst.a[u]
            ways = 1
            for t in range(need):
                ways = ways * (rem - t)
            total *= ways // compute_product(need, need, 1) if need else 1
            rem -= need
        return total

    assign(0, set(range(len(half_owner))), ())
    return mpz(count)


def _row_vector(adj, n_l, n_r):
    rows = []
    for v in range(n_l):
        row = [0] * n_r
        for w in adj[v]:
            row[w - 1] = 1
        rows.extend(row)
    return tuple(rows)
