"""Rank/unrank simple unmarked graphs with a prescribed degree sequence.

The rank f counts half-edge matchings whose adjacency vector precedes the
graph's (upper-triangular, row-major), divided by prod(a_v!).  Alongside f
the encoder emits a checkpoint array of residual half-edge totals at the
midpoints of large recursion intervals; the decoder needs those to split
its proxy counts without re-walking the prefix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fenwick import SuffixFenwick
from .intmath import ONE, ZERO, ceil_div, compute_product, mpz, prod_factorial


@dataclass(frozen=True)
class SimpleInstance:
    """Degree sequence plus forward adjacency (neighbors above each vertex)."""

    a: tuple
    fwd: tuple  # fwd[v] = increasing neighbors of v+1 that are > v+1

    def __post_init__(self):
        pn = len(self.a)
        if pn < 2:
            raise ValueError("need at least two vertices")
        if len(self.fwd) != pn:
            raise ValueError("forward adjacency size does not match degrees")
        seen_back = [0] * (pn + 1)
        for v, neigh in enumerate(self.fwd, start=1):
            prev = v
            for w in neigh:
                if not prev < w <= pn:
                    raise ValueError(f"vertex {v}: bad forward list")
                prev = w
                seen_back[w] += 1
        for v in range(1, pn + 1):
            if len(self.fwd[v - 1]) + seen_back[v] != self.a[v - 1]:
                raise ValueError(f"vertex {v}: degree mismatch")

    @property
    def pn(self) -> int:
        return len(self.a)


def split_threshold(pn: int) -> int:
    """Interval length above which the recursion stores a checkpoint."""
    return (pn.bit_length() - 1) ** 2


def checkpoint_len(pn: int) -> int:
    """Checkpoint array length floor(16 pn / ln^2 pn)."""
    return int(16 * pn / math.log(pn) ** 2)


def _compute_n(a, fwd, ares, fen, i, j, index, cps, thr, trace):
    """N and l for vertex interval [i, j]; fills checkpoints along the way.

    When a trace list is given, (i, j, N_ij, l_ij, r_ij) is appended per
    interval visited.
    """
    s_entry = fen.suffix_sum(i) if trace is not None else 0
    if i == j:
        z = ZERO
        l = ONE
        ahat = ares[i]
        neigh = fwd[i - 1]
        for k in range(ahat):
            w = neigh[k]
            y = compute_product(fen.suffix_sum(1 + w), ahat - k, 1)
            if y:
                z += l * y
            c = (ahat - k) * ares[w]
            l *= c
            ares[w] -= 1
            fen.add(w, -1)
        n_ij, l_ij = z, l
    else:
        k = (i + j) // 2
        n_ik, l_ik = _compute_n(a, fwd, ares, fen, i, k, 2 * index, cps, thr, trace)
        s_k1 = fen.suffix_sum(k + 1)
        if j - i + 1 > thr:
            cps[index] = s_k1
        n_kj, l_kj = _compute_n(a, fwd, ares, fen, k + 1, j, 2 * index + 1, cps, thr, trace)
        s_j1 = fen.suffix_sum(j + 1)
        r = compute_product(s_k1 - 1, (s_k1 - s_j1) // 2, 2)
        n_ij = n_ik * r + l_ik * n_kj
        l_ij = l_ik * l_kj
    if trace is not None:
        s_exit = fen.suffix_sum(j + 1)
        r_ij = compute_product(s_entry - 1, (s_entry - s_exit) // 2, 2)
        trace.append((i, j, n_ij, l_ij, r_ij))
    return n_ij, l_ij


def s_configuration_count(inst: SimpleInstance, trace=None):
    """N(G): matchings of half-edges lexicographically below the graph."""
    ares = [0] + [int(x) for x in inst.a]
    fen = SuffixFenwick(list(inst.a))
    cps = [0] * (checkpoint_len(inst.pn) + 1)
    n, _ = _compute_n(inst.a, inst.fwd, ares, fen, 1, inst.pn, 1,
                      cps, split_threshold(inst.pn), trace)
    return n


def s_encode(inst: SimpleInstance):
    """Rank the graph; returns (f, checkpoints) with checkpoints 1-based."""
    pn = inst.pn
    ares = [0] + [int(x) for x in inst.a]
    fen = SuffixFenwick(list(inst.a))
    cps = [0] * (checkpoint_len(pn) + 1)
    n, l = _compute_n(inst.a, inst.fwd, ares, fen, 1, pn, 1,
                      cps, split_threshold(pn), None)
    return ceil_div(n, l), cps


def _decode_node(ares, fen, i, pn, ntilde):
    z_t = ntilde
    z = ZERO
    l = ONE
    ahat = ares[i]
    neigh = []
    prev = i
    for k in range(ahat):
        q = ahat - k
        lo, hi = prev + 1, pn
        while hi > lo:
            mid = (lo + hi) // 2
            if compute_product(fen.suffix_sum(1 + mid), q, 1) <= z_t:
                hi = mid
            else:
                lo = mid + 1
        prev = lo
        neigh.append(lo)
        y = compute_product(fen.suffix_sum(1 + lo), q, 1)
        z += l * y
        c = q * ares[lo]
        l *= c
        ares[lo] -= 1
        fen.add(lo, -1)
        z_t = (z_t - y) // c
    return z, neigh, l


def _decode_interval(ares, fen, i, j, pn, ntilde, index, s_j1, cps, thr, a, out):
    if i == j:
        n_ii, neigh, l = _decode_node(ares, fen, i, pn, ntilde)
        out[i - 1] = tuple(neigh)
        return n_ii, l
    if j - i + 1 > thr:
        k = (i + j) // 2
        s_k1 = cps[index]
    else:
        k = i
        s_k1 = fen.suffix_sum(i) - 2 * ares[i]
    r = compute_product(s_k1 - 1, (s_k1 - s_j1) // 2, 2)
    n_ik, l_ik = _decode_interval(ares, fen, i, k, pn, ntilde // r,
                                  2 * index, s_k1, cps, thr, a, out)
    nt_kj = (ntilde - n_ik * r) // l_ik
    n_kj, l_kj = _decode_interval(ares, fen, k + 1, j, pn, nt_kj,
                                  2 * index + 1, s_j1, cps, thr, a, out)
    return n_ik * r + l_ik * n_kj, l_ik * l_kj


def s_decode(f, cps, a) -> tuple:
    """Inverse of s_encode: forward adjacency lists from (f, checkpoints)."""
    pn = len(a)
    if pn < 2:
        raise ValueError("need at least two vertices")
    ntilde = mpz(f) * prod_factorial(a, 1, pn)
    ares = [0] + [int(x) for x in a]
    fen = SuffixFenwick(list(a))
    out = [()] * pn
    _decode_interval(ares, fen, 1, pn, pn, ntilde, 1, 0, cps,
                     split_threshold(pn), a, out)
    return tuple(out)


def s_count_oracle(inst: SimpleInstance):
    """Brute-force N(G): enumerate all matchings of the half-edges.

    A matching pairs labeled half-edges (vertex copies); its multigraph is
    compared to the graph row-major over the upper triangle including the
    diagonal.  Only usable for small S.
    """
    S = sum(inst.a)
    if S > 12:
        raise ValueError("instance too large for enumeration")
    pn = inst.pn
    owners = []
    for v, av in enumerate(inst.a, start=1):
        owners.extend([v] * av)

    target = _upper_vector_from_fwd(inst.fwd, pn)
    count = 0

    def upper_vector_from_pairs(pairs):
        mat = [[0] * (pn + 1) for _ in range(pn + 1)]
        for hx, hy in pairs:
            u, w = owners[hx], owners[hy]
            if u > w:
                u, w = w, u
            mat[u][w] += 1
        return _flatten_upper(mat, pn)

    def match(remaining, pairs):
        nonlocal count
        if not remaining:
            if upper_vector_from_pairs(pairs) < target:
                count += 1
            return
        first = remaining[0]
        rest = remaining[1:]
        for idx in range(len(rest)):
            match(rest[:idx] + rest[idx + 1:], pairs + [(first, rest[idx])])

    match(tuple(range(len(owners))), [])
    return mpz(count)


def _upper_vector_from_fwd(fwd, pn):
    mat = [[0] * (pn + 1) for _ in range(pn + 1)]
    for v, neigh in enumerate(fwd, start=1):
        for w in neigh:
            mat[v][w] = 1
    return _flatten_upper(mat, pn)


def _flatten_upper(mat, pn):
    out = []
    for v in range(1, pn + 1):
        out.extend(mat[v][v:])
    return tuple(out)
