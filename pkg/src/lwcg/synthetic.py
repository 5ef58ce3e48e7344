"""Synthetic marked graphs and the depth-1 entropy target.

The generator draws, at every vertex, a Poisson number of uniformly chosen
distinct partners; coinciding choices merge, so the local limit is a
Galton-Watson tree with mean offspring twice the Poisson mean, carrying
i.i.d. uniform vertex and edge marks.

The estimator Monte-Carlo evaluates the depth-1 entropy functional of that
limit,

    J1 = -s(d) + H(P) - (d/2) H(pi) - sum E[log E(t,t')!],

with s(d) = d/2 - (d/2) ln d, P the law of the depth-1 root neighborhood,
pi the edge-type pair distribution, and E(t,t') the per-root counts of
neighbors by type pair.  All entropies are empirical plug-ins over the
sampled neighborhoods (slightly biased low; acceptable for a tolerance
line), reported in nats together with a batch-based standard error.
"""

from __future__ import annotations

import math

import numpy as np

from .graph_model import EdgeListGraph


def _poisson_inversion(rng, lam: float) -> int:
    """Poisson by CDF inversion from a single uniform; fixed algorithm so
    files regenerate identically for a given seed and library versions."""
    u = rng.random()
    p = math.exp(-lam)
    cdf = p
    k = 0
    while u > cdf:
        k += 1
        p *= lam / k
        cdf += p
        if p == 0.0:  # numeric tail guard
            break
    return k


def gen_synthetic(n: int, lam: float, sigma_e: int, sigma_v: int, seed: int) -> EdgeListGraph:
    """Random marked graph with mean degree about 2*lam."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not lam > 0:
        raise ValueError("lambda must be > 0")
    if sigma_e < 1 or sigma_v < 1:
        raise ValueError("mark alphabets must be nonempty")
    rng = np.random.Generator(np.random.PCG64(seed))

    pairs = set()
    for v in range(1, n + 1):
        d = _poisson_inversion(rng, lam)
        d = min(d, n - 1)
        chosen = set()
        while len(chosen) < d:
            w = int(rng.integers(1, n + 1))
            if w != v and w not in chosen:
                chosen.add(w)
        for w in chosen:
            pairs.add((v, w) if v < w else (w, v))

    theta = tuple(int(t) for t in rng.integers(1, sigma_v + 1, size=n))
    edges = []
    for v, w in sorted(pairs):
        x = int(rng.integers(1, sigma_e + 1))
        xp = int(rng.integers(1, sigma_e + 1))
        edges.append((v, w, x, xp))
    return EdgeListGraph(n=n, sigma_v=sigma_v, sigma_e=sigma_e,
                         theta=theta, edges=tuple(edges))


def _j1_from_counts(root_marks, counts):
    """Plug-in J1 from per-sample root marks and neighbor category counts.

    The (root mark, category-count vector) row is a faithful encoding of
    the depth-1 canonical form (root mark plus sorted child triples), so
    keying on it matches canonicalizing each neighborhood explicitly.
    """
    samples = len(root_marks)
    degrees = counts.sum(axis=1)
    d = float(degrees.mean())
    if d == 0.0:
        s_d = 0.0
    else:
        s_d = d / 2 - (d / 2) * math.log(d)

    # H(P): empirical entropy of the canonicalized neighborhood, with the
    # Miller-Madow correction (+ (K-1)/2N) since the support is large
    # relative to realistic sample counts.
    keyed = np.concatenate([root_marks[:, None], counts], axis=1)
    _, freq = np.unique(keyed, axis=0, return_counts=True)
    p = freq / samples
    h_p = float(-(p * np.log(p)).sum()) + (len(freq) - 1) / (2 * samples)

    # pi: type-pair distribution.  A neighbor category (x, xp, child mark)
    # seen from a root with mark tm is the pair t=(x, tm), t'=(xp, cm); the
    # entropy only needs the joint counts, so key categories by root mark.
    parts = []
    for mark in np.unique(root_marks):
        parts.append(counts[root_marks == mark].sum(axis=0, dtype=np.float64))
    e_flat = np.concatenate(parts) if parts else np.zeros(0)
    e_flat = e_flat[e_flat > 0]
    if e_flat.size and d > 0:
        pi = e_flat / (d * samples)
        h_pi = float(-(pi * np.log(pi)).sum())
    else:
        h_pi = 0.0

    # E[log E(t,t')!] summed over pairs: mean over samples of the log
    # factorials of each per-category count.
    maxc = int(counts.max()) if counts.size else 0
    logfact = np.zeros(maxc + 1)
    if maxc:
        logfact[1:] = np.cumsum(np.log(np.arange(1, maxc + 1)))
    elogf = float(logfact[counts].sum() / samples)

    return -s_d + h_p - (d / 2) * h_pi - elogf


def estimate_bc_entropy_h1(lam: float, sigma_e: int, sigma_v: int,
                           samples: int, seed: int = 0, batches: int = 16):
    """Monte-Carlo estimate of the depth-1 entropy target, in nats.

    Samples depth-1 neighborhoods of the limit: root degree Poisson(2*lam),
    uniform root mark, and i.i.d. uniform (edge-mark-pair, child-mark)
    categories.  Returns (estimate, standard_error); the error is the
    spread of per-batch estimates.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.Generator(np.random.PCG64(seed))
    ncat = sigma_e * sigma_e * sigma_v

    def draw(count):
        marks = rng.integers(1, sigma_v + 1, size=count)
        degs = rng.poisson(2 * lam, size=count)
        counts = np.zeros((count, ncat), dtype=np.int64)
        total = int(degs.sum())
        if total:
            cats = rng.integers(0, ncat, size=total)
            owner = np.repeat(np.arange(count), degs)
            np.add.at(counts, (owner, cats), 1)
        return marks, counts

    marks, counts = draw(samples)
    estimate = _j1_from_counts(marks, counts)

    batches = min(batches, samples)
    size = samples // batches
    per_batch = []
    for b in range(batches):
        sl = slice(b * size, (b + 1) * size if b < batches - 1 else samples)
        per_batch.append(_j1_from_counts(marks[sl], counts[sl]))
    stderr = float(np.std(per_batch, ddof=1) / math.sqrt(batches)) if batches > 1 else 0.0
    return estimate, stderr
