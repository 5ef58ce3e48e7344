"""Full marked-graph codec: header, type tables, star channels, vertex
types, and one ranking codec per partition graph.

Wire layout (MSB-first bits, zero-padded to a byte boundary at the end):

  magic "LWCG", version byte 0x01,
  ED(n) ED(|xi|) ED(|theta|) ED(h) ED(delta),
  ED(1+TCount), then per label: star bit + mark in width(|xi|) bits,
  star-vertex bitmap            (sequence codec),
  star edges                    (flagged neighbor lists per mark pair),
  vertex types                  (dictionary + id sequence),
  ED(1+#partition graphs), then per key (i, i') in increasing order:
      i and i' in width(TCount) bits,
      i < i':  ED(1+f)                      (bipartite rank)
      i == i': ED(1+f) ED(1+len) ED(1+cp_j) (simple rank + checkpoints)

ED is the Elias delta code; width(x) = 1 + floor(log2(max(x, 1))).
"""

from __future__ import annotations

from .bipartite import BipartiteInstance, b_decode, b_encode
from .bits import BitReader, BitWriter, width
from .edge_types import EdgeTypeTable, extract_types
from .graph_model import EdgeListGraph, NeighborListGraph, preprocess
from .sequences import decode_sequence, encode_sequence
from .simple_graph import SimpleInstance, s_decode, s_encode

MAGIC = b"LWCG"
VERSION = 1


class CodecError(ValueError):
    """Compressed input is not a valid stream for this codec."""


def find_star_vertices(g: NeighborListGraph, table: EdgeTypeTable) -> list:
    """Bitmap (1-based) of vertices incident to at least one star edge."""
    s = [0] * (g.n + 1)
    is_star = table.t_is_star
    for v in range(1, g.n + 1):
        for t, tp in table.c[v]:
            if is_star[t] or is_star[tp]:
                s[v] = 1
                break
    return s


def encode_star_edges(g: NeighborListGraph, table: EdgeTypeTable, s, out: BitWriter) -> None:
    """Star-edge channel: per mark pair, flagged neighbor indices.

    For each (x, xp) in row-major order over the mark alphabet and each
    star vertex v increasing: a 1 bit plus the neighbor index for every
    incident star edge with marks (x, xp) whose far endpoint is above v,
    then a closing 0 bit.
    """
    nbits = width(g.n)
    is_star = table.t_is_star
    for x in range(1, g.sigma_e + 1):
        for xp in range(1, g.sigma_e + 1):
            for v in range(1, g.n + 1):
                if not s[v]:
                    continue
                row = table.c[v]
                for i in range(g.deg[v]):
                    t, tp = row[i]
                    if (is_star[t] or is_star[tp]) and g.gamma[v][i] > v \
                            and g.x[v][i] == x and g.xp[v][i] == xp:
                        out.write_bit(1)
                        out.write_fixed(g.gamma[v][i], nbits)
                out.write_bit(0)


def decode_star_edges(reader: BitReader, s, n: int, sigma_e: int) -> list:
    """Inverse of encode_star_edges; returns (v, w, x, xp) records."""
    nbits = width(n)
    edges = []
    for x in range(1, sigma_e + 1):
        for xp in range(1, sigma_e + 1):
            for v in range(1, n + 1):
                if not s[v]:
                    continue
                while reader.read_bit():
                    w = reader.read_fixed(nbits)
                    if not v < w <= n:
                        raise CodecError(f"star edge endpoint {w} out of range")
                    edges.append((v, w, x, xp))
    return edges


def find_deg(g: NeighborListGraph, table: EdgeTypeTable) -> list:
    """Per-vertex degree profiles: (label, mirror label) -> count, 1-based."""
    is_star = table.t_is_star
    deg = [None] * (g.n + 1)
    for v in range(1, g.n + 1):
        prof = {}
        for key in table.c[v]:
            if not (is_star[key[0]] or is_star[key[1]]):
                prof[key] = prof.get(key, 0) + 1
        deg[v] = prof
    return deg


def encode_vertex_types(deg, theta, n, delta, sigma_e, sigma_v, tcount, out: BitWriter) -> None:
    """Joint coding of vertex marks and degree profiles.

    Each vertex gets a flat signature (mark, then sorted (label, label,
    count) triples); distinct signatures go into a dictionary written
    up front, and the per-vertex ids are handed to the sequence codec.
    """
    dictionary = {}
    y = [0] * n
    for v in range(1, n + 1):
        sig = [theta[v]]
        for key in sorted(deg[v]):
            sig.extend(key)
            sig.append(deg[v][key])
        sig = tuple(sig)
        vid = dictionary.get(sig)
        if vid is None:
            vid = len(dictionary) + 1
            dictionary[sig] = vid
        y[v - 1] = vid

    w_size = width(1 + 3 * delta)
    # Vertex marks can exceed the other alphabets, so the field width
    # must cover them too or the first signature entry would not fit.
    w_elem = width(max(sigma_e, sigma_v, tcount, delta))
    w_id = width(n)
    out.write_fixed(len(dictionary), w_id)
    for sig in sorted(dictionary):
        out.write_fixed(len(sig), w_size)
        for elem in sig:
            out.write_fixed(elem, w_elem)
        out.write_fixed(dictionary[sig], w_id)
    encode_sequence(y, out)


def decode_vertex_types(reader: BitReader, n, delta, sigma_e, sigma_v, tcount):
    """Inverse of encode_vertex_types; returns (theta, deg), both 1-based."""
    w_size = width(1 + 3 * delta)
    w_elem = width(max(sigma_e, sigma_v, tcount, delta))
    w_id = width(n)
    count = reader.read_fixed(w_id)
    sigs = [None] * (count + 1)
    for _ in range(count):
        size = reader.read_fixed(w_size)
        sig = tuple(reader.read_fixed(w_elem) for _ in range(size))
        vid = reader.read_fixed(w_id)
        if not 1 <= vid <= count or sigs[vid] is not None:
            raise CodecError("bad vertex-type dictionary id")
        sigs[vid] = sig
    y = decode_sequence(n, reader)

    theta = [0] * (n + 1)
    deg = [None] * (n + 1)
    for v in range(1, n + 1):
        vid = y[v - 1]
        if not 1 <= vid <= count or sigs[vid] is None:
            raise CodecError("vertex type id out of range")
        sig = sigs[vid]
        if not sig or (len(sig) - 1) % 3:
            raise CodecError("malformed vertex-type signature")
        theta[v] = sig[0]
        prof = {}
        for k in range((len(sig) - 1) // 3):
            prof[(sig[1 + 3 * k], sig[2 + 3 * k])] = sig[3 + 3 * k]
        deg[v] = prof
    return theta, deg


def find_partition_graphs(g: NeighborListGraph, table: EdgeTypeTable, deg):
    """Group non-star edges by type pair.

    Returns (partition_deg, partition_adj, partition_index): degree arrays
    keyed by ordered label pairs, adjacency lists keyed by pairs with
    i <= i' (bipartite lists for i < i', forward lists for i == i'), and
    each vertex's rank within its groups.
    """
    partition_deg = {}
    partition_index = [None] * (g.n + 1)
    for v in range(1, g.n + 1):
        idx = {}
        for key in sorted(deg[v]):
            arr = partition_deg.get(key)
            if arr is None:
                partition_deg[key] = [deg[v][key]]
                idx[key] = 1
            else:
                arr.append(deg[v][key])
                idx[key] = len(arr)
        partition_index[v] = idx

    partition_adj = {}
    for key, arr in partition_deg.items():
        if key[0] <= key[1]:
            partition_adj[key] = [[] for _ in range(len(arr))]

    is_star = table.t_is_star
    for v in range(1, g.n + 1):
        row = table.c[v]
        for k in range(g.deg[v]):
            i, ip = row[k]
            if is_star[i] or is_star[ip]:
                continue
            w = g.gamma[v][k]
            p = partition_index[v][(i, ip)]
            q = partition_index[w][(ip, i)]
            if i < ip:
                partition_adj[(i, ip)][p - 1].append(q)
            elif i == ip and q > p:
                partition_adj[(i, i)][p - 1].append(q)
    return partition_deg, partition_adj, partition_index


def decode_partition_structures(deg, n):
    """Decoder-side tables: degree arrays plus original vertex per rank."""
    partition_deg = {}
    original_index = {}
    for v in range(1, n + 1):
        for key in sorted(deg[v]):
            if key not in partition_deg:
                partition_deg[key] = [deg[v][key]]
                original_index[key] = [v]
            else:
                partition_deg[key].append(deg[v][key])
                original_index[key].append(v)
    return partition_deg, original_index


def encode_marked_graph(g: EdgeListGraph, h: int, delta: int) -> bytes:
    """Compress a marked graph to bytes; lossless up to edge-record order."""
    if h < 1 or delta < 1:
        raise ValueError("need h >= 1 and delta >= 1")
    nl = preprocess(g)
    table = extract_types(nl, h, delta)

    out = BitWriter()
    for byte in MAGIC:
        out.write_fixed(byte, 8)
    out.write_fixed(VERSION, 8)
    out.write_elias_delta(g.n)
    out.write_elias_delta(g.sigma_e)
    out.write_elias_delta(g.sigma_v)
    out.write_elias_delta(h)
    out.write_elias_delta(delta)

    out.write_elias_delta(1 + table.tcount)
    w_mark = width(g.sigma_e)
    for i in range(1, table.tcount + 1):
        out.write_bit(table.t_is_star[i])
        out.write_fixed(table.t_mark[i], w_mark)

    s = find_star_vertices(nl, table)
    encode_sequence(s[1:], out)
    encode_star_edges(nl, table, s, out)

    deg = find_deg(nl, table)
    encode_vertex_types(deg, nl.theta, g.n, delta, g.sigma_e, g.sigma_v,
                        table.tcount, out)

    partition_deg, partition_adj, _ = find_partition_graphs(nl, table, deg)
    out.write_elias_delta(1 + len(partition_adj))
    w_label = width(table.tcount)
    for key in sorted(partition_adj):
        i, ip = key
        out.write_fixed(i, w_label)
        out.write_fixed(ip, w_label)
        adj = tuple(tuple(row) for row in partition_adj[key])
        if i < ip:
            inst = BipartiteInstance(a=tuple(partition_deg[(i, ip)]),
                                     b=tuple(partition_deg[(ip, i)]),
                                     adj=adj)
            out.write_elias_delta(1 + b_encode(inst))
        else:
            inst = SimpleInstance(a=tuple(partition_deg[(i, i)]), fwd=adj)
            f, cps = s_encode(inst)
            out.write_elias_delta(1 + f)
            out.write_elias_delta(1 + (len(cps) - 1))
            for j in range(1, len(cps)):
                out.write_elias_delta(1 + cps[j])
    return out.to_bytes()


def decode_marked_graph(data: bytes) -> EdgeListGraph:
    """Inverse of encode_marked_graph (canonical edge order may differ)."""
    reader = BitReader(data)
    magic = bytes(reader.read_fixed(8) for _ in range(4))
    if magic != MAGIC:
        raise CodecError(f"bad magic {magic!r}")
    version = reader.read_fixed(8)
    if version != VERSION:
        raise CodecError(f"unsupported version {version}")
    n = reader.read_elias_delta()
    sigma_e = reader.read_elias_delta()
    sigma_v = reader.read_elias_delta()
    h = reader.read_elias_delta()
    delta = reader.read_elias_delta()
    del h  # recorded in the header; decoding never re-runs type extraction

    tcount = reader.read_elias_delta() - 1
    w_mark = width(sigma_e)
    if tcount * (1 + w_mark) > reader.remaining():
        raise CodecError(f"type count {tcount} exceeds remaining stream")
    t_is_star = [0] * (tcount + 1)
    t_mark = [0] * (tcount + 1)
    for i in range(1, tcount + 1):
        t_is_star[i] = reader.read_bit()
        t_mark[i] = reader.read_fixed(w_mark)

    s = [0] + decode_sequence(n, reader)
    if any(bit not in (0, 1) for bit in s):
        raise CodecError("star bitmap is not binary")
    edges = decode_star_edges(reader, s, n, sigma_e)

    theta, deg = decode_vertex_types(reader, n, delta, sigma_e, sigma_v, tcount)
    partition_deg, original_index = decode_partition_structures(deg, n)

    n_parts = reader.read_elias_delta() - 1
    w_label = width(tcount)
    for _ in range(n_parts):
        i = reader.read_fixed(w_label)
        ip = reader.read_fixed(w_label)
        if (i, ip) not in partition_deg or ((i < ip) and (ip, i) not in partition_deg):
            raise CodecError(f"partition key ({i},{ip}) has no degree data")
        if i < ip:
            f = reader.read_elias_delta() - 1
            adj = b_decode(f, tuple(partition_deg[(i, ip)]),
                           tuple(partition_deg[(ip, i)]))
        elif i == ip:
            f = reader.read_elias_delta() - 1
            ln = reader.read_elias_delta() - 1
            if ln > reader.remaining():
                raise CodecError("checkpoint count exceeds remaining stream")
            cps = [0] * (ln + 1)
            for j in range(1, ln + 1):
                cps[j] = reader.read_elias_delta() - 1
            adj = s_decode(f, cps, tuple(partition_deg[(i, i)]))
        else:
            raise CodecError(f"partition key ({i},{ip}) not in increasing order")
        x = t_mark[i]
        xp = t_mark[ip]
        back_a = original_index[(i, ip)]
        back_b = original_index[(ip, i)]
        for p, neigh in enumerate(adj):
            vp = back_a[p]
            for q in neigh:
                edges.append((vp, back_b[q - 1], x, xp))

    return EdgeListGraph(n=n, sigma_v=sigma_v, sigma_e=sigma_e,
                         theta=tuple(theta[1:]), edges=tuple(edges))
