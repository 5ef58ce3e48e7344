"""Self-delimiting codec for sequences of nonnegative integers.

A sequence y of length n maps to an auxiliary bipartite graph: left vertex
i connects to right vertex 1 + y_i, and right degrees are the symbol
frequencies.  The payload is Elias delta of the symbol bound K, the K
frequencies (offset by one, they may be zero), and the bipartite rank
(offset by one as well).
"""

from __future__ import annotations

from .bipartite import BipartiteInstance, b_decode, b_encode
from .bits import BitReader, BitWriter


def encode_sequence(y, out: BitWriter) -> None:
    """Append the prefix-free encoding of y (length >= 1) to out."""
    n = len(y)
    if n < 1:
        raise ValueError("cannot encode an empty sequence")
    k = 1 + max(y)
    freq = [0] * k
    for v in y:
        if v < 0:
            raise ValueError("sequence values must be nonnegative")
        freq[v] += 1
    adj = tuple((1 + v,) for v in y)
    f = b_encode(BipartiteInstance(a=(1,) * n, b=tuple(freq), adj=adj))
    out.write_elias_delta(k)
    for bj in freq:
        out.write_elias_delta(1 + bj)
    out.write_elias_delta(1 + f)


def decode_sequence(n: int, reader: BitReader) -> list:
    """Read one encode_sequence payload of known length n."""
    k = reader.read_elias_delta()
    if k > reader.remaining():  # each frequency costs at least one bit
        raise ValueError(f"symbol bound {k} exceeds remaining stream")
    freq = [reader.read_elias_delta() - 1 for _ in range(k)]
    f = reader.read_elias_delta() - 1
    adj = b_decode(f, (1,) * n, tuple(freq))
    return [neigh[0] - 1 for neigh in adj]
