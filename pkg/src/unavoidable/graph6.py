"""graph6 encoding (one graph per line, printable ASCII)."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graphs import SimpleGraph, index_pairs, pair_count


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated order field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated order field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode(g: SimpleGraph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for i, j in index_pairs(g.n):
        acc = (acc << 1) | (g.adj[j] >> i & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> SimpleGraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    data = text.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    n, off = _decode_n(data)
    need = (pair_count(n) + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise Graph6Error(f"graph6 length mismatch: order {n} needs {need} data bytes, got {len(body)}")
    adj = [0] * n
    pos = 0
    for i, j in index_pairs(n):
        byte = body[pos // 6] - 63
        if byte >> (5 - pos % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        pos += 1
    return SimpleGraph(n, tuple(adj))


def read_lines(stream: TextIO) -> Iterator[SimpleGraph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[SimpleGraph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
