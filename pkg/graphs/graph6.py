"""
graph6 reader and writer (header-less, upper-triangle column-major bits)
"""

from typing import Iterable, Iterator, List, TextIO

from .core import Graph, Graph6Error

HEADER = ">>graph6<<"


def _encode_order(n: int) -> List[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    raise Graph6Error(f"graph6 cannot encode {n} vertices")


def to_graph6(G: Graph) -> str:
    data = _encode_order(G.n)
    bits = [1 if G.masks[j] >> i & 1 else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        group = 0
        for bit in bits[k:k + 6]:
            group = group << 1 | bit
        data.append(group + 63)
    return bytes(data).decode("ascii")


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string")
    values = [ord(ch) - 63 for ch in text]
    if any(not 0 <= x <= 63 for x in values):
        raise Graph6Error(f"invalid graph6 character in {text!r}")

    if values[0] < 63:
        n, body = values[0], values[1:]
    elif len(values) >= 4 and values[1] < 63:
        n = values[1] << 12 | values[2] << 6 | values[3]
        body = values[4:]
    else:
        raise Graph6Error(f"unsupported graph6 length prefix in {text!r}")

    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"graph6 body for n={n} needs {expected} characters, got {len(body)}")

    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    # padding bits must be zero for a canonical string
    if k % 6 and body[-1] & ((1 << (6 - k % 6)) - 1):
        raise Graph6Error(f"non-zero padding in {text!r}")
    return Graph(n, tuple(masks))


def read_graph6_lines(stream: TextIO) -> Iterator[Graph]:
    """One graph per non-blank line; a bare header line is skipped"""
    for line in stream:
        line = line.strip()
        if line and line != HEADER:
            yield from_graph6(line)


def write_graph6_lines(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for G in graphs:
        stream.write(to_graph6(G) + "\n")
        count += 1
    return count
