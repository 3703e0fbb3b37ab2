"""
Graph I/O: graph6, DIMACS and plain edge lists.

graph6 is handled bit-exactly (size prefix, column-major upper triangle,
6-bit groups offset by 63, zero padding enforced). DIMACS uses 1-based
vertices on disk and 0-based indices in memory.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, List, Literal, Optional, Union

from .errors import MalformedInput, SizeCapExceeded
from .graph_core import MAX_VERTICES, Graph, build_graph

GraphFormat = Literal["graph6", "dimacs", "edgelist"]

GRAPH6_HEADER = ">>graph6<<"
_SMALL_N = 62
_MEDIUM_N = 258047


def _encode_size(n: int) -> str:
    if n <= _SMALL_N:
        return chr(n + 63)
    if n <= _MEDIUM_N:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def _upper_triangle_bits(g: Graph) -> List[int]:
    return [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]


def write_graph6(g: Graph) -> str:
    """Encode g as a graph6 record (no header, no newline)."""
    if g.n > MAX_VERTICES:
        raise SizeCapExceeded("graph6 writer", g.n, MAX_VERTICES)
    bits = _upper_triangle_bits(g)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_size(g.n)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 record.

    Raises:
        MalformedInput: bytes outside 63..126, wrong payload length or
            nonzero padding bits
        SizeCapExceeded: n above the vertex cap
    """
    record = text.strip()
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):]
    if not record:
        raise MalformedInput("empty graph6 record")
    values = []
    for ch in record:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise MalformedInput(f"graph6 byte {code} outside 63..126")
        values.append(code - 63)

    if values[0] != 63:
        n, body = values[0], values[1:]
    elif len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise MalformedInput("truncated graph6 size field")
        n = 0
        for v in values[2:8]:
            n = (n << 6) | v
        body = values[8:]
    else:
        if len(values) < 4:
            raise MalformedInput("truncated graph6 size field")
        n = 0
        for v in values[1:4]:
            n = (n << 6) | v
        body = values[4:]
    if n > MAX_VERTICES:
        raise SizeCapExceeded("graph6 record", n, MAX_VERTICES)

    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) < expected:
        raise MalformedInput(f"truncated graph6 payload: {len(body)} of {expected} bytes")
    if len(body) > expected:
        raise MalformedInput(f"graph6 payload has {len(body) - expected} trailing bytes")
    stream = 0
    for v in body:
        stream = (stream << 6) | v
    pad = expected * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise MalformedInput("nonzero graph6 padding bits")
    stream >>= pad

    rows = [0] * n
    t = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> t & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t -= 1
    return Graph(n, tuple(rows))


def _content_lines(text: str, comment: str) -> Iterator[tuple]:
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield number, line


def _parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    edges = []
    for number, line in _content_lines(text, "c"):
        fields = line.split()
        if fields[0] == "p":
            if len(fields) < 3 or n is not None:
                raise MalformedInput("bad or repeated problem line", number)
            try:
                n = int(fields[2])
            except ValueError:
                raise MalformedInput(f"bad vertex count {fields[2]!r}", number) from None
        elif fields[0] == "e":
            if n is None:
                raise MalformedInput("edge line before problem line", number)
            if len(fields) != 3:
                raise MalformedInput("edge line needs two endpoints", number)
            try:
                u, v = int(fields[1]) - 1, int(fields[2]) - 1
            except ValueError:
                raise MalformedInput(f"bad endpoints in {line!r}", number) from None
            if u == v:
                raise MalformedInput(f"self-loop at vertex {u + 1}", number)
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInput(f"endpoint outside 1..{n}", number)
            edges.append((u, v))
        else:
            raise MalformedInput(f"unknown DIMACS line {line!r}", number)
    if n is None:
        raise MalformedInput("missing DIMACS problem line")
    return build_graph(n, edges)


def _parse_edgelist(text: str) -> Graph:
    n: Optional[int] = None
    edges = []
    for number, line in _content_lines(text, "#"):
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise MalformedInput(f"non-integer field in {line!r}", number) from None
        if n is None:
            if len(values) != 1:
                raise MalformedInput("first line must hold the vertex count", number)
            n = values[0]
            continue
        if len(values) != 2:
            raise MalformedInput("edge line needs two endpoints", number)
        u, v = values
        if u == v:
            raise MalformedInput(f"self-loop at vertex {u}", number)
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"endpoint outside 0..{n - 1}", number)
        edges.append((u, v))
    if n is None:
        raise MalformedInput("missing vertex count line")
    return build_graph(n, edges)


def parse_dimacs_or_edgelist(text: str, fmt: GraphFormat) -> Graph:
    """Parse a whole DIMACS ("p edge n m" / "e u v") or edge-list document."""
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise MalformedInput(f"format {fmt!r} is not a document format")


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, fmt: GraphFormat) -> str:
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    if fmt == "dimacs":
        return write_dimacs(g)
    return write_edgelist(g)


# ---------------------------------------------------------------------------
# Streaming
# ---------------------------------------------------------------------------

def _decode(raw: Union[bytes, str], first_line: int) -> str:
    """ASCII text of a raw record; a bad byte is reported on the line holding it."""
    if isinstance(raw, str):
        return raw
    try:
        return raw.decode("ascii")
    except UnicodeDecodeError as e:
        line = first_line + raw.count(b"\n", 0, e.start)
        raise MalformedInput(f"non-ASCII byte 0x{raw[e.start]:02x}", line) from None


@dataclass(frozen=True)
class StreamRecord:
    """One stream item: a graph, or the positioned error that replaced it."""
    position: int
    graph: Optional[Graph] = None
    error: Optional[MalformedInput] = None

    @property
    def ok(self) -> bool:
        return self.error is None


class GraphStream:
    """
    Lazy stream of graphs from a file or standard input.

    graph6 sources yield one record per non-empty line; DIMACS and edge-list
    sources hold a single document. Files are read as bytes and decoded per
    record, so a non-ASCII line is a malformed record like any other. In
    lenient mode a malformed record is yielded as a StreamRecord carrying
    the error; strict mode raises it.

    Attributes:
        source: path, "-" for standard input, or an open handle
        fmt: graph6 | dimacs | edgelist
        position: number of records consumed so far
    """

    def __init__(self, source: Union[str, Path, IO], fmt: GraphFormat = "graph6", strict: bool = False):
        if fmt not in ("graph6", "dimacs", "edgelist"):
            raise MalformedInput(f"unknown graph format {fmt!r}")
        self.source = source
        self.fmt = fmt
        self.strict = strict
        self.position = 0

    def _owns_handle(self) -> bool:
        return isinstance(self.source, (str, Path)) and str(self.source) != "-"

    def _open(self) -> IO:
        if self._owns_handle():
            return open(self.source, "rb")
        if isinstance(self.source, (str, Path)):
            return getattr(sys.stdin, "buffer", sys.stdin)
        return self.source

    def _emit(self, line_number: int, build) -> StreamRecord:
        self.position += 1
        try:
            return StreamRecord(position=line_number, graph=build())
        except MalformedInput as e:
            if e.position is None:
                e = MalformedInput(str(e), line_number)
            if self.strict:
                raise e from None
            return StreamRecord(position=line_number, error=e)
        except SizeCapExceeded as e:
            if self.strict:
                raise
            return StreamRecord(position=line_number, error=MalformedInput(str(e), line_number))

    def __iter__(self) -> Iterator[StreamRecord]:
        handle = self._open()
        try:
            if self.fmt == "graph6":
                for number, raw in enumerate(handle, 1):
                    line = raw.strip()
                    if not line:
                        continue
                    yield self._emit(number, lambda line=line, number=number: parse_graph6(_decode(line, number)))
            else:
                raw = handle.read()
                if raw.strip():
                    yield self._emit(1, lambda: parse_dimacs_or_edgelist(_decode(raw, 1), self.fmt))
        finally:
            if self._owns_handle():
                handle.close()


def stream_graphs(source: Union[str, Path, IO], fmt: GraphFormat = "graph6", strict: bool = False) -> GraphStream:
    return GraphStream(source, fmt, strict)


def read_graph6_lines(lines: Iterable[str]) -> List[Graph]:
    """Parse every non-empty line strictly."""
    return [parse_graph6(line) for line in lines if line.strip()]
