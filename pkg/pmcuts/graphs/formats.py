# -*- coding: utf-8 -*-
"""
Readers and writers for graph6, sparse6, digraph6, planar_code and the partial orientation sidecar format.

The byte layouts follow McKay's published format description and plantri's planar_code. The sidecar format
is a graph6 line followed by a line `O:` + one digit per edge in graph6 (lexicographic) edge order, `0` for an
undirected edge, `1` for an arc from the smaller to the larger endpoint and `2` for the reverse.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from pmcuts.constants import (
    DIGRAPH6_HEADER,
    GRAPH6_HEADER,
    PLANAR_CODE_HEADER,
    PLANAR_CODE_HEADER_BE,
    PLANAR_CODE_HEADER_LE,
    SIDECAR_PREFIX,
    SPARSE6_HEADER,
)
from pmcuts.enums import EdgeState
from pmcuts.exceptions import GraphFormatError, UnsupportedFormatError
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation, PlaneEmbedding

LOGGER = logging.getLogger(__name__)

_BIAS = 63
_MAX_SMALL_N = 62
_MAX_MEDIUM_N = 258047


def _decode_size(data: str, offset: int):
    """
    Decode the N(n) size prefix starting at `data[offset]`; return `(n, next_offset)`.
    """
    def value(position):
        if position >= len(data):
            raise GraphFormatError('Truncated size header', position)
        code = ord(data[position]) - _BIAS
        if not 0 <= code <= 63:
            raise GraphFormatError('Character {!r} out of range'.format(data[position]), position)
        return code

    first = value(offset)
    if first < 63:
        return first, offset + 1
    if value(offset + 1) < 63:
        n = 0
        for position in range(offset + 1, offset + 4):
            n = (n << 6) | value(position)
        return n, offset + 4
    n = 0
    for position in range(offset + 2, offset + 8):
        n = (n << 6) | value(position)
    return n, offset + 8


def _encode_size(n: int) -> str:
    if n <= _MAX_SMALL_N:
        return chr(n + _BIAS)
    if n <= _MAX_MEDIUM_N:
        return '~' + ''.join(chr(((n >> shift) & 63) + _BIAS) for shift in (12, 6, 0))
    return '~~' + ''.join(chr(((n >> shift) & 63) + _BIAS) for shift in (30, 24, 18, 12, 6, 0))


def _decode_bits(data: str, offset: int, bit_count: int, exact=True):
    """
    Unpack `bit_count` bits from the 6-bit characters starting at `data[offset]`.

    With `exact`, the body must have exactly the needed length and zero padding.
    """
    chars_needed = (bit_count + 5) // 6
    body = data[offset:]
    if exact and len(body) != chars_needed:
        raise GraphFormatError(
            'Expected {} body characters, found {}'.format(chars_needed, len(body)),
            offset + min(len(body), chars_needed),
        )
    bits = []
    for position, char in enumerate(body):
        code = ord(char) - _BIAS
        if not 0 <= code <= 63:
            raise GraphFormatError('Character {!r} out of range'.format(char), offset + position)
        bits.extend((code >> shift) & 1 for shift in range(5, -1, -1))
    if exact and any(bits[bit_count:]):
        raise GraphFormatError('Nonzero padding bits', offset + len(body) - 1)
    return bits


def _encode_bits(bits) -> str:
    bits = list(bits)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for start in range(0, len(bits), 6):
        code = 0
        for bit in bits[start:start + 6]:
            code = (code << 1) | bit
        chars.append(chr(code + _BIAS))
    return ''.join(chars)


def _strip(line: str, header: str) -> str:
    line = line.strip()
    if line.startswith(header):
        line = line[len(header):]
    return line


def parse_graph6(text: str) -> MultiGraph:
    """
    Parse one graph6 record into a simple `MultiGraph` with lexicographic edge ids.
    """
    data = _strip(text, GRAPH6_HEADER)
    if not data:
        raise GraphFormatError('Empty graph6 record', 0)
    n, offset = _decode_size(data, 0)
    bits = _decode_bits(data, offset, n * (n - 1) // 2)
    edges = []
    position = 0
    for j in range(1, n):
        for i in range(j):
            if bits[position]:
                edges.append((i, j))
            position += 1
    return MultiGraph(n=n, edges=tuple(sorted(edges)))


def _lex_edge_order(graph: MultiGraph):
    """
    Return edge ids sorted by (min endpoint, max endpoint).
    """
    return sorted(range(graph.m), key=lambda edge_id: tuple(sorted(graph.edges[edge_id])))


def write_graph6(graph: MultiGraph) -> str:
    """
    Encode a simple graph as a graph6 line (without header and newline).
    """
    if not graph.is_simple():
        raise UnsupportedFormatError('graph6 only encodes simple graphs; this graph has loops or parallel edges.')
    adjacent = {tuple(sorted(pair)) for pair in graph.edges}
    bits = [1 if (i, j) in adjacent else 0 for j in range(1, graph.n) for i in range(j)]
    return _encode_size(graph.n) + _encode_bits(bits)


def parse_sparse6(text: str) -> MultiGraph:
    """
    Parse one sparse6 record; parallel edges are kept, loops are rejected.
    """
    data = _strip(text, SPARSE6_HEADER)
    if not data.startswith(':'):
        raise GraphFormatError('sparse6 record must start with ":"', 0)
    n, offset = _decode_size(data, 1)
    bits = _decode_bits(data, offset, 0, exact=False)
    width = max((n - 1).bit_length(), 1) if n > 1 else 0
    edges = []
    vertex = 0
    position = 0
    while position + 1 + width <= len(bits):
        flag = bits[position]
        value = 0
        for bit in bits[position + 1:position + 1 + width]:
            value = (value << 1) | bit
        position += 1 + width
        if flag:
            vertex += 1
        if vertex >= n:
            break
        if value > vertex:
            vertex = value
        else:
            if value == vertex:
                raise UnsupportedFormatError('Loops are not supported (vertex {}).'.format(vertex))
            edges.append((value, vertex))
    return MultiGraph(n=n, edges=tuple(edges))


def parse_digraph6(text: str):
    """
    Parse one digraph6 record into `(MultiGraph, PartialOrientation)`.

    A pair of opposite arcs becomes two parallel edges, both directed.
    """
    data = _strip(text, DIGRAPH6_HEADER)
    if not data.startswith('&'):
        raise GraphFormatError('digraph6 record must start with "&"', 0)
    n, offset = _decode_size(data, 1)
    bits = _decode_bits(data, offset, n * n)
    edges = []
    states = []
    for i in range(n):
        if bits[i * n + i]:
            raise UnsupportedFormatError('Loops are not supported (vertex {}).'.format(i))
        for j in range(i + 1, n):
            if bits[i * n + j]:
                edges.append((i, j))
                states.append(EdgeState.FORWARD)
            if bits[j * n + i]:
                edges.append((i, j))
                states.append(EdgeState.BACKWARD)
    graph = MultiGraph(n=n, edges=tuple(edges))
    return graph, PartialOrientation(host=graph, state=tuple(states))


def write_digraph6(orientation: PartialOrientation) -> str:
    """
    Encode a full orientation without parallel arcs as a digraph6 line.
    """
    if not orientation.is_full():
        raise UnsupportedFormatError('digraph6 cannot encode undirected edges.')
    n = orientation.host.n
    bits = [0] * (n * n)
    for _, tail, head in orientation.arcs():
        if bits[tail * n + head]:
            raise UnsupportedFormatError('digraph6 cannot encode parallel arcs.')
        bits[tail * n + head] = 1
    return '&' + _encode_size(n) + _encode_bits(bits)


def write_sidecar(orientation: PartialOrientation) -> str:
    """
    Encode a partial orientation of a simple graph as `graph6 line + newline + O:digits`.
    """
    graph = orientation.host
    digits = []
    for edge_id in _lex_edge_order(graph):
        arc = orientation.arc(edge_id)
        if arc is None:
            digits.append('0')
        else:
            digits.append('1' if arc[0] < arc[1] else '2')
    return '{}\n{}{}'.format(write_graph6(graph), SIDECAR_PREFIX, ''.join(digits))


def parse_sidecar_line(graph: MultiGraph, line: str) -> PartialOrientation:
    """
    Parse the `O:` line of the sidecar format for `graph` (edge ids in lexicographic order).
    """
    line = line.strip()
    if not line.startswith(SIDECAR_PREFIX):
        raise GraphFormatError('Sidecar line must start with "{}"'.format(SIDECAR_PREFIX), 0)
    digits = line[len(SIDECAR_PREFIX):]
    if len(digits) != graph.m:
        raise GraphFormatError(
            'Sidecar has {} states for {} edges'.format(len(digits), graph.m), len(SIDECAR_PREFIX) + len(digits)
        )
    arcs = {}
    for position, (edge_id, digit) in enumerate(zip(_lex_edge_order(graph), digits)):
        low, high = sorted(graph.edges[edge_id])
        if digit == '1':
            arcs[edge_id] = (low, high)
        elif digit == '2':
            arcs[edge_id] = (high, low)
        elif digit != '0':
            raise GraphFormatError('Invalid sidecar state {!r}'.format(digit), len(SIDECAR_PREFIX) + position)
    return PartialOrientation.from_arcs(graph, arcs)


def parse_sidecar(text: str) -> PartialOrientation:
    """
    Parse a two line sidecar record.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise GraphFormatError('Sidecar record must have exactly two lines', 0)
    return parse_sidecar_line(parse_graph6(lines[0]), lines[1])


def parse_planar_code(data: bytes) -> Iterator[PlaneEmbedding]:
    """
    Stream the embeddings of a planar_code file.

    The rotation at every vertex is taken verbatim from the stored neighbour order. Only simple graphs are
    supported. An empty input yields nothing.
    """
    offset = 0
    big_endian = True
    for header, endian in ((PLANAR_CODE_HEADER_LE, False), (PLANAR_CODE_HEADER_BE, True), (PLANAR_CODE_HEADER, True)):
        if data.startswith(header):
            offset = len(header)
            big_endian = endian
            break

    def read(width):
        nonlocal offset
        if offset + width > len(data):
            raise GraphFormatError('Truncated planar_code record', offset)
        chunk = data[offset:offset + width]
        offset += width
        return int.from_bytes(chunk, 'big' if big_endian else 'little')

    while offset < len(data):
        record_start = offset
        width = 1
        n = read(1)
        if n == 0:
            width = 2
            n = read(2)
        neighbours = []
        for _ in range(n):
            row = []
            while True:
                value = read(width)
                if value == 0:
                    break
                if value > n:
                    raise GraphFormatError('Neighbour {} out of range'.format(value), offset - width)
                row.append(value - 1)
            neighbours.append(row)
        yield _embedding_from_rows(neighbours, record_start)


def _embedding_from_rows(neighbours, record_start) -> PlaneEmbedding:
    pairs = set()
    for vertex, row in enumerate(neighbours):
        if len(set(row)) != len(row) or vertex in row:
            raise UnsupportedFormatError('planar_code record at byte {} is not simple.'.format(record_start))
        for other in row:
            if vertex not in neighbours[other]:
                raise GraphFormatError('Asymmetric adjacency between {} and {}'.format(vertex, other), record_start)
            pairs.add((min(vertex, other), max(vertex, other)))
    edges = tuple(sorted(pairs))
    graph = MultiGraph(n=len(neighbours), edges=edges)
    edge_index = {pair: edge_id for edge_id, pair in enumerate(edges)}
    rotation = []
    for vertex, row in enumerate(neighbours):
        darts = []
        for other in row:
            edge_id = edge_index[(min(vertex, other), max(vertex, other))]
            darts.append(2 * edge_id + (0 if graph.edges[edge_id][0] == vertex else 1))
        rotation.append(tuple(darts))
    return PlaneEmbedding(host=graph, rotation=tuple(rotation))


@dataclass
class GraphRecord:
    """
    One record of an input stream; exactly one of `graph` and `error` is set.
    """

    index: int
    source: str
    graph: Optional[MultiGraph] = None
    orientation: Optional[PartialOrientation] = None
    embedding: Optional[PlaneEmbedding] = None
    error: Optional[Exception] = None


def parse_line(line: str):
    """
    Parse one text line of any supported format; return `(graph, orientation)`.
    """
    stripped = line.strip()
    for header in (GRAPH6_HEADER, SPARSE6_HEADER, DIGRAPH6_HEADER):
        if stripped.startswith(header):
            stripped = stripped[len(header):]
    if stripped.startswith('&'):
        return parse_digraph6(stripped)
    if stripped.startswith(':'):
        return parse_sparse6(stripped), None
    return parse_graph6(stripped), None


def iter_text_records(lines: Iterable[str], source='<stream>') -> Iterator[GraphRecord]:
    """
    Stream records from graph6 / sparse6 / digraph6 lines; an `O:` line attaches to the previous graph.

    Malformed lines produce a record carrying the error so callers can report it and continue.
    """
    pending = None
    index = 0
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if line.strip().startswith(SIDECAR_PREFIX):
            if pending is None or pending.graph is None:
                LOGGER.warning('[PMCUTS] Orphan orientation line %s in %s skipped.', line_number, source)
                continue
            try:
                pending.orientation = parse_sidecar_line(pending.graph, line)
            except (GraphFormatError, UnsupportedFormatError) as error:
                pending.graph, pending.error = None, error
            continue
        if pending is not None:
            yield pending
        record = GraphRecord(index=index, source='{}:{}'.format(source, line_number))
        index += 1
        try:
            record.graph, record.orientation = parse_line(line)
        except (GraphFormatError, UnsupportedFormatError) as error:
            LOGGER.error('[PMCUTS] Could not parse %s: %s', record.source, error)
            record.error = error
        pending = record
    if pending is not None:
        yield pending


def iter_file_records(path) -> Iterator[GraphRecord]:
    """
    Stream records from a file, detecting planar_code by its header.
    """
    with open(path, 'rb') as handle:
        data = handle.read()
    if data.startswith(PLANAR_CODE_HEADER[:12]):
        try:
            for index, embedding in enumerate(parse_planar_code(data)):
                yield GraphRecord(
                    index=index, source='{}#{}'.format(path, index), graph=embedding.host, embedding=embedding,
                )
        except (GraphFormatError, UnsupportedFormatError) as error:
            LOGGER.error('[PMCUTS] Could not parse planar_code file %s: %s', path, error)
            yield GraphRecord(index=-1, source=str(path), error=error)
        return
    yield from iter_text_records(data.decode('ascii', errors='replace').splitlines(), source=str(path))
