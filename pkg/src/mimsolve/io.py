"""Text formats: DIMACS-like graphs, Newick layouts and cotrees, class models."""

from __future__ import annotations

import re
from collections.abc import Sequence
from fractions import Fraction

from .chain import ChainOrders
from .errors import InputError, ParseError
from .graph import Graph
from .layout import CotreeNode, RootedLayout

_SPECIAL = set("(),;:[] \t\r\n'\"")


def _lines(text: str, dimacs: bool = False):
    """Non-empty lines without comments ('#', plus 'c' lines in DIMACS files)."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dimacs and (line == "c" or line.startswith("c ")):
            continue
        yield lineno, line


def read_dimacs(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` / ``n u name`` lines (1-based)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    names: dict[int, str] = {}
    for lineno, line in _lines(text, dimacs=True):
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "p":
                if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise ValueError("expected a single 'p edge <n> <m>' line")
                n, m = int(parts[2]), int(parts[3])
            elif tag == "e":
                if n is None or len(parts) != 3:
                    raise ValueError("edge line before header or malformed")
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
                edges.append((u, v))
            elif tag == "n":
                if n is None or len(parts) != 3:
                    raise ValueError("malformed label line")
                names[int(parts[1]) - 1] = parts[2]
            else:
                raise ValueError(f"unknown line type {tag!r}")
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ParseError("missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but {len(edges)} were given")
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ParseError("duplicate edge")
    if any(not 0 <= v < n for v in names):
        raise ParseError("label for a vertex out of range")
    labels = [names.get(v, str(v + 1)) for v in range(n)] if names else None
    try:
        return Graph(n, edges, labels)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p edge {g.n} {g.m}")
    if g.has_labels:
        out.extend(f"n {v + 1} {g.label(v)}" for v in range(g.n))
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


class _Newick:
    """Recursive-descent reader accepting ``(a,b)L`` and ``L(a,b)`` forms."""

    def __init__(self, text: str):
        self.tokens = re.findall(r"[(),;]|[^(),;\s]+", text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of Newick text")
        self.i += 1
        return tok

    def node(self) -> tuple[str | None, list]:
        tok = self.peek()
        label = None
        if tok not in ("(", ")", ",", ";", None):
            label = self.take()
            if self.peek() != "(":
                return label, []
        if self.peek() != "(":
            raise ParseError(f"expected a subtree, found {self.peek()!r}")
        self.take()
        kids = [self.node()]
        while self.peek() == ",":
            self.take()
            kids.append(self.node())
        if self.take() != ")":
            raise ParseError("unbalanced parentheses")
        if label is None and self.peek() not in ("(", ")", ",", ";", None):
            label = self.take()
        return label, kids

    def parse(self) -> tuple[str | None, list]:
        tree = self.node()
        if self.peek() == ";":
            self.take()
        if self.peek() is not None:
            raise ParseError(f"trailing text after tree: {self.peek()!r}")
        return tree


def parse_newick(text: str) -> tuple[str | None, list]:
    """Nested ``(label, children)`` pairs; leaves have no children."""
    return _Newick(text).parse()


def read_layout(text: str, g: Graph) -> RootedLayout:
    """Newick layout whose leaves are vertex labels of ``g``."""
    index = {g.label(v): v for v in range(g.n)}

    def convert(node):
        label, kids = node
        if not kids:
            if label not in index:
                raise ParseError(f"layout leaf {label!r} is not a vertex label")
            return index[label]
        if len(kids) != 2:
            raise ParseError("layout internal nodes must have exactly two children")
        return (convert(kids[0]), convert(kids[1]))

    try:
        layout = RootedLayout.from_nested(convert(parse_newick(text)))
        layout.check_graph(g)
    except InputError as exc:
        raise ParseError(str(exc)) from None
    return layout


def _check_label(label: str) -> str:
    if not label or any(ch in _SPECIAL for ch in label):
        raise InputError(f"label {label!r} cannot be written in Newick")
    return label


def write_layout(layout: RootedLayout, labels: Sequence[str]) -> str:
    memo: dict[int, str] = {}
    for t in range(layout.size):
        if layout.is_leaf(t):
            memo[t] = _check_label(labels[layout.vertex[t]])
        else:
            memo[t] = f"({memo[layout.left[t]]},{memo[layout.right[t]]})"
    return memo[layout.root] + ";\n"


def read_cotree(text: str) -> tuple[CotreeNode, list[str]]:
    """Cotree with ``U``/``J`` internal labels; leaves numbered by first appearance."""
    labels: list[str] = []

    def convert(node) -> CotreeNode:
        label, kids = node
        if not kids:
            if label is None:
                raise ParseError("unlabelled cotree leaf")
            if label in labels:
                raise ParseError(f"leaf {label!r} appears twice")
            labels.append(label)
            return CotreeNode(label, [], vertex=len(labels) - 1)
        if label not in ("U", "J"):
            raise ParseError(f"cotree internal label must be U or J, got {label!r}")
        if len(kids) < 2:
            raise ParseError("cotree internal nodes need at least two children")
        return CotreeNode(label, [convert(k) for k in kids])

    return convert(parse_newick(text)), labels


def read_intervals(text: str) -> tuple[list[tuple[Fraction, Fraction]], list[str]]:
    intervals, labels = [], []
    for lineno, line in _lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected '<vertex> <left> <right>'")
        try:
            left, right = Fraction(parts[1]), Fraction(parts[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: endpoints must be numbers") from None
        if left > right:
            raise ParseError(f"line {lineno}: left endpoint exceeds right endpoint")
        intervals.append((left, right))
        labels.append(parts[0])
    if not intervals:
        raise ParseError("no intervals given")
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate vertex in interval model")
    return intervals, labels


def read_permutation(text: str) -> list[int]:
    """One line of images, either 0-based or 1-based."""
    rows = [line for _, line in _lines(text)]
    if len(rows) != 1:
        raise ParseError("permutation file must contain exactly one line")
    try:
        vals = [int(x) for x in rows[0].split()]
    except ValueError:
        raise ParseError("permutation entries must be integers") from None
    n = len(vals)
    if sorted(vals) == list(range(1, n + 1)):
        return [x - 1 for x in vals]
    if sorted(vals) == list(range(n)):
        return vals
    raise ParseError("not a permutation")


def read_order(text: str, g: Graph) -> list[int]:
    index = {g.label(v): v for v in range(g.n)}
    toks = [t for _, line in _lines(text) for t in line.split()]
    try:
        return [index[t] for t in toks]
    except KeyError as exc:
        raise ParseError(f"unknown vertex {exc.args[0]!r} in order") from None


def read_orders_dump(text: str, g: Graph, node_count: int) -> ChainOrders:
    index = {g.label(v): v for v in range(g.n)}
    lower: dict[int, tuple[int, ...]] = {}
    upper: dict[int, tuple[int, ...]] = {}
    pat = re.compile(r"node\s+(\d+)\s+(lower|upper):(.*)")
    for lineno, line in _lines(text):
        mt = pat.fullmatch(line)
        if not mt:
            raise ParseError(f"line {lineno}: expected 'node <id> lower|upper: ...'")
        try:
            seq = tuple(index[t] for t in mt.group(3).split())
        except KeyError as exc:
            raise ParseError(f"line {lineno}: unknown vertex {exc.args[0]!r}") from None
        (lower if mt.group(2) == "lower" else upper)[int(mt.group(1))] = seq
    if set(lower) != set(range(node_count)) or set(upper) != set(range(node_count)):
        raise ParseError("dump must list a lower and an upper order for every node")
    return ChainOrders(tuple(lower[t] for t in range(node_count)),
                       tuple(upper[t] for t in range(node_count)), tuple(range(g.n)))
