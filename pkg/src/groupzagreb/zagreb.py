"""Commuting/non-commuting graphs, first and second Zagreb indices by three
independent routes, clique-decomposition extraction, and the exact
conjecture verdict.

Everything here is integer or rational arithmetic: the verdict compares
M2*|V| against M1*|E| by cross-multiplication, so equality cases are exact.
Graphs store one adjacency bitmask per vertex (O(1) edge queries, O(|V|^2)
bits of memory), which is comfortable at the order cap this library runs at.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .grp import AbelianGroupError, FiniteGroup


class GraphFormatError(ValueError):
    pass


class RouteMismatchError(AssertionError):
    """Two independent index computations disagreed; indicates a bug."""


class SimpleGraph:
    """Undirected simple graph; ``rows[v]`` is the neighbor bitmask of v."""

    def __init__(self, vertex_count: int, rows: list[int]):
        if len(rows) != vertex_count:
            raise GraphFormatError("adjacency row count != vertex count")
        for v, r in enumerate(rows):
            if r >> vertex_count:
                raise GraphFormatError("adjacency bits out of range")
            if (r >> v) & 1:
                raise GraphFormatError(f"self-loop at vertex {v}")
        self.vertex_count = vertex_count
        self.rows = rows
        self.edge_count = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphFormatError(f"bad edge ({u}, {v}) for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self):
        for u in range(self.vertex_count):
            r = self.rows[u] >> (u + 1)
            base = u + 1
            while r:
                low = r & -r
                yield (u, base + low.bit_length() - 1)
                r ^= low

    def complement(self) -> "SimpleGraph":
        n = self.vertex_count
        full = (1 << n) - 1
        return SimpleGraph(n, [full ^ r ^ (1 << v) for v, r in enumerate(self.rows)])

    def __repr__(self) -> str:
        return f"SimpleGraph(|V|={self.vertex_count}, |E|={self.edge_count})"


@dataclass(frozen=True)
class ZagrebReport:
    m1: int
    m2: int
    vertices: int
    edges: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.vertices, self.edges)


@dataclass(frozen=True)
class CliqueDecomposition:
    """Disjoint union of complete graphs: ((copies, size), ...) sorted by size."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        sizes = [s for _, s in self.parts]
        if sizes != sorted(set(sizes)):
            raise ValueError("parts must be sorted with distinct clique sizes")
        if any(l < 1 or s < 1 for l, s in self.parts):
            raise ValueError("copy counts and clique sizes must be positive")

    def vertex_total(self) -> int:
        return sum(l * s for l, s in self.parts)


class Verdict(Enum):
    HOLDS_STRICT = "strict"
    HOLDS_WITH_EQUALITY = "equality"
    FAILS = "fails"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class ConjectureVerdict:
    """Sign of M2/|E| - M1/|V| as the exact fraction gap = num/den."""

    status: Verdict
    gap_numerator: int | None
    gap_denominator: int | None

    def gap_string(self) -> str:
        if self.gap_numerator is None:
            return "NA"
        g = gcd(self.gap_numerator, self.gap_denominator) or 1
        return f"{self.gap_numerator // g}/{self.gap_denominator // g}"


# ---------------------------------------------------------------------------
# graph construction from groups
# ---------------------------------------------------------------------------

def commuting_graph(G: FiniteGroup) -> SimpleGraph:
    """Vertices are the non-central elements in ascending index order;
    edges join commuting pairs."""
    z = set(G.center())
    if len(z) == G.order:
        raise AbelianGroupError("Group must be non-abelian")
    vertices = [x for x in range(G.order) if x not in z]
    k = len(vertices)
    t = G.table
    rows = [0] * k
    for a in range(k):
        x = vertices[a]
        tx = t[x]
        for b in range(a + 1, k):
            y = vertices[b]
            if tx[y] == t[y][x]:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return SimpleGraph(k, rows)


def non_commuting_graph(G: FiniteGroup) -> SimpleGraph:
    return commuting_graph(G).complement()


# ---------------------------------------------------------------------------
# the three Zagreb routes
# ---------------------------------------------------------------------------

def zagreb_direct(graph: SimpleGraph) -> ZagrebReport:
    """M1 = sum of squared degrees, M2 = sum of degree products over edges."""
    deg = graph.degrees()
    m1 = sum(d * d for d in deg)
    m2 = 0
    for u in range(graph.vertex_count):
        r = graph.rows[u] >> (u + 1)
        du = deg[u]
        base = u + 1
        while r:
            low = r & -r
            m2 += du * deg[base + low.bit_length() - 1]
            r ^= low
    return ZagrebReport(m1, m2, graph.vertex_count, graph.edge_count)


def zagreb_from_decomposition(d: CliqueDecomposition) -> ZagrebReport:
    """Indices of a disjoint union of cliques from (copies, size) pairs alone."""
    m1 = sum(l * s * (s - 1) ** 2 for l, s in d.parts)
    m2_twice = sum(l * s * (s - 1) ** 3 for l, s in d.parts)
    vertices = sum(l * s for l, s in d.parts)
    edges_twice = sum(l * s * (s - 1) for l, s in d.parts)
    return ZagrebReport(m1, m2_twice // 2, vertices, edges_twice // 2)


def zagreb_complement(base: ZagrebReport) -> ZagrebReport:
    """Indices of the complement graph from the base report alone."""
    v, e, m1, m2 = base.vertices, base.edges, base.m1, base.m2
    m1c = v * (v - 1) ** 2 - 4 * e * (v - 1) + m1
    # M2 terms with denominator 2 combined; always integral because M1 is even
    num = v * (v - 1) ** 3 + (2 * v - 3) * m1
    if num % 2:
        raise ValueError("inconsistent report: odd M1 cannot come from a graph")
    m2c = num // 2 + 2 * e * e - 3 * e * (v - 1) ** 2 - m2
    return ZagrebReport(m1c, m2c, v, v * (v - 1) // 2 - e)


# ---------------------------------------------------------------------------
# decomposition extraction and verdicts
# ---------------------------------------------------------------------------

def extract_clique_decomposition(graph: SimpleGraph) -> CliqueDecomposition | None:
    """If every connected component is complete, the multiset of clique sizes;
    otherwise None."""
    counts: dict[int, int] = {}
    seen = 0
    for u in range(graph.vertex_count):
        if (seen >> u) & 1:
            continue
        comp = graph.rows[u] | (1 << u)
        mm = comp
        while mm:
            low = mm & -mm
            v = low.bit_length() - 1
            mm ^= low
            if graph.rows[v] | (1 << v) != comp:
                return None
        size = comp.bit_count()
        counts[size] = counts.get(size, 0) + 1
        seen |= comp
    parts = tuple((counts[s], s) for s in sorted(counts))
    return CliqueDecomposition(parts)


def conjecture_verdict(r: ZagrebReport) -> ConjectureVerdict:
    """Compare M2/|E| against M1/|V| exactly; Undefined when |E| or |V| is 0."""
    if r.vertices == 0 or r.edges == 0:
        return ConjectureVerdict(Verdict.UNDEFINED, None, None)
    num = r.m2 * r.vertices - r.m1 * r.edges
    den = r.edges * r.vertices
    if num > 0:
        status = Verdict.HOLDS_STRICT
    elif num == 0:
        status = Verdict.HOLDS_WITH_EQUALITY
    else:
        status = Verdict.FAILS
    return ConjectureVerdict(status, num, den)


# ---------------------------------------------------------------------------
# one-stop group report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupReport:
    label: str
    order: int
    center_size: int
    c: ZagrebReport
    nc: ZagrebReport
    verdict_c: ConjectureVerdict
    verdict_nc: ConjectureVerdict
    decomposition: CliqueDecomposition | None


def group_report(G: FiniteGroup) -> GroupReport:
    """Zagreb reports and verdicts for C(G) and NC(G).

    NC indices are computed twice - directly on the materialized complement
    and through the complement formulas - and must agree; a mismatch means a
    bug and raises RouteMismatchError.
    """
    cg = commuting_graph(G)
    rep_c = zagreb_direct(cg)
    rep_nc = zagreb_direct(cg.complement())
    rep_nc_formula = zagreb_complement(rep_c)
    if rep_nc != rep_nc_formula:
        raise RouteMismatchError(
            f"{G.label}: direct NC report {rep_nc} != complement-formula {rep_nc_formula}"
        )
    return GroupReport(
        label=G.label,
        order=G.order,
        center_size=G.order - cg.vertex_count,
        c=rep_c,
        nc=rep_nc,
        verdict_c=conjecture_verdict(rep_c),
        verdict_nc=conjecture_verdict(rep_nc),
        decomposition=extract_clique_decomposition(cg),
    )


# ---------------------------------------------------------------------------
# edge-list files
# ---------------------------------------------------------------------------

def read_edge_list(source) -> SimpleGraph:
    """Parse the edge-list format: first line "n m", then m lines "u v" with
    0 <= u < v < n; duplicate edges are rejected."""
    if hasattr(source, "read"):
        text = source.read()
    elif "\n" not in str(source) and len(str(source).split()) == 1:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge-list file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f'first line must be "n m", got {lines[0]!r}')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f'first line must be "n m", got {lines[0]!r}') from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen = set()
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u}, {v}) must satisfy 0 <= u < v < n")
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)
