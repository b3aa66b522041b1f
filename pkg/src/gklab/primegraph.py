"""Gruenberg-Kegel graphs: construction, combinatorics, theorem classifier.

Graphs are value types: sorted prime vertices, sorted unordered edges.
The classifier matches literal prime labels (vertex 5 vs 7 matters), never
abstract graph shapes, and reports the genuinely open cases as ``open``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from sympy import isprime

from .groups import GroupHandle, element_orders_multiset

SOLVABLE_CUT = "solvable-cut"
SOLVABLE_RATIONAL = "solvable-rational"

REALIZED = "realized"
FORBIDDEN = "forbidden"
OPEN = "open"


class NonPrimeVertex(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def make(vertices, edges) -> "PrimeGraph":
        vs = set(vertices)
        es = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            vs.update((a, b))
            es.add((min(a, b), max(a, b)))
        return PrimeGraph(tuple(sorted(vs)), tuple(sorted(es)))

    def literal(self) -> str:
        """Canonical edge-list literal, isolated vertices appended."""
        used = {v for e in self.edges for v in e}
        parts = [f"{a}-{b}" for a, b in self.edges]
        parts += [str(v) for v in self.vertices if v not in used]
        return ",".join(parts)


@dataclass(frozen=True)
class TheoremVerdict:
    class_queried: str
    status: str
    citation: str


# Figure entries (a)-(v): literal prime-labeled graphs of the classification.
FIGURE_GRAPHS: dict[str, PrimeGraph] = {
    "a": PrimeGraph.make([2], []),
    "b": PrimeGraph.make([3], []),
    "c": PrimeGraph.make([2, 3], []),
    "d": PrimeGraph.make([2, 3], [(2, 3)]),
    "e": PrimeGraph.make([2, 5], []),
    "f": PrimeGraph.make([2, 5], [(2, 5)]),
    "g": PrimeGraph.make([3, 7], []),
    "h": PrimeGraph.make([2, 3, 5], [(2, 3)]),
    "i": PrimeGraph.make([2, 3, 5], [(2, 3), (2, 5)]),
    "j": PrimeGraph.make([2, 3, 5], [(2, 3), (3, 5)]),
    "k": PrimeGraph.make([2, 3, 5], [(2, 3), (2, 5), (3, 5)]),
    "l": PrimeGraph.make([2, 3, 7], [(2, 3)]),
    "m": PrimeGraph.make([2, 3, 7], [(2, 3), (2, 7)]),
    "n": PrimeGraph.make([2, 3, 7], [(2, 3), (3, 7)]),
    "o": PrimeGraph.make([2, 3, 7], [(2, 3), (2, 7), (3, 7)]),
    "p": PrimeGraph.make([2, 3, 5, 7], [(2, 3), (2, 7), (3, 5), (5, 7)]),
    "q": PrimeGraph.make([2, 3, 5, 7],
                         [(2, 3), (2, 5), (2, 7), (3, 5), (5, 7)]),
    "r": PrimeGraph.make([2, 3, 5, 7],
                         [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7)]),
    "s": PrimeGraph.make([2, 3, 5, 7], [(2, 3), (2, 7), (3, 5), (3, 7)]),
    "t": PrimeGraph.make([2, 3, 5, 7], [(2, 3), (2, 5), (2, 7), (3, 5)]),
    "u": PrimeGraph.make([2, 3, 5, 7],
                         [(2, 3), (2, 7), (3, 5), (3, 7), (5, 7)]),
    "v": PrimeGraph.make([2, 3, 5, 7],
                         [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7)]),
}

CUT_REALIZED = "abcdefghijklmnopqr"
CUT_OPEN = "stuv"
RATIONAL_REALIZED = "acdefk"
RATIONAL_OPEN = "i"


def gk_graph(G: GroupHandle) -> PrimeGraph:
    """Vertices: primes among element orders; edge p-q iff an order-pq element exists."""
    orders = set(element_orders_multiset(G))
    vertices = sorted(n for n in orders if isprime(n))
    edges = [(p, q) for p, q in combinations(vertices, 2) if p * q in orders]
    return PrimeGraph.make(vertices, edges)


def _adjacency(graph: PrimeGraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in graph.vertices}
    for a, b in graph.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def components(graph: PrimeGraph) -> list[frozenset[int]]:
    adj = _adjacency(graph)
    seen: set[int] = set()
    comps = []
    for v in graph.vertices:
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        while frontier:
            comp.update(w for x in frontier for w in adj[x])
            frontier = [w for w in comp - seen - {v} if w not in seen]
            seen.update(comp)
        comps.append(frozenset(comp))
    return comps


def component_diameters(graph: PrimeGraph) -> list[int]:
    adj = _adjacency(graph)
    out = []
    for comp in components(graph):
        diam = 0
        for src in comp:
            dist = {src: 0}
            frontier = [src]
            while frontier:
                nxt = []
                for x in frontier:
                    for w in adj[x]:
                        if w not in dist:
                            dist[w] = dist[x] + 1
                            nxt.append(w)
                frontier = nxt
            diam = max(diam, max(dist.values()))
        out.append(diam)
    return out


def lemma_edge_implications(graph: PrimeGraph) -> bool:
    """Edge constraints for GK-graphs of cut groups."""
    es = set(graph.edges)
    first = (not ({(2, 7), (3, 5), (3, 7), (5, 7)} & es)) or (2, 3) in es
    second = (5, 7) not in es or ((2, 7) in es and (3, 5) in es)
    return first and second


def higman_check(graph: PrimeGraph) -> bool:
    """Every 3 vertices span at least one edge (solvable groups)."""
    es = set(graph.edges)
    return all(any((min(a, b), max(a, b)) in es
                   for a, b in combinations(triple, 2))
               for triple in combinations(graph.vertices, 3))


def classify(graph: PrimeGraph, class_queried: str) -> TheoremVerdict:
    if any(not isprime(v) for v in graph.vertices):
        raise NonPrimeVertex(f"non-prime vertex in {graph.vertices}")
    match = next((name for name, g in FIGURE_GRAPHS.items() if g == graph), None)
    if class_queried == SOLVABLE_CUT:
        if match in set(CUT_REALIZED):
            return TheoremVerdict(class_queried, REALIZED, f"figure entry ({match})")
        if match in set(CUT_OPEN):
            return TheoremVerdict(class_queried, OPEN,
                                  f"open question on four-vertex graphs ({match})")
        return TheoremVerdict(class_queried, FORBIDDEN,
                              _forbidden_citation(graph))
    if class_queried == SOLVABLE_RATIONAL:
        if match in set(RATIONAL_REALIZED):
            return TheoremVerdict(class_queried, REALIZED, f"figure entry ({match})")
        if match in set(RATIONAL_OPEN):
            return TheoremVerdict(class_queried, OPEN,
                                  "open question: 3-2-5 for rational groups")
        return TheoremVerdict(class_queried, FORBIDDEN,
                              _forbidden_citation(graph, rational=True))
    raise ValueError(f"unknown class {class_queried!r}")


def _forbidden_citation(graph: PrimeGraph, rational: bool = False) -> str:
    if rational and not set(graph.vertices) <= {2, 3, 5}:
        return "prime spectrum of a solvable rational group lies in {2,3,5}"
    if not set(graph.vertices) <= {2, 3, 5, 7}:
        return "prime spectrum of a solvable cut group lies in {2,3,5,7}"
    if not higman_check(graph):
        return "three mutually non-adjacent vertices (three-primes lemma)"
    if not lemma_edge_implications(graph):
        return "edge implication constraints for cut groups"
    return "not among the realizable or open classification entries"


def product_graph(g1: PrimeGraph, g2: PrimeGraph) -> PrimeGraph:
    """GK-graph of a direct product: union plus all cross edges."""
    edges = set(g1.edges) | set(g2.edges)
    edges.update((min(p, q), max(p, q))
                 for p in g1.vertices for q in g2.vertices if p != q)
    return PrimeGraph.make(set(g1.vertices) | set(g2.vertices), edges)


def parse_graph_literal(text: str) -> PrimeGraph:
    """Parse literals like "2-3,2-5,7": edges and isolated vertices."""
    vertices: set[int] = set()
    edges = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if "-" in part:
            a, b = part.split("-", 1)
            edges.append((int(a), int(b)))
        else:
            vertices.add(int(part))
    graph = PrimeGraph.make(vertices, edges)
    if any(not isprime(v) for v in graph.vertices):
        raise NonPrimeVertex(f"non-prime vertex in {graph.vertices}")
    return graph


def to_dot(graph: PrimeGraph, name: str = "gk") -> str:
    lines = [f'graph "{name}" {{']
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for a, b in graph.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
