#!/usr/bin/env python3
"""
Simple Digraph Core
Validated simple digraphs, induced subdigraphs, strongly connected components
and the structural predicates every spectrum computation starts from
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from compspec_errors import EmptyGraph, SelfLoop, VertexOutOfRange

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """
    Finite simple digraph on vertices 0..n-1

    Args:
        n: number of vertices
        arcs: set of ordered pairs (u, v), no loops, endpoints below n
        labels: original vertex names when this digraph was cut out of a larger one
    """
    n: int
    arcs: FrozenSet[Arc]
    labels: Optional[Tuple[int, ...]] = field(default=None, compare=False, repr=False)
    out_neighbors: Tuple[Tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    in_neighbors: Tuple[Tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    out_masks: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    in_masks: Tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(self.n, 0)
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        outs: List[List[int]] = [[] for _ in range(self.n)]
        ins: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(arcs):
            for endpoint in (u, v):
                if endpoint < 0 or endpoint >= self.n:
                    raise VertexOutOfRange(endpoint, self.n)
            if u == v:
                raise SelfLoop(u)
            outs[u].append(v)
            ins[v].append(u)

        labels = tuple(range(self.n)) if self.labels is None else tuple(self.labels)
        if len(labels) != self.n:
            raise ValueError(f"{len(labels)} labels for {self.n} vertices")

        object.__setattr__(self, 'arcs', arcs)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'out_neighbors', tuple(tuple(sorted(o)) for o in outs))
        object.__setattr__(self, 'in_neighbors', tuple(tuple(sorted(i)) for i in ins))
        object.__setattr__(self, 'out_masks', tuple(_mask(o) for o in outs))
        object.__setattr__(self, 'in_masks', tuple(_mask(i) for i in ins))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def degree_pairs(self) -> List[Tuple[int, int]]:
        """(in-degree, out-degree) of every vertex"""
        return [(len(self.in_neighbors[v]), len(self.out_neighbors[v])) for v in range(self.n)]

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.arcs:
            matrix[u, v] = 1.0
        return matrix


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components listed in a topological order of the condensation"""
    components: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)

    def component_index(self) -> Dict[int, int]:
        return {v: i for i, comp in enumerate(self.components) for v in comp}


def _mask(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def mask_to_vertices(mask: int) -> Tuple[int, ...]:
    vertices = []
    while mask:
        low = mask & -mask
        vertices.append(low.bit_length() - 1)
        mask ^= low
    return tuple(vertices)


def from_arc_list(n: int, pairs: Iterable[Sequence[int]]) -> Digraph:
    """Build a validated digraph, collapsing duplicate arcs"""
    pairs = [tuple(p) for p in pairs]
    arcs = frozenset((int(u), int(v)) for u, v in pairs)
    if len(arcs) < len(pairs):
        logger.debug(f"collapsed {len(pairs) - len(arcs)} duplicate arcs")
    return Digraph(n, arcs)


def permute_vertices(D: Digraph, perm: Sequence[int]) -> Digraph:
    """Vertex v of D becomes perm[v]"""
    if sorted(perm) != list(range(D.n)):
        raise ValueError(f"{list(perm)} is not a permutation of 0..{D.n - 1}")
    return Digraph(D.n, frozenset((perm[u], perm[v]) for u, v in D.arcs))


def induced_subdigraph(D: Digraph, S: Iterable[int]) -> Digraph:
    """
    Subdigraph on S keeping every arc with both endpoints in S

    Vertices are renumbered 0..|S|-1 in increasing order of S; `labels` of the result
    maps each new vertex back to the label it carried in D.
    """
    chosen = sorted(set(int(v) for v in S))
    for v in chosen:
        if v < 0 or v >= D.n:
            raise VertexOutOfRange(v, D.n)
    position = {v: i for i, v in enumerate(chosen)}
    arcs = frozenset(
        (position[u], position[v]) for u, v in D.arcs if u in position and v in position
    )
    labels = tuple(D.labels[v] for v in chosen)
    return Digraph(len(chosen), arcs, labels=labels)


def delete_vertex(D: Digraph, v: int) -> Digraph:
    if v < 0 or v >= D.n:
        raise VertexOutOfRange(v, D.n)
    return induced_subdigraph(D, [u for u in range(D.n) if u != v])


def scc_decompose(D: Digraph) -> SccDecomposition:
    """
    Iterative Tarjan over vertices and successors in increasing order

    Tarjan emits sink components first; reversing that discovery order lists the
    components topologically, so no arc runs from a later component to an earlier one.
    """
    n = D.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    found: List[Tuple[int, ...]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            if index[v] == -1:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True

            successors = D.out_neighbors[v]
            descended = False
            while i < len(successors):
                w = successors[i]
                i += 1
                if index[w] == -1:
                    work[-1] = (v, i)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

            if low[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                found.append(tuple(sorted(component)))

    return SccDecomposition(tuple(reversed(found)))


def is_strongly_connected(D: Digraph) -> bool:
    if D.n == 0:
        raise EmptyGraph("is_strongly_connected")
    full = (1 << D.n) - 1
    return is_strongly_connected_mask(D, full)


def is_acyclic(D: Digraph) -> bool:
    return all(len(comp) == 1 for comp in scc_decompose(D).components)


def is_cycle(D: Digraph) -> bool:
    if D.n < 2:
        return False
    if any(pair != (1, 1) for pair in D.degree_pairs()):
        return False
    return is_strongly_connected(D)


def _closure(masks: Tuple[int, ...], start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reached = 0
        pending = frontier
        while pending:
            low = pending & -pending
            reached |= masks[low.bit_length() - 1]
            pending ^= low
        frontier = reached & within & ~seen
        seen |= frontier
    return seen


def is_strongly_connected_mask(D: Digraph, mask: int) -> bool:
    """Strong connectivity of the subdigraph induced by the vertex bitmask"""
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    return (_closure(D.out_masks, start, mask) == mask
            and _closure(D.in_masks, start, mask) == mask)


def induced_arc_count_mask(D: Digraph, mask: int) -> int:
    total = 0
    pending = mask
    while pending:
        low = pending & -pending
        total += bin(D.out_masks[low.bit_length() - 1] & mask).count('1')
        pending ^= low
    return total
