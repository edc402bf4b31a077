#!/usr/bin/env python3
"""
Digraph Family Generators
Cycles, paths, complete digraphs and the seven families of strongly connected
digraphs with exactly three complementarity eigenvalues

Canonical numbering:
    infinity family (infinity, type1, type2): shared vertex 0, C_r on 0,1,..,r-1,
        C_s on 0,r,..,r+s-2
    theta: hubs v=0 and w=a+1; a-path interior 1..a, b-path interior a+2..a+b+1,
        c-path interior a+b+2..a+b+c+1
    type3/type4/type5: Hamiltonian cycle 0->1->..->n-1->0; parameters use the
        1-indexed cycle positions 1..n (position p is vertex p-1)
"""

import logging
from typing import Iterator, List, Sequence, Tuple

from compspec_errors import BadParams
from digraph_core import Arc, Digraph, from_arc_list

logger = logging.getLogger(__name__)

INFINITY_FAMILY = ('infinity', 'type1', 'type2')
THETA_FAMILY = ('theta', 'type3', 'type4', 'type5')
SEVEN_FAMILIES = INFINITY_FAMILY + THETA_FAMILY
BASIC_SHAPES = ('cycle', 'path', 'complete')


def _require(condition: bool, family: str, constraint: str) -> None:
    if not condition:
        raise BadParams(family, constraint)


def _cycle_arcs(vertices: Sequence[int]) -> List[Arc]:
    return [(vertices[t], vertices[(t + 1) % len(vertices)]) for t in range(len(vertices))]


def _path_arcs(vertices: Sequence[int]) -> List[Arc]:
    return [(vertices[t], vertices[t + 1]) for t in range(len(vertices) - 1)]


def gen_cycle(n: int) -> Digraph:
    _require(n >= 2, 'cycle', f"n >= 2 (n={n})")
    return from_arc_list(n, _cycle_arcs(range(n)))


def gen_path(n: int) -> Digraph:
    _require(n >= 1, 'path', f"n >= 1 (n={n})")
    return from_arc_list(n, _path_arcs(range(n)))


def gen_complete(k: int) -> Digraph:
    """Complete loopless digraph, spectral radius k-1"""
    _require(k >= 1, 'complete', f"k >= 1 (k={k})")
    return from_arc_list(k, [(u, v) for u in range(k) for v in range(k) if u != v])


def _infinity_arcs(family: str, r: int, s: int) -> List[Arc]:
    _require(r >= 2, family, f"r >= 2 (r={r})")
    _require(s >= 2, family, f"s >= 2 (s={s})")
    cycle_r = [0] + list(range(1, r))
    cycle_s = [0] + list(range(r, r + s - 1))
    return _cycle_arcs(cycle_r) + _cycle_arcs(cycle_s)


def gen_infinity(r: int, s: int) -> Digraph:
    """Coalescence of C_r and C_s at vertex 0"""
    return from_arc_list(r + s - 1, _infinity_arcs('infinity', r, s))


def gen_type1(r: int, s: int) -> Digraph:
    """
    infinity(r, s) plus the arc from the last vertex of C_r to the second vertex of C_s

    The arc runs from C_r into C_s, so type1(r, s) and type1(s, r) differ.
    """
    arcs = _infinity_arcs('type1', r, s)
    arcs.append((r - 1, r))
    return from_arc_list(r + s - 1, arcs)


def gen_type2(r: int, s: int) -> Digraph:
    """type1(r, s) plus the arc from the last vertex of C_s to the second vertex of C_r"""
    arcs = _infinity_arcs('type2', r, s)
    arcs.append((r - 1, r))
    arcs.append((r + s - 2, 1))
    return from_arc_list(r + s - 1, arcs)


def gen_theta(a: int, b: int, c: int) -> Digraph:
    """
    Three directed paths with a, b and c interior vertices

    The a- and b-paths run from hub v to hub w, the c-path runs from w back to v.
    """
    _require(a >= 0, 'theta', f"a >= 0 (a={a})")
    _require(c >= 0, 'theta', f"c >= 0 (c={c})")
    _require(a <= b, 'theta', f"a <= b (a={a}, b={b})")
    _require(b >= 1, 'theta', f"b >= 1 (b={b})")
    v, w = 0, a + 1
    path_a = [v] + list(range(1, a + 1)) + [w]
    path_b = [v] + list(range(a + 2, a + b + 2)) + [w]
    path_c = [w] + list(range(a + b + 2, a + b + c + 2)) + [v]
    return from_arc_list(a + b + c + 2, _path_arcs(path_a) + _path_arcs(path_b) + _path_arcs(path_c))


def gen_theta_normalized(a: int, b: int, c: int) -> Digraph:
    """theta with a and b swapped when a > b (theta(a,b,c) and theta(b,a,c) are isomorphic)"""
    return gen_theta(min(a, b), max(a, b), c)


def gen_type3(n: int, i: int, j: int) -> Digraph:
    """C_n plus chords (1, i) and (i-1, j), 2 < i < j <= n"""
    _require(2 < i, 'type3', f"2 < i (i={i})")
    _require(i < j, 'type3', f"i < j (i={i}, j={j})")
    _require(j <= n, 'type3', f"j <= n (j={j}, n={n})")
    arcs = _cycle_arcs(range(n)) + [(0, i - 1), (i - 2, j - 1)]
    return from_arc_list(n, arcs)


def is_tiled_type4(n: int, pairs: Sequence[Sequence[int]]) -> bool:
    """Chord cycles y_k..x_k cover every position: y_1 = 1, y_{k+1} = x_k + 1, x_k = n"""
    if not pairs or pairs[0][1] != 1 or pairs[-1][0] != n:
        return False
    return all(nxt[1] == cur[0] + 1 for cur, nxt in zip(pairs, pairs[1:]))


def gen_type4(n: int, pairs: Sequence[Sequence[int]]) -> Digraph:
    """
    C_n plus back-chords (x_k, y_k) with 1 < y_1 < x_1 < y_2 < x_2 < ... < x_k <= n

    Each chord closes the short cycle on positions y_k..x_k. When those cycles cover
    all n positions no position is left outside them, so the tiled form
    1 = y_1 < x_1 < y_2 = x_1 + 1 < ... < x_k = n is accepted as well.
    """
    pairs = [tuple(p) for p in pairs]
    _require(len(pairs) >= 2, 'type4', f"k >= 2 (k={len(pairs)})")
    chain: List[Tuple[str, int]] = [('1', 1)]
    for index, (x, y) in enumerate(pairs, start=1):
        chain.append((f"y_{index}", y))
        chain.append((f"x_{index}", x))
    if is_tiled_type4(n, pairs):
        chain = chain[1:]
    for (left_name, left), (right_name, right) in zip(chain, chain[1:]):
        _require(left < right, 'type4', f"{left_name} < {right_name} ({left} < {right})")
    _require(pairs[-1][0] <= n, 'type4', f"x_{len(pairs)} <= n ({pairs[-1][0]} <= {n})")
    arcs = _cycle_arcs(range(n)) + [(x - 1, y - 1) for x, y in pairs]
    return from_arc_list(n, arcs)


def gen_type5(n: int, i: int, j: int) -> Digraph:
    """C_n plus chords (1, i), (i-1, j) and (j-1, 2), 3 < i, i+1 < j <= n"""
    _require(3 < i, 'type5', f"3 < i (i={i})")
    _require(i + 1 < j, 'type5', f"i+1 < j (i={i}, j={j})")
    _require(j <= n, 'type5', f"j <= n (j={j}, n={n})")
    arcs = _cycle_arcs(range(n)) + [(0, i - 1), (i - 2, j - 1), (j - 2, 1)]
    return from_arc_list(n, arcs)


GENERATORS = {
    'cycle': gen_cycle,
    'path': gen_path,
    'complete': gen_complete,
    'infinity': gen_infinity,
    'type1': gen_type1,
    'type2': gen_type2,
    'theta': gen_theta,
    'type3': gen_type3,
    'type4': gen_type4,
    'type5': gen_type5,
}


def generate(family: str, params: Sequence) -> Digraph:
    """Dispatch to the generator named by `family`"""
    generator = GENERATORS.get(family)
    if generator is None:
        raise BadParams(family, f"family in {sorted(GENERATORS)}")
    return generator(*params)


def type4_chains(n: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Every valid chord tuple ((x_1, y_1), ...) for type4 on n vertices"""
    def extend(start: int, chosen: List[Tuple[int, int]]):
        if len(chosen) >= 2:
            yield tuple(chosen)
        for y in range(start, n + 1):
            for x in range(y + 1, n + 1):
                chosen.append((x, y))
                yield from extend(x + 1, chosen)
                chosen.pop()

    def tile(start: int, chosen: List[Tuple[int, int]]):
        if start == n + 1 and len(chosen) >= 2:
            yield tuple(chosen)
        for x in range(start + 1, n + 1):
            chosen.append((x, start))
            yield from tile(x + 1, chosen)
            chosen.pop()

    yield from extend(2, [])
    yield from tile(1, [])


def sweep_family_params(max_n: int) -> Iterator[Tuple[str, tuple]]:
    """All seven-family parameter tuples with at most max_n vertices"""
    for r in range(2, max_n + 1):
        for s in range(2, max_n + 2 - r):
            yield 'infinity', (r, s)
            yield 'type1', (r, s)
            yield 'type2', (r, s)
    for b in range(1, max_n - 1):
        for a in range(0, b + 1):
            for c in range(0, max_n - 1 - a - b):
                yield 'theta', (a, b, c)
    for n in range(2, max_n + 1):
        for i in range(3, n + 1):
            for j in range(i + 1, n + 1):
                yield 'type3', (n, i, j)
        for chain in type4_chains(n):
            yield 'type4', (n, chain)
        for i in range(4, n + 1):
            for j in range(i + 2, n + 1):
                yield 'type5', (n, i, j)
