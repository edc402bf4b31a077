#!/usr/bin/env python3
"""
Hypothesis strategies and sweep helpers shared by the test modules
"""

import os
from typing import List, Tuple

from hypothesis import strategies as st

from digraph_core import Digraph
from digraph_families import generate, sweep_family_params

# COMPSPEC_FULL_SWEEP=1 runs the family sweeps at the full n <= 12 range
FULL_SWEEP = os.environ.get('COMPSPEC_FULL_SWEEP') == '1'
SWEEP_MAX_N = 12 if FULL_SWEEP else 7
PERTURBATION_MAX_N = 12 if FULL_SWEEP else 5


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 6) -> Digraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if not pairs:
        return Digraph(n, frozenset())
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Digraph(n, frozenset(chosen))


def family_members(max_n: int) -> List[Tuple[str, tuple, Digraph]]:
    return [(family, params, generate(family, params))
            for family, params in sweep_family_params(max_n)]


def family_id(member) -> str:
    family, params, _ = member
    return f"{family}{params}"
