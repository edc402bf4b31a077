#!/usr/bin/env python3
"""
Complementarity Spectrum Oracle
Brute-force Pi(D): spectral radii of all induced strongly connected subdigraphs,
enumerated inside strongly connected components only
"""

import bisect
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from compspec_config import load_config
from compspec_errors import DedupAmbiguity, EmptyGraph, TooLarge
from digraph_core import (Digraph, induced_arc_count_mask, induced_subdigraph,
                          is_strongly_connected_mask, scc_decompose)
from perron_spectra import PerronCertificate, spectral_radius

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumSet:
    """Sorted distinct complementarity eigenvalues with one witness vertex set each"""
    values: Tuple[float, ...]
    dedup_tol: float
    witnesses: Tuple[Tuple[int, ...], ...]
    certificates: Tuple[PerronCertificate, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def contains(self, value: float, tol: Optional[float] = None) -> bool:
        tol = self.dedup_tol if tol is None else tol
        return any(abs(value - v) <= tol for v in self.values)

    def to_dict(self, labels: Optional[Tuple[int, ...]] = None) -> List[Dict]:
        """Values with certified bounds and 1-indexed witnesses"""
        entries = []
        for value, witness, certificate in zip(self.values, self.witnesses, self.certificates):
            names = witness if labels is None else [labels[v] for v in witness]
            entries.append({
                'value': value,
                'lower_bound': certificate.lower_bound,
                'upper_bound': certificate.upper_bound,
                'witness': [v + 1 for v in names],
            })
        return entries


def induced_strong_subsets(D: Digraph) -> Iterator[Tuple[int, ...]]:
    """
    Vertex sets inducing strongly connected subdigraphs, by size then lexicographically

    Subsets spanning two strongly connected components are never generated: such a
    subset cannot induce a strongly connected subdigraph.
    """
    if D.n == 0:
        return
    components = scc_decompose(D).components
    largest = max(len(comp) for comp in components)
    for size in range(1, largest + 1):
        candidates = []
        for comp in components:
            if len(comp) >= size:
                candidates.extend(combinations(comp, size))
        candidates.sort()
        for subset in candidates:
            if size == 1:
                yield subset
                continue
            mask = 0
            for v in subset:
                mask |= 1 << v
            if is_strongly_connected_mask(D, mask):
                yield subset


class ComplementaritySpectrumAnalyzer:
    def __init__(self, config: Optional[Dict] = None):
        """
        Brute-force complementarity spectrum analyzer

        Args:
            config: overrides for compspec_config.DEFAULT_CONFIG (dedup_tol, cert_tol, max_n, ...)
        """
        self.config = load_config(config)

    def check_size(self, D: Digraph) -> None:
        if D.n == 0:
            raise EmptyGraph("comp_spectrum")
        if D.n > self.config['max_n']:
            raise TooLarge(D.n, self.config['max_n'])
        if D.n > self.config['soft_warn_n']:
            logger.warning(f"enumerating up to 2^{D.n} subsets; expect a long run")

    def subset_radius(self, D: Digraph, subset: Tuple[int, ...]) -> PerronCertificate:
        """Radius of a strongly connected induced subdigraph; vertices and cycles are exact"""
        if len(subset) == 1:
            return PerronCertificate.exact(0.0, 1)
        mask = 0
        for v in subset:
            mask |= 1 << v
        if induced_arc_count_mask(D, mask) == len(subset):
            return PerronCertificate.exact(1.0, len(subset))
        return spectral_radius(induced_subdigraph(D, subset), self.config['cert_tol'])

    def comp_spectrum(self, D: Digraph) -> SpectrumSet:
        self.check_size(D)
        dedup_tol = self.config['dedup_tol']
        danger = self.config['gap_safety_factor'] * dedup_tol

        values: List[float] = []
        found: Dict[float, Tuple[Tuple[int, ...], PerronCertificate]] = {}

        for subset in induced_strong_subsets(D):
            certificate = self.subset_radius(D, subset)
            rho = certificate.rho_estimate
            slot = bisect.bisect_left(values, rho)
            neighbours = values[max(0, slot - 1):slot + 1]
            nearest = min(neighbours, key=lambda v: abs(v - rho)) if neighbours else None
            if nearest is not None and abs(nearest - rho) <= dedup_tol:
                continue
            if nearest is not None and abs(nearest - rho) <= danger:
                raise DedupAmbiguity(nearest, rho, abs(nearest - rho))
            values.insert(slot, rho)
            found[rho] = (subset, certificate)

        logger.debug(f"complementarity spectrum of {D.n}-vertex digraph: {values}")
        return SpectrumSet(
            values=tuple(values),
            dedup_tol=dedup_tol,
            witnesses=tuple(found[v][0] for v in values),
            certificates=tuple(found[v][1] for v in values),
        )

    def comp_spectrum_cardinality(self, D: Digraph) -> int:
        return len(self.comp_spectrum(D))


def comp_spectrum(D: Digraph, dedup_tol: Optional[float] = None,
                  config: Optional[Dict] = None) -> SpectrumSet:
    overrides = dict(config or {})
    if dedup_tol is not None:
        overrides['dedup_tol'] = dedup_tol
    return ComplementaritySpectrumAnalyzer(overrides).comp_spectrum(D)


def comp_spectrum_cardinality(D: Digraph, config: Optional[Dict] = None) -> int:
    return ComplementaritySpectrumAnalyzer(config).comp_spectrum_cardinality(D)
