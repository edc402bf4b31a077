#!/usr/bin/env python3
"""
Complementarity Spectrum Toolkit Errors
Every failure the toolkit reports is a ValueError subclass carrying the offending values
"""

from typing import Optional


class ComplementaritySpectrumError(ValueError):
    """Root of all toolkit errors"""


class SelfLoop(ComplementaritySpectrumError):
    def __init__(self, u: int):
        self.u = u
        super().__init__(f"self-loop at vertex {u}: simple digraphs have no loops")


class VertexOutOfRange(ComplementaritySpectrumError):
    def __init__(self, u: int, n: int):
        self.u = u
        self.n = n
        super().__init__(f"vertex {u} out of range for a digraph on {n} vertices")


class EmptyGraph(ComplementaritySpectrumError):
    def __init__(self, operation: str = "operation"):
        self.operation = operation
        super().__init__(f"{operation} needs at least one vertex")


class NotStronglyConnected(ComplementaritySpectrumError):
    def __init__(self, n: int, components: int):
        self.n = n
        self.components = components
        super().__init__(f"digraph on {n} vertices has {components} strongly connected components")


class DidNotConverge(ComplementaritySpectrumError):
    def __init__(self, max_iterations: int, gap: float):
        self.max_iterations = max_iterations
        self.gap = gap
        super().__init__(
            f"power iteration stopped after {max_iterations} steps with bound gap {gap:.3e}"
        )


class WitnessInvalid(ComplementaritySpectrumError):
    def __init__(self, component: int, residual: float, reason: str = "dual feasibility"):
        self.component = component
        self.residual = residual
        self.reason = reason
        super().__init__(
            f"complementarity witness fails {reason} at vertex {component} (residual {residual:.3e})"
        )


class TooLarge(ComplementaritySpectrumError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"{n} vertices exceeds the enumeration cap of {cap}")


class BadParams(ComplementaritySpectrumError):
    def __init__(self, family: str, constraint: str):
        self.family = family
        self.constraint = constraint
        super().__init__(f"{family}: violated constraint {constraint}")


class IsCycle(ComplementaritySpectrumError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"digraph is the cycle C_{n}: no infinity or theta subdigraph")


class DedupAmbiguity(ComplementaritySpectrumError):
    def __init__(self, a: float, b: float, gap: float):
        self.a = a
        self.b = b
        self.gap = gap
        super().__init__(
            f"radii {a!r} and {b!r} differ by {gap:.3e}, too close to separate safely"
        )


class RecognizerDisagreement(ComplementaritySpectrumError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"structural recognizer disagreement: {detail}")


class EdgeListParseError(ComplementaritySpectrumError):
    def __init__(self, line: Optional[int], message: str):
        self.line = line
        self.message = message
        where = f"line {line}" if line is not None else "input"
        super().__init__(f"{where}: {message}")


class ConfigError(ComplementaritySpectrumError):
    pass
