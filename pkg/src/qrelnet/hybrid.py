"""Networks mixing quantum and classical edges.

A hybrid network is one graph whose edges are tagged quantum or classical.
The canonical decomposition splits it into the quantum subgraph, the
classical subgraph, and their shared vertices; the splitting weights then
combine per-quotient quantum reliabilities with per-quotient classical
reliabilities.  When the quantum subgraph sits entirely on classical
vertices it is a sublayer, and the value decomposes into the classical
baseline plus correction terms, one per pair of non-trivial partitions.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from typing import NamedTuple

from .classical import reliability_enumerate
from .errors import OverlapError, QrelnetError, SublayerError, WidthMismatchError
from .graphs import Graph, quotient
from .operators import qr_operator, qr_value
from .partitions import Partition, connectivity_matrix, single_block
from .states import StateVector

QUANTUM = "quantum"
CLASSICAL = "classical"


@dataclass(frozen=True)
class Decomposition:
    """Quantum subgraph, classical subgraph, and their shared vertices."""

    quantum: Graph
    classical: Graph
    shared: tuple[str, ...]
    quantum_edge_indices: tuple[int, ...]
    classical_edge_indices: tuple[int, ...]


@dataclass(frozen=True)
class HybridState:
    """Quantum amplitudes for the quantum edges, probabilities for the rest."""

    quantum: StateVector
    classical: tuple

    def __post_init__(self):
        object.__setattr__(self, "classical", tuple(self.classical))
        for x in self.classical:
            if not 0 <= x <= 1:
                raise QrelnetError(f"edge probability {x} outside [0, 1]", code="invalid_probability")


def canonical_decomposition(g: Graph, kinds) -> Decomposition:
    """Split a tagged graph into its quantum and classical parts.

    Each part keeps the vertices its edges touch, in the original vertex
    order; vertices with no incident edge at all go to the classical part, so
    the two parts always glue back to the input graph.  Edge order within
    each part follows the input.
    """
    kinds = list(kinds)
    if len(kinds) != g.num_edges:
        raise WidthMismatchError(f"{len(kinds)} edge tags for {g.num_edges} edges")
    for kind in kinds:
        if kind not in (QUANTUM, CLASSICAL):
            raise QrelnetError(f"edge kind must be {QUANTUM!r} or {CLASSICAL!r}, got {kind!r}", code="invalid_graph")

    q_idx = tuple(i for i, kind in enumerate(kinds) if kind == QUANTUM)
    c_idx = tuple(i for i, kind in enumerate(kinds) if kind == CLASSICAL)
    q_touch = {v for i in q_idx for v in g.edges[i]}
    c_touch = {v for i in c_idx for v in g.edges[i]}
    c_touch |= {v for v in g.vertices if v not in q_touch and v not in c_touch}

    k = Graph(tuple(v for v in g.vertices if v in q_touch), tuple(g.edges[i] for i in q_idx))
    h = Graph(tuple(v for v in g.vertices if v in c_touch), tuple(g.edges[i] for i in c_idx))
    shared = tuple(v for v in g.vertices if v in q_touch and v in c_touch)
    return Decomposition(k, h, shared, q_idx, c_idx)


def _check_inputs(decomp: Decomposition, state: HybridState) -> None:
    overlap = set(decomp.quantum.vertices) & set(decomp.classical.vertices)
    if overlap != set(decomp.shared):
        raise OverlapError(
            f"subgraphs overlap on {sorted(overlap)}, declared shared set is {sorted(set(decomp.shared))}"
        )
    if state.quantum.num_edges != decomp.quantum.num_edges:
        raise WidthMismatchError(
            f"quantum state spans {state.quantum.num_edges} edges, subgraph has {decomp.quantum.num_edges}"
        )
    if len(state.classical) != decomp.classical.num_edges:
        raise WidthMismatchError(
            f"{len(state.classical)} probabilities for {decomp.classical.num_edges} classical edges"
        )


def hybrid_qr(decomp: Decomposition, state: HybridState) -> float:
    """Reliability of a hybrid network via the splitting weights.

    Degenerate shapes take their limits: no quantum vertices leaves the
    classical reliability, no classical vertices leaves the quantum
    reliability, and two non-empty parts sharing nothing can never connect.
    """
    _check_inputs(decomp, state)
    k, h, shared = decomp.quantum, decomp.classical, decomp.shared
    if not k.vertices:
        return float(reliability_enumerate(h, list(state.classical)))
    if not h.vertices:
        return qr_value(qr_operator(k), state.quantum)
    if not shared:
        return 0.0
    cm = connectivity_matrix(shared)
    qk = [qr_value(qr_operator(quotient(k, shared, p)), state.quantum) for p in cm.order]
    rh = [float(reliability_enumerate(quotient(h, shared, p), list(state.classical))) for p in cm.order]
    total = 0.0
    for i in range(len(cm.order)):
        for j in range(len(cm.order)):
            b = cm.beta[i][j]
            if b:
                total += float(b) * qk[i] * rh[j]
    return total


class CorrectionTerm(NamedTuple):
    gamma: Partition
    gamma_prime: Partition
    weight: Fraction
    value: float


class SublayerResult(NamedTuple):
    total: float
    classical: float
    corrections: tuple[CorrectionTerm, ...]


def sublayer_qr(decomp: Decomposition, state: HybridState) -> SublayerResult:
    """Classical baseline plus quantum corrections for a sublayer network.

    Requires every quantum vertex to also be classical.  The single-block
    row of the weights reproduces the bare classical reliability, so the
    total is that baseline plus one correction term per remaining pair of
    partitions with nonzero weight.  An inoperative sublayer (quantum state
    concentrated on the all-edges-down configuration) contributes exactly
    zero correction.
    """
    _check_inputs(decomp, state)
    k, h, shared = decomp.quantum, decomp.classical, decomp.shared
    if not set(k.vertices) <= set(h.vertices):
        raise SublayerError("quantum subgraph must live on classical vertices")
    baseline = float(reliability_enumerate(h, list(state.classical)))
    if not k.vertices:
        return SublayerResult(baseline, baseline, ())
    if set(shared) != set(k.vertices):
        raise SublayerError("shared set of a sublayer must be the whole quantum vertex set")

    cm = connectivity_matrix(shared)
    t = single_block(shared)
    qk = [qr_value(qr_operator(quotient(k, shared, p)), state.quantum) for p in cm.order]
    rh = [float(reliability_enumerate(quotient(h, shared, p), list(state.classical))) for p in cm.order]
    corrections = []
    for i, gamma in enumerate(cm.order):
        if gamma == t:
            continue
        for j, gamma_prime in enumerate(cm.order):
            b = cm.beta[i][j]
            if b:
                corrections.append(CorrectionTerm(gamma, gamma_prime, b, float(b) * qk[i] * rh[j]))
    total = baseline + sum(c.value for c in corrections)
    return SublayerResult(total, baseline, tuple(corrections))
