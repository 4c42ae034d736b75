"""
Graph (cluster) states of small registers: CZ gates applied along the edges of a graph to |+>^n,
checked through the stabilizers K_v = X_v prod_{w in nbr(v)} Z_w.

Qubit 0 is the most significant bit of the amplitude index, i.e. amplitudes reshape to a tensor of
shape (2,) * n whose axis k is qubit k.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from dipising.errors import IndexOutOfRangeError, InvalidGraphError, InvalidStateError, SizeLimitError
from dipising.physics.gates import DiagonalPropagator

log = logging.getLogger(__name__)

MAX_QUBITS = 12
NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class StateVector:
    n_qubits: int
    amplitudes: npt.NDArray[np.complex128] = field(repr=False)

    def __post_init__(self):
        _check_size(self.n_qubits)
        amplitudes = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amplitudes.size != 2**self.n_qubits:
            raise InvalidStateError(f"{self.n_qubits} qubits need {2**self.n_qubits} amplitudes, got {amplitudes.size}")
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1) > NORM_TOLERANCE:
            raise InvalidStateError(f"state vector must be normalized, norm is {norm}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    def tensor(self) -> npt.NDArray[np.complex128]:
        return self.amplitudes.reshape((2,) * self.n_qubits)


@dataclass(frozen=True)
class QubitGraph:
    n_qubits: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n_qubits < 1:
            raise InvalidGraphError(f"a graph needs at least one vertex, got {self.n_qubits}")
        edges = set()
        for a, b in self.edges:
            if a == b:
                raise InvalidGraphError(f"self-loop on vertex {a}")
            for vertex in (a, b):
                if not 0 <= vertex < self.n_qubits:
                    raise IndexOutOfRangeError(f"vertex {vertex} outside a graph with {self.n_qubits} vertices")
            edges.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(edges))

    def neighbors(self, vertex: int) -> list[int]:
        self.check_vertex(vertex)
        return sorted({b if a == vertex else a for a, b in self.edges if vertex in (a, b)})

    def check_vertex(self, vertex: int):
        if not 0 <= vertex < self.n_qubits:
            raise IndexOutOfRangeError(f"vertex {vertex} outside a graph with {self.n_qubits} vertices")


def chain_graph(n: int) -> QubitGraph:
    return QubitGraph(n, frozenset((k, k + 1) for k in range(n - 1)))


def grid_graph(rows: int, cols: int) -> QubitGraph:
    """
    Rectangular lattice with vertices numbered row by row.
    """
    edges = set()
    for r in range(rows):
        for c in range(cols):
            vertex = r * cols + c
            if c + 1 < cols:
                edges.add((vertex, vertex + 1))
            if r + 1 < rows:
                edges.add((vertex, vertex + cols))
    return QubitGraph(rows * cols, frozenset(edges))


def _check_size(n: int):
    if not 1 <= n <= MAX_QUBITS:
        raise SizeLimitError(f"registers of 1..{MAX_QUBITS} qubits are supported, got {n}")


def _check_pair(s: StateVector, a: int, b: int):
    for qubit in (a, b):
        if not 0 <= qubit < s.n_qubits:
            raise IndexOutOfRangeError(f"qubit {qubit} outside a {s.n_qubits}-qubit register")
    if a == b:
        raise IndexOutOfRangeError(f"two-qubit gate needs distinct qubits, got {a} twice")


def _pair_index(n: int, a: int, b: int, bit_a: int, bit_b: int) -> tuple:
    index = [slice(None)] * n
    index[a], index[b] = bit_a, bit_b
    return tuple(index)


def plus_state(n: int) -> StateVector:
    _check_size(n)
    return StateVector(n, np.full(2**n, 2 ** (-n / 2), dtype=np.complex128))


def apply_cz(s: StateVector, a: int, b: int) -> StateVector:
    _check_pair(s, a, b)
    tensor = s.tensor().copy()
    tensor[_pair_index(s.n_qubits, a, b, 1, 1)] *= -1
    return StateVector(s.n_qubits, tensor)


def apply_diagonal(s: StateVector, a: int, b: int, u: DiagonalPropagator) -> StateVector:
    """
    Applies a two-qubit diagonal propagator to qubits a (first factor) and b.
    """
    _check_pair(s, a, b)
    tensor = s.tensor().copy()
    factors = np.exp(1j * np.asarray(u.phases)).reshape(2, 2)
    for bit_a in (0, 1):
        for bit_b in (0, 1):
            tensor[_pair_index(s.n_qubits, a, b, bit_a, bit_b)] *= factors[bit_a, bit_b]
    return StateVector(s.n_qubits, tensor)


def graph_state(g: QubitGraph) -> StateVector:
    state = plus_state(g.n_qubits)
    for a, b in sorted(g.edges):
        state = apply_cz(state, a, b)
    log.debug("graph state on %d qubits with %d edges", g.n_qubits, len(g.edges))
    return state


def stabilizer_expectation(s: StateVector, g: QubitGraph, vertex: int) -> float:
    """
    <s| X_v prod_{w in nbr(v)} Z_w |s>.
    """
    g.check_vertex(vertex)
    if g.n_qubits != s.n_qubits:
        raise IndexOutOfRangeError(f"graph has {g.n_qubits} vertices but the state has {s.n_qubits} qubits")
    tensor = s.tensor()
    image = tensor.copy()
    for neighbor in g.neighbors(vertex):
        index = [slice(None)] * s.n_qubits
        index[neighbor] = 1
        image[tuple(index)] *= -1
    image = np.flip(image, axis=vertex)
    return float(np.real(np.vdot(tensor, image)))
