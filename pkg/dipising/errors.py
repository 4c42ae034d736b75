"""
Exceptions raised by the dipising package. Every error derives from DipolarError so command line entry points
can report them uniformly.
"""


class DipolarError(Exception):
    """
    Base class for all errors raised by dipising.
    """

    pass


class NonHermitianInputError(DipolarError, ValueError):
    """
    Exception raised when a generator passed to the Hermitian exponential is not Hermitian.
    """

    pass


class InvalidSpaceError(DipolarError, ValueError):
    """
    Exception raised when a particle space or qubit choice is malformed (no sectors, duplicated sectors,
    coinciding qubit levels).
    """

    pass


class IndexOutOfSpaceError(DipolarError, IndexError):
    """
    Exception raised when a qubit level addresses a basis state outside its particle space.
    """

    pass


class NotHighestWeightError(DipolarError, ValueError):
    """
    Exception raised when a closed-form Ising result is requested for qubit levels that are not m = j states.
    """

    pass


class SpeciesMismatchError(DipolarError, ValueError):
    """
    Exception raised when the closed-form eigenvalues are requested for two different qubit species.
    """

    pass


class ZeroCouplingError(DipolarError, ValueError):
    """
    Exception raised when gamma_up * (J + n) == gamma_down * J, so the controlled phase never accumulates.
    """

    pass


class SizeLimitError(DipolarError, ValueError):
    """
    Exception raised when a register exceeds the supported number of qubits.
    """

    pass


class IndexOutOfRangeError(DipolarError, IndexError):
    """
    Exception raised when a qubit or vertex index is outside the register.
    """

    pass


class BadRangeError(DipolarError, ValueError):
    """
    Exception raised for invalid numeric ranges (non-positive distances, empty sweeps).
    """

    pass


class UnknownSystemError(DipolarError, KeyError):
    """
    Exception raised when a physical system name is not present in the catalog.
    """

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown system"


class CatalogError(DipolarError, ValueError):
    """
    Exception raised when a catalog file cannot be read or does not follow the catalog schema.
    """

    pass


class InvalidStateError(DipolarError, ValueError):
    """
    Exception raised when amplitudes do not form a normalized state of the given register.
    """

    pass


class InvalidGraphError(DipolarError, ValueError):
    """
    Exception raised when a qubit graph has no vertices or a self-loop.
    """

    pass


class GraphParseError(InvalidGraphError):
    """
    Exception raised when an edge-list graph file is malformed.
    """

    pass
