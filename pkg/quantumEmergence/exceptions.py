"""Errors raised by quantumEmergence"""


class EmergenceError(Exception):
    """Base class for every error raised by the package"""


class InvalidParameterError(EmergenceError, ValueError):
    """Angle, grid or tolerance outside its admissible range"""


class DomainError(EmergenceError, ValueError):
    """Label or state outside the space an operation acts on"""


class NormalizationError(EmergenceError, ValueError):
    """Vector, isometry, matrix or distribution breaks its invariant"""


class ImpossibleOutcomeError(EmergenceError):
    """Requested measurement outcome has (numerically) zero probability"""

    def __init__(self, outcome: int, probability: float):
        self.outcome = outcome
        self.probability = probability
        super().__init__(
            f"outcome {outcome:+d} has probability {probability:.3e}, "
            "post-measurement state is undefined"
        )


class InfiniteDivergenceError(EmergenceError):
    """Kullback-Leibler divergence with p_i > 0 where q_i = 0"""


class DegenerateModelError(EmergenceError):
    """Model with fewer than two target states"""


class UndefinedRowError(EmergenceError):
    """Macro source state with zero intervention weight"""


class UnknownStateError(EmergenceError, LookupError):
    """State label not present on a matrix axis"""


class UsageError(EmergenceError):
    """Bad command-line arguments"""


class OutputError(EmergenceError, OSError):
    """Report cannot be written"""
