"""Transition probability matrices of classical causal models"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from quantumEmergence.exceptions import (
    DomainError,
    NormalizationError,
    UnknownStateError,
)

###############################################################################
# CONSTANTS
PROBABILITY_TOLERANCE = 1e-12

logger = logging.getLogger(__name__)
###############################################################################


@dataclass(frozen=True)
class StateLabel:
    """
    State of a set of classical variables, e.g,

        StateLabel("1,0,0", (("a", 1), ("c1", 0), ("c2", 0)))

    PARAMETERS
        name: identifier, distinct within one matrix axis
        variables: ordered (variable name, integer value) pairs
    """

    name: str
    variables: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        variables = tuple(
            (str(key), int(value)) for key, value in self.variables
        )
        object.__setattr__(self, "variables", variables)

    @classmethod
    def from_values(cls, **values: int) -> "StateLabel":
        """Label named after its values: from_values(a=1, c=0) -> '1,0'"""

        name = ",".join(str(value) for value in values.values())
        return cls(name, tuple(values.items()))

    def value(self, variable: str) -> int:

        for key, value in self.variables:
            if key == variable:
                return value

        raise UnknownStateError(f"{self.name} has no variable {variable}")

    def as_dict(self) -> Dict[str, int]:
        return dict(self.variables)

    def __str__(self) -> str:
        return self.name


###############################################################################
def uniform_distribution(size: int) -> np.ndarray:
    """Uniform intervention distribution p(do(s0)) = 1/size"""
    return np.full(size, 1.0 / size)


def check_distribution(
    distribution: Sequence[float], name: str = "distribution"
) -> np.ndarray:
    """
    Validate a probability vector: finite, non negative and summing to 1
    within PROBABILITY_TOLERANCE. No renormalization is done.
    """

    distribution = np.asarray(distribution, dtype=float)

    if distribution.ndim != 1 or distribution.size == 0:
        raise NormalizationError(f"{name} must be a non empty vector")

    if not np.all(np.isfinite(distribution)):
        raise NormalizationError(f"{name} must be finite")

    if np.any(distribution < 0.0):
        raise NormalizationError(f"{name} has negative entries")

    total = distribution.sum()

    if abs(total - 1.0) > PROBABILITY_TOLERANCE:
        raise NormalizationError(f"{name} sums to {total!r}, not 1")

    return distribution


###############################################################################
@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """
    Row stochastic matrix p(s_F | do(s0)) of a Markov chain causal
    model together with the intervention distribution p(do(s0)).
    Source and target state spaces are kept apart. Rows and
    do_distribution accepted within PROBABILITY_TOLERANCE are stored
    clipped to [0, 1] and rescaled to unit sums.

    PARAMETERS
        source_states: intervention states s0, one per row
        target_states: final states s_F, one per column
        rows: transition probabilities
        do_distribution: p(do(s0)), uniform if None
    """

    source_states: Tuple[StateLabel, ...]
    target_states: Tuple[StateLabel, ...]
    rows: np.ndarray
    do_distribution: Optional[np.ndarray] = field(default=None)

    def __post_init__(self):

        source_states = tuple(self.source_states)
        target_states = tuple(self.target_states)

        for axis, states in (
            ("source", source_states),
            ("target", target_states),
        ):
            names = [state.name for state in states]

            if len(set(names)) != len(names):
                raise DomainError(f"{axis} state names are not distinct")

        rows = np.array(self.rows, dtype=float)

        if rows.shape != (len(source_states), len(target_states)):
            raise NormalizationError(
                f"rows have shape {rows.shape}, expected "
                f"{(len(source_states), len(target_states))}"
            )

        if not np.all(np.isfinite(rows)):
            raise NormalizationError("transition probabilities must be finite")

        if np.any(rows < -PROBABILITY_TOLERANCE) or np.any(
            rows > 1.0 + PROBABILITY_TOLERANCE
        ):
            raise NormalizationError("transition probabilities not in [0, 1]")

        row_sums = rows.sum(axis=1)
        worst = np.max(np.abs(row_sums - 1.0))

        if worst > PROBABILITY_TOLERANCE:
            raise NormalizationError(
                f"rows must sum to 1, largest deviation {worst:.3e}"
            )

        if self.do_distribution is None:
            do_distribution = uniform_distribution(len(source_states))
        else:
            do_distribution = check_distribution(
                self.do_distribution, "do distribution"
            )

        if do_distribution.size != len(source_states):
            raise NormalizationError(
                "do distribution and source states differ in length"
            )

        # entries within tolerance are stored in [0, 1] with exact sums
        rows = np.clip(rows, 0.0, 1.0)
        rows /= rows.sum(axis=1, keepdims=True)
        rows.setflags(write=False)
        do_distribution = do_distribution / do_distribution.sum()
        do_distribution.setflags(write=False)

        object.__setattr__(self, "source_states", source_states)
        object.__setattr__(self, "target_states", target_states)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "do_distribution", do_distribution)

    ###########################################################################
    @property
    def number_of_sources(self) -> int:
        return len(self.source_states)

    @property
    def number_of_targets(self) -> int:
        return len(self.target_states)

    def source_index(self, s0: StateLabel) -> int:

        try:
            return self.source_states.index(s0)
        except ValueError as error:
            raise UnknownStateError(f"unknown source state {s0}") from error

    def target_index(self, s_final: StateLabel) -> int:

        try:
            return self.target_states.index(s_final)
        except ValueError as error:
            raise UnknownStateError(
                f"unknown target state {s_final}"
            ) from error

    def row(self, s0: StateLabel) -> np.ndarray:
        """p(s_F | do(s0)) over target_states"""
        return self.rows[self.source_index(s0)]

    def probability(self, s0: StateLabel, s_final: StateLabel) -> float:
        source, target = self.source_index(s0), self.target_index(s_final)
        return float(self.rows[source, target])

    def marginal_final(self) -> np.ndarray:
        """p(s_F) = sum over s0 of p(s_F | do(s0)) p(do(s0))"""
        return self.do_distribution @ self.rows

    ###########################################################################
    def with_do_distribution(
        self, do_distribution: Sequence[float]
    ) -> "TransitionMatrix":

        return TransitionMatrix(
            self.source_states,
            self.target_states,
            self.rows,
            np.asarray(do_distribution, dtype=float),
        )

    def reordered(
        self,
        source_states: Iterable[StateLabel],
        target_states: Iterable[StateLabel],
    ) -> "TransitionMatrix":
        """Same model with both axes listed in another order"""

        source_states = tuple(source_states)
        target_states = tuple(target_states)

        source_order = [self.source_index(state) for state in source_states]
        target_order = [self.target_index(state) for state in target_states]

        return TransitionMatrix(
            source_states,
            target_states,
            self.rows[np.ix_(source_order, target_order)],
            self.do_distribution[source_order],
        )

    def __repr__(self) -> str:

        header = ", ".join(str(state) for state in self.target_states)
        lines = [f"TransitionMatrix(targets: {header}"]

        for state, weight, row in zip(
            self.source_states, self.do_distribution, self.rows
        ):
            values = " ".join(f"{value:.6g}" for value in row)
            lines.append(f"    {state} (do={weight:.6g}): {values}")

        return "\n".join(lines) + ")"


###############################################################################
@dataclass(frozen=True)
class Partition:
    """
    Micro to macro state mapping for both matrix axes

    PARAMETERS
        source_map: micro source state -> macro source state
        target_map: micro target state -> macro target state
    """

    source_map: Dict[StateLabel, StateLabel]
    target_map: Dict[StateLabel, StateLabel]

    @classmethod
    def identity(cls, tpm: TransitionMatrix) -> "Partition":

        return cls(
            {state: state for state in tpm.source_states},
            {state: state for state in tpm.target_states},
        )

    @classmethod
    def from_functions(
        cls,
        tpm: TransitionMatrix,
        source_function: Callable[[StateLabel], StateLabel],
        target_function: Callable[[StateLabel], StateLabel],
    ) -> "Partition":
        """
        Build the mapping by applying a function to every micro state
        of each axis of tpm
        """

        return cls(
            {state: source_function(state) for state in tpm.source_states},
            {state: target_function(state) for state in tpm.target_states},
        )

    @staticmethod
    def _macro_states(
        micro_states: Tuple[StateLabel, ...],
        mapping: Dict[StateLabel, StateLabel],
        axis: str,
    ) -> Tuple[StateLabel, ...]:

        missing = [state for state in micro_states if state not in mapping]

        if missing:
            names = ", ".join(str(state) for state in missing)
            raise DomainError(f"partition is not total on {axis}: {names}")

        macro_states = []

        for state in micro_states:
            if mapping[state] not in macro_states:
                macro_states.append(mapping[state])

        names = [state.name for state in macro_states]

        if len(set(names)) != len(names):
            raise DomainError(f"macro {axis} state names are not distinct")

        return tuple(macro_states)

    def macro_sources(self, tpm: TransitionMatrix) -> Tuple[StateLabel, ...]:
        """Macro source states ordered by first appearance"""
        return self._macro_states(tpm.source_states, self.source_map, "source")

    def macro_targets(self, tpm: TransitionMatrix) -> Tuple[StateLabel, ...]:
        """Macro target states ordered by first appearance"""
        return self._macro_states(tpm.target_states, self.target_map, "target")
