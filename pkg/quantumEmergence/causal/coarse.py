"""Classical coarse-graining of transition probability matrices"""
import logging

import numpy as np

from quantumEmergence.causal.tpm import Partition, TransitionMatrix
from quantumEmergence.exceptions import UndefinedRowError

logger = logging.getLogger(__name__)


def coarse_grain(
    tpm: TransitionMatrix, partition: Partition
) -> TransitionMatrix:
    """
    Aggregate a micro model into a macro model. Target columns mapped
    to the same macro target are summed, rows of micro sources mapped
    to the same macro source are averaged with their intervention
    weights, and the macro intervention distribution sums those weights.

    PARAMETERS
        tpm: micro transition matrix
        partition: total micro -> macro mapping on both axes

    OUTPUTS
        macro TransitionMatrix, row stochastic
    """

    macro_sources = partition.macro_sources(tpm)
    macro_targets = partition.macro_targets(tpm)

    # indicator matrices: macro source x micro source, micro x macro target
    source_membership = np.zeros((len(macro_sources), tpm.number_of_sources))
    target_membership = np.zeros((tpm.number_of_targets, len(macro_targets)))

    for idx, state in enumerate(tpm.source_states):
        macro_idx = macro_sources.index(partition.source_map[state])
        source_membership[macro_idx, idx] = 1.0

    for idx, state in enumerate(tpm.target_states):
        macro_idx = macro_targets.index(partition.target_map[state])
        target_membership[idx, macro_idx] = 1.0

    macro_do = source_membership @ tpm.do_distribution

    empty = [
        str(state)
        for state, weight in zip(macro_sources, macro_do)
        if weight <= 0.0
    ]

    if empty:
        raise UndefinedRowError(
            f"macro sources without intervention weight: {', '.join(empty)}"
        )

    weighted_rows = tpm.do_distribution[:, np.newaxis] * tpm.rows
    macro_rows = source_membership @ weighted_rows @ target_membership
    macro_rows /= macro_do[:, np.newaxis]

    logger.debug(
        "coarse grained %dx%d -> %dx%d",
        tpm.number_of_sources,
        tpm.number_of_targets,
        len(macro_sources),
        len(macro_targets),
    )

    return TransitionMatrix(
        macro_sources, macro_targets, macro_rows, macro_do
    )
