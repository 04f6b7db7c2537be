"""Handle output tables of causal reports and sweeps"""
import json
import logging
import math
import os
import sys
from typing import Iterable, List, Optional, Sequence

import pandas as pd

from quantumEmergence.causal import CausalReport
from quantumEmergence.exceptions import OutputError
from quantumEmergence.experiments import (
    EmergenceComparison,
    ScenarioParams,
    SweepRow,
)
from quantumEmergence.quantum import which_way_knowledge
from quantumEmergence.utils.filedir import FileDirectory

###############################################################################
# CONSTANTS
COLUMN_NAMES = [
    "theta_rad",
    "phi_rad",
    "gamma_rad",
    "branch",
    "ei_bits",
    "determinism",
    "degeneracy",
    "k_sigma",
]
COMPARISON_COLUMN_NAMES = [
    "phi_rad",
    "theta_rad",
    "gamma_rad",
    "branch",
    "ei_fine_bits",
    "ei_coarse_bits",
    "ei_classical_aggregate_bits",
    "delta_bits",
    "causal_emergence",
]
OUTPUT_FORMATS = ("csv", "json")
SIGNIFICANT_DIGITS = 12
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"
NOT_APPLICABLE = "NA"
# branch column of the fine grained model, both outcomes are recorded
ALL_BRANCHES = "both"

logger = logging.getLogger(__name__)
###############################################################################


def round_significant(value: Optional[float]) -> Optional[float]:
    """Round to SIGNIFICANT_DIGITS, None and nan become None"""

    if value is None:
        return None

    value = float(value)

    if math.isnan(value):
        return None

    return float(FLOAT_FORMAT % value)


###############################################################################
def report_row(
    report: CausalReport, params: ScenarioParams, branch: str = None
) -> dict:
    """
    One output row for a causal report of a scenario

    PARAMETERS
        report: causal report of a model
        params: angles that produced the model
        branch: text for the branch column, params.branch by default
    """

    return {
        "theta_rad": params.theta,
        "phi_rad": params.phi,
        "gamma_rad": params.gamma,
        "branch": params.branch.value if branch is None else branch,
        "ei_bits": report.effective_information,
        "determinism": report.determinism,
        "degeneracy": report.degeneracy,
        "k_sigma": which_way_knowledge(params.theta),
    }


def sweep_rows(rows: Iterable[SweepRow]) -> List[dict]:

    return [
        {
            "theta_rad": row.theta,
            "phi_rad": row.phi,
            "gamma_rad": row.gamma,
            "branch": row.branch.value,
            "ei_bits": row.ei_bits,
            "determinism": row.determinism,
            "degeneracy": row.degeneracy,
            "k_sigma": row.k_sigma,
        }
        for row in rows
    ]


def comparison_row(comparison: EmergenceComparison) -> dict:

    params = comparison.params

    return {
        "phi_rad": params.phi,
        "theta_rad": params.theta,
        "gamma_rad": params.gamma,
        "branch": params.branch.value,
        "ei_fine_bits": comparison.ei_fine,
        "ei_coarse_bits": comparison.ei_coarse,
        "ei_classical_aggregate_bits": comparison.ei_classical_aggregate,
        "delta_bits": comparison.delta,
        "causal_emergence": comparison.causal_emergence,
    }


###############################################################################
class OutputFile(FileDirectory):
    """Handles data output for causal reports and sweep tables"""

    def __init__(
        self,
        rows: Sequence[dict],
        params: dict,
        columns: Sequence[str] = tuple(COLUMN_NAMES),
    ):
        """
        PARAMETERS

            rows: one dictionary per table row, keys in columns
            params: run parameters, written in the json output
            columns: column names, in output order
        """
        FileDirectory.__init__(self)
        self.rows = list(rows)
        self.params = params
        self.columns = list(columns)

    ###########################################################################
    def save_data(
        self, output_format: str = "csv", output_path: Optional[str] = None
    ) -> None:
        """
        Write the table to output_path or to standard output

        INPUTS
            output_format: csv or json
            output_path: file location, standard output if None
        """

        if output_format == "csv":
            content = self.to_csv()
        elif output_format == "json":
            content = self.to_json()
        else:
            raise OutputError(f"unknown output format: {output_format}")

        if output_path is None:
            sys.stdout.write(content)
            sys.stdout.flush()
            return

        super().check_directory(os.path.dirname(output_path))

        try:
            with open(output_path, "w", encoding="utf-8", newline="") as file:
                file.write(content)
        except OSError as error:
            raise OutputError(
                f"cannot write {output_path}: {error}"
            ) from error

        logger.info("saved %d row(s) to %s", len(self.rows), output_path)

    ###########################################################################
    def _get_data_frame(self) -> pd.DataFrame:
        """
        Table with numeric values rounded to SIGNIFICANT_DIGITS so that
        csv and json carry identical numbers
        """

        data = [
            [self._round_value(row[column]) for column in self.columns]
            for row in self.rows
        ]

        return pd.DataFrame(columns=self.columns, data=data)

    @staticmethod
    def _round_value(value):

        if isinstance(value, (bool, str)):
            return value

        return round_significant(value)

    ###########################################################################
    def to_csv(self) -> str:

        data_frame = self._get_data_frame()

        return data_frame.to_csv(
            index=False,
            float_format=FLOAT_FORMAT,
            na_rep=NOT_APPLICABLE,
            lineterminator="\n",
        )

    def to_json(self) -> str:

        records = [
            {
                column: self._round_value(row[column])
                for column in self.columns
            }
            for row in self.rows
        ]

        document = {"rows": records, "params": self.params}

        return json.dumps(document, indent=2, allow_nan=False) + "\n"


###############################################################################
def emit_report(
    rows: Sequence[dict],
    output_format: str = "csv",
    output_path: Optional[str] = None,
    params: Optional[dict] = None,
    columns: Sequence[str] = tuple(COLUMN_NAMES),
) -> None:
    """
    Write report rows as csv or json

    PARAMETERS
        rows: rows built by report_row, sweep_rows or comparison_row
        output_format: csv or json
        output_path: file location, standard output if None
        params: run parameters for the json "params" block
        columns: COLUMN_NAMES or COMPARISON_COLUMN_NAMES
    """

    output = OutputFile(rows, params or {}, columns)
    output.save_data(output_format=output_format, output_path=output_path)
