"""Graded free resolutions, Betti tables and regularity."""
from .core import (BettiTable, Resolution, ResolutionReport, betti_of_ideal, betti_table,
                   check_resolution, frame_betti_table, free_resolution, iterated_resolution,
                   minimal_resolution, minimize, regularity, regularity_of_ideal,
                   schreyer_resolution)
from .matrix import GradedMatrix, syzygy_matrix
from .schreyer import SchreyerFrame

__all__ = [
    "GradedMatrix", "syzygy_matrix", "Resolution", "SchreyerFrame", "free_resolution",
    "schreyer_resolution", "iterated_resolution", "minimize", "minimal_resolution",
    "BettiTable", "betti_table", "regularity", "frame_betti_table", "check_resolution",
    "ResolutionReport", "betti_of_ideal", "regularity_of_ideal",
]
