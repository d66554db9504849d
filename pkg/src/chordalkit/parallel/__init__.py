"""Barrier-synchronized parallel algorithms and their phase engine."""

from .engine import NULL, Arbitration, DictState, PhaseProgram, run_phase_program
from .lexbfs import parallel_lexbfs
from .peo import parallel_is_chordal, parallel_peo_test
from .setlist import SetList

__all__ = [
    "NULL",
    "Arbitration",
    "DictState",
    "PhaseProgram",
    "SetList",
    "parallel_is_chordal",
    "parallel_lexbfs",
    "parallel_peo_test",
    "run_phase_program",
]
