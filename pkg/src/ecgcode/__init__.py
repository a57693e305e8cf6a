"""Codebooks of DNA words that stay distinguishable under budgeted edits.

Pairwise feasibility is decided by a banded, bit-parallel dynamic program
that tracks every feasible count of substitutions, insertions and deletions;
codebooks are grown suffix by suffix with Monte-Carlo selection.
"""
from .candidates import ConstraintSpec, generate_candidates, homopolymer_blocks
from .codebook_io import load, report_row, save, write_report
from .ecg import EcgPairState, extend, init_state, pair_loss, run_pair, terminal_fecs
from .edit_model import (EditOp, EditProfile, Kind, build_profile, index_decode, index_encode,
                         matching_edits, quota_for_pair_check)
from .fec import FecSet, from_tuples, loss, to_tuples, transition
from .generator import (Codebook, GenerationConfig, baseline_redundancy, grow_codebook,
                        redundancy, total_loss)
from .oracle import brute_force_fecs, levenshtein

__version__ = "0.1.0"
