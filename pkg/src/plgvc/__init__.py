"""Vertex cover approximation on random (alpha, beta) power-law graphs."""

from .bounds import (BoundReport, DomainError, bound_report, delta0, eta_lower_first, eta_lower_refined,
                     ex_vstar_lower, partial_zeta, rho_first, rho_refined, xv_upper, zeta)
from .degree_model import DegreeSequence, InvalidParameters, PlgParams, build_degree_sequence, expected_counts
from .exact import ExactResult, brute_vc, exact_vc
from .generator import InvalidInput, generate, generate_batch
from .graph import (MultiGraph, SimpleGraph, induced_degree_stats, parse_graph, format_graph, read_graph,
                    simplify, validate_cover, write_graph)
from .harness import ExperimentOptions, ExperimentRecord, emit, run_experiment, sweep_beta
from .lp_half import HalfAssignment, NtPartition, brute_half_lp, nt_partition, solve_half_integral, two_approx_cover
from .rounding import (CoverAssignment, compute_vstar, ratio_decomposition, round_cover,
                       vstar_lower_bound_witness)

__version__ = "0.1.0"
