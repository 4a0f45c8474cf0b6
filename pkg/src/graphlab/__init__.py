"""Random-graph models, subgraph sampling, PA degree laws and random walks
on weighted graphs, with the closed-form results as analytic oracles."""

__version__ = "0.1.0"

from .degrees import (DegreeHistogram, PaMoments, PowerLawFit, binomial_deviation,
                      binomial_pmf, chisquare_gof, fit_power_law, histogram, pa_c,
                      pa_degree_variance, pa_degree_variance_recursive, pa_expected_degree,
                      pa_limit_pmf, pa_tau, sample_power_law)
from .generators import ErParams, PaParams, PaTrace, generate_er, generate_pa
from .graph import (GraphError, WeightedGraph, components, degree, is_connected, read_graph,
                    write_graph)
from .protein import (MutationNetwork, SequenceError, SequenceRecord, build_network,
                      load_sequences, pa_compatibility_report, parse_sequences)
from .subgraph import (SamplerSpec, apply_sampler, pa_diagnostics, sample_edges,
                       sample_nodes_bernoulli, sample_nodes_uniform)
from .walks import (HittingSolution, PotentialSolution, TetaliReport, WalkStats, commute_time,
                    effective_resistance, hitting_times, simulate_walks, transition_matrix,
                    verify_tetali)
