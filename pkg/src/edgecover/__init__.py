"""Budgeted edge cover on vertex-weighted graphs.

Approximation algorithms for Fixed Cost Minimum Edge Cover (FCEC) and
Maximum Weight m'-Edge Cover (MWEC), an exact parametric min-cut algorithm
for degrees density augmentation, the MWEC-via-FCEC reduction, and
exhaustive oracles for checking all of them on small graphs.
"""
from .density import build_network, density_aug, find_rho_star, min_cut, simplest_in
from .errors import (CapExceededError, EdgeCoverError, InfeasibleError, InputError,
                     NoCandidateError, ParseError)
from .fcec import FcecInstance, fcec_approx, k_lowest_degree, min_degree_knapsack
from .graph import (Graph, Solution, complete_graph, cross_edges, deg_sum, gen_gnp,
                    internal_edges, load_instance, path_graph, save_instance, star_graph,
                    touched)
from .mwec import MwecInstance, mwec_dp, mwec_feasibility_audit
from .oracles import brute_density_aug, brute_fcec, brute_min_deg_knapsack, brute_mwec
from .reductions import gap_experiment, mwec_via_fcec, rescale_weights

__version__ = "0.1.0"
