"""Long cycles in k-critical graphs: constructions, 2-cut decompositions and exact oracles."""

from .coloring import Coloring, chromatic_number, find_coloring, is_k_critical, split_two_cut, two_cut_type
from .constructors import gallai_graph, gallai_regular, hajos_chain, hajos_sum, hammock_counterexample, hj7, k_critical_of_order
from .cycle_extraction import key_path, long_cycle_critical, long_path_via_dfs, rooted_decomposition
from .decomposition import classify_virtual_edges, nucleus, standard_tree_decomposition, validate_decomposition
from .errors import *  # noqa: F401,F403
from .graph_core import CycleWitness, Graph, PathWitness, from_dimacs, read_dimacs, to_dimacs, write_dimacs
from .linkage import find_linkage, long_cycle_3connected
from .oracles import find_long_odd_cycle, longest_cycle_exact, longest_path_exact

__version__ = "0.1.0"
