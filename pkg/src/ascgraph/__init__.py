"""Aerial graph complexes, their differential, and a tensor-level oracle."""

from .graphs import (ASCENDING, DESCENDING, AerialGraph, GraphSum, TypePolicy, canonical_rep,
                     cycle_graph, disjoint_union, enumerate_graphs, is_admissible, is_symmetric,
                     parse_policy, relabel, symmetrize, symmetrize_sum, unrestricted)
from .differential import (OrderWord, ReductionError, coboundary, compare_orders, graph_order,
                           homotopy, homotopy_identity, homotopy_sum, order_of,
                           reduce_to_simple, splittings, symbol, wheel, wheel_product)
from .ratlinalg import SparseRationalMatrix, kernel_basis, rank, solve
from .cohomology import (BasisSlice, coboundary_witness, cohomology_dim, differential_matrix,
                         enumerate_basis, is_cocycle)
from .polyvector import Poly, PolyVector, nabla, q_bracket, random_ascending_tensor, schouten
from .oracle import (antisym_trace, chevalley_coboundary, chevalley_coboundary_eval,
                     cochain_eval, wheel_trace_eval)

__version__ = "0.1.0"
