"""Projective lines over finite rings, their distant graphs, and the
Grassmannian G(n, 2n, q) picture of P(M_n(q)).

>>> from ringline import make_ring, distant_graph
>>> g = distant_graph(make_ring("M2(GF(2))"))
>>> g.n, g.regular_degree()
(35, 16)
"""

from .catalog import (GraphInvariants, LocalModel, invariant_report, local_model_graph,
                      representative_rings, verify_classification)
from .cliques import (CliquePartition, clique_number, enumerate_clique_partitions,
                      enumerate_max_cliques, find_clique_partition, lift_partition,
                      maximal_cliques, product_partition, verify_partition)
from .errors import (BudgetExceededError, CapExceededError, FixtureError, GroupGenerationError,
                     RingMismatchError, RingSpecError, RinglineError, UnsupportedRingError)
from .fixtures import load_fixture, parse_fixture, verify_fixture
from .graph import Graph, complete_graph, complete_multipartite, tensor_product
from .grassmannian import (Parallelism, Spread, Subspace, analyze_partition_pairs,
                           enumerate_parallelisms, enumerate_spreads, enumerate_subspaces,
                           gaussian_binomial, grassmann_distant_graph, is_adjacent,
                           is_complementary, point_to_subspace)
from .io import export_graph, from_graph6, from_json, to_dot, to_graph6, to_json
from .isomorphism import is_isomorphic
from .orbits import classify_orbits
from .pline import (ProjectivePoint, act, distant_graph, is_distant, point_of, projective_line,
                    radical_projection, radically_parallel)
from .ring import (FiniteRing, Ideal, jacobson_radical, make_ring, quotient_ring,
                   radical_signature, units)

__version__ = "0.1.0"
