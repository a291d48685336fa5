"""G-parking functions of rooted multigraphs and the Tutte polynomial.

The Tutte polynomial of a connected multigraph is the generating function of
its G-parking functions by number of bridge vertices and by weight::

    >>> from gparking import build_multigraph, tutte_parking
    >>> G = build_multigraph(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)])
    >>> str(tutte_parking(G))
    'x^3+2*x^2+x+2*x*y+y+y^2'
"""

from .bijection import (ColoredSpanningTree, VertexOrder, algorithm_a, all_rankings,
                        identity_ranking, ord_, rea, reversed_ranking, theta_parking)
from .classical import (cm, critical_maxima, embed_classical, enumerate_classical,
                        is_classical_parking, tutte_complete)
from .criticality import (BridgeStats, ParkingTable, bridge_vertices, critical_vertices,
                          phi_contract, psi_delete, strong_identical, weak_identical)
from .errors import (DisconnectedGraphError, GraphError, NotParkingError, RankingError,
                     RootValueError)
from .graph import (ColoredEdge, Multigraph, build_multigraph, classify_edge, complete_graph,
                    contract_edge, contract_root_edge, count_spanning_trees, cycle_graph,
                    delete_edge, load_json, outdeg, path_graph)
from .parking import check_parking, enumerate_parking, is_parking, is_parking_bruteforce, weight_w
from .tutte import Poly, bw_multiset, poly_eval, tutte_delcon, tutte_parking

__version__ = "0.1.0"
