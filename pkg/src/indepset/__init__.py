"""Independent sets and antichains through Hilbert series of monomial ideals."""

from .cm_bipartite import (cm_independence_identity_check, graph_from_poset,
                           is_cohen_macaulay_labeling, poset_from_graph)
from .errors import ConsistencyError, ValidationError
from .graph import Graph, independence_polynomial_oracle
from .hilbert import (FIRST, MAX_DEGREE, HilbertResult, PivotStrategy, antichain_polynomial_fast,
                      cocoa_like, hilbert_numerator, independence_polynomial, most_frequent_power)
from .interpolation import brown_identity_check, recover_coefficients
from .monomial_ideal import Monomial, MonomialIdeal, edge_ideal, modified_edge_ideal
from .polynomial import Polynomial
from .poset import Poset, antichain_polynomial, boolean_lattice, chain, from_relations
from .poset_ideal import (enumerate_variety, groebner_basis, jp_cover_generators, jp_generators,
                          verify_buchberger)

__version__ = "0.1.0"
