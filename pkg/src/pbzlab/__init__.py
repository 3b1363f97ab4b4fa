"""Finite BI-, BZ- and PBZ*-lattices: construction, classification,
congruences and identity checking."""

from .algebra import (ClassificationReport, FiniteAlgebra, Flavor, TRIVIAL, attach_brouwer,
                      attach_involution, classify, dense_and_t, isomorphism, reduct,
                      sharp_elements, subalgebra)
from .catalog import boolean, catalog, chain
from .classops import (all_subalgebras, d3_ol_dichotomy, distsets_embedding, embeds,
                       is_embedding, r_characterization, sandwich_decompose)
from .congruence import (Congruence, all_congruences, con_0, con_01, congruence_lattice,
                         irreducibility, principal_congruence, quotient)
from .constructions import (aol, direct_product, horizontal_sum, ordinal_sum, ordinal_sum_bi,
                            power, sandwich, sum_congruence)
from .errors import PBZError
from .lattice import (FiniteBoundedLattice, complemented_elements, is_splitting_pair,
                      lattice_isomorphic, lattice_laws, length_of)
from .terms import (Identity, m_transform, named_identity, parse, satisfies,
                    satisfies_restricted)

__all__ = [
    "ClassificationReport", "Congruence", "FiniteAlgebra", "FiniteBoundedLattice", "Flavor",
    "Identity", "PBZError", "TRIVIAL", "all_congruences", "all_subalgebras", "aol",
    "attach_brouwer", "attach_involution", "boolean", "catalog", "chain", "classify",
    "complemented_elements", "con_0", "con_01", "congruence_lattice", "d3_ol_dichotomy",
    "dense_and_t", "direct_product", "distsets_embedding", "embeds", "horizontal_sum",
    "irreducibility", "is_embedding", "is_splitting_pair", "isomorphism", "lattice_isomorphic",
    "lattice_laws", "length_of", "m_transform", "named_identity", "ordinal_sum",
    "ordinal_sum_bi", "parse", "power", "principal_congruence", "quotient",
    "r_characterization", "reduct", "sandwich", "sandwich_decompose", "satisfies",
    "satisfies_restricted", "sharp_elements", "subalgebra", "sum_congruence",
]

__version__ = "0.1.0"
