"""Multisegment calculus over the type-A root lattice.

Exact combinatorics: segments and multisegments, the Knuth-Viennot peeling
map and recursive RSK transform, inverted semistandard bitableaux with their
grading shifts, admissible-sequence forms and BZ derivatives, and the
multipartition dictionary, all paired with brute-force oracles.
"""

from .errors import (
    InvariantViolation,
    ParseError,
    PreconditionError,
    ShapeViolation,
    SizeGuardExceeded,
)
from .lattice import DominantWeight, LaurentPoly, Weight, cartan_form, ell_form
from .multisegment import Multisegment, Segment, point_multisegment
from .rsk import (
    DepthTable,
    LadderSequence,
    bitableau_of,
    depth_function,
    is_permissible_pair,
    knuth_viennot,
    rsk_transform,
    width,
)
from .specht import (
    Multicharge,
    Multipartition,
    column_removal_check,
    content,
    content_multi,
    is_proper,
    is_restricted,
    ladder_of_partition,
    multiseg_of,
    pad,
    specht_rsk_verify,
)
from .strings import (
    AdmissibleSequence,
    MultiplicityTable,
    beta_of,
    bz_derivative,
    bz_string,
    c_pair,
    c_prime_tuple,
    c_tuple,
    phi_multiseg,
    phi_weights,
    single_derivative,
    string_form,
    transfer_multiplicities,
)
from .tableaux import (
    BitableauPair,
    GammaDescriptor,
    InvertedSSYT,
    Partition,
    a_invariant,
    c_count,
    conjugate,
    gamma_descriptor,
    ladders_of,
    pair_checks,
    residue_sequence,
    standard_tableaux,
)

__all__ = [
    "AdmissibleSequence",
    "BitableauPair",
    "DepthTable",
    "DominantWeight",
    "GammaDescriptor",
    "InvariantViolation",
    "InvertedSSYT",
    "LadderSequence",
    "LaurentPoly",
    "Multicharge",
    "Multipartition",
    "MultiplicityTable",
    "Multisegment",
    "ParseError",
    "Partition",
    "PreconditionError",
    "Segment",
    "ShapeViolation",
    "SizeGuardExceeded",
    "Weight",
    "a_invariant",
    "beta_of",
    "bitableau_of",
    "bz_derivative",
    "bz_string",
    "c_count",
    "c_pair",
    "c_prime_tuple",
    "c_tuple",
    "cartan_form",
    "column_removal_check",
    "conjugate",
    "content",
    "content_multi",
    "depth_function",
    "ell_form",
    "gamma_descriptor",
    "is_permissible_pair",
    "is_proper",
    "is_restricted",
    "knuth_viennot",
    "ladder_of_partition",
    "ladders_of",
    "multiseg_of",
    "pad",
    "pair_checks",
    "phi_multiseg",
    "phi_weights",
    "point_multisegment",
    "residue_sequence",
    "rsk_transform",
    "single_derivative",
    "specht_rsk_verify",
    "standard_tableaux",
    "string_form",
    "transfer_multiplicities",
    "width",
]

__version__ = "0.1.0"
