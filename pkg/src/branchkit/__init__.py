"""Exact branching laws, Weyl-term groupings and restriction-image membership
for the Hermitian families SU(m,n), SO_0(2,2n) and SO*(2n)."""
from .errors import (BranchkitError, NotACharacterError, NotInSupportError, ResourceError,
                     UnsupportedOperandError, ValidationError)
from .families import (SOE, SU, Family, GroupFamily, SOELabel, SOEWeight, SOStar, SOStarLabel,
                       SOStarWeight, SULabel, SUWeight, canonical_km, parse_family)
from .combinatorics import conjugate, interlaces
from .virtual import VirtualChar, twist_char, zero
from .oracle import exterior_decompose, oracle_restrict, tensor_decompose, tensor_virtual
from .branching import branch, branch_sostar_single, branch_terms_soe, branch_virtual
from .weyl import (WeylElem, WeylTerm, enum_wkappa, lambda_alt_sum, ptilde_ev, weyl_terms,
                   weyl_terms_direct)
from .image import (MembershipResult, invariant_I, lattice_member, member_soe,
                    preimage_su1n)
from .ansatz import (CGroup, Verdict, explore_sostar, is_good, star_groups,
                     verify_telescoping)

__version__ = "0.1.0"

__all__ = [
    "BranchkitError", "NotACharacterError", "NotInSupportError", "ResourceError",
    "UnsupportedOperandError", "ValidationError", "SOE", "SU", "Family", "GroupFamily",
    "SOELabel", "SOEWeight", "SOStar", "SOStarLabel", "SOStarWeight", "SULabel", "SUWeight",
    "canonical_km", "parse_family", "conjugate", "interlaces", "VirtualChar", "twist_char",
    "zero", "exterior_decompose", "oracle_restrict", "tensor_decompose", "tensor_virtual",
    "branch", "branch_sostar_single", "branch_terms_soe", "branch_virtual", "WeylElem",
    "WeylTerm", "enum_wkappa", "lambda_alt_sum", "ptilde_ev", "weyl_terms",
    "weyl_terms_direct", "MembershipResult", "invariant_I", "lattice_member", "member_soe",
    "preimage_su1n", "CGroup", "Verdict", "explore_sostar", "is_good", "star_groups",
    "verify_telescoping",
]
