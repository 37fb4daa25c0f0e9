"""Anti-commutative algebras over finite fields, the p-groups they determine,
and the module constructions that produce algebras with irreducible
automorphism groups."""

from .algebra import (
    ACAlgebra,
    abelian_algebra,
    alg_make,
    automorphisms,
    direct_sum,
    identity_checks,
    is_simple,
    isomorphism_search,
    semisimple_decompose,
    sl2,
    th52b_algebra,
)
from .constructions import (
    agl5_algebra,
    cg_tensor_decompose,
    cg_wedge_sym_decompose,
    dim4_census,
    family_sec6,
    gamma_algebra,
)
from .duality import (
    G_of_L,
    L_of_G,
    central_automorphism_audit,
    correspondence_audit,
    lift_automorphism,
    round_trip,
)
from .errors import IacError
from .field import Field, field_make, field_of_order
from .pcgroup import PcGroup, direct_power

__version__ = "0.1.0"
