"""Exact conjugacy computations in sl2 over polynomial rings F[x1..xn].

F is Q or a prime field F_p with p odd.  The main entry points::

    from sl2conj import PolyRing, MatSL2, diagonalize_involution

    R = PolyRing(variables=("t",))
    H = MatSL2(R.parse("2*t+1"), R.parse("-2"), R.parse("2*t^2+2*t"))
    P = diagonalize_involution(H)      # P^-1 H P = diag(1, -1)
"""

from .automorphisms import (
    LieAut,
    LieDer,
    RingAut,
    RingDer,
    RingIso,
    aut_apply,
    aut_compose,
    aut_inverse,
    decompose_derivation,
    der_apply,
    derivation_data,
    forward_data,
    invert_substitution,
    recognize_automorphism,
    transport_ring_iso,
)
from .conjugacy import (
    InvolutionFactorization,
    MembershipWitness,
    bezout_from_conjugation,
    diagonalize_involution,
    ideal_correspondence,
    jacobson_morozov,
    mad_normalize,
    nilpotent_to_standard,
    sl2F_membership,
    standardize_triple,
    theta,
    theta_inverse,
    triple_basis_matrix,
    triple_from_involution,
    ufd_factor_involution,
)
from .errors import *  # noqa: F401,F403
from .field import QQ, PrimeField, Rationals, field_from_config, square_in_field
from .harness import GenConfig, Generator, random_gl2, random_involution, random_nilpotent, random_triple
from .parse import parse_poly
from .poly import (
    BezoutCert,
    Poly,
    PolyRing,
    comaximal_certificate,
    is_unit,
    poly_divexact,
    poly_ext_gcd,
    poly_gcd,
    poly_gcd_many,
)
from .sl2 import (
    MatGL2,
    MatSL2,
    Sl2Triple,
    ad_matrix,
    bracket,
    conj,
    equal_up_to_center,
    gl2_new,
    is_involution,
    is_square_zero,
    lemma_identities,
    standard_basis,
    standard_triple,
    tau,
    verify_triple,
)

__version__ = "0.1.0"
