"""Equivariant cohomology classes of orbit closures for type-A quivers of any orientation."""

from .classes import (
    OrbitClass,
    VerificationReport,
    euler_class_cross,
    euler_class_ext,
    groth_product,
    k_class,
    orbit_class,
    restriction,
    schub_product,
    verify_interpolation,
    verify_k_lowest_degree,
)
from .lace import (
    LaceDiagram,
    canonical_minimal,
    diagram_length,
    from_perm_seq,
    is_minimal,
    k_diagrams,
    minimal_diagrams,
    orbit_of,
    swap_move,
    to_perm_seq,
)
from .permutation import Perm, min_completion
from .polynomial import Poly, Var
from .quiver import Orbit, Quiver, codim, enumerate_orbits, euler_form, ext_dim, hom_dim, rank_table, validate_orbit
from .schubert import double_grothendieck, double_schubert, schubert_specialize

__version__ = "0.1.0"
