"""Arithmetical structures on graphs, harmonic morphisms and critical groups.

All arithmetic is exact (Python integers and fractions).
"""

from .arith import (
    ArithStructure,
    enumerate_structures,
    laplacian,
    natural_structure,
    r_from_s,
    s_from_r,
    validate_structure,
)
from .critical import (
    CriticalGroup,
    GroupElement,
    GroupHom,
    class_of,
    class_representative,
    critical_group,
    induced_pullback,
    induced_pushforward,
    invariant_factor_count,
    verify_injective,
    verify_surjective,
)
from .divisor import (
    Divisor,
    canonical_divisor,
    divisor_degree,
    divisor_of_function,
    genus_data,
    is_principal,
    make_divisor,
    pullback_divisor,
    pushforward,
    ramification_divisor,
)
from .graph import (
    Graph,
    adjacency_matrix,
    build_graph,
    complete_graph,
    cycle_graph,
    degree_vector,
    path_graph,
    star_graph,
    wheel_graph,
)
from .linalg import integer_kernel_primitive, smith_normal_form, solve_integer
from .morphism import (
    GraphMorphism,
    HarmonicData,
    analyze_harmonic,
    build_morphism,
    enumerate_graph_morphisms,
    enumerate_harmonic_morphisms,
    pullback_structure,
    verify_matrix_identities,
)

__version__ = "0.1.0"
