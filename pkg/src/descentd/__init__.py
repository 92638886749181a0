"""Exact-arithmetic descent algebras of Coxeter type D, with type A checks."""

from ._kernels import BACKEND
from .algebra import (
    AlgebraElement,
    NotInDescentSpanError,
    StructureTable,
    build_table,
    coset_reps,
    extract_coefficients,
    get_table,
    multiply_in_group_algebra,
    structure_constant_direct,
)
from .characters import (
    CharacterMatrix,
    character_matrix,
    coxeter_element,
    irreducible_map,
    irreducibles_mod_p,
    parabolic_subgroup,
    perm_character,
)
from .coxeter import (
    PRIME,
    GeneratorSet,
    ResourceLimitError,
    SignedPermutation,
    compose,
    conjugate_generator,
    enumerate_group,
    generator,
    inverse,
    left_descent_set,
    length,
    right_descent_set,
)
from .linalg import Echelon, in_span, rank, span_equal
from .labels import (
    Composition,
    Region,
    all_labels,
    class_representatives,
    composition_of,
    equivalent,
    format_label,
    max_multiplicity,
    p_modular_representatives,
    parse_label,
    subset_of,
)
from .radical import (
    RadicalBasis,
    radical_char0,
    radical_mod_p,
    radical_mod_p_via_ajjj,
    spans_equal,
    verify_ideal,
)
from .typea import FlowMatrix, flow_matrices, lie_action, multiply_sn, reading_word

__version__ = "0.1.0"
