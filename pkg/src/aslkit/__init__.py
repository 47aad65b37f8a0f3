"""Finite-group toolkit: generalized derived series, abelian-simple length,
twisted wreath products, prime-field modules, and matrix-group filtrations."""

__version__ = "0.1.0"

from .core import (
    Group,
    GroupAction,
    Homomorphism,
    Subgroup,
    check_group_axioms,
    commutator_subgroup,
    conjugacy_classes,
    direct_product,
    direct_product_many,
    fiber_product,
    find_isomorphism,
    full_subgroup,
    group_from_perm_generators,
    is_isomorphic,
    normal_closure,
    quotient,
    semidirect_product,
    subgroup_generated,
    trivial_subgroup,
)
from .errors import ToolkitError
from .families import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    klein_group,
    quaternion_group,
    symmetric_group,
)
from .fpmod import (
    FpSubspace,
    GSet,
    LinearAction,
    coinvariant_span,
    coset_space,
    is_irreducible,
    orbit_hypothesis,
    unipotent_derived_length,
    v_chain,
    vector_group,
)
from .matgroups import (
    LPFiltration,
    MatrixGroupSpec,
    corollary_decomposition,
    gl_group,
    glz_group,
    is_l_group,
    matrix_group,
    residue_kernel,
    search_lp,
    sl_group,
    unitriangular_group,
    validate_lp,
)
from .normal import (
    NormalLattice,
    all_normal_subgroups,
    is_simple,
    maximal_normal_subgroups,
    melnikov_subgroup,
    product_normal_decomposition,
    solvable_radical,
)
from .oracle import oracle_D, oracle_length, oracle_normal_subgroups
from .series import (
    SeriesReport,
    abelian_simple_length,
    abelian_invariants,
    d0_subgroup,
    derived_series,
    factor_structure,
    generalized_derived_series,
    generalized_derived_subgroup,
    subnormal_certificate,
    verify_certificate,
)
from .specparse import evaluate, group_from_spec, parse_group_spec, unparse
from .wreath import (
    WreathProduct,
    induced_group,
    msigma_hypothesis,
    msigma_witness,
    realization_chain,
    twisted_wreath_product,
    wreath_quotient,
)
