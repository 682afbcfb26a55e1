"""Exact verification of Yang-Baxter-type laws on finite instances.

The layers build on each other: exact scalars and maps, then shelves,
groups, Hopf and Leibniz structures with their crossed modules, then
rank-2 braided systems, generalized Yetter-Drinfel'd modules and their
induced braidings, and finally the enriching structures, tensor products,
and coherence checks of the representation categories. JSON documents and
the command line live in formats and cli.
"""

from .braided import (
    SET_MODE,
    AssocAlgebra,
    BraidedModuleData,
    BraidedSystem,
    Coalgebra,
    build_system,
    check_assoc_algebra,
    check_braided_module,
    check_coalgebra,
    check_cybe,
    cybe_check,
    sigma_ass,
    sigma_coass,
    sigma_lei,
)
from .category import (
    EnrichingStructure,
    YDCharacter,
    associator,
    canonical_enriching,
    character_rep,
    check_enriching,
    coherence_check,
    enrich_yd,
    enumerate_yd_characters,
    tensor_enriching,
    tensor_reps,
    unit_enriching,
    unit_maps,
    z_functor,
)
from .exact import (
    GF,
    QQ,
    Field,
    Matrix,
    SetFn,
    compose,
    diff_witness,
    flip,
    identity,
    kron,
    kron_apply,
    linearize,
    permutation_matrix,
)
from .formats import (
    DocumentError,
    LawViolation,
    bundle_document,
    decode_structure,
    dumps_document,
    load_document,
    load_structure,
    loads_document,
    save_document,
    system_document,
    to_document,
)
from .groups import (
    FiniteGroup,
    GroupCrossedModule,
    ShelfCrossedModule,
    adjoint_crossed_module,
    aut_augmented_crossed_module,
    check_group,
    check_group_crossed_module,
    check_shelf_crossed_module,
    conjugation_shelf,
    crossed_module_from_group,
    cyclic_group,
    induced_crossed_module,
    standard_crossed_module,
    symmetric_group,
)
from .gyd import (
    ConnectingData,
    GYDModule,
    GroupGradedRep,
    RepresentationBundle,
    ShelfRep,
    as_gyd,
    braid_operator,
    braiding_map,
    check_group_graded_rep,
    check_gyd,
    check_pi_condition,
    check_shelf_rep,
    check_ybe_family,
    connecting_data,
    gyd_braiding,
)
from .hopf import (
    ADJOINT_SIDES,
    FinHopfAlgebra,
    HopfCharacterPair,
    adjoint_braidings,
    adjoint_entwining,
    check_character_pair,
    check_hopf_algebra,
    check_yd_character,
    counit_pair,
    dual_group_algebra,
    group_algebra,
    group_character,
    group_like,
)
from .leibniz import (
    LeibnizAlgebra,
    LeibnizCrossedModule,
    LeibnizRep,
    UnitalLeibnizAlgebra,
    abelian_leibniz,
    check_leibniz,
    check_leibniz_crossed_module,
    check_leibniz_rep,
    identity_crossed_module,
    l2_algebra,
    unitarize,
)
from .reports import Check, Report
from .shelves import (
    PointedShelf,
    Rack,
    Shelf,
    ShelfAction,
    automorphism_group,
    check_rack,
    check_shelf,
    check_shelf_action,
    check_shelf_morphism,
    constant_shelf,
    cyclic_shelf,
    dihedral_shelf,
    projection_shelf,
    sd_pair_map,
    sigma_sd,
    standard_shelf,
)

__version__ = "0.1.0"
