"""Free commutative Frobenius PROP: terms, normal forms, skeletons, matrices.

The package decides equality of Frobenius terms two independent ways
(rewriting to the unique normal form, and topological skeletons), realizes
one-dimensional diagrams as exact integer matrices, and evaluates terms in
any user-supplied Frobenius algebra over exact rationals.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .brauer import (
    DEFAULT_SIZE_GUARD,
    ExactMatrix,
    brauer_b,
    digits,
    h2_iso,
    h2_iso_inv,
    h_iso,
    h_iso_inv,
    kron,
    mat_eq,
    mat_mul,
    matrix_a,
    scalar_mul,
    sym_matrix,
)
from .errors import (
    ArityMismatch,
    BadMatching,
    FrobiusError,
    NonCommutativeData,
    NonFrobeniusWarning,
    NotParallel,
    NotTauTerm,
    OutOfRange,
    ShapeMismatch,
    SignClash,
    SignMismatch,
    SizeGuardExceeded,
    TermSyntaxError,
    TypeMismatch,
)
from .normalize import (
    MAX_TERM_NODES,
    EBlock,
    NormalForm,
    SpecialTerm,
    equal,
    expand_to_term,
    normalize,
    to_normal,
    to_special,
    validate_normal_form,
)
from .onecob import (
    OneCobDiagram,
    compose_diagram,
    delta1,
    eps1,
    eta1,
    id_diagram,
    make_diagram,
    mu1,
    parse_diagram,
    print_diagram,
    symmetry_diagram,
    tensor_diagram,
)
from .perms import (
    Perm,
    block_tau,
    compose,
    factor_out,
    factor_out_pair,
    identity,
    invert,
    is_parallel,
    pad,
    perm_of_tau_term,
    tau_term_of_perm,
    tensor,
)
from .sampling import (
    GENERATOR_ATOMS,
    random_composable_diagrams,
    random_composable_terms,
    random_diagram,
    random_diagram_from,
    random_matrix,
    random_term,
)
from .skeleton import (
    CobSkeleton,
    Component,
    cob_skeleton,
    compose_skeleton,
    euler_characteristic,
    generator_skeleton,
    is_isomorphism_shape,
    normal_of_skeleton,
    rho,
    skeleton_from_json_dict,
    skeleton_of_normal,
    skeleton_to_json_dict,
    tensor_skeleton,
)
from .terms import (
    Comp,
    Delta,
    Eps,
    Eta,
    Id,
    Mu,
    Tau,
    Tensor,
    Term,
    TermType,
    count_nodes,
    parse_term,
    print_term,
    typecheck,
)
from .tqft import (
    AlgebraData,
    algebra_from_json_dict,
    algebra_to_json_dict,
    check_frobenius,
    closed_invariant,
    diagonal_algebra,
    eval_normal,
    eval_term,
    matrix_algebra,
    perm_matrix,
)
