"""Finite skew braces and set-theoretic solutions of the Yang-Baxter equation."""

from .braces import (
    FiniteSkewBrace,
    VerificationReport,
    Violation,
    lambda_of,
    make_almost_trivial,
    make_trivial,
    semidirect,
    solution_from_brace,
    star,
    verify,
)
from .bwords import BWord, Gen, Inv, Neg, Prod, Sum, Zero, eval_bword, parse_bword, print_bword
from .enumeration import (
    BraceCatalog,
    are_isomorphic,
    canonical_form,
    enumerate_groups,
    enumerate_skew_braces,
    enumerate_solutions,
)
from .errors import FormatError, PreconditionError, SkewBraceError
from .groups import (
    GroupTable,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)
from .ideals import (
    AscendingSeries,
    ElementSubset,
    all_ideals,
    annihilator,
    conjugates,
    derived_ideal,
    ideal_closure,
    is_annihilator_nilpotent,
    is_ideal,
    is_left_ideal,
    is_simple,
    quotient,
    socle,
    socle_multiples,
    upper_annihilator_series,
    upper_socle_series,
)
from .presentations import (
    SkewBracePresentation,
    extend_presentation,
    table_presentation,
    trivial_brace_presentation,
)
from .solutions import (
    DiagonalMaps,
    SolutionTable,
    extract_diagonal,
    is_involutive,
    is_nondegenerate,
    is_ybe,
    make_flip,
)
from .structure import (
    PermBraceResult,
    check_image_relations,
    emit_add_presentation,
    emit_mul_presentation,
    permutation_brace,
)

__version__ = '0.1.0'
