"""Workbench for finite inverse semigroups and additively idempotent
semirings: rook-matrix algebras, exhaustive identity checking, addition
search and the bundled verification suites."""

from ._seminf import (
    DEFAULT_SEED,
    CheckReport,
    FiniteAlgebra,
    GeneratedAlgebra,
    Identity,
    NaturalOrder,
    PartialInjection,
    SeminfError,
    Term,
    aperiodic_index,
    brandt_b21,
    check_identity,
    ck_generator,
    cn,
    compose,
    default_jobs,
    derive_addition,
    eliminate_addition,
    evaluate,
    find_all_ai_additions,
    find_separating_identity,
    generate_closure,
    identity_spectrum,
    identity_transfer_probe,
    idempotents,
    inverse_map,
    is_subuniverse,
    load_algebra,
    load_generated,
    matrix_unit,
    mk_algebra,
    mk_indices,
    natural_order,
    parse_identity,
    parse_term,
    pigeonhole_witness,
    print_term,
    restrict_algebra,
    save_algebra,
    to_algebra_text,
    transpose,
    unite,
    validate_table,
    verify_ai_semiring,
    verify_lemma1,
    verify_lemma2,
    verify_theorem_mechanics,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
