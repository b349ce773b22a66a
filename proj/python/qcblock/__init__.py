"""Quasi-cyclic codes as block cyclic codes."""

from ._core import (
    CriterionResult,
    DecodeResult,
    DecodeStrategy,
    DistanceReport,
    EvalCode,
    Field,
    LinearCode,
    Mat,
    MatPoly,
    ProjectionSpec,
    QbchCode,
    QcGeneratorPoly,
    QcGenerators,
    RootCheck,
    add_block_errors,
    block_distance_at_least,
    block_rank,
    block_weight,
    check_dual_identity,
    code_from_generator,
    companion_primitive_root,
    cyclic_shift,
    eval_code_build,
    eval_code_shortened,
    generator_polynomial,
    matrix_minimal_polynomial,
    mds_like_bound_check,
    min_distance_enum,
    min_distance_low_weight,
    qbch_build,
    qbch_decode,
    qbch_from_spec_text,
    qc_generator_basis,
    run_reference_suite,
    scan_primitive_roots,
    syndrome_series,
    verify_primitive_root,
)

__all__ = [
    "CriterionResult",
    "DecodeResult",
    "DecodeStrategy",
    "DistanceReport",
    "EvalCode",
    "Field",
    "LinearCode",
    "Mat",
    "MatPoly",
    "ProjectionSpec",
    "QbchCode",
    "QcGeneratorPoly",
    "QcGenerators",
    "RootCheck",
    "add_block_errors",
    "block_distance_at_least",
    "block_rank",
    "block_weight",
    "check_dual_identity",
    "code_from_generator",
    "companion_primitive_root",
    "cyclic_shift",
    "eval_code_build",
    "eval_code_shortened",
    "generator_polynomial",
    "matrix_minimal_polynomial",
    "mds_like_bound_check",
    "min_distance_enum",
    "min_distance_low_weight",
    "qbch_build",
    "qbch_decode",
    "qbch_from_spec_text",
    "qc_generator_basis",
    "run_reference_suite",
    "scan_primitive_roots",
    "syndrome_series",
    "verify_primitive_root",
]
