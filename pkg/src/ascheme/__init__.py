"""Exact analysis of commutative association schemes."""

from .core import (
    Scheme,
    canonical_form,
    emit_scheme_file,
    parse_scheme_file,
    relabel_classes,
    scheme_from_entries,
    symmetrize,
    verify_axioms,
)
from .spectra import EigenTable, character_table, distinct_eigenvalue_count, union_spectrum
from .fusion import (
    FusionVerdict,
    amorphic_normal_form,
    bannai_muzychuk_check,
    enumerate_admissible_partitions,
    fuse_direct,
    idempotent_matching,
    is_amorphic,
)
from .generator import (
    GenerationReport,
    TheoremVerdict,
    check_theorem_4class,
    check_theorem_amorphic,
    check_theorem_fission,
    check_theorem_one_pair,
    check_theorem_skew_types,
    classify_skew_4class,
    find_generating_unions,
    generates,
    predict_fission_table,
)
from .srg import SrgParams, connectivity_classification, srg_eigen, srg_params_from_scheme
from .catalog import (
    build_cyclotomic,
    build_product,
    build_schurian,
    catalog_ids,
    catalog_scheme,
    run_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "Scheme",
    "EigenTable",
    "FusionVerdict",
    "GenerationReport",
    "TheoremVerdict",
    "SrgParams",
    "parse_scheme_file",
    "emit_scheme_file",
    "scheme_from_entries",
    "verify_axioms",
    "canonical_form",
    "relabel_classes",
    "symmetrize",
    "character_table",
    "union_spectrum",
    "distinct_eigenvalue_count",
    "enumerate_admissible_partitions",
    "fuse_direct",
    "bannai_muzychuk_check",
    "is_amorphic",
    "amorphic_normal_form",
    "idempotent_matching",
    "generates",
    "find_generating_unions",
    "check_theorem_one_pair",
    "check_theorem_amorphic",
    "check_theorem_4class",
    "check_theorem_fission",
    "check_theorem_skew_types",
    "classify_skew_4class",
    "predict_fission_table",
    "srg_params_from_scheme",
    "srg_eigen",
    "connectivity_classification",
    "build_cyclotomic",
    "build_schurian",
    "build_product",
    "catalog_ids",
    "catalog_scheme",
    "run_catalog",
    "__version__",
]
