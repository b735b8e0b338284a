"""Roots of Dehn twists about nonseparating circles on nonorientable surfaces.

Conjugacy classes of degree-n roots correspond to equivalence classes of
arithmetic data sets; this package enumerates and classifies them, computes
maximal root degrees, decides primary-root existence, and verifies the
mod-2 homology obstruction to even-degree roots.
"""

from .arithmetic import (
    CongruenceSolution,
    Residue,
    mod_inverse,
    solve_composite_system,
    solve_simple_system,
)
from .datasets import (
    ConePoint,
    DataSet,
    DataSetType,
    ValidationReport,
    are_equivalent,
    canonical_form,
    equivalence_orbit,
    genus,
    is_valid,
    validate,
)
from .enumeration import (
    GenusQuery,
    enumerate_classes,
    enumerate_datasets,
    root_exists,
    root_exists_closed_form,
)
from .errors import (
    DehnrootsError,
    DimMismatch,
    InvalidDataSet,
    InvalidInput,
    NotInvertible,
    SearchCapExceeded,
    TypeMismatch,
    Unconstructible,
)
from .homology import (
    F2Matrix,
    enumerate_orthogonal,
    find_square_root,
    is_orthogonal,
    multiply,
    psi_twist_a1,
    psi_twist_b,
)
from .maxdegree import (
    CensusB,
    MaxDegreeResult,
    census_type_b,
    exceptional_table,
    max_degree_bruteforce,
    max_degree_closed_form,
    results_agree,
)
from .primary import (
    PrimaryQuery,
    construction_dataset,
    degree3_exists,
    is_primary,
    primary_exists_bruteforce,
    primary_exists_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "CensusB",
    "ConePoint",
    "CongruenceSolution",
    "DataSet",
    "DataSetType",
    "DehnrootsError",
    "DimMismatch",
    "F2Matrix",
    "GenusQuery",
    "InvalidDataSet",
    "InvalidInput",
    "MaxDegreeResult",
    "NotInvertible",
    "PrimaryQuery",
    "Residue",
    "SearchCapExceeded",
    "TypeMismatch",
    "Unconstructible",
    "ValidationReport",
    "are_equivalent",
    "canonical_form",
    "census_type_b",
    "construction_dataset",
    "degree3_exists",
    "enumerate_classes",
    "enumerate_datasets",
    "enumerate_orthogonal",
    "equivalence_orbit",
    "exceptional_table",
    "find_square_root",
    "genus",
    "is_orthogonal",
    "is_primary",
    "is_valid",
    "max_degree_bruteforce",
    "max_degree_closed_form",
    "mod_inverse",
    "multiply",
    "primary_exists_bruteforce",
    "primary_exists_closed_form",
    "psi_twist_a1",
    "psi_twist_b",
    "results_agree",
    "root_exists",
    "root_exists_closed_form",
    "solve_composite_system",
    "solve_simple_system",
    "validate",
]
