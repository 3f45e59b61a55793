"""Exact integral-lattice toolkit.

Thin wrapper around the compiled extension: Smith/Hermite normal forms over Z,
discriminant groups and finite quadratic forms, the K3/Mukai lattice catalog
with half-integral B-fields, and the named verification checks.
"""

from ._core import (  # noqa: F401
    AdmissibilityError,
    CapacityError,
    LatticeError,
    ParseFailure,
    check_registry,
    determinant,
    discriminant_group,
    hnf,
    orthogonal_complement,
    overlattices_of_index,
    realize_bfield,
    run_all_json,
    run_check,
    saturated_kernel,
    signature,
    snf,
    solve_integral,
    standard_gram,
    standard_labels,
    transcendental_gram,
    twisted_gram,
)

__version__ = "0.1.0"
