"""Universal sampling sets for discrete signals of length N = p^M."""

from ._core import (
    BudgetExceeded,
    IndexSet,
    Infeasible,
    NotUniversal,
    PrimePowerModulus,
    SingularSystem,
    brute_force_universal,
    bracelet_canonical,
    bracelet_count,
    cauchy_davenport_check,
    condition_report,
    count_by_brute_force,
    count_universal,
    decompose,
    dft,
    entropy_curve,
    interpolate,
    is_invertible,
    is_universal,
    largest_admissible_d,
    maximal_universal,
    minimal_universal,
    random_maximal_experiment,
    sumset,
    universal_subset_of_size,
    verify_uncertainty,
)

__all__ = [name for name in dir() if not name.startswith("_")]
