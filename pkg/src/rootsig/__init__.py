"""Exact arithmetic for type-A root-system signatures, deformation
cones, Tutte evaluations, and characteristic quasi-polynomials."""

from .deformation import (
    CONE_LABEL,
    DeformationMatrix,
    build_catalan,
    build_family,
    build_general,
    build_ish,
    build_linial,
    build_shi,
    build_uniform,
    decone,
)
from .errors import (
    CapExceededError,
    FitError,
    HypothesisError,
    OracleMismatchError,
    RootsigError,
    UsageError,
)
from .exactlinalg import IntMatrix, SmithForm, determinant, rank, smith_normal_form
from .quasiperiod import (
    PeriodReport,
    QuasiPolynomial,
    complement_count,
    complement_count_formula,
    fit_quasipolynomial,
    lcm_period_exact,
    make_period_report,
    minimal_fit_period,
    mu_period_bound,
    period_formula,
    period_formula_ish,
)
from .rootsystem import PositiveRoot, RootTuple, positive_roots, root_tuple
from .signature import (
    Signature,
    SignatureCensus,
    census_bruteforce,
    census_formula,
    compute_signature,
    cyclic_eulerian,
    eulerian,
    partition_identity_lhs,
    s_formula,
    signature_cofactor,
    signature_graph,
)
from .tutteeval import (
    TutteEval,
    abs_balance_count,
    delta,
    enumerate_bases,
    tau,
    tutte11_bruteforce,
    tutte11_formula,
)

__version__ = "1.0.0"

__all__ = [
    "CONE_LABEL",
    "CapExceededError",
    "DeformationMatrix",
    "FitError",
    "HypothesisError",
    "IntMatrix",
    "OracleMismatchError",
    "PeriodReport",
    "PositiveRoot",
    "QuasiPolynomial",
    "RootTuple",
    "RootsigError",
    "Signature",
    "SignatureCensus",
    "SmithForm",
    "TutteEval",
    "UsageError",
    "abs_balance_count",
    "build_catalan",
    "build_family",
    "build_general",
    "build_ish",
    "build_linial",
    "build_shi",
    "build_uniform",
    "census_bruteforce",
    "census_formula",
    "complement_count",
    "complement_count_formula",
    "compute_signature",
    "cyclic_eulerian",
    "decone",
    "delta",
    "determinant",
    "enumerate_bases",
    "eulerian",
    "fit_quasipolynomial",
    "lcm_period_exact",
    "make_period_report",
    "minimal_fit_period",
    "mu_period_bound",
    "partition_identity_lhs",
    "period_formula",
    "period_formula_ish",
    "positive_roots",
    "rank",
    "root_tuple",
    "s_formula",
    "signature_cofactor",
    "signature_graph",
    "smith_normal_form",
    "tau",
    "tutte11_bruteforce",
    "tutte11_formula",
]
