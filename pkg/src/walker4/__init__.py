"""Curvature toolkit for restricted four-dimensional Walker metrics.

The metric, in canonical coordinates, is [[0, I2], [I2, B]] with
B = [[a, c], [c, b]] and defining functions a, b, c of (u1, u2) only.
Every published component formula (connection, curvature, Ricci, scalar,
Einstein, Weyl) is implemented verbatim in :mod:`walker4.closed_form` and
cross-validated against the independent first-principles engine in
:mod:`walker4.oracle`; :mod:`walker4.classify` decides Einstein / Ricci-flat
/ locally-symmetric / conformally-flat by residual sampling, and
:mod:`walker4.families` builds the explicit solution families.
"""

from ._kernels import NUMBA_ENABLED
from .classify import (
    ClassificationReport,
    ConditionResult,
    SamplePlan,
    check_conformally_flat,
    check_einstein,
    check_locally_symmetric,
    check_ricci_flat,
    classify_metric,
    einstein_pde_residuals,
    locally_symmetric_pde_residuals,
)
from .closed_form import (
    connection_at,
    curvature_at,
    ricci_at,
    weyl_at,
    weyl_from_definition,
)
from .config import ConfigError, MetricConfig, load_config
from .families import (
    ConformallyFlatFamilyParams,
    ConstraintViolation,
    EinsteinFamilyParams,
    ExponentialExampleParams,
    InvalidParameter,
    make_conformally_flat_family,
    make_einstein_family,
    make_exponential_example,
    make_simple_examples,
)
from .jets import (
    Jet3,
    ScalarField2,
    const_field,
    exp_field,
    finite_difference_jet,
    jet_add,
    jet_mul,
    poly_field,
    zero_field,
)
from .metric import MetricAtPoint, WalkerMetric, evaluate_metric, inverse_metric
from .oracle import (
    MetricJetField,
    metric_jet_field,
    nabla_R_finite_difference,
    oracle_christoffels,
    oracle_nabla_R,
    oracle_ricci_scalar_einstein_weyl,
    oracle_riemann,
)
from .pack import CurvaturePack, curvature_pack
from .tensors import (
    ConnectionCoefficients,
    CovariantDerivativeR,
    CurvatureComponents,
    RicciData,
    WeylComponents,
)
from .verify import run_verification

__version__ = "0.1.0"
