"""Absolute separability / absolute PPT from spectra, nonlinear witnesses for
states outside those sets, and detector-efficiency thresholds for the witnesses."""

from .core import (
    DensityOperator,
    DimensionError,
    Dims,
    InvariantError,
    Ket,
    NoNegativeEigenvalue,
    NoRoot,
    NoSignChange,
    NotHermitianError,
    PSDWitnessError,
    UnitaryOperator,
)
from .criteria import (
    CriterionReport,
    StateClass,
    absppt_margins_3xn,
    as_margin_2xn,
    classify,
    is_ppt,
)
from .linalg import (
    eigh_descending,
    expectation,
    hyperspherical_ket,
    kron,
    min_eigpair,
    partial_transpose,
    schmidt_values,
)
from .loophole import (
    HermAntihermSplit,
    LoopholeParams,
    critical_eta_linear,
    critical_eta_nonlinear,
    herm_antiherm,
    identity_coeff,
    kh_ka,
    linear_threshold,
    nonlinear_threshold,
    wup,
)
from .states import (
    gen_werner,
    horodecki_2x4,
    horodecki_3x3,
    rho2,
    rho3,
    u_2q,
    u_appendix,
    u_pauli_2x4,
    u_pauli_3x3,
)
from .witness import (
    NonlinearSpec,
    WitnessSpec,
    detection_threshold,
    eval_F1,
    eval_F2,
    eval_linear,
    linear_witness,
    optimal_phi,
)

__version__ = "0.1.0"
