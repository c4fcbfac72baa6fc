"""Exact rationality classification of degree-3 del Pezzo fibrations on
rank-4 rational scrolls over the projective line."""

from .scroll import (
    DivisorClass,
    EmptyLinearSystemError,
    Monomial,
    Scroll,
)
from .hirzebruch import FIBRE, S_INF, Hirzebruch, RuledClass
from .families import (
    ClassificationReport,
    ConePosition,
    DP3Family,
    DegenerationData,
    Ks2Diagnostic,
    Route,
    Verdict,
    classify,
    cone_position,
    degeneration,
    dp4_rational,
    enumerate_families,
    euler_characteristic,
    k_cubed,
    k_cubed_via_adjunction,
    ks2_diagnostic,
    necessary_smooth_pic2,
    shokurov_nonruled,
    smooth_pic2,
)
from .special import (
    BinaryForm,
    CurveSystem,
    DegenerateSeedError,
    Dp2Report,
    RootCount,
    ZeroFormError,
    conic_fiber_system,
    discriminant,
    dp2_report,
    dp2_report_from_forms,
    invariant_disjoint_subsets,
    picard_rank_two_witness,
    random_form,
    root_count,
    singular_fiber_count,
)

__version__ = "0.1.0"
