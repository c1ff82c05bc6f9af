"""Togliatti systems of monomial ideals: weak Lefschetz failure, minimality,
toric smoothness, syzygy-bundle stability, and exhaustive classification
surveys, all in exact arithmetic."""

__version__ = "0.1.0"

from .monomials import (  # noqa: F401
    LatticePointSet,
    Monomial,
    MonomialIdeal,
    canonical_form,
    inverse_system,
    is_trivial,
    is_trivial_type_b,
    make_ideal,
    parse_inline_ideal,
    pure_power_ideal,
    simplex_points,
)
from .linalg import (  # noqa: F401
    RationalMatrix,
    SNFResult,
    evaluation_matrix,
    kernel_basis,
    rank,
    smith_normal_form,
)
from .lefschetz import (  # noqa: F401
    WlpReport,
    fails_wlp_in_degree,
    hyperplane_dependence,
    multiplication_matrix,
    wlp_report,
)
from .apolarity import (  # noqa: F401
    HypersurfaceSpace,
    TogliattiReport,
    certificate_polynomial,
    is_minimal,
    is_togliatti,
    minimality_oracle,
    togliatti_kernel,
    togliatti_report,
    togliatti_status,
)
from .polytopes import (  # noqa: F401
    LatticePolytope,
    SmoothnessReport,
    is_smooth,
    polytope_of,
    trivial_smoothness_classifier,
    vertex_osculation_defect,
)
from .stability import (  # noqa: F401
    StabilityReport,
    gcd_degree,
    slope,
    stability_class,
    stability_oracle,
    subset_value,
)
from .survey import (  # noqa: F401
    MuBounds,
    SurveyRow,
    closed_form_mu_s,
    enumerate_ideals,
    mu_bounds,
    survey_row,
)
from .families import family, family_names  # noqa: F401
from .errors import BudgetExceeded, GuardExceeded, InvalidIdeal, UnknownTarget  # noqa: F401
