"""A-Chebyshev polynomials: evaluation, zeros, envelopes and Salem sequences."""

__version__ = "0.1.0"

from .aberth import RootSet, complex_roots
from .core import (
    ATuple,
    RealPolynomial,
    char_poly,
    eval_T_A,
    eval_T_A_wform,
    eval_U_A,
    eval_U_A_wform,
    reciprocal,
)
from .envelope import (
    EnvelopeSq,
    envelope_eval,
    envelope_eval_charpoly,
    envelope_expansion_m_le_4,
    envelope_sq_series,
    tangency_points,
)
from .errors import (
    AChebError,
    DegreeCapError,
    DivisionRemainderError,
    InvalidTupleError,
    NotPisotError,
    RootFindingError,
    SingularInputError,
)
from .kernel import ChebSeries, cheb_series_eval, cheb_t, cheb_u, w_map, x_map
from .roots import (
    LimitPointReport,
    all_zeros_T,
    all_zeros_U,
    interlacing_check,
    limit_set_experiment,
    persistent_zeros,
    real_zeros_theta,
)
from .salem import (
    RootCensus,
    SalemApproximant,
    is_salem_numeric,
    pisot_to_salem_sequence,
    root_census,
    salem_R,
    salem_S,
    wform_identity_check,
)
