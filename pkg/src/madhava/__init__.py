"""Exact-arithmetic acceleration of the Madhava-Leibniz series for pi."""

from .numkernel import DecimalRendering, Enclosure, Rounding, enclosure_width, rat, to_decimal
from .series import (
    MADHAVA_LEIBNIZ,
    AlternatingSeries,
    PartialSumState,
    certified_pi,
    madhava_term,
    partial_sum,
    pi_enclosure,
    remainder_magnitude,
)
from .remainder import (
    ContinuedFraction,
    CorrectorOrder,
    brouncker_pi,
    cf_convergent,
    corrected_pi,
    corrector,
    historical_residual,
    rho_fraction,
)
from .accel import (
    TransformedSeries,
    UndefinedTransformError,
    aitken_closed_form_ml,
    aitken_delta2,
    consecutive_mean,
    iterated_aitken,
    quality,
    series_a,
    series_b,
    series_c,
    transform,
)

__version__ = "0.1.0"
