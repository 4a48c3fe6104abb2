"""Small numeric helpers shared across modules."""

from __future__ import annotations

import numpy as np

from .exceptions import NumericError

#: tolerated floating-point overshoot outside [0, 1] before clamping fails
UNIT_TOL = 1e-9


def clamp_unit(x, what: str = "probability", tol: float = UNIT_TOL):
    """Clamp x into [0, 1], failing loudly if the overshoot is real.

    Round-off in probability identities can land a value a few ulp outside
    the unit interval; that is silently repaired.  Anything beyond ``tol``
    indicates a genuine numeric defect and raises NumericError.
    """
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)):
        raise NumericError(f"{what} evaluated to a non-finite value")
    low = np.min(x, initial=0.0)
    high = np.max(x, initial=1.0)
    if low < -tol or high > 1.0 + tol:
        raise NumericError(
            f"{what} overshot [0, 1] by more than {tol:g} (range [{low:.17g}, {high:.17g}])"
        )
    return np.clip(x, 0.0, 1.0)


def as_float_array(x) -> np.ndarray:
    return np.asarray(x, dtype=float)


def fmt17(x: float) -> str:
    """Serialize a float at 17 significant digits, round-trip exact.

    Seventeen digits always suffice to recover a 64-bit float, and %g
    drops the trailing zeros, so float(fmt17(x)) == x for finite x.
    """
    return format(float(x), ".17g")
