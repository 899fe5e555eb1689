"""Small input-validation helpers shared by the estimators and the CLI."""

import numbers

import numpy as np
from sklearn.utils import check_array


def check_nonnegative_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return int(value)


def check_positive(value, name):
    value = float(value)
    if not np.isfinite(value) or value <= 0:
        raise ValueError(f"{name} must be a positive finite number, got {value!r}")
    return value


def check_nonnegative(value, name):
    value = float(value)
    if not np.isfinite(value) or value < 0:
        raise ValueError(f"{name} must be a nonnegative finite number, got {value!r}")
    return value


def check_radii(X):
    """Coerce ``X`` to a 1-D float array of strictly positive radii.

    A column vector of shape (n, 1) is accepted and flattened, so the
    estimators can sit behind a scikit-learn pipeline.
    """
    arr = check_array(X, ensure_2d=False, dtype=np.float64)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column of radii, got shape {arr.shape}")
        arr = arr[:, 0]
    if np.any(arr <= 0):
        raise ValueError("radii must be strictly positive")
    return arr
