"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, ValidationError


def as_float_array(x, name: str = "array", ndim: int | None = None,
                   dtype=np.float32) -> np.ndarray:
    """Coerce to a contiguous float array and reject non-finite values."""
    arr = np.ascontiguousarray(x, dtype=dtype)
    if ndim is not None and arr.ndim != ndim:
        raise DimensionError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains non-finite values")
    return arr


def as_vector(x, name: str = "vector", length: int | None = None) -> np.ndarray:
    arr = as_float_array(x, name, ndim=1)
    if length is not None and arr.shape[0] != length:
        raise DimensionError(f"{name} must have length {length}, got {arr.shape[0]}")
    return arr


def as_matrix(x, name: str = "matrix", shape: tuple[int, int] | None = None) -> np.ndarray:
    arr = as_float_array(x, name, ndim=2)
    if shape is not None and arr.shape != shape:
        raise DimensionError(f"{name} must have shape {shape}, got {arr.shape}")
    return arr


def check_labels(y, n_classes: int, name: str = "labels") -> np.ndarray:
    """Validate integer class labels in [0, n_classes)."""
    arr = np.ascontiguousarray(y)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        cast = arr.astype(np.int64)
        if not np.array_equal(cast, arr):
            raise ValidationError(f"{name} must be integers")
        arr = cast
    if arr.size and (arr.min() < 0 or arr.max() >= n_classes):
        raise ValidationError(f"{name} must lie in [0, {n_classes})")
    return arr.astype(np.int32)
