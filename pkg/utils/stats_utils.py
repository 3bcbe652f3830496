import numpy as np
from numpy.typing import ArrayLike


def sample_mean_std(values: ArrayLike) -> tuple[float, float]:
    """
    Arithmetic mean and sample standard deviation (divisor n-1) of a vector.

    Identical values return the value itself and a standard deviation of exactly 0,
    so zero-variance inputs never pick up summation round-off. Recomputing from the
    same values always reproduces the same bits.

    Args:
        values (ArrayLike): The sample vector, at least one element.

    Returns:
        tuple[float, float]: (mean, std). std is 0.0 for a single element.
    """
    array: np.ndarray = np.asarray(values, dtype=np.float64)
    if array.size == 0:
        raise ValueError("Cannot compute statistics of an empty sample.")
    if array.size == 1 or np.all(array == array[0]):
        return float(array[0]), 0.0
    return float(np.mean(array)), float(np.std(array, ddof=1))

def log_returns(prices: ArrayLike) -> np.ndarray:
    """
    One-period log price relatives ln(p_t / p_{t-1}).

    Args:
        prices (ArrayLike): Strictly positive prices in time order.

    Returns:
        np.ndarray: Vector one shorter than the input.
    """
    array: np.ndarray = np.asarray(prices, dtype=np.float64)
    return np.diff(np.log(array))
