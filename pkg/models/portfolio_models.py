from pydantic import BaseModel, ConfigDict


class CorrelationMatrix(BaseModel):
    """
    Symmetric matrix of pairwise correlations of one-period log returns.

    Args:
        asset_ids (list[str]): Row and column labels, sorted.
        values (list[list[float | None]]): The matrix, unit diagonal. None where a pair's correlation is undefined.
        zero_dispersion (list[str]): Assets with constant returns over an overlap, sorted.
    """
    model_config = ConfigDict(frozen=True)

    asset_ids: list[str] = []
    values: list[list[float | None]] = []
    zero_dispersion: list[str] = []

class Allocation(BaseModel):
    """
    Portfolio weights after applying the ruin cap.

    Args:
        weights (dict[str, float]): Per asset fraction of capital.
        cash_weight (float): 1 - gross_invested.
        gross_invested (float): Sum of the weights, never above ruin_cap.
        ruin_cap (float): Largest investable fraction of capital.
        scaled (bool): True if the raw wagers were scaled down to the cap.
        correlation (CorrelationMatrix): Return correlations of the allocated assets.
    """
    model_config = ConfigDict(frozen=True)

    weights: dict[str, float]
    cash_weight: float
    gross_invested: float
    ruin_cap: float
    scaled: bool = False
    correlation: CorrelationMatrix = CorrelationMatrix()
