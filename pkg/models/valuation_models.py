from pydantic import BaseModel, ConfigDict, field_validator


def must_be_a_unit_rate(cls, v):
    if not 0 < v < 1:
        raise ValueError(f"Rate must lie in (0, 1). Got: {v}")
    return v

def must_be_positive(cls, v):
    if not v > 0:
        raise ValueError(f"Value must be positive. Got: {v}")
    return v

class NRRConfig(BaseModel):
    """
    The investor's normalized rate of return and the valuation horizon.

    Args:
        N (float): Normalized rate of return, in (0, 1).
        horizon (int): Number of explicitly summed periods T. Defaults to 10.
        tail_tolerance (float): Smallest accepted gap between the discounted tail ratio and 1. Defaults to 1e-12.
    """
    model_config = ConfigDict(frozen=True)

    N: float
    horizon: int = 10
    tail_tolerance: float = 1e-12

    _n_validator = field_validator('N')(must_be_a_unit_rate)
    _tail_tolerance_validator = field_validator('tail_tolerance')(must_be_positive)

    @field_validator('horizon')
    @classmethod
    def horizon_must_be_at_least_one(cls, v):
        if v < 1:
            raise ValueError(f"Horizon must be at least 1 period. Got: {v}")
        return v

    @property
    def nrrm(self) -> float:
        """The normalized rate of return multiple 1/N."""
        return 1.0 / self.N

class CashFlowPath(BaseModel):
    """
    Projected free cash flows F(t+j) for j = 1..T.

    Args:
        flows (list[float]): The projected flows in period order.
    """
    model_config = ConfigDict(frozen=True)

    flows: list[float]

class GrowthConstant(BaseModel):
    """
    Equivalent geometric growth factor of a valuation series.

    Args:
        c (float): The growth constant.
        rate (float): The discount rate the constant was derived against.
        price (float | None): The price multiple the constant was derived from.
    """
    model_config = ConfigDict(frozen=True)

    c: float
    rate: float
    price: float | None = None

class SensitivityDerivatives(BaseModel):
    """
    Partial derivatives between price multiple P, rate M and growth constant c.

    Each derivative holds the third variable fixed.
    """
    model_config = ConfigDict(frozen=True)

    dP_dc: float
    dP_dM: float
    dc_dP: float
    dc_dM: float
    dM_dc: float
    dM_dP: float

class ValuationResult(BaseModel):
    """
    Summary of an asset valuation.

    Args:
        asset_id (str): The valued asset.
        kind (str): The asset category.
        mean_price (float): Intrinsic price P_t (mean of the distribution for Dynamic assets).
        std_price (float): Standard deviation sigma_0 of the price distribution.
        first_flow (float | None): Mean first-period projected flow, the unit of the price multiple.
        price_multiple (float | None): P_t expressed per unit of discounted first-period flow.
        growth_constant (float | None): Growth constant c of the valuation against N.
        n_samples (int): Number of accepted Monte-Carlo samples.
        rejected_samples (int): Number of samples rejected for divergence.
        sample_min (float): Smallest sampled price.
        sample_max (float): Largest sampled price.
    """
    model_config = ConfigDict(frozen=True)

    asset_id: str
    kind: str
    mean_price: float
    std_price: float
    first_flow: float | None = None
    price_multiple: float | None = None
    growth_constant: float | None = None
    n_samples: int = 0
    rejected_samples: int = 0
    sample_min: float
    sample_max: float
