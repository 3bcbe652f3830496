from enum import Enum
from pydantic import BaseModel, ConfigDict, field_validator


class SamplingDistribution(str, Enum):
    """
    Enum class for the factor sampling families.
    """
    NORMAL = "normal"
    BOOTSTRAP = "bootstrap"

class GeneratorName(str, Enum):
    """
    Enum class for the supported bit generators. Philox is counter-based.
    """
    PHILOX = "philox"
    PCG64 = "pcg64"

class CashflowMapName(str, Enum):
    """
    Enum class for the named mappings from factor draws to free cash flow.
    """
    REVENUE_MINUS_COSTS = "revenue_minus_costs"
    FLOW_SHARE = "flow_share"

class SimulationConfig(BaseModel):
    """
    Configuration of the Monte-Carlo valuation engine.

    Args:
        n_samples (int): Number of price samples, at least 100. Defaults to 10000.
        seed (int): Unsigned 64-bit seed. Defaults to 42.
        distribution (SamplingDistribution): Factor sampling family. Defaults to normal.
        horizon (int): Explicitly projected periods T. Defaults to 10.
        generator (GeneratorName): Bit generator name. Defaults to philox.
        cashflow_map (CashflowMapName): Mapping from drawn factors to flows. Defaults to revenue_minus_costs.
        truncate_fractions (bool): Truncate Normal factor draws to [0, 1]. Defaults to True.
        max_resample_attempts (int): Redraws of a divergent sample before rejecting it. Defaults to 100.
        max_rejected_fraction (float): Largest tolerated share of rejected samples. Defaults to 0.01.
        dump_samples (bool): Write the sampled prices to CSV. Defaults to False.
    """
    model_config = ConfigDict(frozen=True)

    n_samples: int = 10_000
    seed: int = 42
    distribution: SamplingDistribution = SamplingDistribution.NORMAL
    horizon: int = 10
    generator: GeneratorName = GeneratorName.PHILOX
    cashflow_map: CashflowMapName = CashflowMapName.REVENUE_MINUS_COSTS
    truncate_fractions: bool = True
    max_resample_attempts: int = 100
    max_rejected_fraction: float = 0.01
    dump_samples: bool = False

    @field_validator('n_samples')
    @classmethod
    def n_samples_must_be_at_least_100(cls, v):
        if v < 100:
            raise ValueError(f"n_samples must be at least 100. Got: {v}")
        return v

    @field_validator('seed')
    @classmethod
    def seed_must_fit_64_bits(cls, v):
        if not 0 <= v < 2 ** 64:
            raise ValueError(f"Seed must be an unsigned 64-bit integer. Got: {v}")
        return v

    @field_validator('horizon')
    @classmethod
    def horizon_must_be_at_least_one(cls, v):
        if v < 1:
            raise ValueError(f"Horizon must be at least 1 period. Got: {v}")
        return v

class PriceDistribution(BaseModel):
    """
    Monte-Carlo distribution of implied intrinsic prices.

    Args:
        samples (list[float]): Accepted price samples in sample-index order.
        mean (float): Average P_t of the samples.
        std (float): Sample standard deviation sigma_0 of the samples.
        rejected (int): Number of rejected samples.
    """
    model_config = ConfigDict(frozen=True)

    samples: list[float]
    mean: float
    std: float
    rejected: int = 0
