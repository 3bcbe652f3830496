import logging
from collections.abc import Callable, Mapping
import numpy as np
from numpy.typing import ArrayLike
from models.error_models import AllSamplesRejected, DivergentSeries, GrowthMeanAtUnity, NonFiniteSample
from models.fundamental_models import NormalizedFactors
from models.simulation_models import (CashflowMapName, GeneratorName, PriceDistribution, SamplingDistribution,
                                      SimulationConfig)
from models.valuation_models import CashFlowPath
from utils.fundamental_utils import project_revenue_path
from utils.random_utils import substream
from utils.stats_utils import sample_mean_std
from utils.valuation_utils import present_value

logger = logging.getLogger(__name__)

CashflowMap = Callable[[float, Mapping[str, float]], float]
MAX_TRUNCATION_DRAWS: int = 100


def revenue_minus_costs(revenue: float, fractions: Mapping[str, float]) -> float:
    """Free cash flow as revenue net of every drawn cost share."""
    return revenue * (1.0 - sum(fractions[name] for name in sorted(fractions)))

def flow_share(revenue: float, fractions: Mapping[str, float]) -> float:
    """Free cash flow as the drawn shares of revenue themselves (factors are flow components)."""
    return revenue * sum(fractions[name] for name in sorted(fractions))

CASHFLOW_MAPS: dict[CashflowMapName, CashflowMap] = {
    CashflowMapName.REVENUE_MINUS_COSTS: revenue_minus_costs,
    CashflowMapName.FLOW_SHARE: flow_share,
}


def mc_expectation(sample_fn: Callable[[np.random.Generator, int], ArrayLike], g: Callable[[np.ndarray], ArrayLike],
                   n: int, seed: int, generator: GeneratorName = GeneratorName.PHILOX) -> float:
    """
    Sample-mean estimate of E[g(X)] from n draws of X.

    Args:
        sample_fn (Callable): Draws n values of X from the supplied generator.
        g (Callable): Vectorized function applied to the draws. A constant result is broadcast.
        n (int): Number of draws, at least 1.
        seed (int): Root seed; identical seeds give bit-identical estimates.
        generator (GeneratorName, optional): Bit generator family. Defaults to philox.

    Returns:
        float: (1/n) sum_i g(X_i).
    """
    if n < 1:
        raise ValueError(f"At least one draw is required. Got: {n}")
    draws: np.ndarray = np.asarray(sample_fn(substream(seed, generator), n), dtype=np.float64)
    values: np.ndarray = np.broadcast_to(np.asarray(g(draws), dtype=np.float64), draws.shape)
    if not np.all(np.isfinite(values)):
        raise NonFiniteSample("g(X) produced a non-finite value.")
    mean, _ = sample_mean_std(values)
    return mean

def mean_flow_path(factors: NormalizedFactors, start_revenue: float, horizon: int,
                   cashflow_map: CashflowMap = revenue_minus_costs) -> list[float]:
    """
    Deterministic flow path built from the mean growth and the mean factor shares.
    """
    revenues: list[float] = project_revenue_path(start_revenue=start_revenue, growth_mean=factors.growth_mean,
                                                 horizon=horizon)
    means: dict[str, float] = factors.means()
    return [cashflow_map(revenue, means) for revenue in revenues]


class MonteCarloEngine:
    """
    Seeded engine sampling intrinsic present values from normalized fundamental factors.

    Every sample owns one random stream per factor and one for growth, addressed by
    (sample_index, stream_index), so a sample's draws do not depend on any other sample.
    """
    factors: NormalizedFactors
    start_revenue: float
    rate: float
    config: SimulationConfig
    cashflow_map: CashflowMap
    tail_tolerance: float

    def __init__(self, factors: NormalizedFactors, start_revenue: float, rate: float, config: SimulationConfig,
                 cashflow_map: CashflowMap | None = None, tail_tolerance: float = 1e-12) -> None:
        """
        Args:
            factors (NormalizedFactors): Source of every distribution parameter.
            start_revenue (float): R_0 from which revenue is projected.
            rate (float): Discount rate N in (0, 1).
            config (SimulationConfig): Sample count, seed, distribution family and horizon.
            cashflow_map (CashflowMap | None, optional): Maps (revenue, drawn shares) to free cash flow. Defaults to the configured named map.
            tail_tolerance (float, optional): Passed to present_value. Defaults to 1e-12.
        """
        self.factors = factors
        self.start_revenue = start_revenue
        self.rate = rate
        self.config = config
        self.cashflow_map = cashflow_map or CASHFLOW_MAPS[config.cashflow_map]
        self.tail_tolerance = tail_tolerance

    def streams(self, sample_index: int) -> list[np.random.Generator]:
        n_streams: int = len(self.factors.factor_names) + 1
        return [substream(self.config.seed, self.config.generator, sample_index, stream_index)
                for stream_index in range(n_streams)]

    def draw_normal_share(self, rng: np.random.Generator, mean: float, std: float) -> float:
        """
        Draws a factor share from Normal(mean, std), truncated to [0, 1] for cost-type shares.
        """
        if not (self.config.truncate_fractions and 0 <= mean <= 1):
            return float(rng.normal(mean, std))
        for _ in range(MAX_TRUNCATION_DRAWS):
            share: float = float(rng.normal(mean, std))
            if 0 <= share <= 1: return share
        return float(np.clip(share, 0.0, 1.0))

    def draw(self, streams: list[np.random.Generator]) -> tuple[dict[str, float], float]:
        """
        Draws one set of factor shares and one growth rate.

        Returns:
            tuple[dict[str, float], float]: (shares by factor name, growth).
        """
        names: list[str] = self.factors.factor_names
        growth_stream: np.random.Generator = streams[-1]
        if self.config.distribution == SamplingDistribution.BOOTSTRAP:
            row: int = int(streams[0].integers(len(self.factors.samples[names[0]])))
            shares: dict[str, float] = {name: self.factors.samples[name][row] for name in names}
            growth: float = self.factors.growth_samples[int(growth_stream.integers(len(self.factors.growth_samples)))]
            return shares, growth
        shares = {name: self.draw_normal_share(rng=streams[index], mean=self.factors.factor_stats[name].mean,
                                               std=self.factors.factor_stats[name].std)
                  for index, name in enumerate(names)}
        growth = float(growth_stream.normal(self.factors.growth_mean, self.factors.growth_std))
        return shares, growth

    def sample_price(self, sample_index: int) -> float | None:
        """
        Prices one sample, redrawing a divergent draw up to max_resample_attempts times.

        Returns:
            float | None: The sampled present value, None if every attempt diverged.
        """
        streams: list[np.random.Generator] = self.streams(sample_index=sample_index)
        for _ in range(self.config.max_resample_attempts):
            shares, growth = self.draw(streams=streams)
            try:
                revenues: list[float] = project_revenue_path(start_revenue=self.start_revenue, growth_mean=growth,
                                                             horizon=self.config.horizon)
                flows: list[float] = [self.cashflow_map(revenue, shares) for revenue in revenues]
                return present_value(path=CashFlowPath(flows=flows), rate=self.rate,
                                     tail_tolerance=self.tail_tolerance)
            except (DivergentSeries, GrowthMeanAtUnity):
                continue
        logger.debug("Sample %d rejected after %d divergent draws.", sample_index, self.config.max_resample_attempts)
        return None

    def run(self) -> PriceDistribution:
        """
        Samples n_samples present values in index order and summarizes them.

        Raises:
            AllSamplesRejected: More than max_rejected_fraction of the samples diverged.
            NonFiniteSample: A sampled price is not finite.
        """
        samples: list[float] = []
        rejected: int = 0
        for sample_index in range(self.config.n_samples):
            price: float | None = self.sample_price(sample_index=sample_index)
            if price is None:
                rejected += 1
                continue
            if not np.isfinite(price):
                raise NonFiniteSample(f"Sample {sample_index} produced a non-finite price.",
                                      asset_id=self.factors.asset_id)
            samples.append(price)
        if rejected:
            logger.warning("%s: %d of %d samples rejected for divergence.", self.factors.asset_id, rejected,
                           self.config.n_samples)
        if not samples or rejected > self.config.max_rejected_fraction * self.config.n_samples:
            raise AllSamplesRejected(f"{rejected} of {self.config.n_samples} samples diverged (tolerance "
                                     f"{self.config.max_rejected_fraction:.2%}).", asset_id=self.factors.asset_id)
        mean, std = sample_mean_std(samples)
        return PriceDistribution(samples=samples, mean=mean, std=std, rejected=rejected)


def simulate_valuation(factors: NormalizedFactors, start_revenue: float, rate: float, config: SimulationConfig,
                       cashflow_map: CashflowMap | None = None, tail_tolerance: float = 1e-12) -> PriceDistribution:
    """
    Monte-Carlo distribution of intrinsic present values. See MonteCarloEngine.
    """
    engine: MonteCarloEngine = MonteCarloEngine(factors=factors, start_revenue=start_revenue, rate=rate,
                                                config=config, cashflow_map=cashflow_map,
                                                tail_tolerance=tail_tolerance)
    return engine.run()
