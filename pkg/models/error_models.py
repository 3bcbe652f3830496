class OpenValueError(Exception):
    """
    Base class for every error raised by the valuation pipeline.

    Args:
        message (str): Human readable description of the failure.
        asset_id (str | None, optional): The asset being processed when the error was raised. Defaults to None.
    """
    exit_code: int = 1

    def __init__(self, message: str, asset_id: str | None = None):
        super().__init__(message)
        self.message = message
        self.asset_id = asset_id

    def with_asset(self, asset_id: str) -> "OpenValueError":
        """
        Attaches the failing asset to the error (keeps an asset set deeper in the stack).

        Args:
            asset_id (str): The asset identifier.

        Returns:
            OpenValueError: The same error instance.
        """
        if self.asset_id is None:
            self.asset_id = asset_id
        return self

    def __str__(self) -> str:
        if self.asset_id is None:
            return self.message
        return f"[{self.asset_id}] {self.message}"


class InputError(OpenValueError):
    """
    Malformed or missing input data. Maps to CLI exit code 2.
    """
    exit_code: int = 2


class NumericalError(OpenValueError):
    """
    A computation left its valid numerical regime. Maps to CLI exit code 3.
    """
    exit_code: int = 3


class NonPositiveRevenue(InputError): pass
class TooFewPeriods(InputError): pass
class MissingFactorValue(InputError): pass
class InconsistentFactors(InputError): pass
class UnsortedPeriods(InputError): pass
class InvalidAssetKind(InputError): pass
class InputFileError(InputError): pass
class ConfigError(InputError): pass
class TooFewPrices(InputError): pass
class InsufficientOverlap(InputError): pass

class GrowthMeanAtUnity(NumericalError): pass
class DivergentSeries(NumericalError): pass
class NonPositivePrice(NumericalError): pass
class PriceAtOrBelowUnity(NumericalError): pass
class NonConvergentRegime(NumericalError): pass
class NoRootInUnitInterval(NumericalError): pass
class SingularPoint(NumericalError): pass
class NonFiniteSample(NumericalError): pass
class AllSamplesRejected(NumericalError): pass
class NonPositiveValuation(NumericalError): pass
class ZeroDispersion(NumericalError): pass
class ZeroSigma(NumericalError): pass
class NegativePrice(NumericalError): pass
