from fastapi import APIRouter, status
from models.error_models import OpenValueError
from models.request_models import ImpliedRateRequest, PresentValueRequest
from models.response_models import ImpliedRateResponse, PresentValueResponse
from models.valuation_models import CashFlowPath, GrowthConstant
from utils.http_utils import raise_http_error
from utils.safety_utils import margin_of_safety_delta
from utils.valuation_utils import growth_constant, implied_rate, present_value, price_multiple


router = APIRouter(
    prefix="/valuation",
    tags=["Valuation"]
)

@router.post("/present-value", status_code=status.HTTP_200_OK, response_model=PresentValueResponse)
def value_path(request: PresentValueRequest):
    """
    Present value of a projected cash flow path at rate N.

    Args:
        request (PresentValueRequest): Flows, rate and tail flag.
    """
    try:
        value: float = present_value(path=CashFlowPath(flows=request.flows), rate=request.N,
                                     include_tail=request.include_tail)
        multiple: float | None = price_multiple(value=value, first_flow=request.flows[0], rate=request.N) \
            if request.flows and request.flows[0] > 0 else None
    except OpenValueError as error:
        raise_http_error(error)
    return PresentValueResponse(present_value=value, price_multiple=multiple)

@router.post("/implied-rate", status_code=status.HTTP_200_OK, response_model=ImpliedRateResponse)
def imply_rate(request: ImpliedRateRequest):
    """
    Growth constant of the valuation multiple at N, and the rate M at which it reproduces the market multiple.

    Args:
        request (ImpliedRateRequest): Valuation multiple, market multiple and N.
    """
    try:
        constant: GrowthConstant = growth_constant(price=request.valuation_multiple, rate=request.N)
        market_rate: float = implied_rate(market_price=request.market_multiple, c=constant)
    except OpenValueError as error:
        raise_http_error(error)
    return ImpliedRateResponse(growth_constant=constant.c, M=market_rate,
                               delta=margin_of_safety_delta(nrr=request.N, market_rate=market_rate))
