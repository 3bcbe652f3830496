from fastapi import APIRouter, HTTPException, status
from models.error_models import OpenValueError
from models.kelly_models import KellyDecision
from models.portfolio_models import Allocation
from models.request_models import AllocationRequest, KellyRequest, SafetyRequest
from models.safety_models import SafetyReport
from services.safety_services import safety_report
from utils.http_utils import raise_http_error
from utils.kelly_utils import kelly_decision
from utils.portfolio_utils import allocate_wagers


router = APIRouter(
    tags=["Decision"]
)

@router.post("/safety/report", status_code=status.HTTP_200_OK, response_model=SafetyReport)
def report_safety(request: SafetyRequest):
    """
    Margin of safety, dispersion and GB-ratio of one asset.

    Args:
        request (SafetyRequest): Valuation, market price, first flow and price history.
    """
    try:
        return safety_report(asset_id="request", rate=request.N, valuation_price=request.valuation_price,
                             market_price=request.market_price, first_flow=request.first_flow,
                             prices=request.prices, dispersion_window=request.dispersion_window)
    except OpenValueError as error:
        raise_http_error(error)

@router.post("/kelly/decision", status_code=status.HTTP_200_OK, response_model=KellyDecision)
def decide(request: KellyRequest):
    """
    Kelly probability, edge, wager and signal at a market price.

    Args:
        request (KellyRequest): Valuation, dispersion, market price, cap and prior wager.
    """
    try:
        return kelly_decision(valuation_price=request.valuation_price, valuation_std=request.valuation_std,
                              market_price=request.market_price, wager_cap=request.wager_cap,
                              prior_wager=request.prior_wager)
    except OpenValueError as error:
        raise_http_error(error)

@router.post("/portfolio/allocate", status_code=status.HTTP_200_OK, response_model=Allocation)
def allocate_portfolio(request: AllocationRequest):
    """
    Aggregates published wagers into portfolio weights under the ruin cap.

    Args:
        request (AllocationRequest): Wager per asset and the ruin cap.
    """
    try:
        return allocate_wagers(wagers=request.wagers, ruin_cap=request.ruin_cap)
    except ValueError as error:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(error))
