from pydantic import BaseModel


class PresentValueResponse(BaseModel):
    """
    Present value of a cash flow path and its price multiple per unit of discounted first flow.
    """
    present_value: float
    price_multiple: float | None

class ImpliedRateResponse(BaseModel):
    """
    Growth constant of the valuation and the rate implied by the market multiple.
    """
    growth_constant: float
    M: float
    delta: float
