from fastapi import HTTPException, status
from models.error_models import InputError, OpenValueError


def raise_http_error(error: OpenValueError) -> None:
    """
    Raises the HTTPException matching a pipeline error: 400 for bad input, 422 for a numerical failure.
    """
    status_code: int = status.HTTP_400_BAD_REQUEST if isinstance(error, InputError) \
        else status.HTTP_422_UNPROCESSABLE_ENTITY
    raise HTTPException(status_code=status_code, detail=f"{type(error).__name__}: {error}")
