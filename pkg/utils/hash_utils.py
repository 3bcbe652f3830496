import hashlib
import json
from pydantic import BaseModel


def canonical_json(model: BaseModel, exclude: set[str] | None = None) -> str:
    """
    Serializes a model to JSON with sorted keys and no insignificant whitespace.

    Args:
        model (BaseModel): The model to serialize.
        exclude (set[str] | None, optional): Top-level fields to leave out. Defaults to None.

    Returns:
        str: The canonical JSON text.
    """
    return json.dumps(model.model_dump(mode="json", exclude=exclude), sort_keys=True, separators=(",", ":"))

def hash_model(model: BaseModel, exclude: set[str] | None = None) -> str:
    """
    SHA-256 hex digest of a model's canonical JSON.

    Args:
        model (BaseModel): The model to hash.
        exclude (set[str] | None, optional): Top-level fields to leave out. Defaults to None.

    Returns:
        str: 64 character hex digest.
    """
    return hashlib.sha256(canonical_json(model=model, exclude=exclude).encode("utf-8")).hexdigest()
