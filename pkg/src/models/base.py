from pydantic import BaseModel, ConfigDict


class ProductionBaseModel(BaseModel):
    """
    Immutable, strictly validated base for value types, reports and config.

    Frozen models hash by value, so intervals and generators can be set members
    and cache keys.
    """

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        validate_default=True,
    )
