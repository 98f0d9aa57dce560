"""
Householder step configuration
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cfrac.exact import GaussianInt
from utils.config import Config


class HouseholderConfig(BaseModel):
    """
    Order d step for f(x) = x^2 - N on an expansion of period l

    One step maps (p_{l-1}, q_{l-1}) to (p_{kl-1}, q_{kl-1}) with k = d + 1.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(ge=1)
    N: Any
    l: int = Field(ge=1)

    @field_validator("N")
    @classmethod
    def _radicand(cls, value):
        if isinstance(value, bool) or not isinstance(value, (int, GaussianInt)):
            raise ValueError("Radicand must be an int or a GaussianInt")
        return value

    @model_validator(mode="after")
    def _order_cap(self):
        cap = Config.get_max_householder_order()
        if self.d > cap:
            raise ValueError(f"Order {self.d} exceeds the cap of {cap}")
        return self

    @property
    def k(self) -> int:
        return self.d + 1

    @property
    def is_gaussian(self) -> bool:
        return isinstance(self.N, GaussianInt)
