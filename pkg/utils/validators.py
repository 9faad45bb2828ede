from pydantic import BaseModel
from typing import Optional

from coloring.models import OracleLimits
from coloring.oracle import default_limits
from graph.generators import Family, FamilySpec
from utils.exceptions import InvalidGraphError


def parse_int_list(value: Optional[str], flag: str) -> list[int]:
    """
    Parse a comma separated list of non-negative integers such as "2,3,4".
    """

    if not value:
        return []

    tokens = [token.strip() for token in value.split(",")]
    if not all(token.isascii() and token.isdigit() for token in tokens):
        raise InvalidGraphError(f"{flag} expects comma separated integers, got {value!r}")

    return [int(token) for token in tokens]


class GenRequest(BaseModel):
    family: Family
    n: Optional[int] = None
    p: Optional[float] = None
    seed: int = 0
    arms: Optional[str] = None
    pendants: Optional[str] = None
    clique: Optional[int] = None
    bridge_length: Optional[int] = None

    def to_spec(self) -> FamilySpec:
        return FamilySpec(
            family=self.family,
            n=self.n,
            p=self.p,
            seed=self.seed,
            arms=parse_int_list(self.arms, "--arms"),
            pendants=parse_int_list(self.pendants, "--pendants"),
            clique=self.clique,
            bridge_length=self.bridge_length,
        )


class ExactRequest(BaseModel):
    max_edges: Optional[int] = None
    max_colors: Optional[int] = None
    time_budget: Optional[float] = None

    def to_limits(self) -> OracleLimits:
        overrides = {key: value for key, value in self.model_dump().items() if value is not None}

        return OracleLimits(**{**default_limits().model_dump(), **overrides})
