# bezout_bezier/models.py

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bezout_bezier.constants import MIN_THEOREM_P
from bezout_bezier.exceptions import HypothesisError
from bezout_bezier.numtheory import Center


class Hypothesis(str, Enum):
    theorem = "theorem"
    endpoint_gap = "endpoint-gap"


class OutputFormat(str, Enum):
    csv = "csv"
    svg = "svg"
    text = "text"


def violated_hypothesis(p: int, q: int, epsilon: float, hypothesis: Hypothesis = Hypothesis.theorem) -> str | None:
    """Name of the first hypothesis (p, q, epsilon) fails, or None."""
    if p <= MIN_THEOREM_P:
        return f"p>{MIN_THEOREM_P}"
    if not 0 <= q < p:
        return "0≤q<p"
    if math.isnan(epsilon):
        return "ε to be a number"
    if hypothesis is Hypothesis.theorem and not epsilon > 1:
        return "ε>1"
    if hypothesis is Hypothesis.endpoint_gap and not epsilon >= 1:
        return "ε≥1"
    if epsilon > 0.5 * math.hypot(p, q):
        return "ε≤½‖(p,q)‖"
    return None


class EnvelopeParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    epsilon: float
    hypothesis: Hypothesis = Hypothesis.theorem

    @model_validator(mode="after")
    def check_hypotheses(self):
        violated = violated_hypothesis(self.p, self.q, self.epsilon, self.hypothesis)
        if violated:
            raise ValueError(f"requires {violated}")
        return self

    @classmethod
    def create(
        cls, p: int, q: int, epsilon: float, hypothesis: Hypothesis = Hypothesis.theorem
    ) -> "EnvelopeParams":
        """Like the constructor, but raises HypothesisError naming the failed hypothesis."""
        violated = violated_hypothesis(p, q, epsilon, hypothesis)
        if violated:
            raise HypothesisError(violated)
        return cls(p=p, q=q, epsilon=epsilon, hypothesis=hypothesis)

    @property
    def center(self) -> Center:
        return Center(self.p, self.q)


class RenderOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    width_px: int = Field(default=800, ge=16)
    show_curve: bool = False
    show_controls: bool = True
    curve_samples: int = Field(default=256, ge=2)
    # segment stroke as a fraction of the bounding-box diagonal
    stroke_width_fraction: float = Field(default=0.0008, gt=0)
