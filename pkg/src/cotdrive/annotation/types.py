"""Dialogue protocol types for scene annotation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Protocol, Sequence, runtime_checkable


class CoTStep(str, Enum):
    """The four dialogue steps, in protocol order."""

    BACKGROUND_STATISTICS = "background_statistics"
    INTERACTION_ANALYSIS = "interaction_analysis"
    RISK_ASSESSMENT = "risk_assessment"
    PREDICTION = "prediction"


STEP_ORDER = (
    CoTStep.BACKGROUND_STATISTICS,
    CoTStep.INTERACTION_ANALYSIS,
    CoTStep.RISK_ASSESSMENT,
    CoTStep.PREDICTION,
)


class Provenance(str, Enum):
    TEACHER_LIVE = "teacher_live"
    TEACHER_MOCK = "teacher_mock"
    STUDENT = "student"


@dataclass(frozen=True)
class DialogueTurn:
    step: CoTStep
    prompt_text: str
    response_text: str


@dataclass(frozen=True)
class CoTAnnotation:
    """A completed four-step scene annotation.

    ``summary`` is the final prediction-step response; ``predicted_coordinates``
    is parsed from it when the response carries a bracketed coordinate list and
    stays None otherwise (coordinates are metadata, not supervision).
    """

    scene_ref: str
    turns: tuple[DialogueTurn, ...]
    summary: str
    provenance: Provenance
    predicted_coordinates: Optional[tuple[tuple[float, float], ...]] = None

    def step_response(self, step: CoTStep) -> str:
        for turn in self.turns:
            if turn.step == step:
                return turn.response_text
        raise KeyError(step)


@runtime_checkable
class TeacherClient(Protocol):
    """Chat-style client: send the running transcript, get the next response.

    ``messages`` is the ordered prompt/response transcript as dicts with
    ``role`` ("user" | "assistant") and ``content`` keys; responses come back
    in request order within one session.
    """

    provenance: Provenance

    def send(self, messages: Sequence[Mapping[str, str]]) -> str: ...
