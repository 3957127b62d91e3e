"""Core trajectory data types.

Coordinate conventions:
    - Scene frame: meters, arbitrary origin, heading in radians within (-pi, pi].
    - Target frame (after normalization): target agent at the anchor frame sits
      at the origin with heading +x; "left" is +y.

A :class:`SceneWindow` holds one (history, future) slice around one target
agent and is the unit of annotation, training and inference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum, IntEnum
from typing import Optional

import numpy as np

# Channel layout of SceneWindow.history, last axis.
HISTORY_CHANNELS = ("x", "y", "velocity", "heading", "acceleration", "lane_id")
CH_X, CH_Y, CH_V, CH_H, CH_A, CH_LANE = range(6)

TWO_PI = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    wrapped = math.fmod(theta + math.pi, TWO_PI)
    if wrapped <= 0.0:
        wrapped += TWO_PI
    return wrapped - math.pi


class AgentClass(str, Enum):
    VEHICLE = "vehicle"
    PEDESTRIAN = "pedestrian"
    BICYCLE = "bicycle"


class LateralManeuver(IntEnum):
    LEFT = 0
    STRAIGHT = 1
    RIGHT = 2


class LongitudinalManeuver(IntEnum):
    ACCELERATE = 0
    MAINTAIN = 1
    DECELERATE = 2


@dataclass(frozen=True)
class ManeuverLabel:
    """Joint lateral x longitudinal behavior class (9 classes total)."""

    lateral: LateralManeuver
    longitudinal: LongitudinalManeuver

    @property
    def joint_index(self) -> int:
        return 3 * int(self.lateral) + int(self.longitudinal)

    @classmethod
    def from_joint_index(cls, index: int) -> "ManeuverLabel":
        if not 0 <= index < 9:
            raise ValueError(f"joint maneuver index must be in [0, 9), got {index}")
        return cls(LateralManeuver(index // 3), LongitudinalManeuver(index % 3))

    def __str__(self) -> str:
        return f"{self.lateral.name.lower()}/{self.longitudinal.name.lower()}"


@dataclass(frozen=True)
class AgentState:
    """One agent's kinematic record at one frame (scene frame)."""

    agent_id: str
    frame: int
    x: float
    y: float
    velocity: float
    heading: float
    agent_class: AgentClass = AgentClass.VEHICLE
    lane_id: Optional[int] = None
    acceleration: float = 0.0

    def validate(self) -> None:
        if self.velocity < 0:
            raise ValueError(f"velocity must be >= 0, got {self.velocity} for {self.agent_id}@{self.frame}")
        if not (-math.pi < self.heading <= math.pi):
            raise ValueError(f"heading must lie in (-pi, pi], got {self.heading} for {self.agent_id}@{self.frame}")


@dataclass(frozen=True)
class FrameTransform:
    """Rigid 2D transform p -> R(angle) @ p + (tx, ty)."""

    angle: float
    tx: float
    ty: float

    def apply(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        c, s = math.cos(self.angle), math.sin(self.angle)
        rot = np.array([[c, -s], [s, c]])
        return pts @ rot.T + np.array([self.tx, self.ty])

    def apply_heading(self, heading: np.ndarray) -> np.ndarray:
        out = np.asarray(heading, dtype=float) + self.angle
        return np.vectorize(wrap_angle)(out) if out.size else out

    def inverse(self) -> "FrameTransform":
        c, s = math.cos(-self.angle), math.sin(-self.angle)
        return FrameTransform(
            angle=-self.angle,
            tx=-(c * self.tx - s * self.ty),
            ty=-(s * self.tx + c * self.ty),
        )

    def compose(self, other: "FrameTransform") -> "FrameTransform":
        """Transform equivalent to applying `other` first, then `self`."""
        c, s = math.cos(self.angle), math.sin(self.angle)
        tx = c * other.tx - s * other.ty + self.tx
        ty = s * other.tx + c * other.ty + self.ty
        return FrameTransform(angle=wrap_angle(self.angle + other.angle), tx=tx, ty=ty)

    @classmethod
    def identity(cls) -> "FrameTransform":
        return cls(0.0, 0.0, 0.0)


@dataclass
class SceneWindow:
    """A (history, future) trajectory slice around one target agent.

    Arrays:
        history:       (n_agents, T_h, 6) float, channels per HISTORY_CHANNELS;
                       row 0 is the target, rows 1.. are surrounding agents
                       ordered by distance at the anchor frame. lane_id channel
                       is NaN when unknown.
        history_valid: (n_agents, T_h) bool, False where a surrounding agent is
                       absent (its channels are zero-filled).
        future:        (T_f, 2) float, target positions only.
        future_lanes:  (T_f,) float, target lane ids (NaN when unknown).

    ``to_scene`` maps this window's coordinates back to the frame the window
    was cut in (identity-equivalent None until normalization).
    """

    target_id: str
    anchor_frame: int
    sampling_rate_hz: float
    agent_ids: tuple
    agent_classes: tuple
    history: np.ndarray
    history_valid: np.ndarray
    future: np.ndarray
    future_lanes: Optional[np.ndarray] = None
    maneuver: Optional[ManeuverLabel] = None
    to_scene: Optional[FrameTransform] = None

    @property
    def scene_ref(self) -> str:
        return f"{self.target_id}@{self.anchor_frame}"

    @property
    def n_agents(self) -> int:
        return int(self.history.shape[0])

    @property
    def history_len(self) -> int:
        return int(self.history.shape[1])

    @property
    def future_len(self) -> int:
        return int(self.future.shape[0])

    def target_history(self) -> np.ndarray:
        return self.history[0]

    def anchor_position(self) -> np.ndarray:
        return self.history[0, -1, (CH_X, CH_Y)].copy()

    def anchor_heading(self) -> float:
        return float(self.history[0, -1, CH_H])

    def validate(self, t_h: float | None = None, t_f: float | None = None) -> None:
        """Check the structural invariants; raises ValueError on violation."""
        n, th = self.history.shape[0], self.history.shape[1]
        if self.history.shape[2] != len(HISTORY_CHANNELS):
            raise ValueError("history must have 6 channels")
        if self.history_valid.shape != (n, th):
            raise ValueError("history_valid shape mismatch")
        if self.future.ndim != 2 or self.future.shape[1] != 2:
            raise ValueError("future must be (T_f, 2)")
        if not bool(self.history_valid[0].all()):
            raise ValueError("target must be present at every history frame")
        if not bool(self.history_valid[:, -1].all()):
            raise ValueError("every agent must be present at the anchor frame")
        if len(self.agent_ids) != n or len(self.agent_classes) != n:
            raise ValueError("agent metadata length mismatch")
        hz = self.sampling_rate_hz
        if hz <= 0:
            raise ValueError("sampling_rate_hz must be positive")
        if t_h is not None and th != round(t_h * hz) + 1:
            raise ValueError(f"history length {th} != t_h*hz+1 = {round(t_h * hz) + 1}")
        if t_f is not None and self.future.shape[0] != round(t_f * hz):
            raise ValueError(f"future length {self.future.shape[0]} != t_f*hz = {round(t_f * hz)}")

    def with_maneuver(self, label: ManeuverLabel) -> "SceneWindow":
        return replace(self, maneuver=label)
