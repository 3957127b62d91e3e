"""Ground-truth maneuver labeling from a window's future trajectory.

Labels are defined in the target's heading frame at the anchor, so they are
invariant to global translation and rotation of the scene:

    lateral:      left/right when the future endpoint's signed lateral offset
                  exceeds +/-lat_threshold, or the lane id changes; +y (in the
                  heading frame) is "left".
    longitudinal: from r = mean future speed / mean history speed, with speeds
                  taken from frame-to-frame displacements.
"""

from __future__ import annotations

import math

import numpy as np

from .types import (
    CH_LANE,
    CH_X,
    CH_Y,
    LateralManeuver,
    LongitudinalManeuver,
    ManeuverLabel,
    SceneWindow,
)

_SPEED_EPS = 1e-9


def _displacement_speeds(points: np.ndarray, hz: float) -> np.ndarray:
    steps = np.diff(points, axis=0)
    return np.hypot(steps[:, 0], steps[:, 1]) * hz


def label_maneuver(
    window: SceneWindow,
    lat_threshold: float = 1.75,
    speed_ratio_bounds: tuple[float, float] = (0.8, 1.25),
) -> ManeuverLabel:
    """Derive the joint maneuver label for a window with a full future."""
    lo, hi = speed_ratio_bounds
    if not 0 < lo < hi:
        raise ValueError(f"speed_ratio_bounds must satisfy 0 < lo < hi, got {speed_ratio_bounds}")
    if window.future_len < 1:
        raise ValueError("window has no future to label")

    hz = window.sampling_rate_hz
    p0 = window.anchor_position()
    theta = window.anchor_heading()
    endpoint = window.future[-1] - p0
    c, s = math.cos(-theta), math.sin(-theta)
    lateral_offset = s * endpoint[0] + c * endpoint[1]

    lane_changed = False
    anchor_lane = window.history[0, -1, CH_LANE]
    if window.future_lanes is not None:
        final_lane = window.future_lanes[-1]
        if not (math.isnan(anchor_lane) or math.isnan(final_lane)):
            lane_changed = int(anchor_lane) != int(final_lane)

    if abs(lateral_offset) > lat_threshold or (lane_changed and abs(lateral_offset) > _SPEED_EPS):
        lateral = LateralManeuver.LEFT if lateral_offset > 0 else LateralManeuver.RIGHT
    else:
        lateral = LateralManeuver.STRAIGHT

    hist_pos = window.history[0][:, [CH_X, CH_Y]]
    fut_pos = np.vstack([p0[None, :], window.future])
    v_hist = float(np.mean(_displacement_speeds(hist_pos, hz))) if len(hist_pos) > 1 else 0.0
    v_fut = float(np.mean(_displacement_speeds(fut_pos, hz)))

    if v_hist <= _SPEED_EPS:
        # Stationary history: any real future motion counts as acceleration.
        longitudinal = LongitudinalManeuver.ACCELERATE if v_fut > _SPEED_EPS else LongitudinalManeuver.MAINTAIN
    else:
        r = v_fut / v_hist
        if r > hi:
            longitudinal = LongitudinalManeuver.ACCELERATE
        elif r < lo:
            longitudinal = LongitudinalManeuver.DECELERATE
        else:
            longitudinal = LongitudinalManeuver.MAINTAIN

    return ManeuverLabel(lateral=lateral, longitudinal=longitudinal)
