"""Deterministic scene-to-text serialization for prompting."""

from __future__ import annotations

import math

from ..ingest.types import CH_A, CH_H, CH_LANE, CH_V, CH_X, CH_Y, SceneWindow


def _agent_line(window: SceneWindow, row: int, flag_target: bool) -> str:
    state = window.history[row, -1]
    lane = state[CH_LANE]
    lane_text = "none" if math.isnan(lane) else str(int(lane))
    tag = " [TARGET]" if flag_target else ""
    return (
        f"Agent {window.agent_ids[row]}{tag} ({window.agent_classes[row].value}): "
        f"position ({state[CH_X]:.2f}, {state[CH_Y]:.2f}) m, "
        f"speed {state[CH_V]:.2f} m/s, heading {state[CH_H]:.2f} rad, "
        f"lane {lane_text}, acceleration {state[CH_A]:.2f} m/s^2."
    )


def serialize_scene(window: SceneWindow) -> str:
    """Render a normalized window as human-readable text.

    Target agent first and flagged; one line per agent with class, position,
    speed, heading, lane and acceleration at the anchor frame, all rounded to
    two decimals. Byte-identical for identical windows.
    """
    n_sur = window.n_agents - 1
    t_h = (window.history_len - 1) / window.sampling_rate_hz
    t_f = window.future_len / window.sampling_rate_hz
    header = (
        f"Traffic scene {window.scene_ref} sampled at {window.sampling_rate_hz:.2f} Hz: "
        f"{window.n_agents} agent(s) ({n_sur} surrounding), "
        f"{t_h:.2f} s of history observed, {t_f:.2f} s to predict. "
        f"Coordinates are meters in the target's frame (target at origin, heading +x, left +y)."
    )
    lines = [header]
    for row in range(window.n_agents):
        lines.append(_agent_line(window, row, flag_target=row == 0))
    return "\n".join(lines)
