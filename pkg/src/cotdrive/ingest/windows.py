"""Window segmentation and target-frame normalization."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .types import (
    CH_A,
    CH_H,
    CH_LANE,
    CH_V,
    CH_X,
    CH_Y,
    AgentState,
    FrameTransform,
    SceneWindow,
    wrap_angle,
)

logger = logging.getLogger(__name__)


@dataclass
class SegmentationReport:
    """Bookkeeping for skipped tracks and emitted windows."""

    n_windows: int = 0
    too_short: dict = field(default_factory=dict)

    @property
    def n_skipped_tracks(self) -> int:
        return len(self.too_short)


def _track_arrays(track: Sequence[AgentState]) -> tuple[np.ndarray, dict]:
    arr = np.empty((len(track), 6), dtype=float)
    frame_index = {}
    for i, s in enumerate(track):
        arr[i] = (s.x, s.y, s.velocity, s.heading, s.acceleration, math.nan if s.lane_id is None else s.lane_id)
        frame_index[s.frame] = i
    return arr, frame_index


def segment_windows(
    states: Iterable[AgentState],
    t_h: float,
    t_f: float,
    hz: float,
    stride: int = 1,
    radius: float = 60.0,
    max_neighbors: int = 16,
) -> tuple[list[SceneWindow], SegmentationReport]:
    """Cut (history, future) windows around every adequately tracked agent.

    For each agent with a contiguous track of at least t_h*hz + t_f*hz + 1
    frames, anchors advance by `stride` frames. Surrounding agents are those
    within `radius` meters of the target at the anchor frame, nearest first,
    capped at `max_neighbors`; their missing history frames are zero-filled
    with history_valid False.

    Returns the windows plus a SegmentationReport counting skipped tracks.
    """
    if t_h <= 0 or t_f <= 0:
        raise ValueError("t_h and t_f must be positive")
    if hz <= 0:
        raise ValueError("hz must be positive")
    if stride < 1:
        raise ValueError("stride must be >= 1")

    th_len = int(round(t_h * hz)) + 1
    tf_len = int(round(t_f * hz))
    needed = th_len + tf_len

    tracks: dict[str, list[AgentState]] = {}
    for s in sorted(states, key=lambda s: (s.agent_id, s.frame)):
        tracks.setdefault(s.agent_id, []).append(s)

    arrays = {aid: _track_arrays(tr) for aid, tr in tracks.items()}
    classes = {aid: tr[0].agent_class for aid, tr in tracks.items()}

    # Position lookup per frame for the neighborhood query.
    at_frame: dict[int, list[tuple[str, float, float]]] = {}
    for aid, tr in tracks.items():
        for s in tr:
            at_frame.setdefault(s.frame, []).append((aid, s.x, s.y))

    report = SegmentationReport()
    windows: list[SceneWindow] = []

    for target_id, track in sorted(tracks.items()):
        frames = [s.frame for s in track]
        contiguous = frames[-1] - frames[0] + 1 == len(frames)
        if len(frames) < needed or not contiguous:
            report.too_short[target_id] = len(frames)
            continue
        t_arr, t_index = arrays[target_id]
        first_anchor = frames[0] + th_len - 1
        last_anchor = frames[-1] - tf_len
        for anchor in range(first_anchor, last_anchor + 1, stride):
            i_anchor = t_index[anchor]
            hist_slice = slice(i_anchor - th_len + 1, i_anchor + 1)
            fut_slice = slice(i_anchor + 1, i_anchor + 1 + tf_len)
            tx, ty = t_arr[i_anchor, CH_X], t_arr[i_anchor, CH_Y]

            neighbors = []
            for aid, ax, ay in at_frame.get(anchor, ()):
                if aid == target_id:
                    continue
                d = math.hypot(ax - tx, ay - ty)
                if d <= radius:
                    neighbors.append((d, aid))
            neighbors.sort()
            neighbors = neighbors[:max_neighbors]

            n_agents = 1 + len(neighbors)
            history = np.zeros((n_agents, th_len, 6), dtype=float)
            valid = np.zeros((n_agents, th_len), dtype=bool)
            history[0] = t_arr[hist_slice]
            valid[0] = True

            agent_ids = [target_id]
            agent_cls = [classes[target_id]]
            hist_frames = range(anchor - th_len + 1, anchor + 1)
            for row, (_, aid) in enumerate(neighbors, start=1):
                a_arr, a_index = arrays[aid]
                for col, f in enumerate(hist_frames):
                    j = a_index.get(f)
                    if j is not None:
                        history[row, col] = a_arr[j]
                        valid[row, col] = True
                agent_ids.append(aid)
                agent_cls.append(classes[aid])

            future = t_arr[fut_slice, CH_X : CH_Y + 1].copy()
            future_lanes = t_arr[fut_slice, CH_LANE].copy()
            windows.append(
                SceneWindow(
                    target_id=target_id,
                    anchor_frame=anchor,
                    sampling_rate_hz=hz,
                    agent_ids=tuple(agent_ids),
                    agent_classes=tuple(agent_cls),
                    history=history,
                    history_valid=valid,
                    future=future,
                    future_lanes=future_lanes,
                )
            )

    report.n_windows = len(windows)
    if report.too_short:
        logger.info("segmentation skipped %d short tracks", len(report.too_short))
    return windows, report


def normalize_to_target_frame(window: SceneWindow) -> SceneWindow:
    """Re-express a window so the target sits at the origin heading +x.

    Stores the inverse transform in ``to_scene`` (composed with any existing
    one) so predictions can be mapped back to the original scene frame.
    """
    p0 = window.anchor_position()
    theta = window.anchor_heading()

    # normalized = R(-theta) @ (p - p0)
    c, s = math.cos(-theta), math.sin(-theta)
    applied = FrameTransform(angle=-theta, tx=-(c * p0[0] - s * p0[1]), ty=-(s * p0[0] + c * p0[1]))

    history = window.history.copy()
    pos = history[:, :, (CH_X, CH_Y)]
    history[:, :, (CH_X, CH_Y)] = applied.apply(pos.reshape(-1, 2)).reshape(pos.shape)
    headings = history[:, :, CH_H]
    history[:, :, CH_H] = applied.apply_heading(headings.reshape(-1)).reshape(headings.shape)
    history[:, :, (CH_X, CH_Y)][~window.history_valid] = 0.0
    history[:, :, CH_H][~window.history_valid] = 0.0

    future = applied.apply(window.future)

    back = applied.inverse()
    to_scene = window.to_scene.compose(back) if window.to_scene is not None else back
    return replace(window, history=history, future=future, to_scene=to_scene)
