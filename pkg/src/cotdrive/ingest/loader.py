"""Trajectory table loading and resampling.

Input schema (CSV header or JSONL keys):
    agent_id, frame, x, y, velocity, heading   -- mandatory
    lane_id, acceleration, agent_class         -- optional

Rows are returned sorted by (agent_id, frame). Unparseable rows raise with
their 1-based row number so bad files can be fixed at the source.
"""

from __future__ import annotations

import csv
import json
import logging
import math
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ..errors import IntegrityError, SchemaError
from .types import AgentClass, AgentState, wrap_angle

logger = logging.getLogger(__name__)

MANDATORY_COLUMNS = ("agent_id", "frame", "x", "y", "velocity", "heading")
OPTIONAL_COLUMNS = ("lane_id", "acceleration", "agent_class")


def _parse_record(row: dict, row_num: int) -> AgentState:
    try:
        lane_raw = row.get("lane_id")
        lane_id = None if lane_raw in (None, "", "none", "None") else int(float(lane_raw))
        accel_raw = row.get("acceleration")
        acceleration = 0.0 if accel_raw in (None, "") else float(accel_raw)
        class_raw = row.get("agent_class")
        agent_class = AgentClass.VEHICLE if class_raw in (None, "") else AgentClass(str(class_raw))
        state = AgentState(
            agent_id=str(row["agent_id"]),
            frame=int(float(row["frame"])),
            x=float(row["x"]),
            y=float(row["y"]),
            velocity=float(row["velocity"]),
            heading=wrap_angle(float(row["heading"])),
            agent_class=agent_class,
            lane_id=lane_id,
            acceleration=acceleration,
        )
        state.validate()
        return state
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"row {row_num}: cannot parse record ({exc})") from exc


def _check_monotone(states: Sequence[AgentState]) -> None:
    prev_id, prev_frame, prev_row = None, None, None
    for i, s in enumerate(states):
        if s.agent_id == prev_id and s.frame <= prev_frame:
            raise IntegrityError(
                f"frames for agent {s.agent_id} not strictly increasing: "
                f"frame {s.frame} at row {i + 1} follows frame {prev_frame} at row {prev_row}"
            )
        prev_id, prev_frame, prev_row = s.agent_id, s.frame, i + 1


def load_trajectories(path: str | Path, format: str = "csv_ngsim_like") -> list[AgentState]:
    """Load agent states from a CSV or JSONL trajectory table.

    Returns records sorted by (agent_id, frame). Raises SchemaError for a
    missing mandatory column or unparseable row, IntegrityError for duplicate
    or non-monotone frames within an agent track.
    """
    path = Path(path)
    if format not in ("csv_ngsim_like", "jsonl"):
        raise ValueError(f"unknown trajectory format {format!r}")

    records: list[tuple[int, AgentState]] = []
    if format == "csv_ngsim_like":
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise SchemaError(f"{path}: empty file, expected a header row")
            missing = [c for c in MANDATORY_COLUMNS if c not in reader.fieldnames]
            if missing:
                raise SchemaError(f"{path}: missing mandatory columns {missing}")
            for row_num, row in enumerate(reader, start=2):
                records.append((row_num, _parse_record(row, row_num)))
    else:
        with path.open(encoding="utf-8") as fh:
            for row_num, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise SchemaError(f"row {row_num}: invalid JSON ({exc})") from exc
                missing = [c for c in MANDATORY_COLUMNS if c not in obj]
                if missing:
                    raise SchemaError(f"row {row_num}: missing mandatory keys {missing}")
                records.append((row_num, _parse_record(obj, row_num)))

    records.sort(key=lambda item: (item[1].agent_id, item[1].frame, item[0]))
    for (_, a), (row_b, b) in zip(records, records[1:]):
        if a.agent_id == b.agent_id and a.frame == b.frame:
            raise IntegrityError(f"row {row_b}: duplicate (agent_id, frame) = ({b.agent_id}, {b.frame})")
    states = [s for _, s in records]
    _check_monotone(states)
    logger.info("loaded %d states for %d agents from %s", len(states), len({s.agent_id for s in states}), path)
    return states


def resample_states(states: Iterable[AgentState], source_hz: float, target_hz: float) -> list[AgentState]:
    """Linearly resample each agent track from source_hz onto a target_hz grid.

    Positions, velocity and acceleration are interpolated linearly; heading is
    interpolated on the unwrapped angle then re-wrapped; lane ids are taken
    from the nearest source sample. Frame indices restart on the target grid
    aligned with each track's first sample.
    """
    if source_hz <= 0 or target_hz <= 0:
        raise ValueError("sampling rates must be positive")
    states = sorted(states, key=lambda s: (s.agent_id, s.frame))
    if source_hz == target_hz:
        return list(states)

    out: list[AgentState] = []
    by_agent: dict[str, list[AgentState]] = {}
    for s in states:
        by_agent.setdefault(s.agent_id, []).append(s)

    for agent_id, track in by_agent.items():
        t_src = np.array([s.frame / source_hz for s in track])
        if len(track) == 1:
            t_dst = t_src
        else:
            n_dst = int(math.floor((t_src[-1] - t_src[0]) * target_hz)) + 1
            t_dst = t_src[0] + np.arange(n_dst) / target_hz
        xs = np.interp(t_dst, t_src, [s.x for s in track])
        ys = np.interp(t_dst, t_src, [s.y for s in track])
        vs = np.interp(t_dst, t_src, [s.velocity for s in track])
        accs = np.interp(t_dst, t_src, [s.acceleration for s in track])
        hs = np.interp(t_dst, t_src, np.unwrap([s.heading for s in track]))
        nearest = np.searchsorted(t_src, t_dst - 0.5 / target_hz)
        nearest = np.clip(nearest, 0, len(track) - 1)
        for i in range(len(t_dst)):
            src = track[int(nearest[i])]
            out.append(
                AgentState(
                    agent_id=agent_id,
                    frame=int(round(t_dst[i] * target_hz)),
                    x=float(xs[i]),
                    y=float(ys[i]),
                    velocity=float(max(vs[i], 0.0)),
                    heading=wrap_angle(float(hs[i])),
                    agent_class=src.agent_class,
                    lane_id=src.lane_id,
                    acceleration=float(accs[i]),
                )
            )
    out.sort(key=lambda s: (s.agent_id, s.frame))
    return out
