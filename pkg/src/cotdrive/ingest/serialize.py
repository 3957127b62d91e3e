"""JSONL serialization of scene windows (schema_version 1)."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ..errors import CorpusError
from .types import AgentClass, FrameTransform, ManeuverLabel, SceneWindow

SCHEMA_VERSION = 1


def window_to_dict(window: SceneWindow) -> dict:
    d = {
        "schema_version": SCHEMA_VERSION,
        "target_id": window.target_id,
        "anchor_frame": window.anchor_frame,
        "sampling_rate_hz": window.sampling_rate_hz,
        "agent_ids": list(window.agent_ids),
        "agent_classes": [c.value for c in window.agent_classes],
        "history": window.history.tolist(),
        "history_valid": window.history_valid.astype(int).tolist(),
        "future": window.future.tolist(),
        "future_lanes": None if window.future_lanes is None else window.future_lanes.tolist(),
        "maneuver": None if window.maneuver is None else window.maneuver.joint_index,
        "to_scene": None
        if window.to_scene is None
        else {"angle": window.to_scene.angle, "tx": window.to_scene.tx, "ty": window.to_scene.ty},
    }
    return d


def window_from_dict(d: dict) -> SceneWindow:
    version = d.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CorpusError(f"unsupported window schema_version {version!r}")
    to_scene = d.get("to_scene")
    return SceneWindow(
        target_id=d["target_id"],
        anchor_frame=int(d["anchor_frame"]),
        sampling_rate_hz=float(d["sampling_rate_hz"]),
        agent_ids=tuple(d["agent_ids"]),
        agent_classes=tuple(AgentClass(c) for c in d["agent_classes"]),
        history=np.asarray(d["history"], dtype=float),
        history_valid=np.asarray(d["history_valid"], dtype=bool),
        future=np.asarray(d["future"], dtype=float),
        future_lanes=None if d.get("future_lanes") is None else np.asarray(d["future_lanes"], dtype=float),
        maneuver=None if d.get("maneuver") is None else ManeuverLabel.from_joint_index(int(d["maneuver"])),
        to_scene=None if to_scene is None else FrameTransform(to_scene["angle"], to_scene["tx"], to_scene["ty"]),
    )


def write_windows(windows: Iterable[SceneWindow], path: str | Path) -> int:
    """Write windows as JSONL, one per line; returns the count written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8") as fh:
        for w in windows:
            fh.write(json.dumps(window_to_dict(w), sort_keys=True))
            fh.write("\n")
            count += 1
    return count


def read_windows(path: str | Path) -> list[SceneWindow]:
    """Read a windows JSONL file; corrupt lines raise with their line number."""
    path = Path(path)
    out: list[SceneWindow] = []
    with path.open(encoding="utf-8") as fh:
        for line_num, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                out.append(window_from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise CorpusError(f"{path}: corrupt window at line {line_num} ({exc})") from exc
    return out
