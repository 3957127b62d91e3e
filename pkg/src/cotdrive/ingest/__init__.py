from .types import (
    AgentClass,
    AgentState,
    FrameTransform,
    LateralManeuver,
    LongitudinalManeuver,
    ManeuverLabel,
    SceneWindow,
    HISTORY_CHANNELS,
)
from .loader import load_trajectories, resample_states
from .windows import SegmentationReport, normalize_to_target_frame, segment_windows
from .maneuvers import label_maneuver
from .splits import split_dataset
from .serialize import read_windows, write_windows

__all__ = [
    "AgentClass",
    "AgentState",
    "FrameTransform",
    "LateralManeuver",
    "LongitudinalManeuver",
    "ManeuverLabel",
    "SceneWindow",
    "HISTORY_CHANNELS",
    "SegmentationReport",
    "load_trajectories",
    "resample_states",
    "segment_windows",
    "normalize_to_target_frame",
    "label_maneuver",
    "split_dataset",
    "read_windows",
    "write_windows",
]
