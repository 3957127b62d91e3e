from .types import CoTAnnotation, CoTStep, DialogueTurn, Provenance, TeacherClient
from .scene_text import serialize_scene
from .dialogue import PromptPayload, build_cot_dialogue, parse_coordinate_list, run_cot_session
from .teacher import HttpTeacherClient, MockTeacher, mock_teacher
from .validate import ValidationReport, validate_annotation
from .corpus import read_annotation_dataset, write_annotation_dataset

__all__ = [
    "CoTAnnotation",
    "CoTStep",
    "DialogueTurn",
    "Provenance",
    "TeacherClient",
    "PromptPayload",
    "serialize_scene",
    "build_cot_dialogue",
    "run_cot_session",
    "parse_coordinate_list",
    "HttpTeacherClient",
    "MockTeacher",
    "mock_teacher",
    "ValidationReport",
    "validate_annotation",
    "read_annotation_dataset",
    "write_annotation_dataset",
]
