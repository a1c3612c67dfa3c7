"""Beamplots and citation statistics from Web of Science tab-delimited exports."""

from .metrics import (
    FutureYearError,
    WeightingPolicy,
    age_weight,
    h_index,
    median,
    weighted_citations,
)
from .model import (
    BeamplotModel,
    BeamRow,
    EmptyDatasetError,
    ValueMode,
    build_model,
    model_to_json,
    model_to_json_dict,
    model_to_table,
    table_to_csv,
)
from .render import (
    DegenerateCanvasError,
    OutOfRangeError,
    RenderConfig,
    count_to_x,
    render_beamplot,
    value_to_x,
    year_to_y,
)
from .wos import (
    EmptyInputError,
    MalformedEncodingError,
    MissingRequiredColumnsError,
    ParseReport,
    PublicationRecord,
    WosExportError,
    merge_datasets,
    parse_wos_export,
)

__version__ = "0.1.0"

__all__ = [
    "BeamplotModel",
    "BeamRow",
    "DegenerateCanvasError",
    "EmptyDatasetError",
    "EmptyInputError",
    "FutureYearError",
    "MalformedEncodingError",
    "MissingRequiredColumnsError",
    "OutOfRangeError",
    "ParseReport",
    "PublicationRecord",
    "RenderConfig",
    "ValueMode",
    "WeightingPolicy",
    "WosExportError",
    "age_weight",
    "build_model",
    "count_to_x",
    "h_index",
    "median",
    "merge_datasets",
    "model_to_json",
    "model_to_json_dict",
    "model_to_table",
    "parse_wos_export",
    "render_beamplot",
    "table_to_csv",
    "value_to_x",
    "weighted_citations",
    "year_to_y",
]
