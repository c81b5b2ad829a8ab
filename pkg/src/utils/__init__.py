"""Utility modules for display, parallel maps, parsing and reports."""

from .display import (
    console,
    create_table,
    display_checks,
    display_corpus,
    display_error,
    display_info,
    display_report_summary,
    display_success,
    display_warning,
)
from .parallel import chunked, first_hit, parallel_map

__all__ = [
    "console",
    "create_table",
    "display_checks",
    "display_corpus",
    "display_error",
    "display_info",
    "display_report_summary",
    "display_success",
    "display_warning",
    "chunked",
    "first_hit",
    "parallel_map",
]
