"""Deterministic JSON reports."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import click

from ..cocycle import Cochain

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def make_report(anchor: str, **fields: Any) -> Dict[str, Any]:
    """
    Wrap command output in the versioned report envelope.

    Args:
        anchor: Name of the mathematical statement the command exercises.
        **fields: Report body.

    Returns:
        Dictionary with ``schema`` and ``anchor`` alongside the body.
    """
    report = {"schema": SCHEMA_VERSION, "anchor": anchor}
    report.update(fields)
    return report


def dumps(data: Dict[str, Any]) -> str:
    """Serialize with sorted keys so equal reports give equal bytes."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(data: Dict[str, Any], path: Optional[Path] = None) -> None:
    """Write a report to ``path``, or to stdout when no path is given."""
    text = dumps(data)
    if path is None:
        click.echo(text, nl=False)
        return
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {path}")


def table_to_json(cochain: Cochain, budget: Optional[int] = None) -> Dict[str, Any]:
    """Tabulated cochain in lexicographic argument order."""
    table = cochain.tabulate(budget)
    return {
        "schema": SCHEMA_VERSION,
        "moduli": list(cochain.group.moduli),
        "arity": table.arity,
        "phases": [p.to_json() for p in table.phases()],
    }

