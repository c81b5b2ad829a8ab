"""Human-facing output on stderr using Rich; JSON reports go to stdout."""

from typing import Any, Dict, List, Mapping

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

console = Console(stderr=True)

VERDICT_KEYS = (
    "holds",
    "is_cocycle",
    "coboundary",
    "abelian",
    "abelian_spec",
    "abelian_bruteforce",
    "associative",
    "resolved",
    "obstructed",
    "descends",
    "equivalent",
    "genuine",
    "refused",
    "matches",
)


def create_table(
    title: str,
    columns: List[tuple],
    rows: List[List[Any]],
    show_lines: bool = False,
) -> Table:
    """
    Create a Rich table with specified columns and rows.

    Args:
        title: Table title.
        columns: List of (column_name, column_style) tuples.
        rows: List of row data.
        show_lines: Whether to show lines between rows.

    Returns:
        Rich Table object.
    """
    table = Table(
        title=title,
        box=box.ROUNDED,
        show_header=True,
        header_style="bold cyan",
        show_lines=show_lines,
    )
    for col_name, col_style in columns:
        table.add_column(col_name, style=col_style)
    for row in rows:
        table.add_row(*[str(cell) for cell in row])
    return table


def _mark(value: Any) -> str:
    if value is True:
        return "[green]✓ yes[/green]"
    if value is False:
        return "[red]✗ no[/red]"
    return str(value)


def _sequence(spec: Mapping[str, Any]) -> str:
    parts = [f"a_l={spec.get('a_l')}"]
    if spec.get("a_ij"):
        parts.append("a_ij=" + ", ".join(f"{k}:{v}" for k, v in spec["a_ij"].items()))
    if spec.get("a_rst"):
        parts.append("a_rst=" + ", ".join(f"{k}:{v}" for k, v in spec["a_rst"].items()))
    return "  ".join(parts)


def display_report_summary(report: Dict[str, Any], title: str = "Report") -> None:
    """
    Summarize a JSON report: verdict fields first, then any named checks.

    Args:
        report: Report dictionary as written to stdout.
        title: Panel title, usually the subcommand.
    """
    lines = [f"[bold cyan]Anchor:[/bold cyan] {report.get('anchor', 'N/A')}"]
    if "moduli" in report:
        lines.append(f"[bold cyan]Group:[/bold cyan] Z{report['moduli']}")
    for key in VERDICT_KEYS:
        if key in report:
            lines.append(f"[bold]{key}:[/bold] {_mark(report[key])}")
    for key in ("spec", "a"):
        value = report.get(key)
        if isinstance(value, dict) and "a_l" in value:
            lines.append(f"[bold]{key}:[/bold] {_sequence(value)}")
    console.print(Panel("\n".join(lines), title=title, border_style="cyan"))

    for key in ("checks", "majid_axioms"):
        checks = report.get(key)
        if isinstance(checks, dict) and checks:
            display_checks(checks, title=key.replace("_", " ").title())
    verification = report.get("verification")
    if isinstance(verification, dict) and verification.get("checks"):
        display_checks(verification["checks"], title="Verification")


def display_checks(checks: Dict[str, Any], title: str = "Checks") -> None:
    """One row per named check with its verdict and first detail."""
    rows = []
    for name, result in checks.items():
        holds = result.get("holds") if isinstance(result, dict) else result
        if isinstance(result, dict) and result.get("skipped"):
            verdict = "[yellow]⚠ skipped[/yellow]"
        else:
            verdict = _mark(holds)
        detail = ""
        if isinstance(result, dict):
            first = result.get("counterexample") or (result.get("details") or [None])[0]
            detail = "" if first is None else str(first)
        rows.append([name, verdict, detail[:60]])
    columns = [("Check", "cyan"), ("Verdict", "white"), ("First failure", "yellow")]
    console.print(create_table(title, columns, rows))


def display_corpus(rows: List[Dict[str, Any]]) -> None:
    columns = [("Entry", "cyan"), ("Kind", "magenta"), ("Outcome", "white"), ("Matches", "white")]
    table_rows = []
    for row in rows:
        if row.get("refused"):
            outcome = "refused"
        elif "error" in row:
            outcome = f"[red]{row['error']}[/red]"
        else:
            outcome = f"genuine={row.get('genuine')}"
        table_rows.append([row["name"], row["kind"], outcome, _mark(row["matches"])])
    console.print(create_table("Construction corpus", columns, table_rows, show_lines=True))


def display_success(message: str) -> None:
    """Display a success message."""
    console.print(f"[bold green]✓[/bold green] {message}")


def display_error(message: str) -> None:
    """Display an error message."""
    console.print(f"[bold red]✗[/bold red] {message}")


def display_warning(message: str) -> None:
    """Display a warning message."""
    console.print(f"[bold yellow]⚠[/bold yellow] {message}")


def display_info(message: str) -> None:
    """Display an info message."""
    console.print(f"[bold cyan]ℹ[/bold cyan] {message}")
