"""Main CLI entry point for the majid-roots toolkit."""

import logging
import sys
from typing import Any, Dict, Optional, Union

import click

from .cocycle import (
    Coboundary3,
    Cochain,
    CocycleSpec,
    RepresentativeCocycle,
    classify,
    count_specs,
    enumerate_specs,
    find_cocycle_violation,
    is_coboundary,
    random_cochain2,
    spec_bounds,
    witness_to_json,
)
from .config import Config, config
from .construct import cartan_construction, corpus_names, get_entry, matches_expected, run_entry, standard_construction
from .double import is_abelian_bruteforce, is_abelian_spec, is_double_associative, majid_axiom_check
from .errors import (
    BudgetExceededError,
    ClassificationError,
    ConstructionError,
    InvalidInputError,
    PreconditionError,
)
from .resolution import obstruction_check, verify_resolution
from .rootdatum import (
    braiding_matrix,
    braiding_of_yd,
    build_yd_module,
    check_congruences,
    determine_a,
    support_group,
    twist_equivalent,
    verify_root_datum,
)
from .utils.display import (
    console,
    display_corpus,
    display_error,
    display_info,
    display_report_summary,
    display_success,
    display_warning,
)
from .utils.serialization import make_report, table_to_json, write_report
from .utils.validators import (
    load_json,
    parse_cartan,
    parse_cochain,
    parse_datum,
    parse_diagram,
    parse_element,
    parse_group,
    parse_int_list,
    parse_matrix,
    parse_spec,
    parse_standard,
)

# Configure logging
logging.basicConfig(
    level=getattr(logging, config.log_level),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.FileHandler(config.log_file)
    ]
)

# Only show errors and warnings on stderr for our own loggers
console_handler = logging.StreamHandler(sys.stderr)
console_handler.setLevel(logging.WARNING)
console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
logging.getLogger('src').addHandler(console_handler)

logger = logging.getLogger(__name__)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 5

ANCHORS = {
    "cocycle eval": "representative 3-cocycle Phi_a of a parameter sequence",
    "cocycle check": "normalized 3-cocycle identity on G^4",
    "cocycle classify": "H^3(G, k*) classified by parameter sequences a",
    "cocycle is-coboundary": "coboundary criterion on the K-complex",
    "cocycle count": "|H^3(G, k*)| as a product of cyclic orders and gcds",
    "double check": "twisted double commutative iff every a_rst vanishes; Majid axioms of (kG, Phi)",
    "resolve verify": "abelian 3-cocycles resolve over the squared group",
    "resolve obstruction": "non-abelian 3-cocycles do not resolve over the squared group",
    "rootdatum verify": "root-datum congruences and descent of the Yetter-Drinfeld module",
    "rootdatum determine-a": "a root datum forces at most one parameter sequence a",
    "rootdatum yd-module": "diagonal Yetter-Drinfeld module realizing a root datum",
    "rootdatum twist-equivalent": "twist equivalence of generalized Dynkin diagrams",
    "construct cartan": "genuine root data of Cartan type over odd orders",
    "construct standard": "genuine root data of standard type; squarefree orders admit none",
    "construct corpus": "curated constructions and their expected outcomes",
}


def _exit_code(error: Exception) -> int:
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, (PreconditionError, ConstructionError, ClassificationError)):
        return EXIT_PRECONDITION
    if isinstance(error, (InvalidInputError, ValueError)):
        return EXIT_INPUT
    return EXIT_INTERNAL


def _fail(error: Exception, what: str) -> None:
    """Report a failed command and exit with the code of its error class."""
    code = _exit_code(error)
    display_error(f"{what} failed: {error}")
    if code == EXIT_INTERNAL:
        logger.error(f"{what} failed: {error}", exc_info=True)
    else:
        logger.info(f"{what} refused ({type(error).__name__}): {error}")
    sys.exit(code)


def _settings(ctx: click.Context) -> Config:
    return ctx.obj["config"]


def _emit(ctx: click.Context, command: str, **fields: Any) -> Dict[str, Any]:
    report = make_report(ANCHORS[command], **fields)
    write_report(report, ctx.obj.get("output"))
    if ctx.obj.get("pretty"):
        display_report_summary(report, title=command)
    return report


def _verdict(holds: bool, message: str) -> None:
    if holds:
        display_success(message)
        sys.exit(EXIT_HOLDS)
    display_warning(message)
    sys.exit(EXIT_FAILS)


def _load_cochain(path: str) -> Union[CocycleSpec, Cochain]:
    return parse_cochain(load_json(path))


def _as_cochain(source: Union[CocycleSpec, Cochain]) -> Cochain:
    if isinstance(source, CocycleSpec):
        return RepresentativeCocycle(source)
    return source


def _echo(source: Union[CocycleSpec, Cochain]) -> Dict[str, Any]:
    if isinstance(source, CocycleSpec):
        return {"spec": source.to_json()}
    return {"table": {"moduli": list(source.group.moduli), "arity": source.arity}}


spec_option = click.option(
    '--spec', 'spec_path', required=True, type=click.Path(dir_okay=False),
    help='Cocycle spec JSON, or a tabulated cochain where accepted'
)
datum_option = click.option(
    '--datum', 'datum_path', required=True, type=click.Path(dir_okay=False),
    help='Root datum JSON'
)


@click.group()
@click.version_option(version="0.1.0", prog_name="majid-roots")
@click.option('--budget', type=click.IntRange(min=1), help='Max tuple count for exhaustive loops')
@click.option('--jobs', type=click.IntRange(min=1), help='Worker threads for exhaustive loops')
@click.option('--seed', type=int, help='Seed for randomized cochains')
@click.option('--json', 'output', type=click.Path(dir_okay=False), help='Write the JSON report to this file')
@click.option('--pretty', is_flag=True, help='Also render a summary on stderr')
@click.pass_context
def cli(ctx, budget, jobs, seed, output, pretty):
    """
    majid-roots - 3-cocycles, twisted doubles and root data over finite abelian groups.

    Every command reads JSON and writes a deterministic JSON report. Exit
    codes: 0 holds, 1 fails, 2 malformed input, 3 budget exceeded,
    4 precondition or construction failure.
    """
    ctx.ensure_object(dict)
    try:
        ctx.obj["config"] = config.with_overrides(budget=budget, jobs=jobs, seed=seed)
    except ValueError as e:
        display_error(str(e))
        sys.exit(EXIT_INPUT)
    ctx.obj["output"] = output
    ctx.obj["pretty"] = pretty
    logger.debug(f"Running with {ctx.obj['config']}")


@cli.group()
def cocycle():
    """Evaluate, check and classify 3-cocycles."""
    pass


@cocycle.command('eval')
@spec_option
@click.option('--at', 'points', multiple=True, help='Argument exponent vector, e.g. 1,0 (give three)')
@click.option('--plus-coboundary', is_flag=True, help='Add the coboundary of a seeded random 2-cochain')
@click.pass_context
def cocycle_eval(ctx, spec_path, points, plus_coboundary):
    """
    Evaluate Phi_a at a triple, or tabulate it over all of G^3.

    Without --at the output is a tabulated cochain that the other cocycle
    commands accept as input.
    """
    settings = _settings(ctx)
    try:
        source = _load_cochain(spec_path)
        phi = _as_cochain(source)
        if plus_coboundary:
            J = random_cochain2(phi.group, seed=settings.seed)
            phi = phi + Coboundary3(J)
            display_info(f"Added the coboundary of a random 2-cochain (seed {settings.seed})")

        if not points:
            write_report(table_to_json(phi, settings.budget), ctx.obj.get("output"))
            display_success(f"Tabulated {phi.group.order ** 3} values")
            return
        if len(points) != 3:
            raise InvalidInputError(f"--at must be given exactly three times, got {len(points)}")
        x, y, z = (parse_element(p, phi.group) for p in points)
        value = phi.evaluate(x, y, z)
        _emit(ctx, "cocycle eval", **_echo(source), at=[list(x), list(y), list(z)], value=value.to_json())
        display_success(f"Phi({list(x)}, {list(y)}, {list(z)}) = {value}")
    except Exception as e:
        _fail(e, "Cocycle evaluation")


@cocycle.command('check')
@spec_option
@click.pass_context
def cocycle_check(ctx, spec_path):
    """Exhaustively check normalization and the 3-cocycle identity."""
    settings = _settings(ctx)
    try:
        source = _load_cochain(spec_path)
        phi = _as_cochain(source)
        violation = find_cocycle_violation(phi, settings.budget, settings.jobs)
        _emit(
            ctx, "cocycle check", **_echo(source),
            is_cocycle=violation is None,
            counterexample=violation.to_json() if violation else None,
        )
    except Exception as e:
        _fail(e, "Cocycle check")
    _verdict(violation is None, "3-cocycle identity holds" if violation is None else f"{violation.kind} fails")


@cocycle.command('classify')
@spec_option
@click.option('--exhaustive', is_flag=True, help='Confirm the cocycle identity by brute force first')
@click.pass_context
def cocycle_classify(ctx, spec_path, exhaustive):
    """Find the canonical parameter sequence of a 3-cocycle's class."""
    settings = _settings(ctx)
    try:
        source = _load_cochain(spec_path)
        spec = classify(
            _as_cochain(source),
            exhaustive=exhaustive,
            budget=settings.budget,
            fallback_limit=settings.classify_fallback_limit,
        )
        _emit(ctx, "cocycle classify", **_echo(source), result=spec.to_json(), sequence=list(spec.sequence()))
        display_success(f"Class a = {spec.sequence()}")
    except Exception as e:
        _fail(e, "Classification")


@cocycle.command('is-coboundary')
@spec_option
@click.option('--exhaustive', is_flag=True, help='Confirm the cocycle identity by brute force first')
@click.pass_context
def cocycle_is_coboundary(ctx, spec_path, exhaustive):
    """Decide whether a 3-cocycle is a coboundary."""
    settings = _settings(ctx)
    try:
        source = _load_cochain(spec_path)
        witness = is_coboundary(_as_cochain(source), exhaustive=exhaustive, budget=settings.budget)
        _emit(ctx, "cocycle is-coboundary", **_echo(source),
              coboundary=witness is not None, witness=witness_to_json(witness))
    except Exception as e:
        _fail(e, "Coboundary check")
    _verdict(witness is not None, "coboundary" if witness is not None else "not a coboundary")


@cocycle.command('count')
@click.option('--moduli', required=True, help='Cyclic orders, e.g. 2,4')
@click.option('--list', 'list_specs', is_flag=True, help='Also list every canonical spec')
@click.pass_context
def cocycle_count(ctx, moduli, list_specs):
    """Count (and optionally list) the classes in H^3(G, k*)."""
    settings = _settings(ctx)
    try:
        group = parse_group(parse_int_list(moduli, "moduli"))
        total = count_specs(group)
        fields: Dict[str, Any] = {"moduli": list(group.moduli), "count": total, "bounds": spec_bounds(group)}
        if list_specs:
            settings.check_budget(total, "listing every spec", settings.budget)
            fields["specs"] = [list(s.sequence()) for s in enumerate_specs(group)]
        _emit(ctx, "cocycle count", **fields)
        display_success(f"|H^3| = {total} for Z{list(group.moduli)}")
    except Exception as e:
        _fail(e, "Counting")


@cli.group()
def double():
    """Twisted quantum doubles and Majid axioms."""
    pass


@double.command('check')
@spec_option
@click.pass_context
def double_check(ctx, spec_path):
    """Abelianness of D^Phi(G), associativity and the Majid axioms."""
    settings = _settings(ctx)
    try:
        source = _load_cochain(spec_path)
        phi = _as_cochain(source)
        by_spec: Optional[bool] = is_abelian_spec(source) if isinstance(source, CocycleSpec) else None
        by_force = is_abelian_bruteforce(phi, settings.budget)
        associative = is_double_associative(phi, settings.budget, settings.jobs)
        majid = majid_axiom_check(source, settings.budget, settings.jobs)
        holds = associative and majid.holds and by_spec in (None, by_force)
        _emit(
            ctx, "double check", **_echo(source),
            abelian=by_force,
            abelian_spec=by_spec,
            abelian_bruteforce=by_force,
            associative=associative,
            majid_axioms=majid.to_json()["axioms"],
            holds=holds,
        )
    except Exception as e:
        _fail(e, "Double check")
    _verdict(holds, f"double is {'abelian' if by_force else 'non-abelian'}; axioms {'hold' if holds else 'fail'}")


@cli.group()
def resolve():
    """Resolution of 3-cocycles over the squared group."""
    pass


@resolve.command('verify')
@spec_option
@click.pass_context
def resolve_verify(ctx, spec_path):
    """Check dJ_a = pi*Phi_a on every triple of the squared group."""
    settings = _settings(ctx)
    try:
        spec = parse_spec(load_json(spec_path))
        report = verify_resolution(spec, budget=settings.budget)
        _emit(ctx, "resolve verify", input=spec.to_json(), **report.to_json())
    except Exception as e:
        _fail(e, "Resolution check")
    _verdict(report.resolved, "resolved by J_a" if report.resolved else "dJ_a differs from the pullback")


@resolve.command('obstruction')
@spec_option
@click.pass_context
def resolve_obstruction(ctx, spec_path):
    """Show that the pullback of a non-abelian Phi_a is not a coboundary."""
    try:
        spec = parse_spec(load_json(spec_path))
        report = obstruction_check(spec)
        _emit(ctx, "resolve obstruction", input=spec.to_json(), **report.to_json())
    except Exception as e:
        _fail(e, "Obstruction check")
    _verdict(report.obstructed, "obstructed" if report.obstructed else "pullback is a coboundary")


@cli.group()
def rootdatum():
    """Root data, their congruences and Yetter-Drinfeld modules."""
    pass


@rootdatum.command('verify')
@datum_option
@click.option('--require-connected', is_flag=True, help='Also require a connected diagram')
@click.pass_context
def rootdatum_verify(ctx, datum_path, require_connected):
    """Run every root-datum check."""
    try:
        datum = parse_datum(load_json(datum_path))
        report = verify_root_datum(datum, require_connected=require_connected)
        _emit(ctx, "rootdatum verify", input=datum.to_json(), **report.to_json())
    except Exception as e:
        _fail(e, "Root datum verification")
    _verdict(report.holds, "root datum verified" if report.holds else f"checks failed: {report.failed()}")


@rootdatum.command('determine-a')
@datum_option
@click.option('--t-matrix', 'T_path', type=click.Path(dir_okay=False), help='JSON matrix T to use instead of the solved one')
@click.pass_context
def rootdatum_determine_a(ctx, datum_path, T_path):
    """Read off the parameter sequence forced by the congruences."""
    try:
        datum = parse_datum(load_json(datum_path))
        if T_path:
            datum = datum.with_T(parse_matrix(load_json(T_path), "T"))
        spec = determine_a(datum)
        congruences = check_congruences(datum.X, datum.solved_T, datum.base_group)
        _emit(
            ctx, "rootdatum determine-a",
            input=datum.to_json(),
            T=[list(r) for r in datum.solved_T],
            congruences=congruences.to_json(),
            a=spec.to_json() if spec else None,
        )
    except Exception as e:
        _fail(e, "Determining a")
    _verdict(spec is not None, f"a = {spec.sequence()}" if spec else "vanishing congruences fail")


@rootdatum.command('yd-module')
@datum_option
@click.pass_context
def rootdatum_yd_module(ctx, datum_path):
    """Build the Yetter-Drinfeld module and read its braiding back."""
    try:
        datum = parse_datum(load_json(datum_path))
        module = build_yd_module(datum)
        recovered = braiding_of_yd(module)
        round_trip = recovered == datum.diagram
        descends = module.descends()
        _emit(
            ctx, "rootdatum yd-module",
            input=datum.to_json(),
            module=module.to_json(),
            braiding=[[p.to_json() for p in row] for row in braiding_matrix(module)],
            recovered_diagram=recovered.to_json(),
            round_trip=round_trip,
            descends=descends,
            support_group=support_group(module).to_json(),
            holds=round_trip and descends,
        )
    except Exception as e:
        _fail(e, "Building the YD module")
    _verdict(round_trip and descends, f"round trip {round_trip}, descends {descends}")


@rootdatum.command('twist-equivalent')
@click.option('--first', 'first_path', required=True, type=click.Path(dir_okay=False), help='Diagram JSON')
@click.option('--second', 'second_path', required=True, type=click.Path(dir_okay=False), help='Diagram JSON')
@click.pass_context
def rootdatum_twist_equivalent(ctx, first_path, second_path):
    """Search for a vertex permutation carrying one diagram onto the other."""
    settings = _settings(ctx)
    try:
        first = parse_diagram(load_json(first_path))
        second = parse_diagram(load_json(second_path))
        tau = twist_equivalent(first, second, settings.twist_rank_bound)
        _emit(
            ctx, "rootdatum twist-equivalent",
            first=first.to_json(),
            second=second.to_json(),
            equivalent=tau is not None,
            tau=[t + 1 for t in tau] if tau is not None else None,
        )
    except Exception as e:
        _fail(e, "Twist equivalence")
    _verdict(tau is not None, "twist equivalent" if tau is not None else "not twist equivalent")


@cli.group()
def construct():
    """Generate genuine root data."""
    pass


@construct.command('cartan')
@click.option('--matrix', 'matrix_path', required=True, type=click.Path(dir_okay=False), help='Cartan matrix JSON')
@click.option('--orders', help='Odd component orders, e.g. 3,9')
@click.pass_context
def construct_cartan(ctx, matrix_path, orders):
    """Build and verify the Cartan-type root datum."""
    try:
        chosen = parse_int_list(orders, "orders") if orders else None
        result = cartan_construction(parse_cartan(load_json(matrix_path), chosen))
        _emit(ctx, "construct cartan", **result.to_json())
    except Exception as e:
        _fail(e, "Cartan construction")
    _verdict(result.genuine, f"genuine datum with d = {list(result.symmetrizer)}")


@construct.command('standard')
@click.option('--diagram', 'diagram_path', required=True, type=click.Path(dir_okay=False), help='Diagram JSON')
@click.option('--q-order', type=click.IntRange(min=1), help='|q| used for the closed-form m comparison')
@click.pass_context
def construct_standard(ctx, diagram_path, q_order):
    """Build and verify the standard-type root datum, or report the refusal."""
    try:
        result = standard_construction(parse_standard(load_json(diagram_path), q_order))
        _emit(ctx, "construct standard", **result.to_json())
    except Exception as e:
        _fail(e, "Standard construction")
    if result.refused:
        _verdict(False, f"refused: {result.reason}")
    if result.table_m != result.m:
        display_warning(f"closed-form m = {result.table_m} differs from the constructed m = {result.m}")
    _verdict(result.genuine, f"genuine datum over Z_{result.m}")


@construct.command('corpus')
@click.option('--name', 'names', multiple=True, help='Run only these entries')
@click.pass_context
def construct_corpus(ctx, names):
    """Run the curated constructions and compare with their expected outcomes."""
    try:
        entries = [get_entry(name) for name in (names or corpus_names())]
        rows = []
        for entry in entries:
            row: Dict[str, Any] = {"name": entry.name, "kind": entry.kind}
            try:
                result = run_entry(entry)
            except ConstructionError as e:
                row.update(error=str(e), matches=False)
            else:
                row.update(result.to_json())
                row["matches"] = matches_expected(entry, result)
            rows.append(row)
        all_match = all(row["matches"] for row in rows)
        _emit(ctx, "construct corpus", entries=rows, holds=all_match)
        if ctx.obj.get("pretty"):
            display_corpus(rows)
    except Exception as e:
        _fail(e, "Corpus run")
    _verdict(all_match, f"{sum(r['matches'] for r in rows)}/{len(rows)} entries match")


def main():
    """Main entry point."""
    try:
        cli(obj={})
    except KeyboardInterrupt:
        console.print("\n[yellow]Operation cancelled by user.[/yellow]")
        sys.exit(130)
    except Exception as e:
        display_error(f"Unexpected error: {e}")
        logger.error(f"Unexpected error in main: {e}", exc_info=True)
        sys.exit(EXIT_INTERNAL)


if __name__ == '__main__':
    main()
