"""Command line interface of the wcol workbench."""

import functools
import json
import logging
import sys
from pathlib import Path

import click
from dotenv import load_dotenv
from pydantic import ValidationError

from wcol_graphs.constructions.families import build_family
from wcol_graphs.constructions.recipe import parse_family_spec
from wcol_graphs.errors import InvalidModel, NotAPath, NotATree, WorkbenchError
from wcol_graphs.graph.dimacs import read_graph_file, write_graph, write_graph_file
from wcol_graphs.graph.generators import make_rng
from wcol_graphs.graph.graph import Graph
from wcol_graphs.graph.structures import path_decomposition_of_ordering
from wcol_graphs.minors.model import SubgraphFamily, validate_family
from wcol_graphs.minors.search import SearchOutcome, find_model, find_rich_model
from wcol_graphs.orderings.exact import wcol_exact
from wcol_graphs.orderings.ordering import Ordering
from wcol_graphs.orderings.reachability import wcol_of_ordering
from wcol_graphs.orderings.schemes import dyadic_path_ordering, elimination_ordering, pathwidth_ordering
from wcol_graphs.parameters.certificate import Parameter
from wcol_graphs.parameters.recursive import (
    RootedTwoDepthSolver,
    exponent_bracket,
    rooted_twodepth,
    treedepth,
    twodepth,
)
from wcol_graphs.parameters.vertex_cover import vertex_cover_number
from wcol_graphs.parameters.widths import treewidth_pathwidth_exact
from wcol_graphs.utils.budget import SearchStatus
from wcol_graphs.utils.file_utils import expose_configs, read_params
from workbench.common.log import setup_logging
from workbench.common.schemas import FamilySchema, FamilySpecSchema
from workbench.common.settings import settings
from workbench.verification.bench import bench as run_bench
from workbench.verification.growth import GrowthFamily, OrderingScheme, family_instance, growth_fit
from workbench.verification.runner import list_suites, run_suite

load_dotenv()

setup_logging()
logger = logging.getLogger(__name__)

USAGE_ERROR = 3


class WorkbenchUsageError(click.ClickException):
    """A domain error reported as a one-line message with the usage-error exit code."""

    exit_code = USAGE_ERROR


def translate_errors(f):
    """Decorator turning library errors and malformed JSON inputs into usage errors."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (WorkbenchError, ValidationError, json.JSONDecodeError) as e:
            raise WorkbenchUsageError(str(e)) from e

    return wrapper


def echo_json(data) -> None:
    click.echo(json.dumps(data, indent=2))


def finish(code: int) -> None:
    """End the current command with `code`."""
    click.get_current_context().exit(code)


def _search_exit_code(outcome: SearchOutcome) -> int:
    return 2 if outcome.status == SearchStatus.EXHAUSTED else 0


@click.group()
def main():
    """Weak coloring numbers, rooted 2-treedepth, extremal constructions and their verification."""


@main.command()
@click.argument("family")
@click.argument("params", required=False, default="")
@click.option(
    "-o",
    "--output",
    type=click.Path(path_type=Path),
    help="Graph file to write; the recipe goes to a sidecar .json next to it. Prints the graph when omitted.",
)
@translate_errors
def gen(family: str, params: str, output: Path | None):
    """Build a graph of FAMILY with PARAMS, given as key=value,... or as a JSON object."""
    if params.strip().startswith("{"):
        spec = FamilySpecSchema(family=family, params=json.loads(params)).model_dump()
    else:
        spec = parse_family_spec(f"{family}:{params}")
    built = build_family(spec)
    if output is None:
        click.echo(write_graph(built.graph, comments=[f"recipe {json.dumps(built.to_json())}"]), nl=False)
        return
    write_graph_file(built.graph, output, comments=[f"{built.recipe.family.value} n={built.graph.n}"])
    sidecar = output.with_suffix(".json")
    with open(sidecar, "w", encoding="utf8") as file:
        json.dump(built.to_json(), file, indent=2)
    logger.info("Wrote %s and %s", output, sidecar)


def _scheme_ordering(g: Graph, scheme: OrderingScheme, r: int, root: int) -> Ordering:
    match scheme:
        case OrderingScheme.ELIMINATION:
            return elimination_ordering(g, root)
        case OrderingScheme.DYADIC:
            return dyadic_path_ordering(g, r)
        case OrderingScheme.PATHWIDTH:
            if g.n <= read_params("search_params.yml")["widths"]["vertex_cap"]:
                pd = treewidth_pathwidth_exact(g, Parameter.PW).witness
            else:
                logger.info("Graph too large for exact pathwidth, using the decomposition of the vertex order")
                pd = path_decomposition_of_ordering(g, sorted(g.vertices))
            return pathwidth_ordering(g, pd, r)
    raise WorkbenchUsageError(f"scheme {scheme.value} does not build an ordering")


def _read_scope(path: Path) -> frozenset[int]:
    try:
        return frozenset(int(token) for token in path.read_text().split())
    except ValueError as e:
        raise click.UsageError(f"scope file {path} must hold whitespace separated vertex numbers") from e


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, path_type=Path))
@click.option(
    "-S", "--scope", "scope_file", type=click.Path(exists=True, path_type=Path), help="File of scope vertex numbers."
)
@click.option("-r", "--radius", "r", type=click.IntRange(min=0), required=True, help="The radius r.")
@click.option("--exact", is_flag=True, default=False, help="Exhaustive search (the default without --scheme).")
@click.option(
    "--scheme",
    type=click.Choice(["elimination", "dyadic", "pathwidth"]),
    help="Evaluate a constructive ordering instead of searching.",
)
@click.option("--root", type=int, default=0, show_default=True, help="Root of the elimination ordering.")
@click.option("--budget", type=int, help="Node budget of the exhaustive search.")
@translate_errors
def wcol(
    graph_file: Path, scope_file: Path | None, r: int, exact: bool, scheme: str | None, root: int, budget: int | None
):
    """Compute wcol_r of GRAPH_FILE, optionally restricted to a scope."""
    if exact and scheme:
        raise click.UsageError("--exact and --scheme are mutually exclusive")
    g = read_graph_file(graph_file)
    scope = g.vertices if scope_file is None else _read_scope(scope_file)
    if scheme is None:
        certificate = wcol_exact(g, scope, r, budget)
    else:
        try:
            sigma = _scheme_ordering(g, OrderingScheme.infer_type(scheme), r, root)
        except (NotATree, NotAPath) as e:
            raise click.UsageError(f"--scheme {scheme}: {e}") from e
        certificate = wcol_of_ordering(g, scope, sigma.restricted(scope), r)
    echo_json(certificate.to_json())


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, path_type=Path))
@click.option(
    "--which",
    default="td,td2,rtd2",
    show_default=True,
    help="Comma separated: td, td2, rtd2, vc, tw, pw, bracket.",
)
@translate_errors
def params(graph_file: Path, which: str):
    """Compute exact parameters of GRAPH_FILE with their witnesses."""
    g = read_graph_file(graph_file)
    rtd2_solver = RootedTwoDepthSolver()
    results = []
    for name in (part.strip() for part in which.split(",") if part.strip()):
        if name == "bracket":
            lower, upper = exponent_bracket(g, rtd2_solver)
            results.append({"parameter": "bracket", "lower": lower, "upper": upper})
            continue
        match Parameter.infer_type(name):
            case Parameter.TD:
                certificate = treedepth(g)
            case Parameter.TD2:
                certificate = twodepth(g)
            case Parameter.RTD2:
                certificate = rooted_twodepth(g, rtd2_solver)
            case Parameter.VC:
                certificate = vertex_cover_number(g)
            case parameter:
                certificate = treewidth_pathwidth_exact(g, parameter)
        results.append(certificate.to_json())
    echo_json(results)


def _outcome_json(outcome: SearchOutcome) -> dict:
    data = {"status": outcome.status.value, "nodes": outcome.nodes}
    if outcome.found:
        data["model"] = outcome.result.to_json()
    return data


@main.command()
@click.argument("pattern_file", type=click.Path(exists=True, path_type=Path))
@click.argument("host_file", type=click.Path(exists=True, path_type=Path))
@click.option("--budget", type=int, help="Node budget of the model search.")
@translate_errors
def minor(pattern_file: Path, host_file: Path, budget: int | None):
    """Search for a model of PATTERN_FILE in HOST_FILE; exit code 2 when the budget ran out."""
    outcome = find_model(read_graph_file(pattern_file), read_graph_file(host_file), budget)
    echo_json(_outcome_json(outcome))
    finish(_search_exit_code(outcome))


@main.command()
@click.argument("pattern_file", type=click.Path(exists=True, path_type=Path))
@click.argument("host_file", type=click.Path(exists=True, path_type=Path))
@click.argument("family_file", type=click.Path(exists=True, path_type=Path))
@click.option("--budget", type=int, help="Node budget of the model search.")
@translate_errors
def richmodel(pattern_file: Path, host_file: Path, family_file: Path, budget: int | None):
    """Search for a model of PATTERN_FILE in HOST_FILE whose branch sets each contain a member of FAMILY_FILE."""
    host = read_graph_file(host_file)
    family = SubgraphFamily.of(FamilySchema.model_validate_json(family_file.read_text()).root)
    violations = validate_family(host, family)
    if violations:
        raise InvalidModel(f"invalid family: {violations[0]}")
    outcome = find_rich_model(read_graph_file(pattern_file), host, family, budget)
    echo_json(_outcome_json(outcome))
    finish(_search_exit_code(outcome))


@main.command()
@click.argument("suite", required=False)
@click.option("--seed", type=int, help="Seed of the random cases; defaults to WCOL_SEED or suite_params.yml.")
@click.option(
    "--json",
    "json_path",
    type=click.Path(path_type=Path),
    help="Report file; failing cases write their bundles next to it. Defaults to the output directory.",
)
@click.option("--list", "list_only", is_flag=True, default=False, help="List the registered suites and exit.")
@click.option("--runtime", is_flag=True, default=False, help="Include case runtimes in the JSON report.")
@click.option("-q", "--quiet", is_flag=True, default=False, help="Hide progress bars.")
@translate_errors
def verify(suite: str | None, seed: int | None, json_path: Path | None, list_only: bool, runtime: bool, quiet: bool):
    """Run the verification SUITE; exit code 0 all pass, 1 failures, 2 inconclusive only."""
    if list_only:
        for entry in list_suites():
            click.echo(f"{entry.name:24} {entry.claim}")
        return
    if suite is None:
        raise click.UsageError("a suite name is required unless --list is given")
    progress = settings.progress and not quiet and sys.stderr.isatty()
    report = run_suite(suite, seed=settings.seed if seed is None else seed, progress=progress)
    written = report.write(json_path or settings.output_directory / f"{suite}.json", include_runtime=runtime)
    click.echo(report.to_table())
    click.echo(f"{report.summary()} -> {written[-1]}")
    finish(report.exit_code())


@main.command()
@click.argument("family", type=click.Choice([f.value for f in GrowthFamily]))
@click.option("--scheme", type=click.Choice([s.value for s in OrderingScheme]), help="Defaults to the family's own.")
@click.option("--vertices", type=int, help="Graph size; defaults to the growth section of suite_params.yml.")
@click.option("--r-min", type=int, help="Smallest radius.")
@click.option("--r-max", type=int, help="Largest radius.")
@click.option("--seed", type=int, help="Seed for random families.")
@click.option("--csv", "csv_path", type=click.Path(path_type=Path), help="Write the samples as CSV.")
@translate_errors
def growth(
    family: str,
    scheme: str | None,
    vertices: int | None,
    r_min: int | None,
    r_max: int | None,
    seed: int | None,
    csv_path: Path | None,
):
    """Fit the growth exponent of wcol_r in r on a FAMILY under an ordering scheme."""
    config = read_params("suite_params.yml")["growth"]
    kind = GrowthFamily.infer_type(family)
    default_vertices = {
        GrowthFamily.TREES: config["tree_vertices"],
        GrowthFamily.PATHS: config["path_vertices"],
        GrowthFamily.GRIDS: config["grid_vertices"],
    }[kind]
    seed = seed if seed is not None else settings.seed if settings.seed is not None else 0
    r_values = range(r_min or config["r_min"], (r_max or config["r_max"]) + 1)
    g, pd = family_instance(
        kind, vertices or default_vertices, make_rng(seed), config["grid_rows"], spine=r_values.stop
    )
    fit = growth_fit(g, r_values, scheme or kind.default_scheme, pd)
    if csv_path is not None:
        fit.write_csv(csv_path)
    echo_json(fit.to_json())


@main.command()
@click.argument("target", type=click.Choice(["wcol-exact", "rtd2", "model-search"]))
@click.option("--json", "json_path", type=click.Path(path_type=Path), help="Write the timing report as JSON.")
@translate_errors
def bench(target: str, json_path: Path | None):
    """Time the exact searches on the instance ladder of TARGET."""
    report = run_bench(target)
    if json_path is not None:
        report.write(json_path)
    click.echo(report.to_table())


@main.command("expose-configs")
def expose_configs_command():
    """Copy the default parameter files into <project-root>/config for local editing."""
    destination = expose_configs()
    read_params.cache_clear()
    click.echo(f"Parameter files copied to {destination}")


def run(args: list[str] | None = None) -> int:
    """Run the CLI and return its exit code; usage errors of any kind give 3."""
    try:
        code = main.main(args=args, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return USAGE_ERROR
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return code or 0


def cli_entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    cli_entry()
