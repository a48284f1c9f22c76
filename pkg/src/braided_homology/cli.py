"""Command-line front end.

Every command prints JSON lines (one per record, then a summary object) or,
with ``--format table``, the same dictionaries rendered by rich. Exit codes:
0 pass, 1 mathematical violation or failed check, 2 usage or parse error.
"""

import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import click
from rich.console import Console
from rich.table import Table

from .complexes.chain import AlphaBeta, chain_complex, cycle_set_complex, lnd_complex
from .complexes.model import (
    BasisChainModel,
    birack_family,
    braided_family,
    degeneracies_coeff,
    degeneracies_plain,
)
from .complexes.splitting import split, split_complexes
from .core.errors import BraidedHomologyError, BudgetExceeded
from .core.report import IdentityReport
from .extensions.bridge import bridge_report, nu_relation_check
from .extensions.cochains import compatible_pair, is_2cocycle, is_lnd_2cocycle, is_star_2cocycle
from .extensions.extension import check_descriptor, count_extension_classes, extend
from .guitar.identities import barJ_identities, check_entwine, check_round_trip, guitar_cocycle_report
from .homology.cohomology import cohomology_groups
from .homology.groups import FiniteAbelianGroup, betti_table, homology_table, orbits
from .io.export import export_matrices, to_json, write_json, write_json_lines
from .io.parser import (
    BraidedSetFile,
    CycleSetFile,
    ShelfFile,
    base_braiding,
    load_braiding,
    load_cochain,
    load_cycle_set,
    load_document,
)
from .multipermutation.enumerate import EnumerationConfig, enumerate_cycle_sets
from .multipermutation.nm import nm_table
from .multipermutation.retraction import is_nondegenerate, mp_level, retract
from .structures.classify import check_sideways_identities, classify
from .structures.cycle_set import CycleSet, from_cycle_set
from .structures.modules import adjoint_left_module, adjoint_right_module
from .suites import SUITES, run_suite
from .utils.config import Config, set_config
from .utils.logging import configure_logging, get_logger

logger = get_logger(__name__)
console = Console()


def _parse_moduli(ctx: click.Context, param: click.Parameter, value: str) -> FiniteAbelianGroup:
    try:
        moduli = tuple(int(v) for v in value.split(",") if v.strip())
        return FiniteAbelianGroup(moduli)
    except (ValueError, BraidedHomologyError) as exc:
        raise click.BadParameter(f"expected comma-separated moduli >= 2, got {value!r}") from exc


MODULI = click.option(
    "--moduli",
    default="2",
    show_default=True,
    callback=_parse_moduli,
    help="Coefficient group as comma-separated cyclic orders, e.g. 2,3",
)
MAX_DEGREE = click.option("--max-degree", type=int, default=None, help="Degree bound (default from config)")


def _render_table(record: Dict[str, Any]) -> None:
    table = Table(show_header=True, header_style="bold")
    table.add_column("key")
    table.add_column("value")
    for key, value in record.items():
        table.add_row(str(key), to_json(value) if isinstance(value, (dict, list)) else str(value))
    console.print(table)


def emit(ctx: click.Context, records: Iterable[Any], summary: Optional[Dict[str, Any]] = None, **fields: Any) -> None:
    """Write records in the selected format.

    Records are written as they are produced; the summary is read only after
    the last one, so a generator may still update it.
    """
    summary = {} if summary is None else summary
    summary.update(fields)
    if ctx.obj["format"] == "table":
        count = 0
        for record in records:
            _render_table(record.to_dict() if hasattr(record, "to_dict") else record)
            count += 1
        _render_table({**summary, "records": count})
    else:
        write_json_lines(records, sys.stdout, summary)
    export = ctx.obj.get("export")
    if export and summary:
        write_json(summary, Path(export) / f"{ctx.command_path.split()[-1]}_summary.json")


def finish(ctx: click.Context, passed: bool) -> None:
    if not passed:
        ctx.exit(1)


class _Group(click.Group):
    """Turns library errors into JSON on stdout plus the error's exit code."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except BraidedHomologyError as exc:
            logger.warning("command failed", error=type(exc).__name__, message=exc.message)
            click.echo(to_json(exc.to_dict()))
            ctx.exit(exc.exit_code)


@click.group(cls=_Group)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True)
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (default from config)")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="Path to config.json")
@click.option("--export", type=click.Path(file_okay=False), default=None, help="Directory for exported artifacts")
@click.version_option(package_name="braided-homology")
@click.pass_context
def cli(
    ctx: click.Context, fmt: str, log_level: Optional[str], config_path: Optional[str], export: Optional[str]
) -> None:
    """Exact (co)homology and structure tools for finite braided sets and cycle sets."""
    if config_path:
        set_config(Config(config_path=Path(config_path)))
    configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj.update(format=fmt, export=export)


@cli.command()
@click.argument("path", type=click.Path())
@click.pass_context
def verify(ctx: click.Context, path: str) -> None:
    """Validate a JSON file of any kind and classify base structures."""
    doc = load_document(path)
    structure = doc.build()
    records: List[Any] = [{"kind": doc.kind, "valid": True, "structure": structure.to_dict()}]
    passed = True
    if isinstance(doc, (BraidedSetFile, CycleSetFile, ShelfFile)):
        B = base_braiding(doc)
        records.append({"classification": classify(B).to_dict()})
        if B.is_left_nondegenerate:
            report = check_sideways_identities(B)
            passed = report.passed
            records.append(report)
    emit(ctx, records, command="verify", kind=doc.kind, passed=passed)
    finish(ctx, passed)


@cli.command()
@click.argument("path", type=click.Path())
@MAX_DEGREE
@click.pass_context
def info(ctx: click.Context, path: str, max_degree: Optional[int]) -> None:
    """Properties, orbits, Betti numbers and MP level (cycle sets) or classification."""
    doc = load_document(path)
    records: List[Any] = []
    if isinstance(doc, CycleSetFile):
        C = doc.build()
        records.append({"classification": classify(from_cycle_set(C)).to_dict()})
        records.append({"orbits": orbits(C)})
        records.extend(betti_table(C, max_degree))
        if is_nondegenerate(C):
            records.append({"mp": mp_level(C).to_dict()})
    elif isinstance(doc, (BraidedSetFile, ShelfFile)):
        records.append({"classification": classify(base_braiding(doc)).to_dict()})
    else:
        records.append({"kind": doc.kind, "structure": doc.build().to_dict()})
    emit(ctx, records, command="info", kind=doc.kind)


@cli.command()
@click.argument("path", type=click.Path())
@click.option("--max-k", type=int, default=4, show_default=True, help="Longest tuple checked")
@click.pass_context
def guitar(ctx: click.Context, path: str, max_k: int) -> None:
    """Guitar-map round trip, entwining and cocycle identities."""
    B = load_braiding(path)
    reports = [check_round_trip(B, max_k), check_entwine(B, max_k), guitar_cocycle_report(B, min(max_k, 2))]
    props = classify(B)
    if props.nondegenerate and props.invertible and props.ri_compatible:
        reports.append(barJ_identities(B))
    passed = all(r.passed for r in reports)
    emit(ctx, reports, command="guitar", passed=passed)
    finish(ctx, passed)


FAMILIES = ["cycle", "lnd", "lnd-star", "braided", "birack"]


@cli.command()
@click.argument("path", type=click.Path())
@click.option(
    "--family", type=click.Choice(FAMILIES), default=None, help="Complex to use (cycle for cycle sets, else braided)"
)
@click.option("--coefficients", type=click.Choice(["trivial", "adjoint"]), default="trivial", show_default=True)
@click.option("--alpha", type=int, default=1, show_default=True)
@click.option("--beta", type=int, default=-1, show_default=True)
@MAX_DEGREE
@click.pass_context
def homology(
    ctx: click.Context,
    path: str,
    family: Optional[str],
    coefficients: str,
    alpha: int,
    beta: int,
    max_degree: Optional[int],
) -> None:
    """Integral homology H_k in degrees up to the degree bound."""
    doc = load_document(path)
    if family is None:
        family = "cycle" if isinstance(doc, CycleSetFile) else "braided"
    if family == "cycle":
        complex_ = cycle_set_complex(load_cycle_set(path), max_degree)
        degrees = range(1, complex_.top)
    else:
        B = load_braiding(path)
        if family in ("lnd", "lnd-star"):
            complex_ = lnd_complex(B, max_degree, star=family == "lnd-star")
            degrees = range(1, complex_.top)
        else:
            M, N = (adjoint_right_module(B), adjoint_left_module(B)) if coefficients == "adjoint" else (None, None)
            build = braided_family if family == "braided" else birack_family
            model = build(B, M, N, max_degree=max_degree)
            complex_ = chain_complex(model, AlphaBeta(alpha, beta))
            degrees = range(0, complex_.top)
    if ctx.obj.get("export"):
        export_matrices(complex_, ctx.obj["export"])
    emit(ctx, homology_table(complex_, degrees), command="homology", complex=complex_.name, dims=complex_.dims)


@cli.command()
@click.argument("path", type=click.Path())
@click.option("--degree", type=click.IntRange(1, 2), default=2, show_default=True)
@click.option("--star", is_flag=True, help="Use the star complex of a braided set")
@MODULI
@click.pass_context
def cohomology(ctx: click.Context, path: str, degree: int, star: bool, moduli: FiniteAbelianGroup) -> None:
    """Z^n, B^n and H^n with finite abelian coefficients."""
    doc = load_document(path)
    target = doc.build() if isinstance(doc, CycleSetFile) else load_braiding(path)
    result = cohomology_groups(target, degree, moduli, star=star)
    emit(ctx, [result], command="cohomology", order=result.order, passed=result.passed)
    finish(ctx, result.passed)


@cli.command(name="split")
@click.argument("path", type=click.Path())
@click.option("--kind", type=click.Choice(["plain", "coeff"]), default="plain", show_default=True)
@click.option("--star", is_flag=True, help="Star family (plain degeneracies only)")
@click.option("--top", type=int, default=3, show_default=True, help="Highest chain degree")
@click.pass_context
def split_cmd(ctx: click.Context, path: str, kind: str, star: bool, top: int) -> None:
    """Certify C_k = C^D_k ⊕ C^N_k and report both homologies."""
    B = load_braiding(path)
    model: BasisChainModel
    if kind == "coeff":
        model = degeneracies_coeff(B, max_degree=top)
    else:
        model = degeneracies_plain(B, star=star, max_degree=top)
    records: List[Any] = [split(model, k) for k in range(1, top + 1)]
    degenerate, normalized = split_complexes(model, AlphaBeta(), top)
    for part in (degenerate, normalized):
        for h in homology_table(part, range(top)):
            records.append({"complex": part.name, **h.to_dict()})
    emit(ctx, records, command="split", degrees=top, passed=True)


@cli.command(name="extend")
@click.argument("cycle_set", type=click.Path())
@click.argument("cochain", type=click.Path())
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the total cycle set here")
@click.pass_context
def extend_cmd(ctx: click.Context, cycle_set: str, cochain: str, output: Optional[str]) -> None:
    """Build the extension A x_f X of a cycle set by a 2-cocycle."""
    C = load_cycle_set(cycle_set)
    f = load_cochain(cochain, C.size)
    E = extend(C, f.group, f)
    report = check_descriptor(E)
    if output:
        write_json(E.total, output)
    emit(ctx, [E, report], command="extend", size=E.total.size, passed=report.passed)
    finish(ctx, report.passed)


@cli.command(name="cocycle-check")
@click.argument("base", type=click.Path())
@click.argument("cochain", type=click.Path())
@click.option("--star-cochain", type=click.Path(), default=None, help="Second cochain f* for the compatibility check")
@click.pass_context
def cocycle_check(ctx: click.Context, base: str, cochain: str, star_cochain: Optional[str]) -> None:
    """Cocycle conditions for a cochain (and a compatible f* on braided sets)."""
    doc = load_document(base)
    B = load_braiding(base)
    f = load_cochain(cochain, B.size)
    result: Dict[str, Any] = {}
    if isinstance(doc, CycleSetFile):
        result["cycle_set_cocycle"] = is_2cocycle(doc.build(), f)
    result["lnd_cocycle"] = is_lnd_2cocycle(B, f)
    result["star_cocycle"] = is_star_2cocycle(B, f)
    passed = result.get("cycle_set_cocycle", result["lnd_cocycle"])
    if star_cochain:
        g = load_cochain(star_cochain, B.size)
        result["star_cochain_star_cocycle"] = is_star_2cocycle(B, g)
        result["compatible"] = compatible_pair(B, f, g)
        passed = result["lnd_cocycle"] and result["star_cochain_star_cocycle"] and result["compatible"]
    emit(ctx, [result], command="cocycle-check", passed=passed)
    finish(ctx, passed)


@cli.command(name="ext-classes")
@click.argument("path", type=click.Path())
@MODULI
@click.option("--budget", type=int, default=None, help="Largest cochain space to enumerate")
@click.pass_context
def ext_classes(ctx: click.Context, path: str, moduli: FiniteAbelianGroup, budget: Optional[int]) -> None:
    """Count extension classes by enumeration and compare with |H²|."""
    C = load_cycle_set(path)
    classes = count_extension_classes(C, moduli, budget)
    h2 = cohomology_groups(C, 2, moduli)
    passed = classes == h2.order
    emit(ctx, [{"classes": classes, "h2": h2.to_dict()}], command="ext-classes", passed=passed)
    finish(ctx, passed)


@cli.command(name="bridge-check")
@click.argument("path", type=click.Path())
@MODULI
@click.option("--cochain", type=click.Path(), default=None, help="Check one cochain instead of all")
@click.pass_context
def bridge_check(ctx: click.Context, path: str, moduli: FiniteAbelianGroup, cochain: Optional[str]) -> None:
    """Group-cohomology bridge: ν-relations against star cocycles."""
    B = load_braiding(path)
    if cochain:
        f = load_cochain(cochain, B.size)
        nu, star = nu_relation_check(B, f), is_star_2cocycle(B, f)
        passed = nu == star
        emit(ctx, [{"nu_relation": nu, "star_cocycle": star}], command="bridge-check", passed=passed)
    else:
        report = bridge_report(B, moduli)
        passed = report.passed
        emit(ctx, [report], command="bridge-check", passed=passed)
    finish(ctx, passed)


@cli.command(name="retract")
@click.argument("path", type=click.Path())
@click.pass_context
def retract_cmd(ctx: click.Context, path: str) -> None:
    """Retraction Ret(X) of a non-degenerate cycle set."""
    quotient = retract(load_cycle_set(path))
    emit(ctx, [quotient], command="retract", size=quotient.size)


@cli.command(name="mp-level")
@click.argument("path", type=click.Path())
@click.pass_context
def mp_level_cmd(ctx: click.Context, path: str) -> None:
    """Multipermutation level by iterated retraction."""
    report = mp_level(load_cycle_set(path))
    emit(ctx, [report], command="mp-level", level=report.level)


@cli.command(name="enumerate")
@click.option("--size", type=click.IntRange(min=1), required=True)
@click.option("--square-free", is_flag=True)
@click.option("--up-to-iso", is_flag=True)
@click.option("--budget", type=int, default=None, help="Search nodes (default from config)")
@click.option("--workers", type=int, default=None, help="Worker processes (default from config)")
@click.pass_context
def enumerate_cmd(
    ctx: click.Context, size: int, square_free: bool, up_to_iso: bool, budget: Optional[int], workers: Optional[int]
) -> None:
    """Stream every cycle set of a given size as JSON."""
    cfg = EnumerationConfig(size, square_free, up_to_iso, budget, workers)
    state: Dict[str, Any] = {"command": "enumerate", "size": size, "count": 0, "incomplete": False}

    def stream() -> Iterator[CycleSet]:
        try:
            for C in enumerate_cycle_sets(cfg):
                state["count"] += 1
                yield C
        except BudgetExceeded:
            state["incomplete"] = True
            logger.warning("enumeration incomplete", size=size, emitted=state["count"])

    emit(ctx, stream(), state)
    finish(ctx, not state["incomplete"])


@cli.command()
@click.option("--max-m", type=click.IntRange(min=0), default=4, show_default=True)
@click.option("--max-size", type=int, default=None, help="Largest size to search (default 2^max_m)")
@click.option("--extended", is_flag=True, help="Use the extended budget")
@click.option("--budget", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.pass_context
def nm(
    ctx: click.Context,
    max_m: int,
    max_size: Optional[int],
    extended: bool,
    budget: Optional[int],
    workers: Optional[int],
) -> None:
    """Least size N_m of a square-free cycle set of MP level m."""
    table = nm_table(max_m, max_size, extended, budget, workers)
    rows = [{"m": m, "N_m": n} for m, n in sorted(table.values.items())]
    passed = table.complete and not table.doubling_bound_failures()
    emit(ctx, rows, command="nm", **table.to_dict())
    finish(ctx, passed)


@cli.command()
@click.argument("names", nargs=-1, type=click.Choice(sorted(SUITES)))
@click.pass_context
def suite(ctx: click.Context, names: Tuple[str, ...]) -> None:
    """Run acceptance suites (all of them when no name is given)."""
    selected = sorted(names) if names else sorted(n for n in SUITES if n != "nm")
    results = [run_suite(name) for name in selected]
    passed = all(r.passed for r in results)
    emit(ctx, results, command="suite", suites=selected, passed=passed)
    finish(ctx, passed)


def main() -> None:
    """Console-script entry point."""
    cli(obj={})


if __name__ == "__main__":
    main()
