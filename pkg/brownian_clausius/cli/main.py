import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Union

import click
import pandas as pd
import yaml
from pydantic import ValidationError

from brownian_clausius.audit.clausius import variation_report
from brownian_clausius.cli.config import RunConfig, load_run_config
from brownian_clausius.cli.figures import FIGURES, figure_data
from brownian_clausius.cli.selftest import format_selftest, raise_on_failure, relative_error, run_selftest
from brownian_clausius.config import (
    CSV_FLOAT_FORMAT,
    DEFAULT_TRUNCATION_TOLERANCE,
    MATSUBARA_DEFAULT_TERMS,
    STAR_BATH_DEFAULT_MODES,
)
from brownian_clausius.densmat.kernel import dimensionless_quantities
from brownian_clausius.densmat.matrix import build_truncated
from brownian_clausius.drude.moments import moments as closed_form_moments
from brownian_clausius.effective.oscillator import effective_star
from brownian_clausius.exceptions import NumericDomainError, SelfTestFailure
from brownian_clausius.oracles.fdt import fdt_quadrature_moments
from brownian_clausius.oracles.matsubara import matsubara_moments
from brownian_clausius.oracles.star_bath import star_bath_moments
from brownian_clausius.params import Variation

logger = logging.getLogger(__name__)

FORMAT_CHOICE = click.Choice(["csv", "json"])
Record = Union[dict[str, Any], pd.DataFrame]


def _emit(record: Record, fmt: str, out: Optional[Path]) -> None:
    """Write one record (a dict) or a table (a DataFrame) as CSV or JSON to out, or to stdout."""
    if fmt == "csv":
        frame = record if isinstance(record, pd.DataFrame) else pd.json_normalize(record)
        text = frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT)
    else:
        payload = record.to_dict(orient="records") if isinstance(record, pd.DataFrame) else record
        text = json.dumps(payload, indent=2) + "\n"

    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="") as out_f:
            out_f.write(text)
        logger.info(f"Wrote {out}")


def _point_options(f: Any) -> Any:
    f = click.option("--gamma", type=float, required=True, help="Damping parameter gamma.")(f)
    f = click.option("--temp", type=float, required=True, help="Temperature T of the total system.")(f)
    return f


def _output_options(f: Any) -> Any:
    f = click.option("--format", "fmt", type=FORMAT_CHOICE, default=None, help="Output format (default from config).")(f)
    f = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Output file (default stdout).")(f)
    return f


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None, help="YAML run configuration.")
@click.option("--verbose", is_flag=True, help="Log numerical diagnostics.")
@click.option("--quiet", is_flag=True, help="Log errors only.")
@click.pass_context
def main(ctx: click.Context, config_path: Optional[Path], verbose: bool, quiet: bool) -> None:
    """Thermodynamics of a quantum oscillator coupled to a Drude bath."""
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s - %(message)s")
    try:
        ctx.obj = load_run_config(config_path)
    except ValidationError:
        raise
    except (yaml.YAMLError, ValueError) as exc:
        raise click.BadParameter(str(exc), param_hint="'--config'") from exc


@main.command()
@_point_options
@_output_options
@click.pass_obj
def moments(config: RunConfig, gamma: float, temp: float, fmt: Optional[str], out: Optional[Path]) -> None:
    """Equilibrium <q^2>, <p^2> and v."""
    params = config.params(gamma, temp)
    m = closed_form_moments(params)
    record = {"gamma": gamma, "T": temp, "q2": m.q2, "p2": m.p2, "v": m.v, "xi": m.xi}
    _emit(record, fmt or config.format, out)


@main.command()
@_point_options
@click.option("--tolerance", type=float, default=DEFAULT_TRUNCATION_TOLERANCE, show_default=True, help="Truncation tolerance on the diagonal tail.")
@_output_options
@click.pass_obj
def densmat(config: RunConfig, gamma: float, temp: float, tolerance: float, fmt: Optional[str], out: Optional[Path]) -> None:
    """Reduced density matrix in the uncoupled number basis, row-major."""
    params = config.params(gamma, temp)
    m = closed_form_moments(params)
    dimset = dimensionless_quantities(m, params.M, params.omega0, params.hbar)
    matrix = build_truncated(dimset, m, tolerance, params.hbar)
    logger.info(f"n_cut = {matrix.n_cut}, trace deficit {matrix.trace_deficit:.3e}")

    size = matrix.n_cut + 1
    rows = [{"n": n, "m": k, "value": float(matrix.entries[n, k])} for n in range(size) for k in range(size)]
    _emit(pd.DataFrame(rows, columns=["n", "m", "value"]), fmt or config.format, out)


@main.command()
@_point_options
@_output_options
@click.pass_obj
def effective(config: RunConfig, gamma: float, temp: float, fmt: Optional[str], out: Optional[Path]) -> None:
    """Starred effective oscillator (M_eff*, k_eff*, T_eff*) with its thermodynamic potentials."""
    params = config.params(gamma, temp)
    eff = effective_star(closed_form_moments(params), params.M, params.k0, params.beta, params.hbar, params.kB)
    _emit({"gamma": gamma, **eff.model_dump()}, fmt or config.format, out)


@main.command()
@click.option("--vary", type=click.Choice([v.value for v in Variation]), required=True, help="Parameter varied.")
@_point_options
@_output_options
@click.pass_obj
def audit(config: RunConfig, vary: str, gamma: float, temp: float, fmt: Optional[str], out: Optional[Path]) -> None:
    """Clausius audit of one variation: heat, work, entropy and the naive and effective gaps."""
    params = config.params(gamma, temp)
    report = variation_report(params, Variation(vary))
    _emit({"params": params.model_dump(), **report.model_dump(mode="json")}, fmt or config.format, out)


@main.command()
@click.argument("figure_id", type=click.IntRange(min(FIGURES), max(FIGURES)))
@click.option("--gamma", "gammas", type=float, multiple=True, help="Damping values (repeatable; default from config).")
@click.option("--t-min", type=float, default=None)
@click.option("--t-max", type=float, default=None)
@click.option("--n-points", type=int, default=None)
@click.option("--workers", type=int, default=None, help="Grid points evaluated concurrently.")
@_output_options
@click.pass_obj
def figure(
    config: RunConfig,
    figure_id: int,
    gammas: tuple[float, ...],
    t_min: Optional[float],
    t_max: Optional[float],
    n_points: Optional[int],
    workers: Optional[int],
    fmt: Optional[str],
    out: Optional[Path],
) -> None:
    """Data of figure FIGURE_ID: a T column and one gamma_<value> column per damping value."""
    run_config = config.updated(gamma_list=gammas or None, t_min=t_min, t_max=t_max, n_points=n_points, workers=workers)
    _emit(figure_data(figure_id, run_config), fmt or run_config.format, out)


@main.command()
@click.argument("name", type=click.Choice(["matsubara", "fdt", "star-bath"]))
@_point_options
@click.option("--n-terms", type=int, default=MATSUBARA_DEFAULT_TERMS, show_default=True, help="Matsubara frequencies summed.")
@click.option("--modes", type=int, default=STAR_BATH_DEFAULT_MODES, show_default=True, help="Star-bath modes.")
@_output_options
@click.pass_obj
def oracle(
    config: RunConfig,
    name: str,
    gamma: float,
    temp: float,
    n_terms: int,
    modes: int,
    fmt: Optional[str],
    out: Optional[Path],
) -> None:
    """Moments from an independent oracle, next to the closed forms."""
    params = config.params(gamma, temp)
    if name == "matsubara":
        m = matsubara_moments(params, n_terms=n_terms)
    elif name == "fdt":
        m = fdt_quadrature_moments(params)
    else:
        m = star_bath_moments(params, N=modes)
    reference = closed_form_moments(params)
    record = {
        "oracle": name,
        "gamma": gamma,
        "T": temp,
        "q2": m.q2,
        "p2": m.p2,
        "v": m.v,
        "q2_closed_form": reference.q2,
        "p2_closed_form": reference.p2,
        "q2_relative_error": relative_error(m.q2, reference.q2),
        "p2_relative_error": relative_error(m.p2, reference.p2),
    }
    _emit(record, fmt or config.format, out)


@main.command()
@click.pass_obj
def selftest(config: RunConfig) -> None:
    """Run the oracle-equivalence suite and print a pass/fail table."""
    checks = run_selftest(config)
    click.echo(format_selftest(checks))
    raise_on_failure(checks)


def run_command(argv: list[str]) -> int:
    """
    Run the CLI on argv and return the exit status.

    0 on success, 2 for usage errors, 3 for numeric-domain and validation errors, 4 for self-test failures.
    """
    try:
        result = main.main(args=argv, prog_name="brownian-clausius", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except SelfTestFailure as exc:
        click.secho(str(exc), err=True, fg="red", bold=True)
        return 4
    except (NumericDomainError, ValidationError) as exc:
        click.secho(f"Error: {exc}", err=True, fg="red", bold=True)
        return 3
    return result if isinstance(result, int) else 0


def entrypoint() -> None:
    sys.exit(run_command(sys.argv[1:]))


__all__ = ["main", "run_command", "entrypoint"]
