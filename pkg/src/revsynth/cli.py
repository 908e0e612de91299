"""Command line interface.

Exit codes: 0 success, 1 verification mismatch, 2 bad input or usage.
"""

from __future__ import annotations

import sys

import click

from revsynth import fileio
from revsynth.baselines import bubble_sorter, mmd_synth, sort_synth
from revsynth.circuit import first_mismatch
from revsynth.harness import BENCH3_COLUMNS, SUITE_SPECS, bench3, run_suite
from revsynth.metrics import cost_report
from revsynth.portfolio import hybrid_synth
from revsynth.revcol import CONFIGS, RevColConfig, revcol_synth

METHOD_CHOICES = ("revcol", "mmd", "bubble", "hybrid")


def _read_spec(path: str):
    try:
        with click.open_file(path) as stream:
            return fileio.parse_spec(stream)
    except (OSError, fileio.FormatError) as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(2)
    except ValueError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(2)


def _read_circuit(path: str):
    try:
        with click.open_file(path) as stream:
            return fileio.read_circuit(stream)
    except (OSError, fileio.FormatError) as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(2)


@click.group()
@click.version_option(package_name="revsynth")
def main() -> None:
    """Synthesis of ancilla-free reversible circuits from permutation specs."""


@main.command()
@click.argument("spec_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option("-o", "--output", type=click.Path(dir_okay=False, allow_dash=True), default="-")
@click.option("-m", "--method", type=click.Choice(METHOD_CHOICES), default="revcol")
@click.option(
    "-c",
    "--config",
    type=click.Choice(sorted(CONFIGS)),
    default=None,
    help="Named optimization level for the column-wise method (default: all on).",
)
@click.option(
    "--transpositions",
    type=click.Choice(("aba", "cascade")),
    default="aba",
    show_default=True,
)
@click.option(
    "--columns",
    type=click.Choice(("exhaustive", "greedy")),
    default="exhaustive",
    show_default=True,
    help="Column order search strategy.",
)
def synth(spec_file, output, method, config, transpositions, columns) -> None:
    """Synthesize a circuit realizing the permutation in SPEC_FILE."""
    spec = _read_spec(spec_file)
    if config is not None:
        cfg = CONFIGS[config]
    else:
        cfg = RevColConfig()
    cfg = type(cfg)(
        **{
            **cfg.__dict__,
            "transposition_mode": transpositions,
            "column_orders": columns,
        }
    )
    if method == "revcol":
        circuit = revcol_synth(spec, cfg)
    elif method == "mmd":
        circuit = mmd_synth(spec)
    elif method == "bubble":
        circuit = sort_synth(spec, bubble_sorter, cfg.transposition_mode)
    else:
        circuit = hybrid_synth(spec, cfg=cfg)
    with click.open_file(output, "w") as stream:
        fileio.write_circuit(circuit, stream)
    report = cost_report(circuit)
    click.echo(
        f"gates={report.gate_count} qc={report.quantum_cost} depth={report.logical_depth}",
        err=True,
    )


@main.command()
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.argument("spec_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
def verify(circuit_file, spec_file) -> None:
    """Check that CIRCUIT_FILE realizes the permutation in SPEC_FILE."""
    circuit = _read_circuit(circuit_file)
    spec = _read_spec(spec_file)
    if circuit.width != spec.width:
        click.echo(
            f"error: circuit has {circuit.width} lines, spec has {spec.width}", err=True
        )
        sys.exit(2)
    x = first_mismatch(circuit, spec)
    if x is None:
        click.echo("ok")
        return
    click.echo(
        f"mismatch at input {x}: circuit gives {circuit.simulate(x)}, "
        f"spec wants {spec.outputs[x]}"
    )
    sys.exit(1)


@main.command()
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
def cost(circuit_file) -> None:
    """Print gate count, quantum cost, and logical depth of CIRCUIT_FILE."""
    report = cost_report(_read_circuit(circuit_file))
    click.echo(f"gates {report.gate_count}")
    click.echo(f"quantum-cost {report.quantum_cost}")
    click.echo(f"depth {report.logical_depth}")


@main.command(name="bench3")
@click.option("-j", "--jobs", type=click.IntRange(1, 64), default=1, show_default=True)
@click.option(
    "--columns",
    default=",".join(BENCH3_COLUMNS),
    show_default=True,
    help="Comma-separated list of bench columns.",
)
def bench3_cmd(jobs, columns) -> None:
    """Histogram gate counts over all 40320 3-line permutations."""
    names = tuple(c.strip() for c in columns.split(",") if c.strip())
    try:
        result = bench3(names, jobs=jobs)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    gcs = sorted({gc for hist in result.histograms.values() for gc in hist}, reverse=True)
    header = "gates " + " ".join(f"{name:>6}" for name in names)
    click.echo(header)
    for gc in gcs:
        row = " ".join(f"{result.histograms[name].get(gc, 0):>6}" for name in names)
        click.echo(f"{gc:>5} {row}")
    click.echo("  avg " + " ".join(f"{result.average(name):>6.2f}" for name in names))


@main.command(name="suite")
@click.option(
    "--names",
    default=",".join(SUITE_SPECS),
    show_default=True,
    help="Comma-separated list of benchmark functions.",
)
def suite_cmd(names) -> None:
    """Synthesize the built-in 4-line benchmark functions."""
    wanted = tuple(n.strip() for n in names.split(",") if n.strip())
    try:
        entries = run_suite(wanted)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    methods = ("revcol", "mmd", "hybrid")
    click.echo(f"{'name':<10}" + "".join(f"{m + ' gc/qc/ld':>18}" for m in methods))
    for entry in entries:
        cells = []
        for method in methods:
            rep = entry.report(method)
            cells.append(f"{rep.gate_count}/{rep.quantum_cost}/{rep.logical_depth:>3}")
        click.echo(f"{entry.name:<10}" + "".join(f"{cell:>18}" for cell in cells))


if __name__ == "__main__":
    main()
