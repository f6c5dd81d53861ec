"""Command-line surface: solve, facets, significance, gen, bench, serve.

Exit codes: 0 success, 1 usage error, 2 input/data error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .bench import detect_format, rows_to_csv, run_bench
from .errors import ArgFacetsError
from .facets import Literal, Polarity, facet_report, significance_table
from .formats import FORMATS, parse_framework, render_framework
from .framework import ArgumentationFramework, Semantics
from .reductions import (
    cnf_satisfiable,
    copy_gadget,
    duplicate_argument,
    guard_satisfiable,
    parse_dimacs,
    parse_qdimacs_ae,
    qbf_is_true,
    qbf_reduction,
    random_af,
    satunsat_instance,
    standard_translation,
)
from .search import Budget, Constraints, enumerate_extensions

_SEMANTICS_CHOICE = click.Choice([s.value for s in Semantics])


def _load_framework(path: str, format: str | None) -> ArgumentationFramework:
    p = Path(path)
    fmt = format or detect_format(p)
    return parse_framework(p.read_text(), fmt)


def _extension_label(F: ArgumentationFramework, ext) -> str:
    return "{" + ", ".join(sorted(F.names_of(ext))) + "}"


@click.group()
def cli():
    """Facet reasoning over abstract argumentation frameworks."""


@cli.command("solve")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "format_", type=click.Choice(FORMATS), default=None,
              help="Input format (default: guessed from the suffix).")
@click.option("--semantics", type=_SEMANTICS_CHOICE, default="stab", show_default=True)
@click.option("--max-models", type=click.IntRange(min=1), default=None,
              help="Stop after this many extensions.")
@click.option("--timeout", type=float, default=None, help="Wall-clock limit in seconds.")
def cmd_solve(file, format_, semantics, max_models, timeout):
    """Enumerate extensions, one per line, plus a summary line."""
    F = _load_framework(file, format_)
    budget = None
    if max_models is not None or timeout is not None:
        budget = Budget(max_models=max_models, deadline=timeout)
    result = enumerate_extensions(F, Semantics(semantics), budget=budget)
    for line in sorted(_extension_label(F, e) for e in result.extensions):
        click.echo(line)
    suffix = "exhausted" if result.exhausted else "not exhausted"
    click.echo(f"{len(result.extensions)} extensions ({suffix})")


def _collect_literals(F, approved, disapproved) -> Constraints:
    c = Constraints()
    seen: dict[str, str] = {}
    for name in approved:
        seen[name] = "approve"
        c = Literal(F.index_of(name), Polarity.APPROVE).applied_to(c)
    for name in disapproved:
        if seen.get(name) == "approve":
            raise ArgFacetsError(f"{name!r} both approved and disapproved")
        c = Literal(F.index_of(name), Polarity.DISAPPROVE).applied_to(c)
    return c


@cli.command("facets")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "format_", type=click.Choice(FORMATS), default=None)
@click.option("--semantics", type=_SEMANTICS_CHOICE, default="stab", show_default=True)
@click.option("--approve", "approved", multiple=True, metavar="NAME",
              help="Restrict to extensions containing NAME (repeatable).")
@click.option("--disapprove", "disapproved", multiple=True, metavar="NAME",
              help="Restrict to extensions excluding NAME (repeatable).")
def cmd_facets(file, format_, semantics, approved, disapproved):
    """Print credulous/skeptical sets and the facets between them."""
    F = _load_framework(file, format_)
    constraints = _collect_literals(F, approved, disapproved)
    report = facet_report(F, Semantics(semantics), constraints)
    for label, argset in (("cred", report.cred), ("skep", report.skep),
                          ("facets", report.facets)):
        click.echo(f"{label}: " + " ".join(sorted(F.names_of(argset))))
    click.echo(f"count: {len(report.facets)}")


@cli.command("significance")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "format_", type=click.Choice(FORMATS), default=None)
@click.option("--semantics", type=_SEMANTICS_CHOICE, default="stab", show_default=True)
def cmd_significance(file, format_, semantics):
    """Table of approve/disapprove significance scores per facet."""
    F = _load_framework(file, format_)
    for entry in significance_table(F, Semantics(semantics)):
        click.echo(
            f"{entry.literal.render(F)}\t{entry.remaining_facets}\t{entry.score}"
        )


@cli.command("gen")
@click.argument("kind", type=click.Choice(
    ["std-translation", "duplicate", "copies", "satunsat", "qbf", "random"]))
@click.option("--dimacs", type=click.Path(exists=True, dir_okay=False),
              help="CNF input (std-translation, satunsat).")
@click.option("--dimacs2", type=click.Path(exists=True, dir_okay=False),
              help="Second CNF input (satunsat).")
@click.option("--qdimacs", type=click.Path(exists=True, dir_okay=False),
              help="Forall-exists QDIMACS input (qbf).")
@click.option("--guard/--no-guard", default=True, show_default=True,
              help="Apply the satisfiability guard before the qbf reduction.")
@click.option("--af", "af_path", type=click.Path(exists=True, dir_okay=False),
              help="Framework input (duplicate, copies).")
@click.option("--arg", "arg_name", help="Argument to duplicate/copy.")
@click.option("--n", "n_value", type=int, help="Copy count / argument count.")
@click.option("--p", "probability", type=float, help="Attack probability (random).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True,
              help="Output apx path; a .manifest.json sidecar is written too.")
def cmd_gen(kind, dimacs, dimacs2, qdimacs, guard, af_path, arg_name,
            n_value, probability, seed, out):
    """Generate an instance framework plus a manifest of expectations."""
    manifest: dict = {"kind": kind, "seed": seed}

    def need(value, flag):
        if value is None:
            raise click.UsageError(f"gen {kind} requires {flag}")
        return value

    if kind == "std-translation":
        phi = parse_dimacs(Path(need(dimacs, "--dimacs")).read_text())
        F = standard_translation(phi)
        sat = cnf_satisfiable(phi)
        k = 2 * phi.n_vars + phi.n_clauses + 1
        manifest.update(
            source=dimacs,
            n_vars=phi.n_vars,
            n_clauses=phi.n_clauses,
            satisfiable=sat,
            expected_facets={s: (k if sat else k - 1) for s in ("adm", "comp", "stab")},
        )
    elif kind == "duplicate":
        F0 = _load_framework(need(af_path, "--af"), None)
        F = duplicate_argument(F0, need(arg_name, "--arg"))
        manifest.update(source=af_path, argument=arg_name,
                        n_arguments=F.n_arguments)
    elif kind == "copies":
        F0 = _load_framework(need(af_path, "--af"), None)
        F = copy_gadget(F0, need(arg_name, "--arg"), need(n_value, "--n"))
        manifest.update(source=af_path, argument=arg_name, copies=n_value,
                        n_arguments=F.n_arguments)
    elif kind == "satunsat":
        phi = parse_dimacs(Path(need(dimacs, "--dimacs")).read_text())
        psi = parse_dimacs(Path(need(dimacs2, "--dimacs2")).read_text())
        inst = satunsat_instance(phi, psi)
        F = inst.framework
        phi_sat, psi_sat = cnf_satisfiable(phi), cnf_satisfiable(psi)
        predicted = (
            (2 * phi.n_vars + phi.n_clauses + (2 if phi_sat else 0))
            + (2 * psi.n_vars + psi.n_clauses + (1 if psi_sat else 0))
        )
        manifest.update(
            target_facets=inst.target_facets,
            phi_satisfiable=phi_sat,
            psi_satisfiable=psi_sat,
            positive_instance=phi_sat and not psi_sat,
            predicted_facets={s: predicted for s in ("adm", "comp", "stab")},
        )
    elif kind == "qbf":
        qbf = parse_qdimacs_ae(Path(need(qdimacs, "--qdimacs")).read_text())
        if guard:
            qbf = guard_satisfiable(qbf)
        F = qbf_reduction(qbf)
        truth = qbf_is_true(qbf)
        manifest.update(source=qdimacs, guarded=guard, qbf_true=truth)
        if guard:
            manifest["phi_is_pref_facet"] = not truth
    else:  # random
        F = random_af(need(n_value, "--n"), need(probability, "--p"), seed)
        manifest.update(n_arguments=F.n_arguments, attack_probability=probability)

    out_path = Path(out)
    out_path.write_text(render_framework(F, "apx"))
    manifest["n_attacks"] = F.n_attacks
    manifest_path = out_path.with_name(out_path.name + ".manifest.json")
    manifest_path.write_text(json.dumps(manifest, sort_keys=True) + "\n")
    click.echo(f"wrote {out_path} ({F.n_arguments} arguments, {F.n_attacks} attacks)")
    click.echo(f"manifest: {manifest_path}")


@cli.command("bench")
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--semantics", "semantics_list", type=_SEMANTICS_CHOICE,
              multiple=True, default=("stab",), show_default=True)
@click.option("--timeout", type=float, default=60.0, show_default=True,
              help="Per-measurement wall-clock limit in seconds.")
@click.option("--max-models", type=click.IntRange(min=1), default=None)
@click.option("--csv", "csv_out", type=click.Path(dir_okay=False), default=None,
              help="Write the CSV here instead of stdout.")
def cmd_bench(directory, semantics_list, timeout, max_models, csv_out):
    """Time enumeration against facet computation over a directory."""
    rows = run_bench(
        Path(directory),
        [Semantics(s) for s in semantics_list],
        timeout_s=timeout,
        max_models=max_models,
    )
    text = rows_to_csv(rows)
    if csv_out is None:
        click.echo(text, nl=False)
    else:
        Path(csv_out).write_text(text)
        click.echo(f"wrote {csv_out} ({len(rows)} rows)")


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8080, show_default=True,
              help="0 picks an ephemeral port (printed on startup).")
@click.option("--example-dir", type=click.Path(file_okay=False), default=None)
@click.option("--deadline", type=float, default=None,
              help="Server-side seconds limit for heavy queries.")
@click.option("--frontend-dir", type=click.Path(file_okay=False), default=None,
              help="Static UI bundle to mount at /ui.")
def cmd_serve(host, port, example_dir, deadline, frontend_dir):
    """Run the JSON API (and optionally the web UI)."""
    from .service import run_server

    if frontend_dir is None:
        candidate = Path.cwd() / "frontend" / "dist"
        if candidate.is_dir():
            frontend_dir = str(candidate)
    run_server(host, port, example_dir, deadline, frontend_dir)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, prog_name="argfacets", standalone_mode=False)
        return 0
    except click.exceptions.Exit as e:
        return int(e.exit_code)
    except click.UsageError as e:
        click.echo(f"usage error: {e.format_message()}", err=True)
        return 1
    except (ArgFacetsError, OSError) as e:
        click.echo(f"error: {e}", err=True)
        return 2
    except click.Abort:
        click.echo("aborted", err=True)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
