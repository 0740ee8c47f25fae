"""Command line entry point: ``coxalg <group> <command>``.

Every command prints a report (text or --json) and exits 0 when nothing
failed, 1 on any FAIL item and 2 when only resource limits were hit.
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from .report import FAIL, INFO, PASS, Report

log = logging.getLogger("coxalg")


def _emit(ctx, rep: Report, out: str | None = None):
    as_json = ctx.obj.get("json")
    text = rep.to_json(timings=ctx.obj.get("timings", True)) if as_json else _format(rep)
    if out:
        Path(out).write_text(rep.to_json(timings=ctx.obj.get("timings", True)))
        click.echo(f"report written to {out}", err=True)
    click.echo(text)
    ctx.exit(rep.exit_code())


def _format(rep: Report) -> str:
    lines = [rep.title]
    for it in rep.items:
        detail = ""
        if it.detail:
            detail = "  " + ", ".join(f"{k}={v}" for k, v in it.detail.items())
            if len(detail) > 240:
                detail = detail[:237] + "..."
        lines.append(f"{it.status:8s} {it.id}{detail}")
    return "\n".join(lines)


def _case_or_file(spec: str, bound: int | None, convention: str):
    from .coxring import CASES, case_from_group, load_case
    from .matgroup import group_closure
    from .parsing import parse_group_file

    if spec in CASES:
        return load_case(spec)
    gf = parse_group_file(spec)
    return case_from_group(group_closure(gf.generators), bound or 6, convention, name=Path(spec).stem)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--no-timings", is_flag=True, help="Omit per-item timings (reproducible JSON).")
@click.option("--cache-dir", envvar="COXALG_CACHE_DIR", type=click.Path(file_okay=False), help="Groebner basis disk cache.")
@click.option("--max-seconds", type=float, default=None, help="Time budget for a single Groebner computation.")
@click.option("-v", "--verbose", count=True)
@click.pass_context
def main(ctx, as_json, no_timings, cache_dir, max_seconds, verbose):
    """Cox rings of symplectic quotient resolutions: exact verification tools."""
    logging.basicConfig(level=logging.WARNING - 10 * min(verbose, 2), format="%(levelname)s %(message)s")
    ctx.ensure_object(dict)
    ctx.obj.update(json=as_json, timings=not no_timings)
    if cache_dir:
        from .cache import install_disk_cache

        install_disk_cache(cache_dir)
    if max_seconds:
        from .groebner import resource_limits

        ctx.with_resource(resource_limits(max_seconds=max_seconds))


# ---------------------------------------------------------------------------


@main.group()
def group():
    """Finite matrix groups."""


@group.command("analyze")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def group_analyze(ctx, path):
    """Closure, commutator, abelianization, reflection classes and Cartan data."""
    from .matgroup import (
        abelianization,
        commutator_subgroup,
        group_closure,
        reflections_in_commutator,
        symplectic_reflections,
    )
    from .parsing import parse_group_file
    from .valuation import CartanUnsupported, assemble_cartan

    gf = parse_group_file(path)
    G = group_closure(gf.generators)
    H = commutator_subgroup(G)
    ab = abelianization(G, H)
    classes = symplectic_reflections(G)
    rep = Report(f"group {Path(path).stem}")
    rep.add("order", INFO, {"order": len(G), "commutator_order": len(H), "abelianization": list(ab.invariants)})
    rep.add("reflection-classes", INFO, {"sizes": [len(c.elements) for c in classes], "orders": [c.order for c in classes]})
    if reflections_in_commutator(G, H):
        rep.add("no-reflections-in-commutator", FAIL, {"reason": "the commutator subgroup contains a symplectic reflection"})
    else:
        rep.add("no-reflections-in-commutator", PASS)
    try:
        M = assemble_cartan(G, classes).matrix
        rep.add("cartan", INFO, {"matrix": [[M[i, j] for j in range(M.cols)] for i in range(M.rows)]})
    except CartanUnsupported as e:
        rep.add("cartan", INFO, {"unsupported": str(e)})
    _emit(ctx, rep)


@main.command("invariants")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--subgroup", type=click.Choice(["commutator", "full"]), default="commutator")
@click.option("--bound", type=int, default=6, show_default=True, help="Degree bound.")
@click.option("--convention", type=click.Choice(["pullback", "inverse"]), default="pullback")
@click.pass_context
def invariants_cmd(ctx, path, subgroup, bound, convention):
    """Homogeneous generators of the invariant ring up to a degree bound."""
    from .invariants import invariant_generators, molien_series
    from .matgroup import commutator_subgroup, group_closure
    from .parsing import parse_group_file
    from .poly import PolyRing

    gf = parse_group_file(path)
    G = group_closure(gf.generators)
    H = commutator_subgroup(G) if subgroup == "commutator" else G
    coords = gf.options.get("coordinates", "").split() or [f"x{i + 1}" for i in range(gf.dim)]
    gens = invariant_generators(H, bound, ring=PolyRing(coords, G.field), convention=convention)
    rep = Report(f"invariants {Path(path).stem} ({subgroup})", meta={"bound": bound})
    rep.add("molien", INFO, {"dims": molien_series(H, bound)})
    rep.add("generators", INFO, {"list": [str(g) for g in gens], "count": len(gens)})
    _emit(ctx, rep)


# ---------------------------------------------------------------------------


@main.group()
def cox():
    """Cox ring generators and the embedding ideal."""


@cox.command("synth")
@click.argument("spec")
@click.option("--bound", type=int, default=None, help="Degree bound when SPEC is a group file.")
@click.option("--convention", type=click.Choice(["pullback", "inverse"]), default="pullback")
@click.pass_context
def cox_synth(ctx, spec, bound, convention):
    """Lifted generators for a named case (s3, d8-wreath, g4) or a group file."""
    from .coxring import cox_report

    _emit(ctx, cox_report(_case_or_file(spec, bound, convention)))


@cox.command("embed")
@click.argument("spec")
@click.pass_context
def cox_embed(ctx, spec):
    """Kernel of the generator map; compared with printed data when available."""
    from .runner import embedding_report

    _emit(ctx, embedding_report(_case_or_file(spec, None, "pullback")))


@main.group()
def verify():
    """Bounded verification of the lifting condition."""


@verify.command("lifting")
@click.argument("spec")
@click.option("--dmax", type=int, default=3, show_default=True)
@click.option("--no-joint", is_flag=True, help="Skip the joint multi-class check.")
@click.pass_context
def verify_lifting(ctx, spec, dmax, no_joint):
    from .coxring import verify_lifting_condition
    from .groebner import ResourceLimit
    from .report import RESOURCE

    case = _case_or_file(spec, None, "pullback")
    try:
        rep = verify_lifting_condition(case, dmax, joint=not no_joint)
    except ResourceLimit as e:
        rep = Report(f"lifting {case.name}")
        rep.add("lifting", RESOURCE, {"reason": str(e)})
    _emit(ctx, rep)


# ---------------------------------------------------------------------------


@main.group()
def git():
    """Torus actions: semistability and smoothness."""


def _read_weights(path):
    names, weights = [], []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, _, w = line.partition(":")
        names.append(name.strip())
        weights.append(tuple(int(x) for x in w.replace(",", " ").split()))
    return names, weights


@git.command("semistable")
@click.option("--weights", "wpath", required=True, type=click.Path(exists=True, dir_okay=False),
              help="Lines 'name: a, b'.")
@click.option("--chi", required=True, help="Linearization, e.g. 2,1.")
@click.pass_context
def git_semistable(ctx, wpath, chi):
    """Minimal semistable supports and their isotropy."""
    from .gitfan import WeightSystem, isotropy_trivial, semistable_supports, support_is_stable

    names, weights = _read_weights(wpath)
    ws = WeightSystem(names, weights, tuple(int(x) for x in chi.split(",")))
    sups = semistable_supports(ws)
    iso = isotropy_trivial(ws, sups)
    rep = Report("semistable supports", meta={"chi": list(ws.chi)})
    for S, free in zip(sups, iso):
        key = " ".join(sorted(S, key=names.index))
        rep.add(f"support/{key}", INFO, {"trivial_isotropy": free, "stable": support_is_stable(ws, S)})
    _emit(ctx, rep)


@git.command("smooth")
@click.argument("spec")
@click.option("--chi", default="2,1", show_default=True)
@click.pass_context
def git_smooth(ctx, spec, chi):
    """Semistable supports, stability and monomial Jacobian minors (d8-wreath)."""
    from .runner import git_report

    case = _case_or_file(spec, None, "pullback")
    if case.name != "d8-wreath":
        raise click.UsageError("reference data for this check exists only for d8-wreath")
    _emit(ctx, git_report(case, tuple(int(x) for x in chi.split(","))))


@main.group()
def toric():
    """Toric geometry of the central fiber."""


@toric.command("quotient-fan")
@click.argument("spec")
@click.pass_context
def toric_quotient_fan(ctx, spec):
    """Components of the fiber over 0, the P^2 chart and the quotient fan (d8-wreath)."""
    from .centralfiber import d8_central_fiber_report

    case = _case_or_file(spec, None, "pullback")
    if case.name != "d8-wreath":
        raise click.UsageError("reference data for this check exists only for d8-wreath")
    _emit(ctx, d8_central_fiber_report())


# ---------------------------------------------------------------------------


@main.group("case")
def case_group():
    """Full pipelines for the bundled cases."""


@case_group.command("run")
@click.argument("name", type=click.Choice(["s3", "d8-wreath", "g4"]))
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")
@click.option("--dmax", type=int, default=None, help="Lifting degree bound (default 3; 2 for g4).")
@click.option("--no-joint", is_flag=True)
@click.pass_context
def case_run(ctx, name, out, dmax, no_joint):
    from .groebner import LIMITS
    from .runner import run_case

    rep = run_case(name, dmax, LIMITS.max_seconds, joint=not no_joint)
    _emit(ctx, rep, out)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
