"""Command-line front end: model runs, CSV/JSON export, figure data bundles.

Every command accepts ``--config FILE`` pointing at a JSON object with
``"schema": 1``; explicit flags override config values.  Numeric output uses
12 significant digits.  Exit codes: 0 success, 1 validation error, 2
numerical failure.
"""

from __future__ import annotations

import json
import math
import sys

import click

from . import appendix, enclosure, resolvent, spectra, waveguide
from .errors import MaxspecError
from .rootfind import SearchRect
from .waveguide import WaveguideModel

SCHEMA_VERSION = 1


def _fmt(x: float) -> float:
    """Round-trip a float through 12 significant digits."""
    return float(f"{x:.12g}") + 0.0  # +0.0 folds -0.0 into 0.0


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        cfg = json.load(fh)
    if cfg.get("schema") != SCHEMA_VERSION:
        raise click.UsageError(
            "--config: expected \"schema\": %d, got %r" % (SCHEMA_VERSION, cfg.get("schema"))
        )
    return cfg


def _merged(ctx: click.Context, cfg: dict, name: str, value):
    """Flag if explicitly set, else config value, else the flag default."""
    src = ctx.get_parameter_source(name)
    if src is not None and src.name != "DEFAULT":
        return value
    if name in cfg:
        v = cfg[name]
        return tuple(v) if isinstance(v, list) else v
    return value


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2, sort_keys=True))


def _build_model(variant, L2, L3, delta, X=None) -> WaveguideModel:
    try:
        return WaveguideModel(
            L2=L2, L3=L3, variant=variant, delta=delta, truncation=X
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _build_rect(re_pair, im_pair) -> SearchRect:
    try:
        return SearchRect(re_pair[0], re_pair[1], im_pair[0], im_pair[1])
    except ValueError as exc:
        raise click.UsageError("--re/--im: %s" % exc) from exc


def _default_rects(model: WaveguideModel) -> list[SearchRect]:
    """Variant default search windows, each with its left-right mirror."""
    if model.variant == waveguide.PERMITTIVITY:
        gap = SearchRect(0.01, math.pi / 2 - 1e-6, -1e-6, 1e-6)
        return [gap, SearchRect(-gap.re_hi, -gap.re_lo, gap.im_lo, gap.im_hi)]
    base = SearchRect(0.05, 8.0, -0.55, -0.005)
    return [base, SearchRect(-8.0, -0.05, -0.55, -0.005)]


def _bounds_options(fn):
    opts = [
        click.option("--eps-min", type=float, default=1.0, show_default=True),
        click.option("--eps-max", type=float, default=1.0, show_default=True),
        click.option("--mu-min", type=float, default=1.0, show_default=True),
        click.option("--mu-max", type=float, default=1.0, show_default=True),
        click.option("--sigma-min", type=float, default=0.0, show_default=True),
        click.option("--sigma-max", type=float, default=1.0, show_default=True),
        click.option("--lambda-min", type=float, default=0.0, show_default=True),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _make_bounds(ctx, cfg, eps_min, eps_max, mu_min, mu_max, sigma_min, sigma_max, lambda_min):
    vals = {}
    for name, v in [
        ("eps_min", eps_min),
        ("eps_max", eps_max),
        ("mu_min", mu_min),
        ("mu_max", mu_max),
        ("sigma_min", sigma_min),
        ("sigma_max", sigma_max),
        ("lambda_min", lambda_min),
    ]:
        vals[name] = _merged(ctx, cfg, name, v)
    try:
        return enclosure.MaterialBounds(**vals)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _model_options(fn):
    opts = [
        click.option(
            "--variant",
            type=click.Choice([waveguide.CONDUCTIVE, waveguide.PERMITTIVITY]),
            default=waveguide.CONDUCTIVE,
            show_default=True,
        ),
        click.option("--L2", "L2", type=float, default=1.0, show_default=True),
        click.option("--L3", "L3", type=float, default=2.0, show_default=True),
        click.option("--delta", type=float, default=None, help="permittivity jump"),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _rect_options(fn):
    opts = [
        click.option("--re", "re_pair", type=float, nargs=2, default=None),
        click.option("--im", "im_pair", type=float, nargs=2, default=None),
        click.option("--c-max", type=float, default=None, help="mode cutoff override"),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


@click.group()
def cli() -> None:
    """Waveguide spectral computations: eigenvalues, enclosures, bounds."""


@cli.command("enclosure")
@click.option("--config", type=click.Path(exists=True), default=None)
@_bounds_options
@click.option("--im", "im_pair", type=float, nargs=2, default=None)
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None, help="boundary CSV path")
@click.pass_context
def enclosure_cmd(ctx, config, im_pair, samples, output, **bounds_kw):
    """Spectral enclosure summary and optional boundary-curve CSV."""
    cfg = _load_config(config)
    b = _make_bounds(ctx, cfg, **bounds_kw)
    im_pair = _merged(ctx, cfg, "im_pair", im_pair)
    samples = _merged(ctx, cfg, "samples", samples)
    output = _merged(ctx, cfg, "output", output)
    report = {
        "q": _fmt(b.q),
        "gap_radius": _fmt(enclosure.spectral_free_gap(b)),
        "threshold_case": enclosure.threshold_case(b).value,
        "strip": [_fmt(-0.5 * b.q), _fmt(-0.5 * b.sigma_min / b.eps_max)],
        "imag_segment": [_fmt(-b.q), 0.0],
    }
    if output:
        rng = tuple(im_pair) if im_pair else (-0.5 * b.q, -0.5 * b.sigma_min / b.eps_max)
        samples_list = enclosure.enclosure_boundary_samples(b, rng, samples)
        enclosure.write_boundary_csv(output, samples_list)
        report["boundary_csv"] = output
        report["boundary_rows"] = len(samples_list)
    _echo_json(report)


@cli.command("resolvent-grid")
@click.option("--config", type=click.Path(exists=True), default=None)
@_bounds_options
@click.option("--re", "re_pair", type=float, nargs=2, default=(-4.0, 4.0), show_default=True)
@click.option("--im", "im_pair", type=float, nargs=2, default=(-3.0, -0.5), show_default=True)
@click.option("--nx", type=int, default=81, show_default=True)
@click.option("--ny", type=int, default=61, show_default=True)
@click.option("-o", "--output", type=click.Path(), required=True)
@click.pass_context
def resolvent_grid(ctx, config, re_pair, im_pair, nx, ny, output, **bounds_kw):
    """Resolvent-norm upper bounds on a grid, exported as CSV."""
    cfg = _load_config(config)
    b = _make_bounds(ctx, cfg, **bounds_kw)
    re_pair = _merged(ctx, cfg, "re_pair", re_pair)
    im_pair = _merged(ctx, cfg, "im_pair", im_pair)
    nx = _merged(ctx, cfg, "nx", nx)
    ny = _merged(ctx, cfg, "ny", ny)
    output = _merged(ctx, cfg, "output", output)
    window = _build_rect(re_pair, im_pair)
    try:
        xs, ys, vals = resolvent.resolvent_levelgrid(b, window, nx, ny)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    resolvent.write_levelgrid_csv(output, xs, ys, vals)
    _echo_json({"grid_csv": output, "nx": nx, "ny": ny})


@cli.command("essential-spectrum")
@click.option("--config", type=click.Path(exists=True), default=None)
@_model_options
@click.pass_context
def essential_spectrum(ctx, config, variant, L2, L3, delta):
    """Essential spectrum of the selected variant as interval/point JSON."""
    cfg = _load_config(config)
    variant = _merged(ctx, cfg, "variant", variant)
    L2 = _merged(ctx, cfg, "L2", L2)
    L3 = _merged(ctx, cfg, "L3", L3)
    try:
        if variant == waveguide.CONDUCTIVE:
            s = spectra.essential_spectrum_conductive(L2, L3)
        else:
            s = spectra.essential_spectrum_selfadjoint(L2, L3)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _echo_json(s.json_dict())


@cli.command("pollution-set")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--eps-inf", type=float, default=1.0, show_default=True)
@click.option("--mu-inf", type=float, default=1.0, show_default=True)
@click.option("--lambda-e-min", type=float, default=0.0, show_default=True)
@click.pass_context
def pollution_set(ctx, config, eps_inf, mu_inf, lambda_e_min):
    """Real rays confining possible spectral pollution, as JSON."""
    cfg = _load_config(config)
    eps_inf = _merged(ctx, cfg, "eps_inf", eps_inf)
    mu_inf = _merged(ctx, cfg, "mu_inf", mu_inf)
    lambda_e_min = _merged(ctx, cfg, "lambda_e_min", lambda_e_min)
    try:
        s = spectra.pollution_enclosure(eps_inf, mu_inf, lambda_e_min)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    _echo_json(s.json_dict())


def _roots_csv_echo(roots, output):
    if output:
        waveguide.write_roots_csv(output, roots)
        _echo_json({"roots_csv": output, "count": len(roots)})
    else:
        click.echo("re,im,mult,c,n2,n3,sign,residual")
        for r in roots:
            click.echo(",".join(str(v) for v in waveguide._root_row(r)))


@cli.command()
@click.option("--config", type=click.Path(exists=True), default=None)
@_model_options
@_rect_options
@click.option(
    "--branch",
    type=click.Choice(["guided", "all"]),
    default="guided",
    show_default=True,
    help="guided keeps the variant's eigenvalue sign family",
)
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_context
def eigs(ctx, config, variant, L2, L3, delta, re_pair, im_pair, c_max, branch, output):
    """Eigenvalues of the non-truncated problem as a root-list CSV."""
    cfg = _load_config(config)
    variant = _merged(ctx, cfg, "variant", variant)
    L2, L3 = _merged(ctx, cfg, "L2", L2), _merged(ctx, cfg, "L3", L3)
    delta = _merged(ctx, cfg, "delta", delta)
    re_pair = _merged(ctx, cfg, "re_pair", re_pair)
    im_pair = _merged(ctx, cfg, "im_pair", im_pair)
    c_max = _merged(ctx, cfg, "c_max", c_max)
    branch = _merged(ctx, cfg, "branch", branch)
    output = _merged(ctx, cfg, "output", output)
    model = _build_model(variant, L2, L3, delta)
    if re_pair and im_pair:
        rects = [_build_rect(re_pair, im_pair)]
    elif re_pair or im_pair:
        raise click.UsageError("--re and --im must be given together")
    else:
        rects = _default_rects(model)
    roots = []
    for rect in rects:
        roots.extend(waveguide.eigenvalues_true(model, rect, c_max=c_max))
    if branch == "guided":
        roots = waveguide.select_guided(model, roots)
    roots.sort(key=lambda r: (r.location.real, r.location.imag))
    _roots_csv_echo(roots, output)


@cli.command("eigs-truncated")
@click.option("--config", type=click.Path(exists=True), default=None)
@_model_options
@_rect_options
@click.option("--X", "X", type=float, required=True, help="truncation length")
@click.option("-o", "--output", type=click.Path(), default=None)
@click.pass_context
def eigs_truncated(ctx, config, variant, L2, L3, delta, re_pair, im_pair, c_max, X, output):
    """Eigenvalues of the truncated problem as a root-list CSV."""
    cfg = _load_config(config)
    variant = _merged(ctx, cfg, "variant", variant)
    L2, L3 = _merged(ctx, cfg, "L2", L2), _merged(ctx, cfg, "L3", L3)
    delta = _merged(ctx, cfg, "delta", delta)
    re_pair = _merged(ctx, cfg, "re_pair", re_pair)
    im_pair = _merged(ctx, cfg, "im_pair", im_pair)
    c_max = _merged(ctx, cfg, "c_max", c_max)
    X = _merged(ctx, cfg, "X", X)
    output = _merged(ctx, cfg, "output", output)
    model = _build_model(variant, L2, L3, delta, X=X)
    if re_pair and im_pair:
        rects = [_build_rect(re_pair, im_pair)]
    elif re_pair or im_pair:
        raise click.UsageError("--re and --im must be given together")
    else:
        rects = _default_rects(model)
    roots = []
    for rect in rects:
        roots.extend(waveguide.eigenvalues_truncated(model, rect, c_max=c_max))
    roots.sort(key=lambda r: (r.location.real, r.location.imag))
    _roots_csv_echo(roots, output)


@cli.command()
@click.option("--config", type=click.Path(exists=True), default=None)
@_model_options
@_rect_options
@click.option("--X-list", "X_list", type=float, multiple=True, help="ascending truncation lengths")
@click.option("-o", "--output", type=click.Path(), required=True)
@click.pass_context
def sweep(ctx, config, variant, L2, L3, delta, re_pair, im_pair, c_max, X_list, output):
    """Truncated roots across several lengths X, as CSV with an X column."""
    cfg = _load_config(config)
    variant = _merged(ctx, cfg, "variant", variant)
    L2, L3 = _merged(ctx, cfg, "L2", L2), _merged(ctx, cfg, "L3", L3)
    delta = _merged(ctx, cfg, "delta", delta)
    re_pair = _merged(ctx, cfg, "re_pair", re_pair)
    im_pair = _merged(ctx, cfg, "im_pair", im_pair)
    c_max = _merged(ctx, cfg, "c_max", c_max)
    X_list = list(_merged(ctx, cfg, "X_list", X_list) or ())
    output = _merged(ctx, cfg, "output", output)
    if len(X_list) < 2:
        raise click.UsageError("--X-list needs at least two ascending values")
    if not (re_pair and im_pair):
        raise click.UsageError("sweep requires --re and --im")
    rect = _build_rect(re_pair, im_pair)
    per_X = []
    for X in X_list:
        model = _build_model(variant, L2, L3, delta, X=X)
        per_X.append((X, waveguide.eigenvalues_truncated(model, rect, c_max=c_max)))
    waveguide.write_sweep_csv(output, per_X)
    _echo_json({"sweep_csv": output, "X_list": [_fmt(x) for x in X_list]})


@cli.command("pollution-report")
@click.option("--config", type=click.Path(exists=True), default=None)
@_model_options
@_rect_options
@click.option("--X-list", "X_list", type=float, multiple=True)
@click.option("--lambda-e-min", type=float, default=None, help="defaults to pi^2/L^2")
@click.option("--tol", type=float, default=1e-3, show_default=True)
@click.pass_context
def pollution_report_cmd(
    ctx, config, variant, L2, L3, delta, re_pair, im_pair, c_max, X_list, lambda_e_min, tol
):
    """Classify truncation-sweep trajectory limits, as a JSON report."""
    cfg = _load_config(config)
    variant = _merged(ctx, cfg, "variant", variant)
    L2, L3 = _merged(ctx, cfg, "L2", L2), _merged(ctx, cfg, "L3", L3)
    delta = _merged(ctx, cfg, "delta", delta)
    re_pair = _merged(ctx, cfg, "re_pair", re_pair)
    im_pair = _merged(ctx, cfg, "im_pair", im_pair)
    c_max = _merged(ctx, cfg, "c_max", c_max)
    X_list = list(_merged(ctx, cfg, "X_list", X_list) or ())
    lambda_e_min = _merged(ctx, cfg, "lambda_e_min", lambda_e_min)
    tol = _merged(ctx, cfg, "tol", tol)
    if len(X_list) < 2:
        raise click.UsageError("--X-list needs at least two ascending values")
    if not (re_pair and im_pair):
        raise click.UsageError("pollution-report requires --re and --im")
    rect = _build_rect(re_pair, im_pair)
    model = _build_model(variant, L2, L3, delta)
    if lambda_e_min is None:
        lambda_e_min = (math.pi / max(L2, L3)) ** 2
    sweep_res = waveguide.truncation_sweep(model, X_list, rect, c_max=c_max)
    true_roots = waveguide.eigenvalues_true(model, rect, c_max=c_max)
    if variant == waveguide.CONDUCTIVE:
        sig_e = spectra.essential_spectrum_conductive(L2, L3)
        imag = spectra.imaginary_interval(1.0, 1.0)
    else:
        sig_e = spectra.essential_spectrum_selfadjoint(L2, L3)
        imag = spectra.imaginary_interval(0.0, 1.0)
    pol = spectra.pollution_enclosure(1.0, 1.0, lambda_e_min)
    reports = waveguide.pollution_report(sweep_res, true_roots, sig_e, pol, imag, tol=tol)
    counts: dict[str, int] = {}
    rows = []
    for rep in reports:
        cls = rep.classification.value
        counts[cls] = counts.get(cls, 0) + 1
        rows.append(
            {
                "limit": [_fmt(rep.trajectory.limit.real), _fmt(rep.trajectory.limit.imag)],
                "c": _fmt(rep.trajectory.c),
                "classification": cls,
                "distance_to_true": _fmt(rep.distance_to_true),
                "distance_to_essential": _fmt(rep.distance_to_essential),
            }
        )
    _echo_json(
        {
            "counts": counts,
            "trajectories": rows,
            "ambiguous_matches": sweep_res.warnings,
            "tol": _fmt(tol),
        }
    )


@cli.command("appendix-checks")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--modes", type=int, default=200, show_default=True)
@click.option("--samples", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=20260823, show_default=True)
@click.pass_context
def appendix_checks(ctx, config, modes, samples, seed):
    """Run the three interface/decay/symbol checks, as a JSON report."""
    import numpy as np

    cfg = _load_config(config)
    modes = _merged(ctx, cfg, "modes", modes)
    samples = _merged(ctx, cfg, "samples", samples)
    seed = _merged(ctx, cfg, "seed", seed)

    checks = []

    nus_pos = [round(0.05 * k, 2) for k in range(1, 20) if k != 10]
    patterns = {}
    ok_dtn = True
    for nu in nus_pos:
        pat = appendix.dtn_sign_pattern(appendix.dtn_entries(nu, 1.0, 2.0, modes))
        patterns[str(nu)] = pat.value
        want = (
            appendix.SignPattern.ALL_POSITIVE
            if nu < 0.5
            else appendix.SignPattern.ONE_SIGN_CHANGE
        )
        ok_dtn = ok_dtn and pat is want
    checks.append(
        {
            "check": "dtn_sign_pattern",
            "parameters": {"modes": modes, "L2": 1.0, "L3": 2.0},
            "pass": ok_dtn,
            "detail": patterns,
        }
    )

    kappas = [2.0 + 0.5 * k for k in range(37)]  # 2 .. 20
    ratios = [appendix.weyl_decay_ratio(k, 1.0, 2.0) for k in kappas]
    import math as _m

    envelope = [k ** 1.5 * (2.0 / _m.expm1(2.0 * k)) for k in kappas]
    C = max(r / e for r, e in zip(ratios, envelope))
    r20 = appendix.weyl_decay_ratio(20.0, 1.0, 2.0)
    ok_weyl = r20 < 1e-8 and all(r <= C * e + 1e-15 for r, e in zip(ratios, envelope))
    checks.append(
        {
            "check": "weyl_decay",
            "parameters": {"kappa_range": [2.0, 20.0], "points": len(kappas)},
            "pass": bool(ok_weyl),
            "detail": {"fitted_C": _fmt(C), "ratio_at_20": _fmt(r20)},
        }
    )

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        om = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        xi = float(rng.uniform(-5, 5))
        n2, n3 = int(rng.integers(0, 6)), int(rng.integers(0, 6))
        if n2 == 0 and n3 == 0:
            n3 = 1
        num, closed = appendix.fourier_symbol_det(om, xi, n2, n3, 1.0, 2.0)
        scale = max(abs(num), abs(closed), 1e-300)
        worst = max(worst, abs(num - closed) / scale)
    ok_det = worst < 1e-10
    checks.append(
        {
            "check": "fourier_symbol_det",
            "parameters": {"samples": samples, "seed": seed},
            "pass": bool(ok_det),
            "detail": {"max_rel_error": _fmt(worst)},
        }
    )

    _echo_json({"checks": checks, "pass": all(c["pass"] for c in checks)})


@cli.command("figure-data")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.option("--out-dir", type=click.Path(), default="figure-data", show_default=True)
@click.option(
    "--which",
    type=click.Choice(["fig1", "fig2", "fig3", "fig4", "all"]),
    default="all",
    show_default=True,
)
@click.option("--X", "X", type=float, default=50.0, show_default=True)
@click.pass_context
def figure_data(ctx, config, out_dir, which, X):
    """Write the CSV/JSON bundles consumed by the figure scripts."""
    import os

    cfg = _load_config(config)
    out_dir = _merged(ctx, cfg, "out_dir", out_dir)
    which = _merged(ctx, cfg, "which", which)
    X = _merged(ctx, cfg, "X", X)
    os.makedirs(out_dir, exist_ok=True)
    written: dict[str, dict] = {}

    def path(name: str) -> str:
        return os.path.join(out_dir, name)

    if which in ("fig1", "all"):
        # one enclosure boundary per accumulation-exclusion regime
        cases = [
            ("i", enclosure.MaterialBounds(1, 1, 1, 1, 0, 1, lambda_min=0.15)),
            ("ii", enclosure.MaterialBounds(1, 1, 1, 1, 0, 1, lambda_min=0.29)),
            ("iii", enclosure.MaterialBounds(1, 1, 1, 1, 0, 1, lambda_min=0.8)),
        ]
        panels = []
        for tag, b in cases:
            csv_path = path(f"fig1_case_{tag}.csv")
            rng = (-0.5 * b.q, -0.5 * b.sigma_min / b.eps_max)
            enclosure.write_boundary_csv(
                csv_path, enclosure.enclosure_boundary_samples(b, rng, 400)
            )
            panels.append(
                {
                    "case": tag,
                    "boundary_csv": csv_path,
                    "threshold_case": enclosure.threshold_case(b).value,
                    "gap_radius": _fmt(enclosure.spectral_free_gap(b)),
                    "q": _fmt(b.q),
                    "strip": [_fmt(-0.5 * b.q), 0.0],
                }
            )
        spec_obj = {
            "schema": SCHEMA_VERSION,
            "figure": "fig1",
            "panels": panels,
            "window": {"re": [-3.0, 3.0], "im": [-1.2, 0.1]},
            "output": path("fig1.png"),
        }
        with open(path("fig1.json"), "w") as fh:
            json.dump(spec_obj, fh, indent=2, sort_keys=True)
        written["fig1"] = {"spec": path("fig1.json")}

    if which in ("fig2", "all"):
        b = enclosure.MaterialBounds(1, 1, 1, 1, 0, 1)
        window = SearchRect(-4.0, 4.0, -3.0, -0.5)
        xs, ys, vals = resolvent.resolvent_levelgrid(b, window, 161, 101)
        resolvent.write_levelgrid_csv(path("fig2_grid.csv"), xs, ys, vals)
        spec_obj = {
            "schema": SCHEMA_VERSION,
            "figure": "fig2",
            "grid_csv": path("fig2_grid.csv"),
            "window": {"re": [-4.0, 4.0], "im": [-3.0, -0.5]},
            "levels": [0.5, 1.0, 2.0, 4.0, 8.0],
            "output": path("fig2.png"),
        }
        with open(path("fig2.json"), "w") as fh:
            json.dump(spec_obj, fh, indent=2, sort_keys=True)
        written["fig2"] = {"spec": path("fig2.json")}

    if which in ("fig3", "all"):
        model = WaveguideModel(L2=1.0, L3=2.0, variant=waveguide.CONDUCTIVE)
        roots = []
        for rect in _default_rects(model):
            roots.extend(waveguide.eigenvalues_true(model, rect))
        roots = waveguide.select_guided(model, roots)
        roots.sort(key=lambda r: (r.location.real, r.location.imag))
        waveguide.write_roots_csv(path("fig3_eigs.csv"), roots)
        b = enclosure.MaterialBounds(1, 1, 1, 1, 0, 1, lambda_min=(math.pi / 2) ** 2)
        enclosure.write_boundary_csv(
            path("fig3_boundary.csv"),
            enclosure.enclosure_boundary_samples(b, (-0.5, 0.0), 400),
        )
        with open(path("fig3_essential.json"), "w") as fh:
            json.dump(spectra.essential_spectrum_conductive(1.0, 2.0).json_dict(), fh)
        spec_obj = {
            "schema": SCHEMA_VERSION,
            "figure": "fig3",
            "eigs_csv": path("fig3_eigs.csv"),
            "boundary_csv": path("fig3_boundary.csv"),
            "essential_json": path("fig3_essential.json"),
            "window": {"re": [-8.5, 8.5], "im": [-1.1, 0.1]},
            "output": path("fig3.png"),
        }
        with open(path("fig3.json"), "w") as fh:
            json.dump(spec_obj, fh, indent=2, sort_keys=True)
        written["fig3"] = {"spec": path("fig3.json"), "eigenvalues": len(roots)}

    if which in ("fig4", "all"):
        model = WaveguideModel(
            L2=1.0, L3=2.0, variant=waveguide.CONDUCTIVE, truncation=X
        )
        roots = []
        for rect in _default_rects(model):
            roots.extend(waveguide.eigenvalues_truncated(model, rect))
        roots.sort(key=lambda r: (r.location.real, r.location.imag))
        waveguide.write_roots_csv(path("fig4_eigs.csv"), roots)
        b = enclosure.MaterialBounds(1, 1, 1, 1, 0, 1, lambda_min=(math.pi / 2) ** 2)
        enclosure.write_boundary_csv(
            path("fig4_boundary.csv"),
            enclosure.enclosure_boundary_samples(b, (-0.5, 0.0), 400),
        )
        with open(path("fig4_essential.json"), "w") as fh:
            json.dump(spectra.essential_spectrum_conductive(1.0, 2.0).json_dict(), fh)
        spec_obj = {
            "schema": SCHEMA_VERSION,
            "figure": "fig4",
            "eigs_csv": path("fig4_eigs.csv"),
            "boundary_csv": path("fig4_boundary.csv"),
            "essential_json": path("fig4_essential.json"),
            "X": _fmt(X),
            "window": {"re": [-8.5, 8.5], "im": [-1.1, 0.1]},
            "zoom": {"re": [0.0, 1.5 * math.pi], "im": [-0.1, 0.0]},
            "output": path("fig4.png"),
        }
        with open(path("fig4.json"), "w") as fh:
            json.dump(spec_obj, fh, indent=2, sort_keys=True)
        written["fig4"] = {"spec": path("fig4.json"), "eigenvalues": len(roots)}

    _echo_json({"out_dir": out_dir, "written": written})


def main(argv=None) -> int:
    """Entry point mapping exceptions onto the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        click.echo("error: %s" % exc.format_message(), err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except MaxspecError as exc:
        click.echo("numerical failure: %s" % exc, err=True)
        return 2
    except ValueError as exc:
        click.echo("error: %s" % exc, err=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
