"""Stem-plot rendering of discrete wavefunctions to SVG files (matplotlib, Agg).

The wavefunctions live on the integer grid q = -j..j, so panels draw one stem
(vertical line + dot) per grid point rather than interpolated curves; each stem
carries a gid "stem-q<q>" that survives into the SVG as an element id.  Overlay
panels draw a continuous comparison curve as a polyline behind the stems.
"""
import numpy as np

STEM_COLOR = "#1f77b4"
OVERLAY_COLOR = "#d62728"


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _draw_panel(ax, grid, values, title, overlay, ylabel):
    if overlay is not None:
        xs, ys = overlay
        ax.plot(xs, ys, color=OVERLAY_COLOR, lw=1.0, alpha=0.8, zorder=1)
    for q, v in zip(grid, values):
        ax.plot([q, q], [0.0, float(v)], color=STEM_COLOR, lw=0.9,
                zorder=2, gid=f"stem-q{q}")
    ax.plot(grid, [float(v) for v in values], "o", color=STEM_COLOR,
            ms=2.2, zorder=3)
    ax.axvline(0.0, color="0.6", lw=0.6, zorder=0)
    ax.axhline(0.0, color="0.8", lw=0.6, zorder=0)
    ax.set_title(title, fontsize=9)
    ax.set_xlabel("q", fontsize=8)
    if ylabel:
        ax.set_ylabel(ylabel, fontsize=8)
    ax.tick_params(labelsize=7)


def render_stem_panel(path, grid, values, title, overlay=None, ylabel=None):
    """Write one SVG stem panel; `values` is a real sequence over `grid`.

    overlay: optional (xs, ys) polyline drawn behind the stems.
    """
    plt = _pyplot()
    fig = plt.figure(figsize=(3.4, 2.4), dpi=100)
    try:
        ax = fig.add_axes((0.17, 0.16, 0.79, 0.72))
        _draw_panel(ax, grid, values, title, overlay, ylabel)
        fig.savefig(path, format="svg")
    finally:
        plt.close(fig)


def real_component(row):
    """Project a purely-real or purely-imaginary wavefunction row to its live part.

    Returns (values, label): even momentum levels are purely imaginary, odd ones
    and all position rows purely real.
    """
    row = np.asarray(row)
    re = np.real(row)
    im = np.imag(row)
    if np.max(np.abs(im)) > np.max(np.abs(re)):
        return im, "Im"
    return re, "Re"


def render_table_panels(table, out_dir, stem_prefix, overlay_fn=None, overlay_samples=400):
    """One SVG per level of a WavefunctionTable; returns the written paths.

    overlay_fn(n, q_float) -> float, sampled densely over the grid span, lets
    the caller draw a continuous comparison function behind the stems.  The
    figure object is reused across panels (rendering cost, not state: every
    panel is drawn on a fresh axes).
    """
    from pathlib import Path
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    j = table.two_j // 2
    paths = []
    plt = _pyplot()
    fig = plt.figure(figsize=(3.4, 2.4), dpi=100)
    try:
        for row, n in enumerate(table.levels):
            vals, comp = real_component(table.values[row])
            overlay = None
            if overlay_fn is not None:
                xs = np.linspace(-j, j, overlay_samples)
                overlay = (xs, [overlay_fn(n, float(x)) for x in xs])
            title = f"n = {n},  c~ = {table.ctilde:g},  j = {j}"
            ylabel = f"{comp} {'phi' if table.kind == 'position' else 'psi'}_n(q)"
            path = out / f"{stem_prefix}_n{n:02d}.svg"
            fig.clf()
            ax = fig.add_axes((0.17, 0.16, 0.79, 0.72))
            _draw_panel(ax, table.grid, vals, title, overlay, ylabel)
            fig.savefig(path, format="svg")
            paths.append(path)
    finally:
        plt.close(fig)
    return paths
