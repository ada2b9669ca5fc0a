"""Build and save the figures described by the recipes.

Rendering is read-only over the CSV inputs and deterministic: fixed styling,
no timestamps, and the PNG 'Software' text chunk stripped, so identical
inputs give byte-identical image files.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .csvio import Series, read_series
from .errors import MissingInputError
from .recipes import RECIPES, FigureRecipe


def _load_inputs(recipe: FigureRecipe, csv_dir: Path) -> dict[str, Series]:
    paths = {stem: csv_dir / f"{stem}.csv" for stem in recipe.file_stems}
    missing = [str(path) for path in paths.values() if not path.is_file()]
    if missing:
        raise MissingInputError(
            f"{recipe.name} needs {len(paths)} preset CSVs under {csv_dir}; "
            "missing: " + ", ".join(missing)
        )
    return {stem: read_series(path) for stem, path in paths.items()}


def build_figure(name: str, csv_dir: Path) -> plt.Figure:
    """Assemble one figure from the CSVs in ``csv_dir`` (nothing written)."""
    if name not in RECIPES:
        raise MissingInputError(
            f"unknown figure {name!r} (valid: {', '.join(sorted(RECIPES))})"
        )
    recipe = RECIPES[name]
    inputs = _load_inputs(recipe, Path(csv_dir))

    n_panels = len(recipe.panels)
    fig, axes = plt.subplots(
        n_panels, 1, figsize=(6.4, 2.6 * n_panels), sharex=False, squeeze=False
    )
    for ax, panel in zip(axes[:, 0], recipe.panels):
        for curve in panel.curves:
            series = inputs[curve.file_stem]
            ax.plot(series.times, series.column(curve.column),
                    label=curve.label, **curve.style)
        ax.set_ylabel(panel.y_label)
        if panel.tag:
            ax.set_title(panel.tag, loc="left", fontsize="medium")
        if panel.y_limits is not None:
            ax.set_ylim(*panel.y_limits)
        ax.grid(True, alpha=0.3)
    axes[0, 0].legend(fontsize="small", loc="best")
    axes[-1, 0].set_xlabel("time (s)")
    fig.tight_layout()
    return fig


def render(name: str, csv_dir: Path, out: Path) -> Path:
    """Render figure ``name`` from ``csv_dir`` and write it to ``out``."""
    fig = build_figure(name, csv_dir)
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    save_kwargs = {"dpi": 150}
    if out.suffix.lower() == ".png":
        save_kwargs["metadata"] = {"Software": None}
    try:
        fig.savefig(out, **save_kwargs)
    finally:
        plt.close(fig)
    return out
