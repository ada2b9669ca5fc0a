"""Figure recipes: which CSV files, columns, and styles make up each figure.

Curve conventions for the three-temperature single-qubit figures: the cold
undamped run is a continuous red line, the middle run inverted green
triangles, the warmest run blue squares.  The collapse-revival figure and the
two-qubit figure distinguish curves by line style instead of markers.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CurveSpec:
    file_stem: str
    column: str
    label: str
    style: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PanelSpec:
    tag: str
    y_label: str
    curves: tuple[CurveSpec, ...]
    y_limits: tuple[float, float] | None = None


@dataclass(frozen=True)
class FigureRecipe:
    name: str
    panels: tuple[PanelSpec, ...]

    @property
    def file_stems(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for panel in self.panels:
            for curve in panel.curves:
                seen.setdefault(curve.file_stem, None)
        return tuple(seen)


_TEMP_STYLES = (
    dict(color="red", linestyle="-"),
    dict(color="green", linestyle="none", marker="v", markersize=3.5,
         markevery=0.02),
    dict(color="blue", linestyle="none", marker="s", markersize=3.0,
         markevery=0.02),
)
_TEMP_LABELS_MAIN = ("T = 0 nK, gamma = 0/s", "T = 5 nK, gamma = 0.5/s",
                     "T = 10 nK, gamma = 1/s")
_TEMP_LABELS_REVIVAL = ("T = 0 nK, gamma = 0/s", "T = 10 nK, gamma = 1/s",
                        "T = 20 nK, gamma = 2/s")
_REVIVAL_STYLES = (
    dict(color="red", linestyle="-"),
    dict(color="green", linestyle="--"),
    dict(color="blue", linestyle="-."),
)


def _temperature_panel(preset_name: str, tag: str, column: str,
                       y_label: str) -> PanelSpec:
    curves = tuple(
        CurveSpec(f"{preset_name}_{i}", column, label, style)
        for i, (label, style) in enumerate(
            zip(_TEMP_LABELS_MAIN, _TEMP_STYLES), start=1)
    )
    return PanelSpec(tag, y_label, curves)


def _single_qubit_scan(name: str, column: str, y_label: str) -> FigureRecipe:
    return FigureRecipe(name, tuple(
        _temperature_panel(f"{name}{panel}", f"({panel})", column, y_label)
        for panel in ("a", "b", "c")
    ))


def _pair_panel(preset_name: str, tag: str) -> PanelSpec:
    curves = (
        CurveSpec(f"{preset_name}_full", "sz_1", "qubit 1, full",
                  dict(color="tab:blue", linestyle="-")),
        CurveSpec(f"{preset_name}_full", "sz_2", "qubit 2, full",
                  dict(color="tab:orange", linestyle="-")),
        CurveSpec(f"{preset_name}_effective", "sz_1", "qubit 1, effective",
                  dict(color="tab:blue", linestyle="--")),
        CurveSpec(f"{preset_name}_effective", "sz_2", "qubit 2, effective",
                  dict(color="tab:orange", linestyle="--")),
    )
    return PanelSpec(tag, "qubit inversion", curves, y_limits=(-1.05, 1.05))


RECIPES: dict[str, FigureRecipe] = {
    "fig2": _single_qubit_scan("fig2", "n_ph", "mean photon number"),
    "fig3": _single_qubit_scan("fig3", "sz", "qubit inversion"),
    "fig4": FigureRecipe("fig4", (
        PanelSpec("", "ground-and-vacuum probability", tuple(
            CurveSpec(f"fig4_{i}", "p_down0", label, style)
            for i, (label, style) in enumerate(
                zip(_TEMP_LABELS_REVIVAL, _REVIVAL_STYLES), start=1)
        ), y_limits=(0.0, 1.0)),
    )),
    "fig5": FigureRecipe("fig5", (
        _pair_panel("fig5a", "(a) T = 5 nK"),
        _pair_panel("fig5b", "(b) T = 100 nK"),
    )),
}

FIGURE_NAMES = tuple(sorted(RECIPES))
