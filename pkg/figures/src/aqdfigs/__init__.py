"""Figure rendering for aqdsim preset CSV output."""

from .csvio import Series, read_series
from .errors import AqdfigsError, MissingInputError
from .recipes import FIGURE_NAMES, RECIPES, CurveSpec, FigureRecipe, PanelSpec

__all__ = [
    "AqdfigsError",
    "CurveSpec",
    "FIGURE_NAMES",
    "FigureRecipe",
    "MissingInputError",
    "PanelSpec",
    "RECIPES",
    "Series",
    "read_series",
]

__version__ = "0.1.0"
