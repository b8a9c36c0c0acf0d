from .render import FIGURES, FigureSpec, RenderError, load_csv, render

__all__ = ["FIGURES", "FigureSpec", "RenderError", "load_csv", "render"]
__version__ = "0.1.0"
