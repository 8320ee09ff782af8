"""Figure rendering for the zeros pipeline's CSV outputs."""

from .render import (DEFAULT_ARC_HALF_ANGLE, FIGURE_KINDS, FigureRequest,
                     InputError, PlotkitError, RequestError, render)

__version__ = "0.1.0"
