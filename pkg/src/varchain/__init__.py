"""VAR analysis chain for short annual macro panels.

Unit-root tests, VAR lag selection and estimation, stability, residual
diagnostics, Johansen cointegration, Cholesky impulse responses and
variance decomposition, plus a config-driven pipeline.
"""

__version__ = "0.1.0"

from .errors import VarChainError
from .panel import SeriesPanel, load_panel, read_panel, transform
from .var import VarModel, estimate_var, lag_order_selection, stability

__all__ = [
    "SeriesPanel",
    "VarChainError",
    "VarModel",
    "estimate_var",
    "lag_order_selection",
    "load_panel",
    "read_panel",
    "stability",
    "transform",
]
