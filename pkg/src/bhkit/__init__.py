"""Numerical toolkit for Bohnenblust-Hille constants of real 2-variable polynomials."""
__version__ = "0.1.0"

from .poly import HomPoly2, make_hom_poly, monomial, multiply, power, lp_norm, log_lp_norm
from .norms import sup_norm_square, sup_norm_disk_complex, sup_norm_disk_real, closed_norm_Pab, closed_norm_Qlambda
from .bounds import bh_quotient, power_lower_bound, hyper_series, best_known_bound, critical_exponent
from .catalog import catalog, IDS

__all__ = [
    "HomPoly2", "make_hom_poly", "monomial", "multiply", "power", "lp_norm", "log_lp_norm",
    "sup_norm_square", "sup_norm_disk_complex", "sup_norm_disk_real", "closed_norm_Pab", "closed_norm_Qlambda",
    "bh_quotient", "power_lower_bound", "hyper_series", "best_known_bound", "critical_exponent",
    "catalog", "IDS", "__version__",
]
