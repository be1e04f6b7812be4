"""Exact Masur-Veech volumes and Siegel-Veech constants for strata of
Abelian differentials.

Everything is computed in exact rational arithmetic; values carrying a power
of pi are :class:`~strata.exact.PiScalar` instances.  Two independent
recursions (a degeneration recursion over backbone decompositions and an
intersection-pairing route through multi-point generating polynomials)
produce every volume and cross-validate each other.
"""

from .exact import PiScalar, bernoulli, zeta_negative, double_factorial
from .errors import StrataError, RouteMismatch
from .series import (LaurentSeries, A_series, Q_series, alpha_table,
                     bold_alpha_table, b_table, delta_series, d_min_series,
                     volume_kernel, spin_kernel)
from .combinatorics import genus_of, signatures_of_genus
from .volumes import (v_stratum, v_minimal, v_backbone_pair, v_spin,
                      v_spin_delta, v_hyp, a_value)
from .siegel_veech import (c_area, c_sc_hom, configuration_rows, d_value,
                           d_pair_value)
from .hurwitz import h_p1_two, h_p1_general, hurwitz_tuple_oracle

__version__ = "0.1.0"

__all__ = [
    "PiScalar", "bernoulli", "zeta_negative", "double_factorial",
    "StrataError", "RouteMismatch",
    "LaurentSeries", "A_series", "Q_series", "alpha_table",
    "bold_alpha_table", "b_table", "delta_series", "d_min_series",
    "volume_kernel", "spin_kernel",
    "genus_of", "signatures_of_genus",
    "v_stratum", "v_minimal", "v_backbone_pair", "v_spin", "v_spin_delta",
    "v_hyp", "a_value",
    "c_area", "c_sc_hom", "configuration_rows", "d_value", "d_pair_value",
    "h_p1_two", "h_p1_general", "hurwitz_tuple_oracle",
    "__version__",
]
