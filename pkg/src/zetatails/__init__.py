"""Explicit L^2 bounds for the tails of the Riemann zeta function on
vertical lines, with every constant derived in rigorous interval arithmetic."""

from .interval import ComplexInterval, Interval, precision
from .meanvalue import (assemble_thm_4_3, assemble_thm_4_5, assemble_thm_4_6, headline_tail_bound,
                        mean_square_bounds, simplify_to_headline, tail_bound_second_approach)
from .smoothing import first_approach_constants, tail_bound_first_approach, tail_integral_first
from .thresholds import ThresholdQuery, find_threshold, half_line_threshold
from .verify import check_bound_containment, integral_enclosure

__version__ = "0.1.0"

__all__ = [
    "ComplexInterval", "Interval", "precision",
    "assemble_thm_4_3", "assemble_thm_4_5", "assemble_thm_4_6", "simplify_to_headline",
    "mean_square_bounds", "tail_bound_second_approach", "headline_tail_bound",
    "first_approach_constants", "tail_bound_first_approach", "tail_integral_first",
    "ThresholdQuery", "find_threshold", "half_line_threshold",
    "integral_enclosure", "check_bound_containment",
]
