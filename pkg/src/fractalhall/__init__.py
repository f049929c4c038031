"""Fractal classes of quantum Hall filling factors, Farey series and fracton statistics."""

from .curve import CurvePolyline, DimensionEstimate, caliper_length, estimate_dimension, generate_koch
from .entropy import entropy_per_state, equilibrium_consistency
from .errors import FractalHallError
from .farey import FareySequence, generate, verify_p1, verify_p2, verify_p3
from .fracton import FractonPoint, ThermoInput, closed_form_Y, max_occupation, occupation, solve_point, solve_Y, xi_from_energy
from .rational import Fraction, format_fraction, mediant, parse, reduce
from .spectrum import (
    FractalClass,
    class_members,
    classify_h,
    dual_h,
    dual_nu,
    filling_factor,
    nu_from_spin,
    paper_table,
    verify_theorem,
)

__version__ = "0.1.0"
