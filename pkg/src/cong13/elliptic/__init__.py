"""Elliptic curves over Q: invariants, minimal models, conductors, traces and twists."""
from .curve import EllipticCurveQ, SingularCurve, curve_invariants, quadratic_twist, same_j
from .frobenius import TraceRecord, ap_trace, hasse_ok, sweep_json_lines, trace_sweep
from .tate import (ADDITIVE, GOOD, MULTIPLICATIVE, ConductorData, LocalData, conductor,
                   minimal_model, model_from_c4c6, tate_conductor, tate_local, valuation)
from .twists import minimal_conductor_twist, twist_primes

__all__ = [
    "EllipticCurveQ", "SingularCurve", "curve_invariants", "quadratic_twist", "same_j",
    "TraceRecord", "ap_trace", "hasse_ok", "sweep_json_lines", "trace_sweep",
    "ADDITIVE", "GOOD", "MULTIPLICATIVE", "ConductorData", "LocalData", "conductor",
    "minimal_model", "model_from_c4c6", "tate_conductor", "tate_local", "valuation",
    "minimal_conductor_twist", "twist_primes",
]
