"""Lubrication drag of a solid approaching a wall.

Thin wrapper over the compiled extension; everything public lives there.
"""

try:
    from . import _lubridrag as _impl  # installed wheel layout
except ImportError:  # in-tree build: extension directory on PYTHONPATH
    import _lubridrag as _impl

_NAMES = [
    "CorrugationData",
    "CubicProfile",
    "DragEstimate",
    "DragMethod",
    "GapProfile",
    "MobilityTensor",
    "OracleSolution",
    "OutcomeKind",
    "ProfileKind",
    "ProfileProblem",
    "QuadConfig",
    "QuadResult",
    "RobinCoeffs",
    "SlipParams",
    "State",
    "Trajectory",
    "corrugated",
    "dynamics",
    "gamma_s",
    "gamma_s_prime",
    "gap",
    "integrate",
    "integrate_semi_infinite",
    "noslip",
    "oracle",
    "regime_beta",
    "slip",
]

globals().update({name: getattr(_impl, name) for name in _NAMES})

__all__ = _NAMES
