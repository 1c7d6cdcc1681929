"""Real-arithmetic evaluation of complex polynomials and its control-system uses."""

from .errors import (
    DegreeZero,
    DimensionMismatch,
    DivisionByZeroRotation,
    EvaluationAtRoot,
    NonPositive,
    PoleAtPoint,
    PoleOnGrid,
    RealAxisPoint,
    RotpolyError,
    ZeroMatrix,
)
from .freqresp import (
    FrequencyGrid,
    FrequencySample,
    TransferFunctionSpec,
    eval_jomega,
    response_at,
    sweep,
)
from .horner1d import EvalResult, OpCounter, PolySpec, eval_complex, eval_real, evaluate
from .poly2d import Poly2DSpec, eval2d
from .rotalgebra import ComplexPoint, RotationForm
from .sysmodel import StateSpace, TimeConstantForm, leverrier, mat_pow, tc_to_tf

__version__ = "0.1.0"

__all__ = [
    "ComplexPoint",
    "DegreeZero",
    "DimensionMismatch",
    "DivisionByZeroRotation",
    "EvalResult",
    "EvaluationAtRoot",
    "FrequencyGrid",
    "FrequencySample",
    "NonPositive",
    "OpCounter",
    "PoleAtPoint",
    "PoleOnGrid",
    "Poly2DSpec",
    "PolySpec",
    "RealAxisPoint",
    "RotationForm",
    "RotpolyError",
    "StateSpace",
    "TimeConstantForm",
    "TransferFunctionSpec",
    "ZeroMatrix",
    "eval2d",
    "eval_complex",
    "eval_jomega",
    "eval_real",
    "evaluate",
    "leverrier",
    "mat_pow",
    "response_at",
    "sweep",
    "tc_to_tf",
]
