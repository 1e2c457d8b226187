"""curvkit: exact symbolic curvature for coordinate metrics.

Parse a chart/metric file, build the curvature tensors and the derived
operators over an exact expression kernel, decide tensor identities with
witnesses, and classify the curvature-restricted structures a metric admits.
"""
from .expr import (
    Atom, Expression, ExprError, ZERO, ONE, format_expression)
from .chart import Chart, ChartError
from .parsing import (
    MetricSpec, ParseError, DegenerateMetricError, parse_metric_file,
    parse_identity)
from .tensor import (
    Tensor, Metric, Connection, TensorError,
    covariant_derivative, kulkarni_nomizu, endo_square, format_dump)
from .curvature import CurvatureBundle, christoffel
from .operators import (
    check_identity, evaluate_tensor_ast, dot_action, tachibana,
    two_form_recurrence, one_form_recurrence, recurrent_tensor,
    ricci_decompose, pure_radiation, compatibility_check, compatible_space,
    weakly_ricci_symmetric)
from .classify import (
    classify, compare_reports, StructureReport, ConditionResult,
    CONDITION_NAMES)

__version__ = "0.1.0"

__all__ = [
    "Atom", "Expression", "ExprError", "ZERO", "ONE", "format_expression",
    "Chart", "ChartError",
    "MetricSpec", "ParseError", "DegenerateMetricError", "parse_metric_file",
    "parse_identity",
    "Tensor", "Metric", "Connection", "TensorError", "christoffel",
    "covariant_derivative", "kulkarni_nomizu", "endo_square", "format_dump",
    "CurvatureBundle",
    "check_identity", "evaluate_tensor_ast", "dot_action", "tachibana",
    "two_form_recurrence", "one_form_recurrence", "recurrent_tensor",
    "ricci_decompose", "pure_radiation", "compatibility_check",
    "compatible_space", "weakly_ricci_symmetric",
    "classify", "compare_reports", "StructureReport", "ConditionResult",
    "CONDITION_NAMES",
    "__version__",
]
