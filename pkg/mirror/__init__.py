"""
I-function, shift operators and the mirror engine in the stripped divisor gauge
"""
from .ifunction import StrippedIFun, effective_degrees, ifun_coeff, ifun_series
from .shift import (
    ShiftFactor, StrippedShiftOp, classical_shift_residual, compose_check,
    covariant_derivative, delta, flow_residual, multi_flow_residual,
    shift_apply, shift_operator
)
from .engine import (
    BirkhoffFactors, LaurentFrame, MirrorMap, SeidelElement, batyrev_check,
    birkhoff_factorize, derivative_frame, extract_tau, extract_upsilon,
    factorization_residual, mirror_map, quantum_product_matrix, quantum_relation_check,
    seidel_elements, specialize_nonequivariant
)

__all__ = [
    'StrippedIFun', 'effective_degrees', 'ifun_coeff', 'ifun_series',
    'ShiftFactor', 'StrippedShiftOp', 'classical_shift_residual', 'compose_check',
    'covariant_derivative', 'delta', 'flow_residual', 'multi_flow_residual',
    'shift_apply', 'shift_operator',
    'BirkhoffFactors', 'LaurentFrame', 'MirrorMap', 'SeidelElement', 'batyrev_check',
    'birkhoff_factorize', 'derivative_frame', 'extract_tau', 'extract_upsilon',
    'factorization_residual', 'mirror_map', 'quantum_product_matrix', 'quantum_relation_check',
    'seidel_elements', 'specialize_nonequivariant',
]
