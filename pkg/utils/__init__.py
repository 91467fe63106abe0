"""General helper utilities for rendering exact results"""
import json
from fractions import Fraction
from typing import Any, Dict, Sequence


def format_rational(value) -> str:
    """Canonical "p/q" rendering; integers render without a denominator"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    """Parse "p/q", integers or decimal strings into an exact Fraction"""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not a rational number: {text!r}") from e


def parse_vector(text: str, kind=int) -> tuple:
    """Comma-separated vector, e.g. "1,0,2" or "1/2,1,1" """
    parts = [p for p in str(text).replace(' ', '').split(',') if p]
    if kind is int:
        return tuple(int(p) for p in parts)
    return tuple(parse_rational(p) for p in parts)


def format_degree(degree: Sequence[int]) -> str:
    """Degree key for report dictionaries"""
    return '(' + ','.join(str(v) for v in degree) + ')'


def format_function(value) -> str:
    """Canonical string of a rational function"""
    return str(value)


def canonical_json(data: Dict[str, Any]) -> str:
    """Byte-deterministic JSON: sorted keys, fixed separators, trailing newline"""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'
