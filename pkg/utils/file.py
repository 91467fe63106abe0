"""Helper utilities for fan files and atomic writes"""
import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from core.errors import FanParseError


@dataclass(frozen=True)
class FanFile:
    """Parsed fan file; cones are kept 1-based as written"""
    dimension: int
    rays: Tuple[Tuple[int, ...], ...]
    cones: Tuple[Tuple[int, ...], ...]
    omega: Optional[Tuple[Fraction, ...]] = None
    labels: Optional[Tuple[str, ...]] = None

    def fan_data(self) -> Dict[str, Any]:
        data = {
            'dimension': self.dimension,
            'rays': [list(r) for r in self.rays],
            'cones': [list(c) for c in self.cones],
        }
        if self.labels:
            data['labels'] = list(self.labels)
        return data


def _locate(text: str, token: str) -> Tuple[Optional[int], Optional[int]]:
    """Line and column (1-based) of the first occurrence of a token"""
    pos = text.find(token)
    if pos < 0:
        return None, None
    line = text.count('\n', 0, pos) + 1
    column = pos - (text.rfind('\n', 0, pos) + 1) + 1
    return line, column


def _int_matrix(text: str, key: str, value: Any) -> Tuple[Tuple[int, ...], ...]:
    line, column = _locate(text, f'"{key}"')
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise FanParseError(f"Field '{key}' must be a list of integer lists", line, column)
    result = []
    for row in value:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise FanParseError(f"Field '{key}' must contain integers only", line, column)
        result.append(tuple(row))
    return tuple(result)


def parse_fan_text(text: str) -> FanFile:
    """Parse fan-file JSON text, reporting line/column on failure"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FanParseError(f"Malformed JSON: {e.msg}", e.lineno, e.colno)
    if not isinstance(data, dict):
        raise FanParseError("Fan file must contain a JSON object", 1, 1)

    for key in ('dimension', 'rays', 'cones'):
        if key not in data:
            raise FanParseError(f"Fan file is missing field '{key}'", 1, 1)

    dimension = data['dimension']
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
        line, column = _locate(text, '"dimension"')
        raise FanParseError("Field 'dimension' must be a positive integer", line, column)

    rays = _int_matrix(text, 'rays', data['rays'])
    cones = _int_matrix(text, 'cones', data['cones'])

    omega = None
    if data.get('omega') is not None:
        line, column = _locate(text, '"omega"')
        try:
            omega = tuple(Fraction(str(v)) for v in data['omega'])
        except (TypeError, ValueError, ZeroDivisionError):
            raise FanParseError("Field 'omega' must be a list of rationals", line, column)

    labels = data.get('labels')
    if labels is not None:
        labels = tuple(str(s) for s in labels)

    return FanFile(dimension=dimension, rays=rays, cones=cones, omega=omega, labels=labels)


def load_fan_file(path) -> FanFile:
    """Read and parse a fan file"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise FanParseError(f"Cannot read fan file {path}: {e.strerror}")
    return parse_fan_text(text)


def atomic_write_text(path, text: str):
    """Write to a temp file in the same directory, then rename over the target"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as fh:
            fh.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
