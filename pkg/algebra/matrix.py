"""
Thin helpers over sympy DomainMatrix for matrices of rational functions
"""
from typing import Callable, List, Sequence
from sympy.polys.matrices import DomainMatrix


def from_rows(rows: Sequence[Sequence], domain) -> DomainMatrix:
    rows = [list(row) for row in rows]
    n_cols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), n_cols), domain)


def rows(matrix: DomainMatrix) -> List[List]:
    return matrix.to_list()


def column(matrix: DomainMatrix, index: int) -> List:
    return [row[index] for row in matrix.to_list()]


def identity(n: int, domain) -> DomainMatrix:
    return DomainMatrix.eye(n, domain)


def apply(matrix: DomainMatrix, fn: Callable) -> DomainMatrix:
    """Entrywise map"""
    return from_rows([[fn(e) for e in row] for row in matrix.to_list()], matrix.domain)


def is_zero(matrix: DomainMatrix) -> bool:
    return all(not e for row in matrix.to_list() for e in row)


def row_sums(matrix: DomainMatrix) -> List:
    """M·(1,...,1)^T as a list"""
    result = []
    for row in matrix.to_list():
        total = matrix.domain.zero
        for e in row:
            total += e
        result.append(total)
    return result
