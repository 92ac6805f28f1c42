"""
Exact linear algebra over Q or F_p

Matrices are numpy arrays with ``dtype=object`` holding exact scalars, so
numpy does the row bookkeeping while the field does the arithmetic.
"""

from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatchError, SingularSystemError
from .scalars import Field, Scalar


def as_matrix(rows: Sequence[Sequence[Any]], field: Field) -> np.ndarray:
    matrix = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = field(value)
    return matrix


def solve(rows: Sequence[Sequence[Any]], rhs: Sequence[Any], field: Field) -> List[Scalar]:
    """
    Solve the square system ``rows * x = rhs`` by Gauss-Jordan elimination

    The pivot in each column is the first nonzero entry at or below the
    diagonal.
    """
    size = len(rows)
    if size == 0:
        return []
    if any(len(row) != size for row in rows) or len(rhs) != size:
        raise DimensionMismatchError(f"system is not square ({size} equations)")

    augmented = np.empty((size, size + 1), dtype=object)
    augmented[:, :size] = as_matrix(rows, field)
    for i, value in enumerate(rhs):
        augmented[i, size] = field(value)

    for col in range(size):
        for pivot in range(col, size):
            if augmented[pivot, col] != 0:
                break
        else:
            raise SingularSystemError(f"matrix is singular at column {col}")

        if pivot != col:
            augmented[[col, pivot]] = augmented[[pivot, col]]

        augmented[col, :] = augmented[col, :] * (field.one / augmented[col, col])

        for row in range(size):
            if row != col and augmented[row, col] != 0:
                augmented[row, :] = augmented[row, :] - augmented[col, :] * augmented[row, col]

    return [augmented[i, size] for i in range(size)]


class EchelonBasis:
    """
    Incrementally grown set of linearly independent vectors

    Each stored row is zero at the pivot of every earlier row, so a new
    vector is reduced in one pass. Rows carry a combination map that tracks
    how the reduced vector is built from the tagged inputs.
    """

    def __init__(self, length: int, field: Field):
        self.length = length
        self.field = field
        self.rows: List[Tuple[int, np.ndarray, Dict[Hashable, Scalar]]] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector: Sequence[Any], tag: Hashable) -> Tuple[np.ndarray, Dict[Hashable, Scalar]]:
        if len(vector) != self.length:
            raise DimensionMismatchError(f"vector of length {len(vector)}, expected {self.length}")
        current = np.array([self.field(v) for v in vector], dtype=object)
        combination: Dict[Hashable, Scalar] = {tag: self.field.one}
        for pivot, row, row_combination in self.rows:
            factor = current[pivot]
            if factor != 0:
                current = current - row * factor
                for key, value in row_combination.items():
                    updated = combination.get(key, self.field.zero) - value * factor
                    if updated:
                        combination[key] = updated
                    else:
                        combination.pop(key, None)
        return current, combination

    def insert(self, vector: Sequence[Any], tag: Hashable) -> Optional[Dict[Hashable, Scalar]]:
        """
        Add a vector; returns None if it was independent, otherwise the
        dependency (tag -> coefficient map summing to the zero vector)
        """
        current, combination = self.reduce(vector, tag)
        pivot = next((i for i, v in enumerate(current) if v != 0), None)
        if pivot is None:
            return combination
        scale = self.field.one / current[pivot]
        current = current * scale
        combination = {key: value * scale for key, value in combination.items()}
        self.rows.append((pivot, current, combination))
        return None
