"""
Exact sparse linear algebra over the rationals.

Vectors are dicts index -> Fraction with no zero entries. Matrices are
dicts of column images: matrix[j] is the image of the basis vector j.
"""
import fractions
import typing


SparseVector = typing.Dict[int, fractions.Fraction]
SparseMatrix = typing.Dict[int, SparseVector]


def sparse_vector(entries) -> SparseVector:
    if isinstance(entries, dict):
        entries = entries.items()
    vector = {}
    for index, value in entries:
        value = vector.get(index, 0) + fractions.Fraction(value)
        if value:
            vector[index] = value
        else:
            vector.pop(index, None)
    return vector


def add_scaled(target: SparseVector, vector: SparseVector, factor):
    """ target += factor * vector, in place. """
    for index, value in vector.items():
        total = target.get(index, 0) + factor * value
        if total:
            target[index] = total
        else:
            target.pop(index, None)


def apply(matrix: SparseMatrix, vector: SparseVector) -> SparseVector:
    result = {}
    for j, coeff in vector.items():
        column = matrix.get(j)
        if column:
            add_scaled(result, column, coeff)
    return result


def compose(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """ The matrix of a after b. """
    result = {}
    for j, column in b.items():
        image = apply(a, column)
        if image:
            result[j] = image
    return result


def subtract(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    result = {}
    for j in set(a) | set(b):
        column = dict(a.get(j, {}))
        add_scaled(column, b.get(j, {}), -1)
        if column:
            result[j] = column
    return result


def identity(size: int) -> SparseMatrix:
    return {j: {j: fractions.Fraction(1)} for j in range(size)}


def transpose(matrix: SparseMatrix) -> SparseMatrix:
    result = {}
    for j, column in matrix.items():
        for i, value in column.items():
            result.setdefault(i, {})[j] = value
    return result


def trace(matrix: SparseMatrix) -> fractions.Fraction:
    return sum((column.get(j, 0) for j, column in matrix.items()), fractions.Fraction(0))


def is_zero(matrix: SparseMatrix) -> bool:
    return not any(matrix.values())


class EchelonBasis:
    """
    Fully reduced row echelon form of a growing set of sparse vectors.

    Each stored row has coefficient 1 at its pivot, the smallest index in
    its support, and 0 at the pivots of all other rows.
    """

    def __init__(self):
        self._rows: typing.Dict[int, SparseVector] = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> typing.List[int]:
        return sorted(self._rows)

    def reduce(self, vector: SparseVector) -> SparseVector:
        """ Normal form of `vector` modulo the span: zero at every pivot. """
        result = {i: fractions.Fraction(v) for i, v in vector.items() if v}
        # Rows vanish at foreign pivots, so one pass over the pivots hit suffices
        for pivot in [i for i in result if i in self._rows]:
            coeff = result.get(pivot)
            if coeff:
                add_scaled(result, self._rows[pivot], -coeff)
        return result

    def add(self, vector: SparseVector) -> bool:
        """ Add `vector` to the span; False if it was already there. """
        reduced = self.reduce(vector)
        if not reduced:
            return False

        pivot = min(reduced)
        scale = reduced[pivot]
        row = {i: fractions.Fraction(v) / scale for i, v in reduced.items()}

        for other in self._rows.values():
            coeff = other.get(pivot)
            if coeff:
                add_scaled(other, row, -coeff)
        self._rows[pivot] = row
        return True

    def complement(self, size: int) -> typing.List[int]:
        """ Indices below `size` that are not pivots, ascending. """
        return [i for i in range(size) if i not in self._rows]
