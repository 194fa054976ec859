import typing

from ..scalars import Scalar, ScalarDomain


def row_reduce(rows: typing.Sequence[typing.Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """
    Bring a matrix to reduced row echelon form by Gauss-Jordan elimination.

    Returns
    -------
    reduced_rows : list of list of Scalar
        The nonzero rows of the reduced form; each pivot entry is 1 and is the only nonzero entry in its column.
    pivots : list of int
        The pivot column of each returned row.
    """
    matrix = [list(row) for row in rows]
    if not matrix:
        return [], []

    column_count = len(matrix[0])
    pivots = []
    pivot_row = 0
    for column in range(column_count):
        candidate = next(
            (row_index for row_index in range(pivot_row, len(matrix)) if not matrix[row_index][column].is_zero), None
        )
        if candidate is None:
            continue

        matrix[pivot_row], matrix[candidate] = matrix[candidate], matrix[pivot_row]
        pivot_value = matrix[pivot_row][column]
        matrix[pivot_row] = [entry / pivot_value for entry in matrix[pivot_row]]
        for row_index, row in enumerate(matrix):
            if row_index == pivot_row or row[column].is_zero:
                continue
            factor = row[column]
            matrix[row_index] = [entry - factor * pivot_entry for entry, pivot_entry in zip(row, matrix[pivot_row])]

        pivots.append(column)
        pivot_row += 1
        if pivot_row == len(matrix):
            break

    return matrix[:pivot_row], pivots


def nullspace_rows(
    rows: typing.Sequence[typing.Sequence[Scalar]], column_count: int, domain: ScalarDomain
) -> list[list[Scalar]]:
    """A basis of {v : rows · v = 0}, one vector per free column of the reduced form."""
    reduced_rows, pivots = row_reduce(rows=rows)
    free_columns = [column for column in range(column_count) if column not in pivots]

    basis = []
    for free_column in free_columns:
        vector = [domain.zero() for _ in range(column_count)]
        vector[free_column] = domain.one()
        for reduced_row, pivot in zip(reduced_rows, pivots):
            vector[pivot] = -reduced_row[free_column]
        basis.append(vector)
    return basis


def solve_columns(
    columns: typing.Sequence[typing.Sequence[Scalar]], target: typing.Sequence[Scalar], domain: ScalarDomain
) -> list[Scalar] | None:
    """
    Solve `sum(c[k] * columns[k]) == target` for linearly independent columns.

    Returns None when the target is outside the span; raises `ValueError` when the columns are dependent.
    """
    row_count = len(target)
    augmented_rows = [[column[row] for column in columns] + [target[row]] for row in range(row_count)]
    reduced_rows, pivots = row_reduce(rows=augmented_rows)

    unknown_count = len(columns)
    if unknown_count in pivots:
        return None
    if len(pivots) < unknown_count:
        message = "The given vectors are linearly dependent, so coordinates are not unique."
        raise ValueError(message)

    solution = [domain.zero() for _ in range(unknown_count)]
    for reduced_row, pivot in zip(reduced_rows, pivots):
        solution[pivot] = reduced_row[unknown_count]
    return solution
