# This file is part of hyperflow.
#
# hyperflow is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# hyperflow is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License

from fractions import Fraction

from hyperflow.refine.exceptions import NotRefinementMatrix
from hyperflow.refine.matrices import RatMatrix


def decompose_refinement(matrix):
    '''
    Writes a refinement matrix as a convex combination of simple ones

    Each step takes the smallest non-zero entry of every column (the
    topmost one on ties), lets c be the least of those and subtracts c
    times the simple matrix with its ones at exactly those positions. Every
    step adds at least one zero, so the loop ends; it ends with the zero
    matrix because all columns keep equal sums throughout.

    :param matrix: RatMatrix, nonnegative with one-summing columns
    :return: list of (coefficient, simple RatMatrix), coefficients adding up to one
    :raise NotRefinementMatrix: for any other matrix
    '''
    if not matrix.is_refinement_matrix():
        raise NotRefinementMatrix('{0!r} is not a refinement matrix'.format(matrix))

    rest = matrix.as_lists()
    steps = []
    while any(x for row in rest for x in row):
        positions = []
        for j in range(matrix.cols):
            column = [(rest[i][j], i) for i in range(matrix.rows) if rest[i][j]]
            positions.append(min(column)[1])
        c = min(rest[i][j] for j, i in enumerate(positions))
        simple = [[Fraction(0)] * matrix.cols for i in range(matrix.rows)]
        for j, i in enumerate(positions):
            simple[i][j] = Fraction(1)
            rest[i][j] -= c
        steps.append((c, RatMatrix(simple, matrix.cols)))
    return steps


def recompose(steps):
    '''
    The matrix a decomposition stands for
    '''
    coefficient, first = steps[0]
    total = first * coefficient
    for coefficient, simple in steps[1:]:
        total = total + simple * coefficient
    return total
