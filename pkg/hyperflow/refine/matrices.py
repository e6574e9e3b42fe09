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

'''
Dense matrices of exact rationals
'''

from fractions import Fraction

from hyperflow.utils.helpers import format_rational


class RatMatrix(object):
    '''
    An immutable rows x cols matrix of Fractions
    '''
    __slots__ = ('_rows', 'rows', 'cols')

    def __init__(self, rows, cols=None):
        self._rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        self.rows = len(self._rows)
        if cols is None:
            cols = len(self._rows[0]) if self._rows else 0
        self.cols = cols
        for row in self._rows:
            if len(row) != cols:
                raise ValueError('ragged matrix, expected {0} columns'.format(cols))

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for i in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def as_lists(self):
        return [list(row) for row in self._rows]

    def transpose(self):
        return RatMatrix([self.column(j) for j in range(self.cols)], self.rows)

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError('cannot multiply {0}x{1} by {2}x{3}'.format(
                    self.rows, self.cols, other.rows, other.cols))
            columns = [other.column(j) for j in range(other.cols)]
            return RatMatrix([[sum((a * b for a, b in zip(row, column) if a), Fraction(0))
                               for column in columns] for row in self._rows], other.cols)
        factor = Fraction(other)
        return RatMatrix([[x * factor for x in row] for row in self._rows], self.cols)

    __rmul__ = __mul__

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError('cannot add matrices of different shapes')
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                         self.cols)

    def __sub__(self, other):
        return self + other * -1

    def left_apply(self, vector):
        '''
        The row vector times this matrix
        '''
        result = [Fraction(0)] * self.cols
        for x, row in zip(vector, self._rows):
            if x:
                for j, y in enumerate(row):
                    if y:
                        result[j] += x * y
        return result

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and (self.rows, self.cols) == (other.rows, other.cols) \
            and self._rows == other._rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._rows)

    def row_sums(self):
        return [sum(row, Fraction(0)) for row in self._rows]

    def column_sums(self):
        return [sum(self.column(j), Fraction(0)) for j in range(self.cols)]

    def trace(self):
        return sum((self._rows[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_zero(self):
        return not any(x for row in self._rows for x in row)

    def is_nonnegative(self):
        return all(x >= 0 for row in self._rows for x in row)

    def is_refinement_matrix(self):
        '''
        Nonnegative with every column adding up to one
        '''
        return self.is_nonnegative() and all(s == 1 for s in self.column_sums())

    def is_simple(self):
        '''
        A 0/1 matrix with exactly one 1 in every column
        '''
        return all(x in (0, 1) for row in self._rows for x in row) \
            and all(s == 1 for s in self.column_sums())

    def to_json(self):
        return [[format_rational(x) for x in row] for row in self._rows]

    def __repr__(self):
        return 'RatMatrix({0})'.format([[str(x) for x in row] for row in self._rows])


def compose(second, first):
    '''
    The refinement matrix doing first and then second
    '''
    return second * first
