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
Separating directions.

When the partition P_I of an implementation is not a refinement of the
partition P_S of its specification, P_I lies outside the convex set of all
R x P_S. A direction X separates the two when

    <M x P_S, X> + margin <= <P_I, X>

for every simple refinement matrix M, the vertices of that set. Scores are
entrywise products, rows of X indexed by fractions, columns by hidden states.
'''

import itertools
import logging
from fractions import Fraction

from hyperflow.attack.exceptions import NotSeparable, PreconditionViolated, VertexBudgetExceeded
from hyperflow.lp.program import LinearProgram, LE
from hyperflow.lp.simplex import solve_max
from hyperflow.refine.matrices import RatMatrix
from hyperflow.utils.helpers import format_rational, hyperflow_setting

logger = logging.getLogger(__name__)

METHOD_VERTICES = 'vertices'
METHOD_CERTIFICATE = 'certificate'
METHOD_NORMAL = 'normal'


def padded_matrix(partition, rows, hidden_states):
    '''
    The partition as a matrix with rows zero rows appended up to rows
    '''
    lists = partition.matrix(hidden_states).as_lists()
    lists.extend([Fraction(0)] * len(hidden_states) for i in range(rows - len(lists)))
    return RatMatrix(lists, len(hidden_states))


def score(matrix, direction):
    '''
    <A, X>, the trace of A x transpose(X)
    '''
    return sum((a * x for row_a, row_x in zip(matrix.as_lists(), direction.as_lists())
                for a, x in zip(row_a, row_x)), Fraction(0))


def fraction_scores(partition_matrix, direction):
    '''
    Table s[f][j]: score of fraction f when a simple matrix sends it to row j
    '''
    return [[sum((a * x for a, x in zip(fraction, target)), Fraction(0))
             for target in direction.as_lists()]
            for fraction in partition_matrix.as_lists()]


class SeparatingDirection(object):
    '''
    A direction X with its margin. A negative margin means the sense is
    reversed: every vertex scores at least -margin above P_I.
    '''

    def __init__(self, matrix, margin, spec_partition, impl_partition, hidden_states,
                 method=METHOD_VERTICES):
        self.matrix = matrix
        self.margin = margin
        self.spec_partition = spec_partition
        self.impl_partition = impl_partition
        self.hidden_states = hidden_states
        self.method = method

    @property
    def rows(self):
        return self.matrix.rows

    def spec_matrix(self):
        return self.spec_partition.matrix(self.hidden_states)

    def impl_matrix(self):
        return padded_matrix(self.impl_partition, self.rows, self.hidden_states)

    def impl_score(self):
        return score(self.impl_matrix(), self.matrix)

    def max_vertex_score(self):
        return sum((max(row) for row in fraction_scores(self.spec_matrix(), self.matrix)),
                   Fraction(0))

    def min_vertex_score(self):
        return sum((min(row) for row in fraction_scores(self.spec_matrix(), self.matrix)),
                   Fraction(0))

    def oriented(self):
        '''
        This direction with refinements of the specification scoring less
        '''
        if self.margin > 0:
            return self
        return SeparatingDirection(self.matrix * -1, -self.margin, self.spec_partition,
                                   self.impl_partition, self.hidden_states, self.method)

    def verify(self):
        '''
        Re-checks the separation exactly
        '''
        if self.margin > 0:
            return self.max_vertex_score() + self.margin <= self.impl_score()
        return self.min_vertex_score() >= self.impl_score() - self.margin

    def __repr__(self):
        return 'SeparatingDirection({0!r}, margin={1})'.format(self.matrix, self.margin)

    def to_json(self):
        return {'method': self.method, 'X': self.matrix.to_json(),
                'margin': format_rational(self.margin)}


def _check_pair(spec_partition, impl_partition):
    if spec_partition == impl_partition:
        raise PreconditionViolated('the partitions are identical')
    if spec_partition.weight != impl_partition.weight:
        raise PreconditionViolated('the partitions have weights {0} and {1}'
                                   .format(spec_partition.weight, impl_partition.weight))


def square_size(spec_partition, impl_partition, hidden_states):
    return max(len(hidden_states), len(spec_partition), len(impl_partition))


def separating_direction(spec_partition, impl_partition, hidden_states, rows=None, cap=None):
    '''
    Finds a direction of maximal margin by linear programming over all the
    vertices M x P_S, entries of X in [-1, 1]

    :param spec_partition: reduced Partition of the specification
    :param impl_partition: reduced Partition of the implementation, not a
                           refinement of spec_partition
    :param hidden_states: column order of the partition matrices
    :param rows: number of rows of X, the square size by default
    :param cap: largest number of vertices to enumerate, VERTEX_CAP by default
    :return: SeparatingDirection
    :raise VertexBudgetExceeded: too many vertices
    :raise NotSeparable: impl_partition is a refinement after all
    '''
    _check_pair(spec_partition, impl_partition)
    rows = rows or square_size(spec_partition, impl_partition, hidden_states)
    cap = cap if cap is not None else hyperflow_setting('VERTEX_CAP')
    count = rows ** len(spec_partition)
    if count > cap:
        raise VertexBudgetExceeded('{0} vertices exceed the cap of {1}'.format(count, cap),
                                   count=count)
    logger.debug('enumerating {0} vertices'.format(count))

    spec = spec_partition.matrix(hidden_states)
    impl = padded_matrix(impl_partition, rows, hidden_states)
    width = len(hidden_states)
    epsilon = rows * width
    names = ['X[{0}][{1}]'.format(j, i) for j in range(rows) for i in range(width)] + ['eps']
    lp = LinearProgram(epsilon + 1, names)
    for index in range(epsilon):
        lp.set_bounds(index, -1, 1)
    lp.set_bounds(epsilon, 0, 1)

    target = {}
    for j in range(rows):
        for i in range(width):
            if impl[j, i]:
                target[j * width + i] = -impl[j, i]
    for choice in itertools.product(range(rows), repeat=len(spec_partition)):
        coeffs = dict(target)
        for f, j in enumerate(choice):
            for i in range(width):
                if spec[f, i]:
                    coeffs[j * width + i] = coeffs.get(j * width + i, 0) + spec[f, i]
        coeffs[epsilon] = 1
        lp.add_constraint(coeffs, LE, 0)
    lp.set_objective({epsilon: 1})

    optimum, point = solve_max(lp)
    if optimum <= 0:
        raise NotSeparable('no direction separates the partitions')
    matrix = RatMatrix([point[j * width:(j + 1) * width] for j in range(rows)], width)
    direction = SeparatingDirection(matrix, Fraction(0), spec_partition, impl_partition,
                                    hidden_states, METHOD_VERTICES)
    direction.margin = direction.impl_score() - direction.max_vertex_score()
    if direction.margin < optimum:
        raise NotSeparable('margin {0} below the optimum {1}'.format(direction.margin, optimum))
    return direction


def certificate_direction(infeasible, spec_partition, impl_partition, hidden_states):
    '''
    Reads a direction off the Farkas certificate of the refinement problem

    The multipliers of the rows "fraction j at hidden state h", negated, form
    X; the certificate's value gives the margin, no enumeration needed.

    :param infeasible: Infeasible result of refine_partition
    :return: SeparatingDirection with one row per implementation fraction
    '''
    _check_pair(spec_partition, impl_partition)
    n, width = len(spec_partition), len(hidden_states)
    certificate = infeasible.certificate
    rows = [[-certificate[n + j * width + i] for i in range(width)]
            for j in range(len(impl_partition))]
    direction = SeparatingDirection(RatMatrix(rows, width), Fraction(0), spec_partition,
                                    impl_partition, hidden_states, METHOD_CERTIFICATE)
    direction.margin = direction.impl_score() - direction.max_vertex_score()
    if direction.margin <= 0:
        raise NotSeparable('the certificate does not separate the partitions')
    logger.debug('certificate margin {0}, Farkas value {1}'
                 .format(direction.margin, infeasible.farkas_value))
    return direction


def direction_from_normal(normal, spec_partition, impl_partition, hidden_states, rows=None):
    '''
    Wraps a given normal vector, rows of X concatenated, and works out its
    orientation

    :raise NotSeparable: the normal does not separate in either sense
    '''
    _check_pair(spec_partition, impl_partition)
    rows = rows or square_size(spec_partition, impl_partition, hidden_states)
    width = len(hidden_states)
    values = [Fraction(x) for x in normal]
    if len(values) != rows * width:
        raise PreconditionViolated('normal has {0} entries, expected {1}'
                                   .format(len(values), rows * width))
    matrix = RatMatrix([values[j * width:(j + 1) * width] for j in range(rows)], width)
    direction = SeparatingDirection(matrix, Fraction(0), spec_partition, impl_partition,
                                    hidden_states, METHOD_NORMAL)
    impl_score = direction.impl_score()
    if direction.max_vertex_score() < impl_score:
        direction.margin = impl_score - direction.max_vertex_score()
    elif direction.min_vertex_score() > impl_score:
        direction.margin = impl_score - direction.min_vertex_score()
    else:
        raise NotSeparable('the normal does not separate the partitions')
    return direction
