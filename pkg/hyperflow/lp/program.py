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
Linear programs over exact rationals.

A program has a number of variables, a list of constraints and an optional
objective which is always maximised. Variables are nonnegative unless other
bounds are given; ``lower=None`` makes a variable free.
'''

import logging
from fractions import Fraction

from hyperflow.probcore.values import to_rational

logger = logging.getLogger(__name__)

LE = '<='
GE = '>='
EQ = '='
RELATIONS = (LE, GE, EQ)


class Constraint(object):
    '''
    One row coeffs · x (relation) rhs
    '''
    __slots__ = ('coeffs', 'relation', 'rhs', 'label')

    def __init__(self, coeffs, relation, rhs, label=None):
        if relation not in RELATIONS:
            raise ValueError('unknown relation {0!r}'.format(relation))
        self.coeffs = tuple(to_rational(c) for c in coeffs)
        self.relation = relation
        self.rhs = to_rational(rhs)
        self.label = label

    def lhs(self, point):
        return sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))

    def holds(self, point):
        '''
        Checks the constraint exactly at point
        '''
        value = self.lhs(point)
        if self.relation == LE:
            return value <= self.rhs
        if self.relation == GE:
            return value >= self.rhs
        return value == self.rhs

    def __repr__(self):
        return 'Constraint({0}, {1!r}, {2})'.format(
            [str(c) for c in self.coeffs], self.relation, self.rhs)


class LinearProgram(object):
    '''
    A linear program with exact rational data
    '''

    def __init__(self, num_vars, names=None):
        self.num_vars = num_vars
        if names is None:
            names = ['x{0}'.format(i) for i in range(num_vars)]
        self.names = list(names)
        self.constraints = []
        self.objective = None
        self.lower = [Fraction(0)] * num_vars
        self.upper = [None] * num_vars

    def _dense(self, coeffs):
        '''
        Accepts a dense sequence or a sparse dict {index: coefficient}
        '''
        if isinstance(coeffs, dict):
            row = [Fraction(0)] * self.num_vars
            for index, value in coeffs.items():
                row[index] += to_rational(value)
            return row
        row = list(coeffs)
        if len(row) != self.num_vars:
            raise ValueError('constraint row has {0} entries, expected {1}'
                             .format(len(row), self.num_vars))
        return row

    def add_constraint(self, coeffs, relation, rhs, label=None):
        constraint = Constraint(self._dense(coeffs), relation, rhs, label=label)
        self.constraints.append(constraint)
        return constraint

    def set_objective(self, coeffs):
        '''
        Sets the (maximised) objective
        '''
        self.objective = tuple(to_rational(c) for c in self._dense(coeffs))

    def set_bounds(self, index, lower=0, upper=None):
        '''
        Sets the bounds of one variable, None meaning unbounded in that direction
        '''
        self.lower[index] = None if lower is None else to_rational(lower)
        self.upper[index] = None if upper is None else to_rational(upper)

    def objective_value(self, point):
        if self.objective is None:
            return Fraction(0)
        return sum((c * x for c, x in zip(self.objective, point)), Fraction(0))

    def is_feasible_point(self, point):
        '''
        Re-substitutes point into every constraint and bound
        '''
        if len(point) != self.num_vars:
            return False
        for value, lower, upper in zip(point, self.lower, self.upper):
            if lower is not None and value < lower:
                return False
            if upper is not None and value > upper:
                return False
        return all(constraint.holds(point) for constraint in self.constraints)

    def standard_form(self):
        '''
        Rewrites the program over nonnegative columns

        Finite lower bounds are shifted away, free variables are split into a
        positive and a negative part and upper bounds become extra rows
        appended after the original constraints.

        :return: StandardForm
        '''
        columns = []
        mapping = []
        for index in range(self.num_vars):
            if self.lower[index] is None:
                mapping.append((Fraction(0), len(columns), len(columns) + 1))
                columns.extend([(index, 1), (index, -1)])
            else:
                mapping.append((self.lower[index], len(columns), None))
                columns.append((index, 1))

        def expand(coeffs):
            row = [Fraction(0)] * len(columns)
            for column, (index, sign) in enumerate(columns):
                row[column] = coeffs[index] * sign
            return row

        def shift(coeffs):
            return sum((c * mapping[i][0] for i, c in enumerate(coeffs)), Fraction(0))

        rows, relations, rhs = [], [], []
        for constraint in self.constraints:
            rows.append(expand(constraint.coeffs))
            relations.append(constraint.relation)
            rhs.append(constraint.rhs - shift(constraint.coeffs))

        for index, upper in enumerate(self.upper):
            if upper is None:
                continue
            unit = [Fraction(0)] * self.num_vars
            unit[index] = Fraction(1)
            rows.append(expand(unit))
            relations.append(LE)
            rhs.append(upper - mapping[index][0])

        objective = None
        offset = Fraction(0)
        if self.objective is not None:
            objective = expand(self.objective)
            offset = shift(self.objective)

        return StandardForm(rows, relations, rhs, mapping, objective, offset)


class StandardForm(object):
    '''
    A program over nonnegative columns, see LinearProgram.standard_form
    '''

    def __init__(self, rows, relations, rhs, mapping, objective, offset):
        self.rows = rows
        self.relations = relations
        self.rhs = rhs
        self.mapping = mapping
        self.objective = objective
        self.offset = offset

    @property
    def num_columns(self):
        return len(self.rows[0]) if self.rows else sum(
            1 if negative is None else 2 for lower, positive, negative in self.mapping)

    def recover(self, column_values):
        '''
        Maps column values back to the original variables
        '''
        point = []
        for lower, positive, negative in self.mapping:
            value = lower + column_values[positive]
            if negative is not None:
                value -= column_values[negative]
            point.append(value)
        return point

    def certificate_holds(self, certificate):
        '''
        Checks the Farkas conditions for the multipliers y (one per row):
        yᵀA ≥ 0 column-wise, yᵀb < 0, y ≥ 0 on ≤ rows and y ≤ 0 on ≥ rows
        '''
        if len(certificate) != len(self.rows):
            return False
        for multiplier, relation in zip(certificate, self.relations):
            if relation == LE and multiplier < 0:
                return False
            if relation == GE and multiplier > 0:
                return False
        for column in range(self.num_columns):
            if sum((y * row[column] for y, row in zip(certificate, self.rows)), Fraction(0)) < 0:
                return False
        return sum((y * b for y, b in zip(certificate, self.rhs)), Fraction(0)) < 0


class Feasible(object):
    '''
    Result of a successful feasibility check
    '''
    feasible = True

    def __init__(self, point):
        self.point = tuple(point)

    def __repr__(self):
        return 'Feasible({0})'.format([str(x) for x in self.point])


class Infeasible(object):
    '''
    Result of a failed feasibility check, with its Farkas certificate

    The certificate has one multiplier per row of the standard form: first the
    original constraints, then one row per finite upper bound.
    '''
    feasible = False

    def __init__(self, certificate, standard_form):
        self.certificate = tuple(certificate)
        self.standard_form = standard_form

    def verify(self):
        return self.standard_form.certificate_holds(self.certificate)

    @property
    def farkas_value(self):
        '''
        yᵀb, strictly negative for a valid certificate
        '''
        return sum((y * b for y, b in zip(self.certificate, self.standard_form.rhs)), Fraction(0))

    def __repr__(self):
        return 'Infeasible({0})'.format([str(y) for y in self.certificate])
