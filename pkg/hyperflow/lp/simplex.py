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
Two phase primal simplex on a dense tableau of exact rationals.

Pivoting follows Bland's rule, so the method terminates without any
perturbation. Every point and every Farkas certificate is verified exactly
before it is handed back.
'''

import math
import logging
from fractions import Fraction

from hyperflow.lp.exceptions import Unbounded, LPInternalError, InfeasibleError
from hyperflow.lp.program import LE, GE, Feasible, Infeasible

logger = logging.getLogger(__name__)

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'


def format_matrix(matrix):
    '''
    Renders a matrix of rationals with aligned columns, for debug output
    '''
    matrix = [[str(v) for v in row] for row in matrix]
    matrix = [[v if v and v[0] == '-' else ' ' + v for v in row] for row in matrix]
    width = max((len(row) for row in matrix), default=0)
    lens = [0] * width
    for row in matrix:
        for j, v in enumerate(row):
            lens[j] = max(lens[j], len(v))
    return '\n'.join(' '.join(v.ljust(p) for v, p in zip(row, lens)).rstrip() for row in matrix)


class SimplexTableau(object):
    '''
    Tableau for minimising costs · x subject to rows · x = rhs, x ≥ 0, with a
    feasible basis given up front
    '''

    def __init__(self, rows, rhs, basis, costs, debug=False):
        self.rows = [list(row) for row in rows]
        self.rhs = list(rhs)
        self.basis = list(basis)
        self.debug = debug
        self.iterations = 0
        self.set_costs(costs)

    @property
    def num_columns(self):
        return len(self.costs)

    def set_costs(self, costs):
        '''
        Installs new costs and recomputes the reduced costs for the current basis
        '''
        self.costs = list(costs)
        self.reduced = list(self.costs)
        for i, basic in enumerate(self.basis):
            factor = self.costs[basic]
            if factor:
                for j in range(len(self.reduced)):
                    self.reduced[j] -= factor * self.rows[i][j]

    @property
    def value(self):
        return sum((self.costs[basic] * b for basic, b in zip(self.basis, self.rhs)), Fraction(0))

    def column_values(self):
        values = [Fraction(0)] * self.num_columns
        for basic, b in zip(self.basis, self.rhs):
            values[basic] = b
        return values

    def pivot(self, i, j):
        '''
        Makes column j basic in row i
        '''
        if self.debug:
            logger.debug('Pivot {0} -> {1} ({2},{3})'.format(self.basis[i], j, i, j))
        piv = self.rows[i][j]
        self.rows[i] = [a / piv for a in self.rows[i]]
        self.rhs[i] /= piv
        pivot_row = self.rows[i]
        for k in range(len(self.rows)):
            if k != i:
                f = self.rows[k][j]
                if f:
                    self.rows[k] = [a - f * b for a, b in zip(self.rows[k], pivot_row)]
                    self.rhs[k] -= f * self.rhs[i]
        f = self.reduced[j]
        if f:
            self.reduced = [a - f * b for a, b in zip(self.reduced, pivot_row)]
        self.basis[i] = j
        if self.debug:
            logger.debug('\n' + self.dump())

    def bland_primal_step(self, allowed):
        '''
        One step of Bland's rule: smallest improving column enters, ties in
        the ratio test go to the smallest basic column
        '''
        try:
            j = min(j for j in allowed if self.reduced[j] < 0)
        except ValueError:
            return OPTIMAL
        try:
            ratio, basic, i = min((self.rhs[i] / self.rows[i][j], self.basis[i], i)
                                  for i in range(len(self.rows))
                                  if self.rows[i][j] > 0)
        except ValueError:
            return UNBOUNDED
        self.pivot(i, j)
        return 'go_on'

    def bland_primal(self, allowed, cap):
        while True:
            result = self.bland_primal_step(allowed)
            if result in (OPTIMAL, UNBOUNDED):
                return result
            self.iterations += 1
            if self.iterations > cap:
                raise LPInternalError('simplex exceeded {0} pivots'.format(cap))

    def remove_row(self, i):
        del self.rows[i]
        del self.rhs[i]
        del self.basis[i]

    def dump(self):
        matrix = [['basis'] + list(range(self.num_columns)) + ['|', 'rhs']]
        matrix += [[basic] + row + ['|', b]
                   for basic, row, b in zip(self.basis, self.rows, self.rhs)]
        matrix += [['c'] + self.reduced + ['|', self.value]]
        return format_matrix(matrix)


class SimplexSolver(object):
    '''
    Solves one LinearProgram, keeping the tableau between the two phases
    '''

    def __init__(self, lp, debug=False):
        self.lp = lp
        self.debug = debug
        self.form = lp.standard_form()
        self.tableau = None
        self.num_structural = self.form.num_columns
        self.signs = []
        self.artificial_start = None

    def _build_phase_one(self):
        '''
        Adds one slack per inequality and one artificial per row, flipping rows
        with a negative right hand side
        '''
        form = self.form
        num_rows = len(form.rows)
        num_slacks = sum(1 for relation in form.relations if relation != '=')
        self.artificial_start = self.num_structural + num_slacks
        width = self.artificial_start + num_rows

        rows, rhs, self.signs = [], [], []
        slack = self.num_structural
        for i, (coeffs, relation, b) in enumerate(zip(form.rows, form.relations, form.rhs)):
            row = list(coeffs) + [Fraction(0)] * (width - self.num_structural)
            if relation == LE:
                row[slack] = Fraction(1)
                slack += 1
            elif relation == GE:
                row[slack] = Fraction(-1)
                slack += 1
            sign = -1 if b < 0 else 1
            row = [sign * a for a in row]
            row[self.artificial_start + i] = Fraction(1)
            rows.append(row)
            rhs.append(sign * b)
            self.signs.append(sign)

        costs = [Fraction(0)] * self.artificial_start + [Fraction(1)] * num_rows
        basis = list(range(self.artificial_start, width))
        self.tableau = SimplexTableau(rows, rhs, basis, costs, debug=self.debug)
        self.cap = math.comb(width, max(num_rows, 1))

    def _certificate(self):
        '''
        Reads the Farkas multipliers off the optimal phase one tableau

        The phase one duals are y_i = 1 - (reduced cost of artificial i); the
        certificate is -y mapped back through the row flips.
        '''
        tableau = self.tableau
        certificate = []
        for i, sign in enumerate(self.signs):
            dual = 1 - tableau.reduced[self.artificial_start + i]
            certificate.append(-dual * sign)
        return certificate

    def _drive_out_artificials(self):
        '''
        Pivots zero level artificials out of the basis, dropping rows that
        turn out to be redundant
        '''
        tableau = self.tableau
        i = 0
        while i < len(tableau.rows):
            if tableau.basis[i] < self.artificial_start:
                i += 1
                continue
            column = next((j for j in range(self.artificial_start) if tableau.rows[i][j] != 0),
                          None)
            if column is None:
                logger.debug('Dropping redundant row {0}'.format(i))
                tableau.remove_row(i)
                continue
            tableau.pivot(i, column)
            i += 1

    def phase_one(self):
        '''
        :return: Feasible or Infeasible
        '''
        self._build_phase_one()
        tableau = self.tableau
        if self.debug:
            logger.debug('Phase one tableau\n' + tableau.dump())
        result = tableau.bland_primal(range(tableau.num_columns), self.cap)
        if result == UNBOUNDED:
            raise LPInternalError('phase one can not be unbounded')

        if tableau.value > 0:
            infeasible = Infeasible(self._certificate(), self.form)
            if not infeasible.verify():
                raise LPInternalError('Farkas certificate does not verify: {0}'.format(infeasible))
            logger.debug('Infeasible after {0} pivots'.format(tableau.iterations))
            return infeasible

        point = self.form.recover(tableau.column_values()[:self.num_structural])
        if not self.lp.is_feasible_point(point):
            raise LPInternalError('phase one point does not verify: {0}'.format(point))
        return Feasible(point)

    def phase_two(self):
        '''
        Maximises the objective starting from the phase one basis

        :return: (optimum, point)
        '''
        self._drive_out_artificials()
        tableau = self.tableau
        objective = self.form.objective or [Fraction(0)] * self.num_structural
        padding = tableau.num_columns - self.num_structural
        costs = [-c for c in objective] + [Fraction(0)] * padding
        tableau.set_costs(costs)
        if self.debug:
            logger.debug('Phase two tableau\n' + tableau.dump())

        result = tableau.bland_primal(range(self.artificial_start), self.cap)
        if result == UNBOUNDED:
            raise Unbounded('objective is unbounded')

        point = self.form.recover(tableau.column_values()[:self.num_structural])
        if not self.lp.is_feasible_point(point):
            raise LPInternalError('optimal point does not verify: {0}'.format(point))
        optimum = self.lp.objective_value(point)
        if optimum != -tableau.value + self.form.offset:
            raise LPInternalError('optimum {0} disagrees with the tableau'.format(optimum))
        logger.debug('Optimum {0} after {1} pivots'.format(optimum, tableau.iterations))
        return optimum, tuple(point)


def solve_feasibility(lp, debug=False):
    '''
    Finds a point satisfying all constraints, or a Farkas certificate that
    none exists

    :param lp: LinearProgram
    :param debug: log every pivot and tableau
    :return: Feasible or Infeasible
    '''
    return SimplexSolver(lp, debug=debug).phase_one()


def solve_max(lp, debug=False):
    '''
    Maximises the objective of lp

    :param lp: LinearProgram with an objective, bounded by the caller
    :param debug: log every pivot and tableau
    :return: (optimum, point)
    :raise InfeasibleError: no point satisfies the constraints
    :raise Unbounded: the objective grows without bound
    '''
    solver = SimplexSolver(lp, debug=debug)
    result = solver.phase_one()
    if not result.feasible:
        raise InfeasibleError('linear program is infeasible', result)
    return solver.phase_two()
