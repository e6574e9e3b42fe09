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

from hypothesis import given, settings, strategies as st

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F
from hyperflow.lp.exceptions import Unbounded, InfeasibleError
from hyperflow.lp.program import LinearProgram, LE, GE, EQ
from hyperflow.lp.simplex import solve_feasibility, solve_max, format_matrix


class FeasibilityTestCase(HyperflowTestCase):
    '''
    Tests the phase one feasibility check
    '''

    def test_single_equality(self):
        '''
        x = 1 with x ≥ 0 has the point [1]
        '''
        lp = LinearProgram(1)
        lp.add_constraint([1], EQ, 1)
        result = solve_feasibility(lp)
        self.assertTrue(result.feasible)
        self.assertEqual(result.point, (F(1),))

    def test_contradiction(self):
        '''
        x ≥ 1 and x ≤ 0 is infeasible with a verifiable certificate
        '''
        lp = LinearProgram(1)
        lp.add_constraint([1], GE, 1)
        lp.add_constraint([1], LE, 0)
        result = solve_feasibility(lp)
        self.assertFalse(result.feasible)
        self.assertTrue(result.verify())
        self.assertLess(result.farkas_value, 0)
        y_ge, y_le = result.certificate
        self.assertLessEqual(y_ge, 0)
        self.assertGreaterEqual(y_le, 0)

    def test_negative_rhs(self):
        '''
        Rows with a negative right hand side are handled
        '''
        lp = LinearProgram(2)
        lp.add_constraint([1, -1], EQ, -2)
        result = solve_feasibility(lp)
        self.assertTrue(result.feasible)
        x, y = result.point
        self.assertEqual(x - y, -2)

    def test_redundant_rows(self):
        '''
        Duplicate equalities don't disturb phase two
        '''
        lp = LinearProgram(2)
        lp.add_constraint([1, 1], EQ, 1)
        lp.add_constraint([2, 2], EQ, 2)
        lp.set_objective([1, 0])
        optimum, point = solve_max(lp)
        self.assertEqual(optimum, 1)
        self.assertEqual(point, (F(1), F(0)))

    def test_stochastic_split(self):
        '''
        Splitting the middle fraction: R x [1/6, 1/6+1/6, 1/6] rows are found
        '''
        # columns: sources {1@1/6}, {1@1/6,3@1/6}, {3@1/6}; rows: two targets
        lp = LinearProgram(6)
        for f in range(3):
            lp.add_constraint({f: 1, 3 + f: 1}, EQ, 1)
        sources = [(F(1, 6), 0), (F(1, 6), F(1, 6)), (0, F(1, 6))]
        targets = [(F(1, 4), F(1, 12)), (F(1, 12), F(1, 4))]
        for j in range(2):
            for h in range(2):
                lp.add_constraint({3 * j + f: sources[f][h] for f in range(3)}, EQ, targets[j][h])
        result = solve_feasibility(lp)
        self.assertTrue(result.feasible)
        self.assertEqual(result.point, (F(1), F(1, 2), F(0), F(0), F(1, 2), F(1)))


class MaximisationTestCase(HyperflowTestCase):
    '''
    Tests phase two
    '''

    def test_simple_max(self):
        '''
        max x subject to x ≤ 3 is 3
        '''
        lp = LinearProgram(1)
        lp.add_constraint([1], LE, 3)
        lp.set_objective([1])
        self.assertEqual(solve_max(lp), (F(3), (F(3),)))

    def test_zero_objective(self):
        '''
        Maximising 0 returns some feasible vertex
        '''
        lp = LinearProgram(2)
        lp.add_constraint([1, 1], LE, 4)
        lp.set_objective([0, 0])
        optimum, point = solve_max(lp)
        self.assertEqual(optimum, 0)
        self.assertTrue(lp.is_feasible_point(point))

    def test_unbounded(self):
        '''
        Without an upper limit the objective is unbounded
        '''
        lp = LinearProgram(2)
        lp.add_constraint([1, -1], LE, 1)
        lp.set_objective([1, 0])
        self.assertRaises(Unbounded, solve_max, lp)

    def test_infeasible(self):
        '''
        solve_max reports infeasibility with the certificate
        '''
        lp = LinearProgram(1)
        lp.add_constraint([1], GE, 2)
        lp.set_objective([1])
        lp.set_bounds(0, lower=0, upper=1)
        with self.assertRaises(InfeasibleError) as context:
            solve_max(lp)
        self.assertTrue(context.exception.infeasible.verify())

    def test_bounds(self):
        '''
        Free and box bounded variables
        '''
        lp = LinearProgram(2)
        lp.set_bounds(0, lower=-1, upper=1)
        lp.set_bounds(1, lower=None, upper=None)
        lp.add_constraint([1, 1], LE, F(1, 2))
        lp.add_constraint([0, 1], GE, -5)
        lp.set_objective([-1, -1])
        optimum, point = solve_max(lp)
        self.assertEqual(optimum, 6)
        self.assertEqual(point, (F(-1), F(-5)))

    def test_debug_dump(self):
        '''
        The tableau dump aligns the columns
        '''
        lp = LinearProgram(1)
        lp.add_constraint([1], LE, 3)
        lp.set_objective([1])
        self.assertEqual(solve_max(lp, debug=True)[0], 3)
        self.assertEqual(format_matrix([[1, F(-1, 2)], [10, 0]]), ' 1  -1/2\n 10  0')


class RandomProgramTestCase(HyperflowTestCase):
    '''
    Property tests: every answer is either a verified point or a verified
    certificate
    '''

    coefficient = st.integers(min_value=-3, max_value=3)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.tuples(st.lists(coefficient, min_size=3, max_size=3),
                              st.sampled_from([LE, GE, EQ]),
                              coefficient),
                    min_size=1, max_size=4))
    def test_answer_verifies(self, rows):
        '''
        Random small systems are decided with a verified witness
        '''
        lp = LinearProgram(3)
        for coeffs, relation, rhs in rows:
            lp.add_constraint(coeffs, relation, rhs)
        result = solve_feasibility(lp)
        if result.feasible:
            self.assertTrue(lp.is_feasible_point(result.point))
        else:
            self.assertTrue(result.verify())

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.tuples(st.lists(coefficient, min_size=2, max_size=2), coefficient),
                    min_size=1, max_size=4),
           st.lists(coefficient, min_size=2, max_size=2))
    def test_box_max_is_optimal(self, rows, objective):
        '''
        Within the box [0,2]² the optimum beats every grid point
        '''
        lp = LinearProgram(2)
        lp.set_bounds(0, 0, 2)
        lp.set_bounds(1, 0, 2)
        for coeffs, rhs in rows:
            lp.add_constraint(coeffs, LE, rhs)
        lp.set_objective(objective)
        grid = [(F(a, 2), F(b, 2)) for a in range(5) for b in range(5)]
        feasible = [p for p in grid if lp.is_feasible_point(p)]
        try:
            optimum, point = solve_max(lp)
        except InfeasibleError:
            self.assertEqual(feasible, [])
            return
        self.assertTrue(lp.is_feasible_point(point))
        for candidate in feasible:
            self.assertGreaterEqual(optimum, lp.objective_value(candidate))
        self.assertIsInstance(optimum, Fraction)
