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

from hypothesis import given, strategies as st

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F
from hyperflow.probcore.dist import (
    FiniteDist,
    mk_dist,
    uniform,
    point,
    normalize,
    expected_value,
    posterior
)
from hyperflow.probcore.exceptions import (
    NegativeWeight,
    WeightOverflow,
    ZeroWeight,
    ZeroCondition,
    SpaceMismatch
)
from hyperflow.probcore.values import Atom, sort_key, format_value


weights = st.lists(st.fractions(min_value=0, max_value=1, max_denominator=12),
                   min_size=1, max_size=6)


def sub_distribution(raw):
    '''
    Scales a list of nonnegative rationals into a sub-distribution over 0..n-1
    '''
    total = sum(raw)
    if total > 1:
        raw = [w / total for w in raw]
    return mk_dist(enumerate(raw))


class MkDistTestCase(HyperflowTestCase):
    '''
    Tests building distributions
    '''

    def test_uniform_from_pairs(self):
        '''
        Three equal weights give the uniform distribution
        '''
        self.assertEqual(mk_dist([(0, F(1, 3)), (1, F(1, 3)), (2, F(1, 3))]), uniform([0, 1, 2]))

    def test_point(self):
        '''
        A single value with weight one is the point distribution
        '''
        self.assertEqual(mk_dist([(5, 1)]), point(5))
        self.assertTrue(point(5).is_full)

    def test_duplicates_add(self):
        '''
        Duplicate values add their weights
        '''
        self.assertDistEqual(mk_dist([(0, F(1, 4)), (0, F(1, 4))]), {0: F(1, 2)})

    def test_zero_weights_dropped(self):
        '''
        Entries with weight zero are not part of the support
        '''
        dist = mk_dist([(0, 0), (1, F(1, 2))])
        self.assertEqual(dist.support, (1,))
        self.assertFalse(dist.is_full)

    def test_negative_weight(self):
        '''
        Negative weights are refused
        '''
        self.assertRaises(NegativeWeight, mk_dist, [(0, F(-1, 2))])

    def test_overflow(self):
        '''
        Weights adding up to more than one are refused
        '''
        self.assertRaises(WeightOverflow, mk_dist, [(0, F(2, 3)), (1, F(2, 3))])

    def test_float_refused(self):
        '''
        Floating point weights are not accepted
        '''
        self.assertRaises(TypeError, mk_dist, [(0, 0.5)])

    def test_canonical_order(self):
        '''
        Entries are ordered by the value order, atoms by declaration rank
        '''
        w, b, bot = Atom('w', 0), Atom('b', 1), Atom('bot', 2)
        dist = uniform([bot, w, b])
        self.assertEqual(dist.support, (w, b, bot))
        self.assertEqual(uniform([2, 0, 1]).support, (0, 1, 2))

    def test_space_mismatch(self):
        '''
        Distributions over different spaces can't be added
        '''
        first = point(0, space='V').scale(F(1, 2))
        second = point(0, space='H').scale(F(1, 2))
        self.assertRaises(SpaceMismatch, lambda: first + second)

    def test_repr(self):
        '''
        The textual form lists value@weight pairs
        '''
        self.assertEqual(repr(mk_dist([(1, F(1, 3)), (3, F(1, 6))])), '{1@1/3, 3@1/6}')


class NormalizeTestCase(HyperflowTestCase):
    '''
    Tests normalisation
    '''

    def test_normalize(self):
        '''
        {1@1/3, 3@1/6} normalizes to {1@2/3, 3@1/3}
        '''
        self.assertDistEqual(normalize(mk_dist([(1, F(1, 3)), (3, F(1, 6))])),
                             {1: F(2, 3), 3: F(1, 3)})

    def test_full_is_identity(self):
        '''
        A full distribution is its own normalisation
        '''
        dist = uniform([0, 1, 2])
        self.assertEqual(normalize(dist), dist)

    def test_single_point(self):
        '''
        {0@1/8} normalizes to the point at 0
        '''
        self.assertEqual(normalize(mk_dist([(0, F(1, 8))])), point(0))

    def test_zero_weight(self):
        '''
        The empty distribution can't be normalized
        '''
        self.assertRaises(ZeroWeight, normalize, mk_dist([]))

    @given(weights)
    def test_idempotent(self, raw):
        '''
        Normalizing twice is normalizing once
        '''
        dist = sub_distribution(raw)
        if dist.weight > 0:
            self.assertEqual(normalize(normalize(dist)), normalize(dist))
            self.assertEqual(normalize(dist).weight, 1)


class ExpectationTestCase(HyperflowTestCase):
    '''
    Tests expected values and conditioning
    '''

    def test_expected_value(self):
        '''
        The expected value of h/2 over uniform{0,1,2} is 1/2
        '''
        self.assertEqual(expected_value(uniform([0, 1, 2]), lambda h: F(h, 2)), F(1, 2))

    def test_total_weight(self):
        '''
        The constant 1 has the total weight as expectation
        '''
        self.assertEqual(expected_value(uniform([0, 1, 2]), lambda h: 1), 1)

    def test_boolean_coerced(self):
        '''
        Booleans count as 0 and 1
        '''
        self.assertEqual(expected_value(uniform([0, 1, 2]), lambda h: h != 0), F(2, 3))

    def test_distribution_valued(self):
        '''
        A distribution valued function gives the mixture
        '''
        result = expected_value(uniform([0, 1, 2]), lambda h: point(h % 2))
        self.assertDistEqual(result, {0: F(2, 3), 1: F(1, 3)})

    def test_posterior(self):
        '''
        Observing with weight h/2 gives {1@1/3, 2@2/3}
        '''
        self.assertDistEqual(posterior(uniform([0, 1, 2]), lambda h: F(h, 2)),
                             {1: F(1, 3), 2: F(2, 3)})

    def test_vacuous_condition(self):
        '''
        Conditioning on the constant one changes nothing
        '''
        dist = mk_dist([(0, F(1, 4)), (1, F(3, 4))])
        self.assertEqual(posterior(dist, lambda h: 1), dist)

    def test_restriction(self):
        '''
        Boolean conditions restrict uniformly
        '''
        self.assertEqual(posterior(uniform([0, 1, 2]), lambda h: h != 0), uniform([1, 2]))

    def test_zero_condition(self):
        '''
        An impossible observation is an error
        '''
        self.assertRaises(ZeroCondition, posterior, uniform([0, 1]), lambda h: h > 5)

    @given(weights, st.lists(st.fractions(min_value=0, max_value=1, max_denominator=6),
                             min_size=6, max_size=6))
    def test_posterior_support(self, raw, factors):
        '''
        The posterior lives inside the support where the observation is possible
        '''
        dist = sub_distribution(raw)
        if expected_value(dist, lambda x: factors[x]) > 0:
            result = posterior(dist, lambda x: factors[x])
            self.assertTrue(set(result.support) <= {x for x in dist.support if factors[x] > 0})
            self.assertEqual(result.weight, 1)

    @given(weights)
    def test_point_valued_keeps_weight(self, raw):
        '''
        Mixing point distributions keeps the total weight
        '''
        dist = sub_distribution(raw)
        mixture = expected_value(dist, lambda x: point(x // 2))
        if dist.support:
            self.assertEqual(mixture.weight, dist.weight)


class ValueTestCase(HyperflowTestCase):
    '''
    Tests the value helpers
    '''

    def test_format(self):
        '''
        Values print as in the source language
        '''
        self.assertEqual(format_value(True), 'true')
        self.assertEqual(format_value(Fraction(1, 4)), '1/4')
        self.assertEqual(format_value(Fraction(4, 2)), '2')
        self.assertEqual(format_value(Atom('bot')), 'bot')

    def test_order(self):
        '''
        Booleans sort before numbers, numbers before atoms
        '''
        values = [Atom('w'), 3, False, Fraction(1, 2)]
        self.assertEqual(sorted(values, key=sort_key), [False, Fraction(1, 2), 3, Atom('w')])

    def test_hashable(self):
        '''
        Distributions can be used as keys
        '''
        self.assertEqual(len({uniform([0, 1]), mk_dist([(1, F(1, 2)), (0, F(1, 2))])}), 1)
        self.assertIsInstance(hash(uniform([0, 1])), int)
        self.assertIsInstance(uniform([0]), FiniteDist)
