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

from hyperflow.core.exceptions import InvalidInitSpec
from hyperflow.core.initspec import InitSpec
from hyperflow.core.tests.base_testcase import HyperflowTestCase, F, hidden
from hyperflow.lang.parser import parse
from hyperflow.semantics.state import Scope, SplitState


class InitSpecTestCase(HyperflowTestCase):
    '''
    Tests reading initial states
    '''

    def setUp(self):
        super(InitSpecTestCase, self).setUp()
        self.scope = Scope.from_decls(parse('vis v : {0, 1}; hid h : {0..2}; skip'))

    def test_point(self):
        '''
        Test a fully known initial state
        '''
        init = InitSpec('v=0; h=1', self.scope)
        self.assertEqual(init.split_states(), [SplitState.point((0,), (1,))])
        self.assertEqual(init.count, 1)
        self.assertFalse(init.is_sampled)
        self.assertEqual(init.to_json(), {'init': 'v=0; h=1', 'points': 1})

    def test_uniform(self):
        '''
        Test a uniform hidden prior
        '''
        init = InitSpec('v=1;h~uniform', self.scope)
        state, = init.split_states()
        self.assertEqual(state.v, (1,))
        self.assertDistEqual(state.delta, {(0,): F(1, 3), (1,): F(1, 3), (2,): F(1, 3)})

    def test_explicit(self):
        '''
        Test explicit weights, zero weights are dropped
        '''
        init = InitSpec('v=0;h~{0@1/4, 1@0, 2@3/4}', self.scope)
        state, = init.split_states()
        self.assertEqual(state.delta, hidden({0: F(1, 4), 2: F(3, 4)}))

        # A single value after "~" is a point
        self.assertEqual(InitSpec('v~0;h~2', self.scope).split_states(),
                         [SplitState.point((0,), (2,))])

    def test_visible_prior(self):
        '''
        A visible prior gives one split-state per visible value
        '''
        init = InitSpec('v~{0@1/4, 1@3/4};h=2', self.scope)
        hyper, = init.hypers()
        self.assertEqual(dict(hyper.items()), {SplitState.point((0,), (2,)): F(1, 4),
                                               SplitState.point((1,), (2,)): F(3, 4)})
        self.assertEqual(len(init.split_states()), 2)

    def test_sampled(self):
        '''
        Test sampled priors are reproducible for a seed
        '''
        init = InitSpec('v=0;h~sample:10', self.scope, seed=3)
        self.assertTrue(init.is_sampled)
        self.assertEqual(init.count, 10)
        hypers = init.hypers()
        self.assertEqual(len(hypers), 10)
        for hyper in hypers:
            self.assertEqual(hyper.weight, 1)
            self.assertEqual(len(hyper), 1)
        self.assertEqual(hypers, InitSpec('v=0;h~sample:10', self.scope, seed=3).hypers())
        self.assertEqual(init.to_json(), {'init': 'v=0;h~sample:10', 'points': 10, 'seed': 3})

    def test_default_seed(self):
        '''
        Without a seed the configured default is used
        '''
        with self.hyperflow_settings(DEFAULT_SEED=7):
            self.assertEqual(InitSpec('v=0;h~sample:2', self.scope).seed, 7)

    def test_errors(self):
        '''
        Test malformed specifications
        '''
        for text in ('x=0;v=0;h=0',
                     'v=0;v=1;h=0',
                     'v=0',
                     'v=5;h=0',
                     'v=0;h~{0@1/2}',
                     'v=0;h~{0@0.5, 1@0.5}',
                     'v=0;h~{0@-1/2, 1@3/2}',
                     'v=0;h~{0@1/2, 1@1/2',
                     'v=0;h~{0, 1}',
                     'v=0;h~sample:0',
                     'v'):
            self.assertRaises(InvalidInitSpec, InitSpec, text, self.scope)

    def test_describe(self):
        '''
        Test the short description of an initial split-state
        '''
        init = InitSpec('v=0;h~{0@1/2, 2@1/2}', self.scope)
        self.assertEqual(init.describe(init.split_states()[0]), '(0) {(0)@1/2, (2)@1/2}')
