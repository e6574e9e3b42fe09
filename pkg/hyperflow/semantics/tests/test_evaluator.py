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

from hypothesis import given, settings, strategies as st

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F, load, hidden, hyper
from hyperflow.core.tests import generators
from hyperflow.lang.ast import Atomic, Seq, Skip
from hyperflow.lang.parser import parse
from hyperflow.measures.measures import bayes_vuln, ft
from hyperflow.probcore.dist import expected_value, mk_dist, point, uniform
from hyperflow.probcore.values import Atom
from hyperflow.semantics.classical import classical_eval
from hyperflow.semantics.evaluator import eval_program, eval_hyper
from hyperflow.semantics.exceptions import DistNotOneSumming, DomainViolation, LocalInAtomic
from hyperflow.semantics.hyper import HyperDist, hide_embed
from hyperflow.semantics.state import Scope, SplitState
from hyperflow.utils.constants import SPACE_HIDDEN, SPACE_JOINT

BOT = Atom('bot')


def threebox_init():
    return SplitState((BOT,), hidden({0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}))


class ThreeBoxTestCase(HyperflowTestCase):
    '''
    The three boxes: drawing a ball and forgetting its colour still leaks
    '''

    def setUp(self):
        super(ThreeBoxTestCase, self).setUp()
        self.spec = load('threebox_S')
        self.scope = Scope.from_decls(self.spec)

    def test_spec(self):
        '''
        The forgotten colour is remembered in the split-states
        '''
        expected = hyper(self.scope, [(BOT, {1: F(1, 3), 2: F(2, 3)}, F(1, 2)),
                                      (BOT, {0: F(2, 3), 1: F(1, 3)}, F(1, 2))])
        self.assertEqual(eval_program(self.spec, threebox_init()), expected)

    def test_implementations(self):
        '''
        I1 leaks nothing, I2 only tells box 2 from the others
        '''
        result = eval_program(load('threebox_I1'), threebox_init())
        thirds = {0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}
        self.assertEqual(result, hyper(self.scope, [(BOT, thirds, 1)]))

        result = eval_program(load('threebox_I2'), threebox_init())
        expected = hyper(self.scope, [(BOT, {2: 1}, F(1, 3)),
                                      (BOT, {0: F(1, 2), 1: F(1, 2)}, F(2, 3))])
        self.assertEqual(result, expected)

    def test_vulnerabilities(self):
        '''
        Bayes vulnerability 2/3, 1/3 and 2/3
        '''
        values = [bayes_vuln(eval_program(load(name), threebox_init()))
                  for name in ('threebox_S', 'threebox_I1', 'threebox_I2')]
        self.assertEqual(values, [F(2, 3), F(1, 3), F(2, 3)])

    def test_not_compositional(self):
        '''
        After h := h div 2 the second implementation is worse than S
        '''
        context = parse('vis v : {bot, w, b}; hid h : {0..2}; h := h div 2')
        spec = eval_hyper(context, eval_program(self.spec, threebox_init()))
        impl = eval_hyper(context, eval_program(load('threebox_I2'), threebox_init()))
        self.assertEqual(bayes_vuln(spec), F(5, 6))
        self.assertEqual(bayes_vuln(impl), 1)

    def test_json(self):
        '''
        Hyper-distributions serialise with exact probabilities
        '''
        data = eval_program(self.spec, threebox_init()).to_json()
        self.assertEqual(len(data['hyper']), 2)
        self.assertEqual(data['hyper'][0]['p'], '1/2')


class EvaluatorTestCase(HyperflowTestCase):
    '''
    Tests of single constructs
    '''

    def test_general_choice(self):
        '''
        skip [h] skip leaks h through the branch taken
        '''
        program = parse('vis v : {0}; hid h : {1/4, 1/2}; skip [h] skip')
        scope = Scope.from_decls(program)
        init = SplitState((0,), hidden({F(1, 4): F(1, 2), F(1, 2): F(1, 2)}))
        result = eval_program(program, init)
        expected = hyper(scope, [(0, {F(1, 4): F(1, 3), F(1, 2): F(2, 3)}, F(3, 8)),
                                 (0, {F(1, 4): F(3, 5), F(1, 2): F(2, 5)}, F(5, 8))])
        self.assertEqual(result, expected)
        self.assertEqual(bayes_vuln(result), F(5, 8))

    def test_hide_embed(self):
        '''
        A joint distribution grouped by its visible part
        '''
        scope = Scope.from_decls(parse('vis v : {0, 1}; hid h : {0..2}; skip'))
        joint = mk_dist([(((0,), (0,)), F(1, 3)), (((0,), (2,)), F(1, 3)), (((1,), (1,)), F(1, 3))],
                        space=SPACE_JOINT)
        expected = hyper(scope, [(0, {0: F(1, 2), 2: F(1, 2)}, F(2, 3)), (1, {1: 1}, F(1, 3))])
        self.assertEqual(hide_embed(joint, scope), expected)

    def test_atomic_forgets(self):
        '''
        Inside atomic brackets the overwritten value of v is not remembered
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; atomic { v := h; v := 0 }')
        scope = Scope.from_decls(program)
        init = SplitState((1,), hidden({0: F(1, 2), 1: F(1, 2)}))
        self.assertEqual(eval_program(program, init),
                         hyper(scope, [(0, {0: F(1, 2), 1: F(1, 2)}, 1)]))

        program = parse('vis v : {0, 1}; hid h : {0, 1}; v := h; v := 0')
        self.assertEqual(bayes_vuln(eval_program(program, init)), 1)

    def test_hidden_conditional(self):
        '''
        A conditional on h reveals which branch was taken
        '''
        program = parse('vis v : {0, 1}; hid h : {0..2}; if h = 0 then skip else skip fi')
        scope = Scope.from_decls(program)
        init = SplitState((0,), hidden({0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}))
        self.assertEqual(eval_program(program, init),
                         hyper(scope, [(0, {0: 1}, F(1, 3)),
                                        (0, {1: F(1, 2), 2: F(1, 2)}, F(2, 3))]))

    def test_local_hidden(self):
        '''
        A hidden local copy of h is summed out at the end of its block
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; '
                        'local hid t : {0, 1} := h in { h <- uniform{0, 1}; v := t }')
        scope = Scope.from_decls(program)
        init = SplitState((0,), hidden({0: F(1, 2), 1: F(1, 2)}))
        expected = hyper(scope, [(0, {0: F(1, 2), 1: F(1, 2)}, F(1, 2)),
                                 (1, {0: F(1, 2), 1: F(1, 2)}, F(1, 2))])
        self.assertEqual(eval_program(program, init), expected)

    def test_local_visible(self):
        '''
        A visible local is erased, what it revealed stays known
        '''
        program = parse('vis v : {0}; hid h : {0, 1}; local vis t : {0, 1} := h in { skip }')
        scope = Scope.from_decls(program)
        init = SplitState((0,), hidden({0: F(1, 2), 1: F(1, 2)}))
        expected = hyper(scope, [(0, {0: 1}, F(1, 2)), (0, {1: 1}, F(1, 2))])
        self.assertEqual(eval_program(program, init), expected)

    def test_reveal(self):
        '''
        Revealing the conjunction of two secrets
        '''
        program = load('two_party_conj_spec')
        scope = Scope.from_decls(program)
        delta = uniform([(b, c) for b in (False, True) for c in (False, True)], space=SPACE_HIDDEN)
        result = eval_program(program, SplitState((), delta))
        self.assertEqual(len(result), 2)
        self.assertEqual(bayes_vuln(result), F(1, 2))
        self.assertEqual(result.scope, scope)

    def test_runtime_errors(self):
        '''
        Weights depending on the state are checked when they are used
        '''
        program = parse('vis v : {0, 1}; hid h : {0..2}; v <- {0 @ h / 3, 1 @ h / 3}')
        init = SplitState((0,), hidden({1: 1}))
        self.assertRaises(DistNotOneSumming, eval_program, program, init)

        program = parse('vis v : {0, 1}; hid h : {0..2}; v := h')
        self.assertRaises(DomainViolation, eval_program, program, SplitState((0,), hidden({2: 1})))

    def test_local_in_atomic(self):
        '''
        Local blocks inside atomic brackets are refused at run time too
        '''
        program = parse('vis v : {0, 1}; skip', check=False)
        body = parse('vis v : {0, 1}; atomic { local hid t : {0, 1} := 0 in { v := t } }',
                     check=False).body
        scope = Scope.from_decls(program)
        self.assertRaises(LocalInAtomic, eval_program, body, SplitState.point((0,), ()), scope)

    def test_hyper_init(self):
        '''
        Evaluating from a hyper-distribution mixes the results
        '''
        program = load('threebox_I1')
        scope = Scope.from_decls(program)
        init = HyperDist.point(threebox_init(), scope)
        self.assertEqual(eval_program(program, init), eval_program(program, threebox_init()))


class EncryptionLemmaTestCase(HyperflowTestCase):
    '''
    Publishing e under a forgotten one-time pad is the same as skip
    '''

    def setUp(self):
        super(EncryptionLemmaTestCase, self).setUp()
        self.program = load('encryption_lemma')
        self.scope = Scope.from_decls(self.program)

    def test_points_and_uniform(self):
        '''
        From both points and the uniform prior
        '''
        for delta in ({(False,): 1}, {(True,): 1}, {(False,): F(1, 2), (True,): F(1, 2)}):
            init = SplitState((), mk_dist(delta.items(), space=SPACE_HIDDEN))
            self.assertEqual(eval_program(self.program, init), HyperDist.point(init, self.scope))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 99))
    def test_sampled_priors(self, weight):
        '''
        From sampled priors
        '''
        p = F(weight, 100)
        init = SplitState((), mk_dist([((False,), p), ((True,), 1 - p)], space=SPACE_HIDDEN))
        self.assertEqual(eval_program(self.program, init), HyperDist.point(init, self.scope))

    def test_overwritten_pad(self):
        '''
        Overwriting a global pad protects e as well, publishing e does not
        '''
        program = parse('hid e : {false, true}; vis v : {false, true}; hid k : {false, true}; '
                        '(v xor k) := e; k := false')
        init = SplitState((False,), mk_dist([((False, False), F(1, 2)), ((True, False), F(1, 2))],
                                            space=SPACE_HIDDEN))
        result = eval_program(program, init)
        self.assertEqual(bayes_vuln(result), F(1, 2))
        program = parse('hid e : {false, true}; vis v : {false, true}; hid k : {false, true}; '
                        'v := e')
        self.assertEqual(bayes_vuln(eval_program(program, init)), 1)


class LawsTestCase(HyperflowTestCase):
    '''
    Algebraic laws of the evaluator on generated programs
    '''

    def setUp(self):
        super(LawsTestCase, self).setUp()
        self.scope = generators.scope()

    @settings(max_examples=60, deadline=None)
    @given(generators.programs(), st.data())
    def test_skip_unit(self, program, data):
        '''
        skip is a left and a right unit of sequential composition
        '''
        init = data.draw(generators.split_states(self.scope))
        result = eval_program(program, init)
        self.assertEqual(eval_program(Seq(Skip(), program.body), init, self.scope), result)
        self.assertEqual(eval_program(Seq(program.body, Skip()), init, self.scope), result)

    @settings(max_examples=40, deadline=None)
    @given(generators.programs(depth=2), generators.programs(depth=2),
           generators.programs(depth=2), st.data())
    def test_associative(self, first, second, third, data):
        '''
        Sequential composition is associative
        '''
        init = data.draw(generators.split_states(self.scope))
        left = Seq(Seq(first.body, second.body), third.body)
        right = Seq(first.body, Seq(second.body, third.body))
        self.assertEqual(eval_program(left, init, self.scope),
                         eval_program(right, init, self.scope))

    @settings(max_examples=60, deadline=None)
    @given(generators.programs(locals_=False), st.data())
    def test_atomic_idempotent(self, program, data):
        '''
        Nested atomic brackets are the same as one pair
        '''
        init = data.draw(generators.split_states(self.scope))
        once = Atomic(program.body)
        self.assertEqual(eval_program(Atomic(once), init, self.scope),
                         eval_program(once, init, self.scope))

    @settings(max_examples=80, deadline=None)
    @given(generators.programs(), st.data())
    def test_functional_projection(self, program, data):
        '''
        Forgetting the split-states gives the classical meaning
        '''
        init = data.draw(generators.split_states(self.scope))
        joint = expected_value(init.delta, lambda h: classical_eval(program.body, (init.v, h),
                                                                      self.scope))
        self.assertEqual(ft(eval_program(program, init)), joint.with_space(SPACE_JOINT))

    @settings(max_examples=60, deadline=None)
    @given(generators.programs(), st.data())
    def test_weight_one(self, program, data):
        '''
        Results are full hyper-distributions over the global scope
        '''
        init = data.draw(generators.split_states(self.scope))
        result = eval_program(program, init)
        self.assertEqual(result.weight, 1)
        self.assertEqual(result.scope, self.scope)
        for state in result.split_states:
            self.assertEqual(state.delta.weight, 1)
