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

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F
from hyperflow.core.tests import generators
from hyperflow.lang.ast import Atomic, Seq
from hyperflow.lang.parser import parse
from hyperflow.probcore.dist import uniform
from hyperflow.semantics.evaluator import eval_program
from hyperflow.semantics.exceptions import UnsupportedConstruct
from hyperflow.semantics.normal_form import (
    check_atomic_distribution,
    eval_via_normal_form,
    normal_form,
)
from hyperflow.semantics.state import Scope, SplitState
from hyperflow.utils.constants import SPACE_HIDDEN


class NormalFormTestCase(HyperflowTestCase):
    '''
    Tests the matrix normal form against the direct evaluator
    '''

    def test_sizes(self):
        '''
        One matrix per visible outcome of every atomic step
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; skip')
        self.assertEqual(normal_form(program).size, 2)
        program = parse('vis v : {0, 1}; hid h : {0, 1}; v := h; v := 0')
        form = normal_form(program)
        self.assertEqual(form.size, 4)
        self.assertEqual(len(form.matrices()), 4)
        program = parse('vis v : {0, 1}; hid h : {0, 1}; v := h [1/2] skip')
        self.assertEqual(normal_form(program).size, 4)

    def test_three_box(self):
        '''
        The normal form reproduces the three-box hyper-distribution
        '''
        program = parse('vis v : {bot, w, b}; hid h : {0..2}; '
                        'h <- uniform{0, 1, 2}; v <- {w @ h/2, b @ 1 - h/2}; v := bot')
        scope = Scope.from_decls(program)
        init = SplitState.point(scope.visible_states()[0], (0,))
        self.assertEqual(eval_via_normal_form(program, init), eval_program(program, init))

    def test_unsupported(self):
        '''
        Local blocks and revelations have no normal form
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; reveal h')
        self.assertRaises(UnsupportedConstruct, normal_form, program)
        program = parse('vis v : {0, 1}; hid h : {0, 1}; local hid t : {0, 1} := h in { skip }')
        self.assertRaises(UnsupportedConstruct, normal_form, program)

    def test_reveal_inside_atomic(self):
        '''
        A revelation inside atomic brackets is harmless
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; atomic { reveal h; v := 1 }')
        init = SplitState((0,), uniform([(0,), (1,)], space=SPACE_HIDDEN))
        self.assertEqual(eval_via_normal_form(program, init), eval_program(program, init))

    @settings(max_examples=200, deadline=None)
    @given(generators.programs(locals_=False, reveal=False), st.data())
    def test_agrees_with_evaluator(self, program, data):
        '''
        Both backends give the same hyper-distribution
        '''
        init = data.draw(generators.split_states(generators.scope()))
        self.assertEqual(eval_via_normal_form(program, init), eval_program(program, init))


class AtomicityTestCase(HyperflowTestCase):
    '''
    Tests when two atomic steps may be merged into one
    '''

    def test_overwritten_visible(self):
        '''
        v := h then v := 0: the intermediate v is not determined
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; v := h; v := 0')
        scope = Scope.from_decls(program)
        result = check_atomic_distribution(program.body.first, program.body.second, scope)
        self.assertFalse(result.holds)
        self.assertEqual(result.witness, ((0,), (0,), (0,), (1,)))

    def test_encryption_steps(self):
        '''
        Choosing the pad and encrypting with it may be merged
        '''
        program = parse('vis v : {false, true}; hid h : {false, true}; hid e : {false, true}; '
                        'v <- uniform{false, true}; h := v xor e')
        scope = Scope.from_decls(program)
        first, second = program.body.first, program.body.second
        result = check_atomic_distribution(first, second, scope)
        self.assertTrue(result.holds)
        self.assertIsNone(result.witness)

        init = SplitState((False,), uniform([(h, e) for h in (False, True) for e in (False, True)],
                                            space=SPACE_HIDDEN))
        merged = eval_program(Atomic(Seq(first, second)), init, scope)
        separate = eval_program(Seq(Atomic(first), Atomic(second)), init, scope)
        self.assertEqual(merged, separate)
