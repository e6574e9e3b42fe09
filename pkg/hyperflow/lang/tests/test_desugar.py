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

from hyperflow.core.tests.base_testcase import HyperflowTestCase, corpus_path
from hyperflow.lang.ast import (
    Assign,
    Binary,
    Choose,
    Domain,
    Literal,
    Local,
    LocalDecl,
    Reveal,
    Seq,
    Skip,
    Uniform,
    Var,
    VarDecl,
    VISIBLE,
    XorAssign,
)
from hyperflow.lang.desugar import desugar, desugar_statement, expression_range
from hyperflow.lang.parser import parse


class DesugarTestCase(HyperflowTestCase):
    '''
    Tests the rewriting of reveal and xor assignments
    '''

    def test_xor_assignment(self):
        '''
        (v xor k) := e chooses v uniformly and sets k to v xor e
        '''
        with open(corpus_path('encryption_lemma')) as source:
            program = desugar(parse(source.read()))
        self.assertIsInstance(program.body, Local)
        self.assertEqual(program.body.body, Seq(
            Choose('v', Uniform([Literal(False), Literal(True)])),
            Assign('k', Binary('xor', Var('v'), Var('e')))))

    def test_xor_order(self):
        '''
        The variable declared first is the one chosen uniformly
        '''
        program = parse('hid a, b, e : {false, true}; (b xor a) := e')
        self.assertEqual(desugar(program).body.first.target, 'a')

    def test_reveal(self):
        '''
        reveal e assigns e to a fresh visible local
        '''
        program = desugar(parse('hid b, c : {false, true}; reveal b and c'))
        declaration = LocalDecl(VarDecl('_r0', Domain([False, True]), VISIBLE), Literal(False))
        expected = Local([declaration],
                         Assign('_r0', Binary('and', Var('b'), Var('c'))))
        self.assertEqual(program.body, expected)

    def test_reveal_fresh_names(self):
        '''
        Fresh names avoid every declared name
        '''
        program = desugar(parse('vis _r0 : {0, 1}; hid h : {0..3}; reveal h mod 2'))
        local = program.body
        self.assertEqual(local.decls[0].decl.name, '_r1')
        self.assertEqual(local.decls[0].decl.domain, Domain([0, 1]))

    def test_reveal_in_atomic(self):
        '''
        A revelation inside an atomic block has no effect
        '''
        program = desugar(parse('hid h : {0, 1}; atomic { reveal h }'))
        self.assertEqual(program.body.body, Skip())

    def test_no_sugar_left(self):
        '''
        Nothing to desugar in the judges' implementation afterwards
        '''
        with open(corpus_path('three_judges_fig3')) as source:
            program = desugar(parse(source.read()))
        self.assertFalse([node for node in program.body.walk()
                          if isinstance(node, (Reveal, XorAssign))])

    def test_statement(self):
        '''
        Desugaring a single statement given the declarations
        '''
        program = parse('hid h : {1..3}; reveal h mod 2')
        node = desugar_statement(program.body, program.decls)
        self.assertEqual(node.decls[0].decl.domain, Domain([0, 1]))

    def test_expression_range(self):
        '''
        The values an expression takes over the domains of its variables
        '''
        program = parse('hid h : {1..3}; skip')
        scope = {decl.name: decl for decl in program.decls}
        self.assertEqual(expression_range(parse('hid h : {1..3}; h := h div 2').body.expr, scope),
                         Domain([0, 1]))
        self.assertEqual(expression_range(Binary('=', Var('h'), Literal(1)), scope),
                         Domain([False, True]))
