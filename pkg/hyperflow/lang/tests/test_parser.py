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

from hypothesis import given, settings

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F, corpus_path
from hyperflow.core.tests.generators import program_sources
from hyperflow.lang.ast import (
    Choose,
    Cond,
    Domain,
    Explicit,
    Literal,
    Skip,
    Weighted,
)
from hyperflow.lang.exceptions import HprogSyntaxError
from hyperflow.lang.parser import parse, parse_expression, parse_source
from hyperflow.lang.printer import pretty_print
from hyperflow.probcore.values import Atom

CORPUS = ['threebox_S', 'threebox_I1', 'threebox_I2', 'P2', 'P4', 'encryption_lemma',
          'two_party_conj', 'two_party_conj_spec', 'three_judges_spec', 'three_judges_fig2',
          'three_judges_fig3']


def read_corpus(name):
    with open(corpus_path(name)) as source:
        return source.read()


class ParserTestCase(HyperflowTestCase):
    '''
    Tests turning program text into syntax trees
    '''

    def test_corpus(self):
        '''
        Every bundled program parses and validates
        '''
        for name in CORPUS:
            program = parse(read_corpus(name))
            self.assertTrue(program.decls, name)

    def test_declarations(self):
        '''
        Ranges, atoms and shared declarations
        '''
        program = parse(read_corpus('threebox_S'))
        v, h = program.decls
        self.assertEqual(v.name, 'v')
        self.assertTrue(v.visibility.is_visible)
        self.assertEqual(v.domain, Domain([Atom('bot'), Atom('w'), Atom('b')]))
        self.assertEqual(h.domain, Domain([0, 1, 2]))
        self.assertFalse(h.visibility.is_visible)

        program = parse(read_corpus('two_party_conj_spec'))
        self.assertEqual([d.name for d in program.decls], ['b', 'c'])

    def test_infix_distribution(self):
        '''
        h <- 0 [1/3] 1 is the distribution {0 @ 1/3, 1 @ 2/3}
        '''
        program = parse('hid h : {0, 1}; h <- 0 [1/3] 1')
        expected = Choose('h', Explicit([Weighted(Literal(0), Literal(F(1, 3))),
                                         Weighted(Literal(1), Literal(F(2, 3)))]))
        self.assertEqual(program.body, expected)

    def test_if_without_else(self):
        '''
        A conditional without else branch has skip as else branch
        '''
        program = parse('vis v : {0, 1}; hid h : {0, 1}; if h = 0 then v := 1 fi')
        self.assertIsInstance(program.body, Cond)
        self.assertEqual(program.body.otherwise, Skip())

    def test_comments_and_trailing_semicolon(self):
        '''
        Comments are ignored, a trailing semicolon is accepted
        '''
        first = parse('# nothing\nvis v : {0, 1}; v := 1; # set\n')
        second = parse('vis v : {0, 1}; v := 1')
        self.assertEqual(first, second)

    def test_atoms_resolved(self):
        '''
        Names of atoms in expressions become literals
        '''
        program = parse(read_corpus('threebox_S'))
        self.assertEqual(program.body.second.expr, Literal(Atom('bot')))

    def test_constant_folding(self):
        '''
        Variable free sub-expressions are folded
        '''
        program = parse('vis v : {0..4}; v := 1 + 2 * 1')
        self.assertEqual(program.body.expr, Literal(3))

    def test_syntax_error(self):
        '''
        Malformed programs raise HprogSyntaxError with a position
        '''
        with self.assertRaises(HprogSyntaxError) as context:
            parse('vis v : {0, 1};\nv := := 1')
        self.assertEqual(context.exception.line, 2)
        self.assertRaises(HprogSyntaxError, parse, 'vis v : {0, 1}; v :=')
        self.assertRaises(HprogSyntaxError, parse, 'v := 1 @')

    def test_parse_expression(self):
        '''
        Expressions parse in the context of a program's declarations
        '''
        program = parse(read_corpus('threebox_S'))
        self.assertEqual(parse_expression('bot', program), Literal(Atom('bot')))
        self.assertEqual(parse_expression('2 * 2', program), Literal(4))

    def test_unchecked(self):
        '''
        parse_source does not validate
        '''
        program = parse_source('vis v : {0, 1}; z := 1')
        self.assertEqual(program.body.target, 'z')


class RoundTripTestCase(HyperflowTestCase):
    '''
    Printed programs parse back to the same tree
    '''

    def test_corpus_round_trip(self):
        '''
        Round trip of every bundled program
        '''
        for name in CORPUS:
            program = parse(read_corpus(name))
            self.assertEqual(parse(pretty_print(program)), program, name)

    @settings(max_examples=150, deadline=None)
    @given(program_sources())
    def test_generated_round_trip(self, source):
        '''
        Round trip of generated programs
        '''
        program = parse(source)
        self.assertEqual(parse(pretty_print(program)), program)
