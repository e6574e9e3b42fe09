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

import json

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F
from hyperflow.refine.matrices import RatMatrix
from hyperflow.utils.exceptions import HyperflowError
from hyperflow.utils.helpers import dump_json, format_rational, hyperflow_setting, parse_rational


class RationalFormatTestCase(HyperflowTestCase):
    '''
    Test the textual form of rationals
    '''

    def test_format(self):
        '''
        Test formatting, the denominator is always written
        '''
        self.assertEqual(format_rational(F(1, 3)), '1/3')
        self.assertEqual(format_rational(F(-6, 4)), '-3/2')
        self.assertEqual(format_rational(1), '1/1')
        self.assertEqual(format_rational(0), '0/1')

    def test_parse(self):
        '''
        Test parsing, decimals are refused
        '''
        self.assertEqual(parse_rational('3'), F(3))
        self.assertEqual(parse_rational(' -1/4 '), F(-1, 4))
        self.assertEqual(parse_rational(format_rational(F(22, 7))), F(22, 7))
        self.assertRaises(ValueError, parse_rational, '0.5')
        self.assertRaises(ValueError, parse_rational, '1e3')
        self.assertRaises(ValueError, parse_rational, 'half')
        self.assertRaises(ZeroDivisionError, parse_rational, '1/0')


class JsonEncoderTestCase(HyperflowTestCase):
    '''
    Test the JSON encoder
    '''

    def test_dump(self):
        '''
        Fractions become strings, objects their JSON form, keys are sorted
        '''
        text = dump_json({'p': F(1, 2), 'matrix': RatMatrix([[1, F(1, 3)]]), 'a': [F(2)]})
        self.assertEqual(json.loads(text), {'a': ['2/1'], 'matrix': [['1/1', '1/3']], 'p': '1/2'})
        self.assertLess(text.index('"a"'), text.index('"matrix"'))

    def test_unknown(self):
        '''
        Other objects are refused
        '''
        self.assertRaises(TypeError, dump_json, {'x': object()})


class SettingsTestCase(HyperflowTestCase):
    '''
    Test reading the application settings
    '''

    def test_defaults(self):
        '''
        Test the default values
        '''
        self.assertEqual(hyperflow_setting('SHANNON_TOLERANCE'), F(1, 10 ** 9))
        self.assertEqual(hyperflow_setting('VERTEX_CAP'), 2 ** 20)
        self.assertFalse(hyperflow_setting('ALLOW_UNIFORM_LOCAL_INIT'))
        self.assertTrue(hyperflow_setting('CORPUS_DIR').endswith('corpus'))

    def test_override(self):
        '''
        Single keys can be overridden
        '''
        with self.hyperflow_settings(VERTEX_CAP=10):
            self.assertEqual(hyperflow_setting('VERTEX_CAP'), 10)
            self.assertEqual(hyperflow_setting('DEFAULT_SEED'), 1)
        self.assertEqual(hyperflow_setting('VERTEX_CAP'), 2 ** 20)


class ExceptionTestCase(HyperflowTestCase):
    '''
    Test the exception base class
    '''

    def test_details(self):
        '''
        The message and details are kept
        '''
        error = HyperflowError('broken', line=3)
        self.assertEqual(error.message, 'broken')
        self.assertEqual(error.details, {'line': 3})
        self.assertEqual(str(error), 'broken')
