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

from rest_framework import status
from rest_framework.test import APIClient

from hyperflow.core.services import read_source
from hyperflow.core.tests.base_testcase import HyperflowTestCase


class ApiBaseTestCase(HyperflowTestCase):
    '''
    Base class for the JSON endpoints
    '''
    client_class = APIClient

    api_version = 'v1'
    '''
    The current API version to test
    '''

    resource = None
    '''
    The endpoint to be tested
    '''

    @property
    def url(self):
        '''
        Return the URL to use for testing
        '''
        return '/api/{0}/{1}/'.format(self.api_version, self.resource)

    def post(self, **data):
        return self.client.post(self.url, data, format='json')

    def test_get(self):
        '''
        The endpoints only accept POST
        '''
        if self.resource is None:
            return
        response = self.client.get(self.url)
        self.assertEqual(response.status_code, status.HTTP_405_METHOD_NOT_ALLOWED)


class EvaluateApiTestCase(ApiBaseTestCase):
    '''
    Tests the evaluate endpoint
    '''
    resource = 'evaluate'

    def test_evaluate(self):
        '''
        Test evaluating a corpus program
        '''
        response = self.post(source=read_source('threebox_I1'), init='v=bot;h~uniform')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        result, = response.data['results']
        entry, = result['hyper']
        self.assertEqual(entry['p'], '1/1')

    def test_bad_program(self):
        '''
        Syntax errors are bad requests, with the position
        '''
        response = self.post(source='vis v : {0, 1};\nv := ', init='v=0')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertTrue(response.data['detail'].startswith('Line 2'))

    def test_bad_request(self):
        '''
        Test missing fields and initial states
        '''
        response = self.post(source='vis v : {0, 1}; v := 1')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('init', response.data)

        response = self.post(source='vis v : {0, 1}; v := 1', init='v=2')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)


class MeasureApiTestCase(ApiBaseTestCase):
    '''
    Tests the measure endpoint
    '''
    resource = 'measure'

    def test_measure(self):
        '''
        Test Bayes vulnerability and guessing entropy
        '''
        source = read_source('threebox_S')
        response = self.post(source=source, init='v=bot;h~uniform')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['values'], ['2/3'])
        self.assertEqual(response.data['measure'], 'bayes')

        response = self.post(source=source, init='v=bot;h~uniform', measure='gentropy')
        self.assertEqual(response.data['values'], ['4/3'])

    def test_unknown_measure(self):
        '''
        Test an unknown measure
        '''
        response = self.post(source=read_source('threebox_S'), init='v=bot;h~uniform',
                             measure='min-entropy')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)


class RefineApiTestCase(ApiBaseTestCase):
    '''
    Tests the refine endpoint
    '''
    resource = 'refine'

    def test_refine(self):
        '''
        Test the rounding programs in both directions
        '''
        response = self.post(spec=read_source('P2'), impl=read_source('P4'), init='v=0;h=1')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data['refines'])
        self.assertEqual(len(response.data['results'][0]['witness']), 2)

        response = self.post(spec=read_source('P4'), impl=read_source('P2'), init='v=0;h=1')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data['refines'])
        result, = response.data['results']
        self.assertEqual(result['v'], '(1)')
        self.assertFalse(result['functional'])
