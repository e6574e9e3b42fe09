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
import logging
from fractions import Fraction

from django.conf import settings

logger = logging.getLogger(__name__)


def hyperflow_setting(name):
    '''
    Returns a value from the HYPERFLOW_SETTINGS dictionary

    :param name: the key, e.g. 'PRECISION_BITS'
    :return: the configured value
    '''
    return settings.HYPERFLOW_SETTINGS[name]


def format_rational(value):
    '''
    Formats a rational as "numerator/denominator", always with both parts

    This is the canonical textual form of probabilities in all JSON outputs.
    '''
    value = Fraction(value)
    return '{0}/{1}'.format(value.numerator, value.denominator)


def parse_rational(text):
    '''
    Parses "3", "-1/4" or "1/4" into a Fraction. Decimal notation is refused,
    probabilities are exact.

    :param text: the string to parse
    :return: Fraction
    '''
    text = text.strip()
    if '.' in text or 'e' in text.lower():
        raise ValueError('"{0}" is not a rational, write it as n/d'.format(text))
    return Fraction(text)


class RationalJsonEncoder(json.JSONEncoder):
    '''
    Custom JSON encoder.

    Probabilities and matrix entries are kept as exact rationals, which the
    standard encoder can't serialize. They are written as "n/d" strings so
    that no precision is lost.
    '''
    def default(self, obj):
        if isinstance(obj, Fraction):
            return format_rational(obj)
        if hasattr(obj, 'to_json'):
            return obj.to_json()
        return json.JSONEncoder.default(self, obj)


def dump_json(data):
    '''
    Serializes data with sorted keys, so the output is stable across runs
    '''
    return json.dumps(data, cls=RationalJsonEncoder, sort_keys=True, indent=2)
