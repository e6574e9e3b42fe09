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

'''
Values of the language and the total order used to keep every container in a
canonical order.

Values are plain Python objects: ``bool`` for booleans, ``int`` and
``Fraction`` for numbers (integral fractions are always stored as ``int``) and
``Atom`` for the symbolic constants declared in domains such as ``{w, b, bot}``.
'''

from fractions import Fraction

from hyperflow.utils.constants import TRUE_TOKEN, FALSE_TOKEN


class Atom(object):
    '''
    A symbolic constant of a declared domain

    Atoms compare by name. The rank is the position in the domain the atom
    was first declared in and is only used for ordering.
    '''
    __slots__ = ('name', 'rank')

    def __init__(self, name, rank=0):
        self.name = name
        self.rank = rank

    def __eq__(self, other):
        return isinstance(other, Atom) and self.name == other.name

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('atom', self.name))

    def __lt__(self, other):
        return (self.rank, self.name) < (other.rank, other.name)

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (Atom, (self.name, self.rank))


def canonical_number(value):
    '''
    Stores integral rationals as int, so 2/2 and 1 are the same value

    :param value: int or Fraction
    :return: int or Fraction
    '''
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def to_rational(value):
    '''
    Converts a numeric language value to an exact rational

    Floats and booleans are refused, probabilities must stay exact.
    '''
    if isinstance(value, bool):
        raise TypeError('expected a number, got a boolean')
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError('expected an exact rational, got {0!r}'.format(value))


def value_kind(value):
    '''
    Returns the kind of a value: 'bool', 'num' or 'atom'
    '''
    if isinstance(value, bool):
        return 'bool'
    if isinstance(value, (int, Fraction)):
        return 'num'
    if isinstance(value, Atom):
        return 'atom'
    raise TypeError('not a language value: {0!r}'.format(value))


def sort_key(obj):
    '''
    Total order key for values, state tuples and anything providing its own
    ``sort_key`` method (split-states, distributions)

    Booleans sort before numbers, numbers before atoms.
    '''
    if isinstance(obj, bool):
        return (0, int(obj))
    if isinstance(obj, (int, Fraction)):
        return (1, Fraction(obj))
    if isinstance(obj, Atom):
        return (2, obj.rank, obj.name)
    if isinstance(obj, tuple):
        return (3, tuple(sort_key(item) for item in obj))
    return obj.sort_key()


def format_value(value):
    '''
    Textual form of a value, as used in programs and JSON output
    '''
    if isinstance(value, bool):
        return TRUE_TOKEN if value else FALSE_TOKEN
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return '{0}/{1}'.format(value.numerator, value.denominator)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Atom):
        return value.name
    if isinstance(value, tuple):
        return '(' + ', '.join(format_value(item) for item in value) + ')'
    return str(value)
