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

import logging
from collections.abc import Mapping
from fractions import Fraction

from hyperflow.probcore.exceptions import (
    NegativeWeight,
    WeightOverflow,
    ZeroWeight,
    ZeroCondition,
    SpaceMismatch
)
from hyperflow.probcore.values import sort_key, format_value, to_rational

logger = logging.getLogger(__name__)


def _as_weight(value):
    '''
    Converts the result of a weight function to a rational, booleans
    are coerced to 0/1
    '''
    if isinstance(value, bool):
        return Fraction(int(value))
    return to_rational(value)


class FiniteDist(Mapping):
    '''
    A finite discrete (sub-)distribution with exact rational weights

    Instances are immutable and always canonical: duplicate keys are added up,
    zero weights are dropped and the entries are sorted by ``sort_key``. The
    ``space`` tag records what the keys are (visible states, hidden states,
    joint states or split-states), distributions over different spaces can't
    be combined.
    '''
    __slots__ = ('_entries', '_index', 'space', '_hash')

    def __init__(self, pairs=(), space=None):
        index = {}
        for key, weight in pairs:
            weight = _as_weight(weight)
            if weight < 0:
                raise NegativeWeight('negative weight {0} for {1}'.format(weight, key))
            index[key] = index.get(key, 0) + weight

        index = {key: weight for key, weight in index.items() if weight != 0}
        if sum(index.values()) > 1:
            raise WeightOverflow('weights add up to {0}'.format(sum(index.values())))

        self._entries = tuple(sorted(index.items(), key=lambda item: sort_key(item[0])))
        self._index = index
        self.space = space
        self._hash = None

    def __getitem__(self, key):
        return self._index[key]

    def __iter__(self):
        return (key for key, weight in self._entries)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._index

    def __eq__(self, other):
        if not isinstance(other, FiniteDist):
            return NotImplemented
        return self.space == other.space and self._entries == other._entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, self._entries))
        return self._hash

    def __repr__(self):
        return '{' + ', '.join('{0}@{1}'.format(format_value(key), weight)
                               for key, weight in self._entries) + '}'

    def __reduce__(self):
        return (FiniteDist, (self._entries, self.space))

    def items(self):
        return self._entries

    def prob(self, key):
        '''
        Weight of key, zero outside the support
        '''
        return self._index.get(key, Fraction(0))

    @property
    def support(self):
        return tuple(key for key, weight in self._entries)

    @property
    def weight(self):
        return sum((weight for key, weight in self._entries), Fraction(0))

    @property
    def is_full(self):
        return self.weight == 1

    @property
    def max_weight(self):
        return max((weight for key, weight in self._entries), default=Fraction(0))

    def sort_key(self):
        '''
        Orders distributions by their weight vectors, read in key order and
        compared largest first
        '''
        return tuple((sort_key(key), -weight) for key, weight in self._entries)

    def scale(self, factor):
        '''
        Multiplies every weight by factor
        '''
        factor = to_rational(factor)
        return FiniteDist(((key, weight * factor) for key, weight in self._entries),
                          space=self.space)

    def map(self, function, space=None):
        '''
        Push-forward along function, weights of keys mapped together add up
        '''
        return FiniteDist(((function(key), weight) for key, weight in self._entries),
                          space=self.space if space is None else space)

    def restrict(self, predicate):
        '''
        The sub-distribution on the keys satisfying predicate
        '''
        return FiniteDist(((key, weight) for key, weight in self._entries if predicate(key)),
                          space=self.space)

    def with_space(self, space):
        return FiniteDist(self._entries, space=space)

    def __add__(self, other):
        if not isinstance(other, FiniteDist):
            return NotImplemented
        return FiniteDist(self._entries + other._entries, space=check_space(self, other))


def check_space(first, second):
    '''
    Returns the common space of two distributions

    An untagged distribution adopts the tag of the other one.
    '''
    if first.space is None:
        return second.space
    if second.space is None or first.space == second.space:
        return first.space
    raise SpaceMismatch('cannot combine a distribution over {0} with one over {1}'
                        .format(first.space, second.space))


def mk_dist(pairs, space=None):
    '''
    Builds a canonical distribution from (value, weight) pairs

    :param pairs: iterable of pairs, duplicate values add up
    :param space: optional space tag
    :return: FiniteDist
    '''
    return FiniteDist(pairs, space=space)


def uniform(values, space=None):
    '''
    The uniform distribution on values (duplicates get proportionally more weight)
    '''
    values = list(values)
    if not values:
        raise ZeroWeight('uniform distribution over no values')
    share = Fraction(1, len(values))
    return FiniteDist(((value, share) for value in values), space=space)


def point(value, space=None):
    '''
    The point distribution at value
    '''
    return FiniteDist(((value, 1),), space=space)


def normalize(dist):
    '''
    Scales a sub-distribution up to total weight one
    '''
    total = dist.weight
    if total == 0:
        raise ZeroWeight('cannot normalize a distribution of weight zero')
    if total == 1:
        return dist
    return FiniteDist(((key, weight / total) for key, weight in dist.items()), space=dist.space)


def expected_value(dist, function):
    '''
    Expected value of function over dist

    The function can return rationals (booleans count as 0/1) or
    distributions. In the latter case the result is the weighted mixture of
    those distributions.

    :param dist: FiniteDist
    :param function: callable taking a key of dist
    :return: Fraction or FiniteDist, depending on what function returns
    '''
    pairs = []
    total = Fraction(0)
    space = None
    mixture = False
    for key, weight in dist.items():
        result = function(key)
        if isinstance(result, FiniteDist):
            mixture = True
            space = result.space if space is None else space
            pairs.extend((inner, weight * inner_weight) for inner, inner_weight in result.items())
        else:
            total += weight * _as_weight(result)

    if mixture:
        return FiniteDist(pairs, space=space)
    return total


def posterior(dist, weight_function):
    '''
    Conditions dist on a (soft) observation

    Each key x is reweighted by weight_function(x) and the result normalized.
    Boolean weight functions give ordinary conditioning.

    :raise ZeroCondition: if the observation has probability zero
    '''
    pairs = []
    for key, weight in dist.items():
        factor = _as_weight(weight_function(key))
        if factor < 0:
            raise NegativeWeight('negative observation weight {0} for {1}'.format(factor, key))
        pairs.append((key, weight * factor))

    total = sum((weight for key, weight in pairs), Fraction(0))
    if total == 0:
        raise ZeroCondition('conditioning on an event of probability zero')
    return FiniteDist(((key, weight / total) for key, weight in pairs), space=dist.space)
