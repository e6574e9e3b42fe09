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
Initial states given on the command line.

A specification is a list of clauses separated by ";", one per declared
variable:

    v=bot               the variable is known to be bot
    h~uniform           uniform over the declared domain
    h~2                 certainly 2
    h~{0@1/3, 1@2/3}    an explicit full distribution
    h~sample:10         ten random distributions from the seeded generator

"=" and "~" with a single value mean the same. A visible variable with a
proper distribution yields several initial split-states, the joint prior
grouped by the visible part.
'''

import itertools
import logging
import random
import re
from fractions import Fraction

from hyperflow.core.exceptions import InvalidInitSpec
from hyperflow.probcore.dist import mk_dist
from hyperflow.probcore.values import format_value
from hyperflow.semantics.hyper import hide_embed
from hyperflow.utils.constants import SPACE_JOINT
from hyperflow.utils.helpers import format_rational, hyperflow_setting, parse_rational

logger = logging.getLogger(__name__)

POINT = 'point'
UNIFORM = 'uniform'
EXPLICIT = 'explicit'
SAMPLE = 'sample'

CLAUSE_RE = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*([=~])\s*(.+?)\s*$')
SAMPLE_RE = re.compile(r'^sample\s*:\s*(\d+)$')

# Weights of sampled priors are drawn from 0..SAMPLE_GRAIN before normalising
SAMPLE_GRAIN = 10


class Prior(object):
    '''
    The initial distribution of one variable
    '''
    __slots__ = ('kind', 'values', 'count')

    def __init__(self, kind, values=(), count=0):
        self.kind = kind
        self.values = tuple(values)
        self.count = count

    def marginal(self, domain, rng):
        '''
        The distribution as (value, weight) pairs, drawing from rng for
        sampled priors
        '''
        if self.kind == POINT:
            return [(self.values[0], Fraction(1))]
        if self.kind == UNIFORM:
            return [(value, Fraction(1, len(domain.values))) for value in domain.values]
        if self.kind == EXPLICIT:
            return list(self.values)
        weights = [0]
        while not any(weights):
            weights = [rng.randint(0, SAMPLE_GRAIN) for value in domain.values]
        total = sum(weights)
        return [(value, Fraction(w, total)) for value, w in zip(domain.values, weights) if w]

    def __repr__(self):
        return 'Prior({0}, {1!r})'.format(self.kind, self.values or self.count)


def _value(text, decl):
    '''
    The domain value of decl written as text
    '''
    for value in decl.domain.values:
        if format_value(value) == text:
            return value
    raise InvalidInitSpec('{0} is not in the domain of {1}'.format(text, decl.name))


def _parse_prior(text, decl):
    if text == UNIFORM:
        return Prior(UNIFORM)
    match = SAMPLE_RE.match(text)
    if match:
        count = int(match.group(1))
        if count < 1:
            raise InvalidInitSpec('sample needs at least one prior')
        return Prior(SAMPLE, count=count)
    if text.startswith('{'):
        if not text.endswith('}'):
            raise InvalidInitSpec('unterminated distribution for {0}'.format(decl.name))
        pairs = []
        for entry in text[1:-1].split(','):
            value, at, weight = entry.partition('@')
            if not at:
                raise InvalidInitSpec('expected value@weight, got "{0}"'.format(entry.strip()))
            try:
                weight = parse_rational(weight)
            except (ValueError, ZeroDivisionError):
                raise InvalidInitSpec('"{0}" is not a rational'.format(weight.strip()))
            if weight < 0:
                raise InvalidInitSpec('negative weight for {0}'.format(decl.name))
            pairs.append((_value(value.strip(), decl), weight))
        if sum(w for v, w in pairs) != 1:
            raise InvalidInitSpec('the prior of {0} does not add up to one'.format(decl.name))
        return Prior(EXPLICIT, [(v, w) for v, w in pairs if w])
    return Prior(POINT, [_value(text, decl)])


class InitSpec(object):
    '''
    Initial states for every declared variable of a scope

    :param text: the specification
    :param scope: Scope of the program
    :param seed: seed of the generator for sampled priors, DEFAULT_SEED
                 when not given
    '''

    def __init__(self, text, scope, seed=None):
        self.text = text
        self.scope = scope
        self.seed = hyperflow_setting('DEFAULT_SEED') if seed is None else seed
        self.priors = {}

        for clause in text.split(';'):
            if not clause.strip():
                continue
            match = CLAUSE_RE.match(clause)
            if not match:
                raise InvalidInitSpec('cannot read "{0}"'.format(clause.strip()))
            name, sign, prior = match.groups()
            if name not in scope:
                raise InvalidInitSpec('{0} is not declared'.format(name))
            if name in self.priors:
                raise InvalidInitSpec('{0} is given twice'.format(name))
            self.priors[name] = _parse_prior(prior, scope.declaration(name))

        missing = [decl.name for decl in scope.decls if decl.name not in self.priors]
        if missing:
            raise InvalidInitSpec('no initial value for {0}'.format(', '.join(missing)))

    @property
    def count(self):
        '''
        Number of initial points, the largest sample count
        '''
        return max([p.count for p in self.priors.values() if p.kind == SAMPLE] or [1])

    @property
    def is_sampled(self):
        return any(p.kind == SAMPLE for p in self.priors.values())

    def joint_priors(self):
        '''
        One joint distribution over (v, h) pairs per initial point, the
        variables independent of each other
        '''
        rng = random.Random(self.seed)
        result = []
        for index in range(self.count):
            visible = [self.priors[d.name].marginal(d.domain, rng) for d in self.scope.visible]
            hidden = [self.priors[d.name].marginal(d.domain, rng) for d in self.scope.hidden]
            pairs = []
            for v_pairs in itertools.product(*visible):
                v = tuple(value for value, weight in v_pairs)
                v_weight = _product(weight for value, weight in v_pairs)
                for h_pairs in itertools.product(*hidden):
                    h = tuple(value for value, weight in h_pairs)
                    pairs.append(((v, h), v_weight * _product(w for value, w in h_pairs)))
            result.append(mk_dist(pairs, space=SPACE_JOINT))
        logger.debug('{0} initial points from "{1}", seed {2}'.format(len(result), self.text,
                                                                     self.seed))
        return result

    def hypers(self):
        '''
        The initial hyper-distribution of every point
        '''
        return [hide_embed(joint, self.scope) for joint in self.joint_priors()]

    def split_states(self):
        '''
        All initial split-states, for pointwise comparisons
        '''
        states = []
        for hyper in self.hypers():
            for state in hyper.split_states:
                if state not in states:
                    states.append(state)
        return states

    def to_json(self):
        data = {'init': self.text, 'points': self.count}
        if self.is_sampled:
            data['seed'] = self.seed
        return data

    def describe(self, state):
        '''
        Short text for one initial split-state
        '''
        hidden = ', '.join('{0}@{1}'.format(format_value(h), format_rational(p))
                           for h, p in state.delta.items())
        return '{0} {{{1}}}'.format(format_value(state.v), hidden)


def _product(weights):
    result = Fraction(1)
    for weight in weights:
        result *= weight
    return result
