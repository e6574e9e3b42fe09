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
The classical relational semantics: programs as maps from a state (v, h) to
a distribution over final states, ignoring who can see what.
'''

import logging
from fractions import Fraction

from hyperflow.lang.ast import (
    Skip,
    Assign,
    Choose,
    XorAssign,
    Seq,
    Choice,
    Cond,
    Atomic,
    Reveal,
    Local,
    Uniform,
    UniformDomain,
    Explicit,
)
from hyperflow.lang.desugar import desugar_statement
from hyperflow.lang.expressions import evaluate
from hyperflow.probcore.dist import FiniteDist, point, uniform, expected_value
from hyperflow.probcore.values import format_value, value_kind
from hyperflow.semantics.exceptions import (
    DistNotOneSumming,
    DomainViolation,
    ProbabilityOutOfRange,
    UnsupportedConstruct
)
from hyperflow.utils.constants import SPACE_JOINT

logger = logging.getLogger(__name__)


def check_domain(decl, value):
    if value not in decl.domain or value_kind(value) != decl.domain.kind:
        raise DomainViolation('{0} is outside the domain of {1}'
                              .format(format_value(value), decl.name), line=decl.line)
    return value


def probability(expr, env):
    '''
    Value of a probability expression, which must lie in [0, 1]
    '''
    value = evaluate(expr, env)
    if isinstance(value, bool) or value_kind(value) != 'num' or not 0 <= value <= 1:
        raise ProbabilityOutOfRange('probability {0} outside [0,1]'.format(format_value(value)),
                                    line=expr.line)
    return Fraction(value)


def dist_value(dist, env, decl):
    '''
    Evaluates a distribution expression in a state

    :param dist: Uniform, UniformDomain, Explicit or a plain expression
    :param env: variable name -> value
    :param decl: declaration of the target variable
    :return: full FiniteDist over the domain of decl
    :raise DistNotOneSumming: explicit weights not adding up to one
    '''
    if isinstance(dist, UniformDomain):
        return uniform(decl.domain.values)
    if isinstance(dist, Uniform):
        return uniform([check_domain(decl, evaluate(item, env)) for item in dist.items])
    if isinstance(dist, Explicit):
        pairs = []
        for entry in dist.entries:
            weight = evaluate(entry.prob, env)
            if isinstance(weight, bool) or value_kind(weight) != 'num' or weight < 0:
                raise DistNotOneSumming('weight {0} is not a probability'
                                        .format(format_value(weight)), line=dist.line)
            pairs.append((evaluate(entry.value, env), Fraction(weight)))
        total = sum((weight for value, weight in pairs), Fraction(0))
        if total != 1:
            raise DistNotOneSumming('weights add up to {0} in state {1}'.format(
                total, ', '.join('{0}={1}'.format(k, format_value(x))
                                 for k, x in sorted(env.items()))),
                line=dist.line)
        for value, weight in pairs:
            if weight:
                check_domain(decl, value)
        return FiniteDist(pairs)
    return point(check_domain(decl, evaluate(dist, env)))


def local_initialiser(local_decl):
    '''
    The statement initialising a local variable on entry of its block
    '''
    decl, init = local_decl.decl, local_decl.init
    if init is None:
        return Choose(decl.name, UniformDomain(), line=local_decl.line)
    if isinstance(init, (Uniform, UniformDomain, Explicit)):
        return Choose(decl.name, init, line=local_decl.line)
    return Assign(decl.name, init, line=local_decl.line)


def enter_local(scope, decl):
    '''
    The scope with decl added and the function extending states of the
    enclosing scope with the first value of the domain
    '''
    first = decl.domain.values[0]
    if decl.visibility.is_visible:
        return scope.extend(decl), lambda v, h: (v + (first,), h)
    return scope.extend(decl), lambda v, h: (v, h + (first,))


def classical_eval(node, state, scope):
    '''
    Runs a statement on a single state

    :param node: statement AST
    :param state: pair (v, h) of value tuples
    :param scope: the Scope the state is read in
    :return: full FiniteDist over (v, h) pairs
    '''
    v, h = state
    if isinstance(node, Skip):
        return point(state, space=SPACE_JOINT)
    if isinstance(node, Assign):
        decl = scope.declaration(node.target)
        value = check_domain(decl, evaluate(node.expr, scope.env(v, h)))
        return point(scope.update(v, h, node.target, value), space=SPACE_JOINT)
    if isinstance(node, Choose):
        decl = scope.declaration(node.target)
        values = dist_value(node.dist, scope.env(v, h), decl)
        return values.map(lambda value: scope.update(v, h, node.target, value), space=SPACE_JOINT)
    if isinstance(node, Seq):
        first = classical_eval(node.first, state, scope)
        return expected_value(first, lambda s: classical_eval(node.second, s, scope)) \
            .with_space(SPACE_JOINT)
    if isinstance(node, (Choice, Cond)):
        if isinstance(node, Choice):
            q = probability(node.prob, scope.env(v, h))
            left, right = node.left, node.right
        else:
            q = Fraction(int(evaluate(node.guard, scope.env(v, h))))
            left, right = node.then, node.otherwise
        parts = []
        if q:
            parts.extend((s, q * p) for s, p in classical_eval(left, state, scope).items())
        if q != 1:
            parts.extend((s, (1 - q) * p) for s, p in classical_eval(right, state, scope).items())
        return FiniteDist(parts, space=SPACE_JOINT)
    if isinstance(node, Atomic):
        return classical_eval(node.body, state, scope)
    if isinstance(node, Reveal):
        # publishing changes no variable
        return point(state, space=SPACE_JOINT)
    if isinstance(node, XorAssign):
        return classical_eval(desugar_statement(node, scope.decls), state, scope)
    if isinstance(node, Local):
        inner = scope
        current = point(state, space=SPACE_JOINT)
        for local_decl in node.decls:
            inner, extend = enter_local(inner, local_decl.decl)
            init = local_initialiser(local_decl)
            current = expected_value(current, lambda s: classical_eval(init, extend(*s), inner))
        final = expected_value(current, lambda s: classical_eval(node.body, s, inner))
        vis, hid = len(scope.visible), len(scope.hidden)
        return final.map(lambda s: (s[0][:vis], s[1][:hid]), space=SPACE_JOINT)
    raise UnsupportedConstruct('cannot evaluate {0}'.format(type(node).__name__),
                               line=getattr(node, 'line', None))
