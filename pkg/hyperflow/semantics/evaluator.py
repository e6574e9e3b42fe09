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
The split-state semantics: programs as maps from a split-state to a
hyper-distribution.

Syntactically atomic commands are evaluated with the largest ignorance
consistent with their classical meaning: run classically on every hidden
state and group the result by the visible outcome. Sequential composition
keeps what was learned from overwritten visible values, probabilistic
choices and conditionals reveal the branch taken.
'''

import logging
from fractions import Fraction

from hyperflow.lang.ast import (
    Hprog,
    Skip,
    Assign,
    Choose,
    XorAssign,
    Seq,
    Choice,
    Cond,
    Atomic,
    Reveal,
    Local
)
from hyperflow.lang.desugar import desugar_statement
from hyperflow.lang.expressions import evaluate
from hyperflow.probcore.dist import expected_value, posterior
from hyperflow.semantics.classical import (
    classical_eval,
    enter_local,
    local_initialiser,
    probability
)
from hyperflow.semantics.exceptions import LocalInAtomic, UnsupportedConstruct
from hyperflow.semantics.hyper import HyperDist, hide_embed, reduce_hyper, mix
from hyperflow.semantics.state import Scope, SplitState
from hyperflow.utils.constants import SPACE_JOINT

logger = logging.getLogger(__name__)


def eval_atomic_block(node, state, scope):
    '''
    Evaluates node as one atomic step from the split-state

    :param node: statement without local blocks
    :param state: SplitState
    :param scope: Scope
    :return: HyperDist
    '''
    for inner in node.walk():
        if isinstance(inner, Local):
            raise LocalInAtomic('local blocks are not allowed inside atomic', line=inner.line)
    joint = expected_value(state.delta, lambda h: classical_eval(node, (state.v, h), scope))
    return hide_embed(joint.with_space(SPACE_JOINT), scope)


def _branch(node, state, scope, weight_of):
    '''
    Part of the result contributed by one branch of a choice, the posterior
    on the branch being taken scaled by its probability
    '''
    p = expected_value(state.delta, weight_of)
    if p == 0:
        return None
    delta = posterior(state.delta, weight_of)
    return p, eval_statement(node, SplitState(state.v, delta), scope)


def _exit_local(hyper, outer):
    '''
    Forgets the local variables appended to the outer scope: visible ones
    are erased from v, hidden ones are summed out of every delta
    '''
    vis, hid = len(outer.visible), len(outer.hidden)
    entries = []
    for state, p in hyper.items():
        v = state.v[:vis]
        delta = state.delta.map(lambda h: h[:hid])
        entries.append((SplitState(v, delta), p))
    return reduce_hyper(entries, outer)


def eval_statement(node, state, scope):
    '''
    Evaluates a statement from a split-state

    :param node: statement AST, sugar is expanded on the fly
    :param state: SplitState over scope
    :param scope: Scope
    :return: canonical HyperDist over scope
    '''
    if isinstance(node, Skip):
        return HyperDist.point(state, scope)
    if isinstance(node, (Assign, Choose)):
        return eval_atomic_block(node, state, scope)
    if isinstance(node, Seq):
        first = eval_statement(node.first, state, scope)
        return mix(((p, eval_statement(node.second, s, scope)) for s, p in first.items()), scope)
    if isinstance(node, Choice):
        def q(h):
            return probability(node.prob, scope.env(state.v, h))
        parts = [_branch(node.left, state, scope, q),
                 _branch(node.right, state, scope, lambda h: 1 - q(h))]
        return mix((part for part in parts if part is not None), scope)
    if isinstance(node, Cond):
        def guard(h):
            return Fraction(int(evaluate(node.guard, scope.env(state.v, h))))
        parts = [_branch(node.then, state, scope, guard),
                 _branch(node.otherwise, state, scope, lambda h: 1 - guard(h))]
        return mix((part for part in parts if part is not None), scope)
    if isinstance(node, Atomic):
        body = node.body
        if any(isinstance(inner, (Reveal, XorAssign)) for inner in body.walk()):
            body = desugar_statement(body, scope.decls, in_atomic=True)
        return eval_atomic_block(body, state, scope)
    if isinstance(node, (Reveal, XorAssign)):
        return eval_statement(desugar_statement(node, scope.decls), state, scope)
    if isinstance(node, Local):
        inner = scope
        hyper = HyperDist.point(state, scope)
        for local_decl in node.decls:
            inner, extend = enter_local(inner, local_decl.decl)
            entered = []
            for s, p in hyper.items():
                v, _ = extend(s.v, ())
                delta = s.delta.map(lambda h: extend((), h)[1])
                entered.append((SplitState(v, delta), p))
            init = local_initialiser(local_decl)
            hyper = mix(((p, eval_statement(init, s, inner)) for s, p in entered), inner)
        body = mix(((p, eval_statement(node.body, s, inner)) for s, p in hyper.items()), inner)
        return _exit_local(body, scope)
    raise UnsupportedConstruct('cannot evaluate {0}'.format(type(node).__name__),
                               line=getattr(node, 'line', None))


def eval_program(program, state, scope=None):
    '''
    Evaluates a program from a split-state

    :param program: Hprog, or a statement together with scope
    :param state: SplitState, or a HyperDist of initial split-states
    :param scope: required when program is a bare statement
    :return: HyperDist
    '''
    if isinstance(program, Hprog):
        scope = Scope.from_decls(program) if scope is None else scope
        program = program.body
    if isinstance(state, HyperDist):
        return mix(((p, eval_statement(program, s, scope)) for s, p in state.items()), scope)
    result = eval_statement(program, state, scope)
    logger.debug('evaluated to {0} split-states'.format(len(result)))
    return result


def eval_hyper(program, hyper, scope=None):
    '''
    Evaluates a program from every split-state of a hyper-distribution and
    mixes the results
    '''
    return eval_program(program, hyper, scope=scope or hyper.scope)
