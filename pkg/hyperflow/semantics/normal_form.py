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
The matrix normal form of programs without local blocks.

Every program is a finite family of square matrices over the (v, h) pairs of
its scope: the classical matrix of an atomic step followed by the projection
on one visible outcome, products of those along sequential composition, and
rows scaled by the choice probability for choices and conditionals. Applying
every matrix of the family to a split-state, read as a row vector, and
grouping the non-zero results gives the same hyper-distribution as the
direct evaluator.

The families are kept factored so a sequence of n steps is never
multiplied out unless asked for with ``matrices()``.
'''

import itertools
import logging
from collections import namedtuple
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
from hyperflow.probcore.dist import FiniteDist, normalize
from hyperflow.refine.matrices import RatMatrix
from hyperflow.semantics.classical import classical_eval, probability
from hyperflow.semantics.exceptions import UnsupportedConstruct
from hyperflow.semantics.hyper import reduce_hyper
from hyperflow.semantics.state import Scope, SplitState
from hyperflow.utils.constants import SPACE_HIDDEN
from hyperflow.utils.exceptions import InternalAssertion

logger = logging.getLogger(__name__)

AtomicityResult = namedtuple('AtomicityResult', ['holds', 'witness'])


class StateIndex(object):
    '''
    Canonical numbering of the (v, h) pairs of a scope
    '''

    def __init__(self, scope):
        self.scope = scope
        self.states = scope.joint_states()
        self.index = {state: i for i, state in enumerate(self.states)}
        self.visible = scope.visible_states()

    def __len__(self):
        return len(self.states)

    def row(self, state):
        '''
        The split-state as a row vector
        '''
        row = [Fraction(0)] * len(self.states)
        for h, p in state.delta.items():
            row[self.index[(state.v, h)]] = p
        return row

    def projector(self, v):
        '''
        Diagonal matrix keeping the pairs with visible part v
        '''
        return RatMatrix.diagonal(int(state[0] == v) for state in self.states)


def classical_matrix(node, index):
    '''
    The row-stochastic matrix of the classical meaning of node

    :param node: statement
    :param index: StateIndex of the scope
    :return: RatMatrix
    '''
    rows = []
    for state in index.states:
        row = [Fraction(0)] * len(index)
        for target, p in classical_eval(node, state, index.scope).items():
            row[index.index[target]] = p
        rows.append(row)
    return RatMatrix(rows, len(index))


class AtomicForm(object):
    '''
    One atomic step: the classical matrix C, then the projection on each
    visible outcome
    '''

    def __init__(self, matrix, index):
        self.matrix = matrix
        self.index = index

    @property
    def size(self):
        return len(self.index.visible)

    def matrices(self):
        return [self.matrix * self.index.projector(v) for v in self.index.visible]

    def apply(self, row):
        result = self.matrix.left_apply(row)
        for v in self.index.visible:
            part = [x if self.index.states[i][0] == v else 0 for i, x in enumerate(result)]
            if any(part):
                yield part


class ChoiceForm(object):
    '''
    Rows scaled by q for the left branch and by 1 - q for the right one
    '''

    def __init__(self, left, right, weights):
        self.left = left
        self.right = right
        self.weights = weights

    @property
    def size(self):
        return self.left.size + self.right.size

    def matrices(self):
        q = RatMatrix.diagonal(self.weights)
        not_q = RatMatrix.diagonal(1 - w for w in self.weights)
        return [q * m for m in self.left.matrices()] + [not_q * m for m in self.right.matrices()]

    def apply(self, row):
        left = [x * w for x, w in zip(row, self.weights)]
        right = [x * (1 - w) for x, w in zip(row, self.weights)]
        if any(left):
            for result in self.left.apply(left):
                yield result
        if any(right):
            for result in self.right.apply(right):
                yield result


class SeqForm(object):

    def __init__(self, first, second):
        self.first = first
        self.second = second

    @property
    def size(self):
        return self.first.size * self.second.size

    def matrices(self):
        return [a * b for a, b in itertools.product(self.first.matrices(), self.second.matrices())]

    def apply(self, row):
        for middle in self.first.apply(row):
            for result in self.second.apply(middle):
                yield result


class NormalForm(object):
    '''
    The normal form of a statement over a scope
    '''

    def __init__(self, root, index):
        self.root = root
        self.index = index

    @property
    def scope(self):
        return self.index.scope

    @property
    def size(self):
        return self.root.size

    def matrices(self):
        return self.root.matrices()

    def apply(self, state):
        '''
        The non-zero rows state x M_i, one for each matrix of the family
        '''
        return list(self.root.apply(self.index.row(state)))


def _build(node, index):
    if isinstance(node, (Skip, Assign, Choose)):
        return AtomicForm(classical_matrix(node, index), index)
    if isinstance(node, Atomic):
        body = node.body
        for inner in body.walk():
            if isinstance(inner, Local):
                raise UnsupportedConstruct('local block inside atomic', line=inner.line)
        if any(isinstance(inner, (Reveal, XorAssign)) for inner in body.walk()):
            body = desugar_statement(body, index.scope.decls, in_atomic=True)
        return AtomicForm(classical_matrix(body, index), index)
    if isinstance(node, XorAssign):
        return _build(desugar_statement(node, index.scope.decls), index)
    if isinstance(node, Seq):
        return SeqForm(_build(node.first, index), _build(node.second, index))
    if isinstance(node, Choice):
        weights = [probability(node.prob, index.scope.env(*state)) for state in index.states]
        return ChoiceForm(_build(node.left, index), _build(node.right, index), weights)
    if isinstance(node, Cond):
        weights = [Fraction(int(evaluate(node.guard, index.scope.env(*state))))
                   for state in index.states]
        return ChoiceForm(_build(node.then, index), _build(node.otherwise, index), weights)
    if isinstance(node, (Local, Reveal)):
        raise UnsupportedConstruct('the normal form does not cover local blocks or reveal',
                                   line=node.line)
    raise UnsupportedConstruct('cannot build the normal form of {0}'.format(type(node).__name__),
                               line=getattr(node, 'line', None))


def normal_form(program, scope=None):
    '''
    Builds the normal form of a program

    :param program: Hprog, or a statement together with scope
    :param scope: Scope, required for bare statements
    :return: NormalForm
    :raise UnsupportedConstruct: for local blocks and reveal
    '''
    if isinstance(program, Hprog):
        scope = Scope.from_decls(program) if scope is None else scope
        program = program.body
    index = StateIndex(scope)
    return NormalForm(_build(program, index), index)


def eval_via_normal_form(program, state, scope=None):
    '''
    Evaluates a program through its normal form

    :param program: Hprog, or a statement together with scope
    :param state: SplitState
    :return: HyperDist, equal to the direct evaluation
    '''
    form = program if isinstance(program, NormalForm) else normal_form(program, scope)
    index = form.index
    entries = []
    for row in form.apply(state):
        visible = {index.states[i][0] for i, x in enumerate(row) if x}
        if len(visible) != 1:
            raise InternalAssertion('normal form row spans visible states {0}'.format(visible))
        fraction = FiniteDist(((index.states[i][1], x) for i, x in enumerate(row) if x),
                              space=SPACE_HIDDEN)
        entries.append((SplitState(visible.pop(), normalize(fraction)), fraction.weight))
    logger.debug('normal form of size {0} produced {1} rows'.format(form.size, len(entries)))
    return reduce_hyper(entries, index.scope)


def check_atomic_distribution(first, second, scope):
    '''
    Decides whether the intermediate visible state between two atomic steps
    is determined by the initial and the final visible state

    When it is, running both steps as a single atomic step is the same as
    running them one after the other, each atomic.

    :param first: statement run first
    :param second: statement run second
    :param scope: Scope
    :return: AtomicityResult, with witness (v, v', mid1, mid2) when it fails
    '''
    index = StateIndex(scope)
    first_matrix = classical_matrix(first, index)
    second_matrix = classical_matrix(second, index)

    # (v, v') -> intermediate visible states connecting them
    middles = {}
    for i, (v, h) in enumerate(index.states):
        for j, (mid_v, mid_h) in enumerate(index.states):
            if not first_matrix[i, j]:
                continue
            for k, (final_v, final_h) in enumerate(index.states):
                if second_matrix[j, k]:
                    found = middles.setdefault((v, final_v), [])
                    if mid_v not in found:
                        found.append(mid_v)
                        if len(found) > 1:
                            return AtomicityResult(False, (v, final_v, found[0], found[1]))
    return AtomicityResult(True, None)
