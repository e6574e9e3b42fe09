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
Deciding secure refinement.

S is refined by I when, for every visible value v, the partition of I at v
can be obtained from the partition of S at v by splitting its fractions and
adding the pieces up again. In matrix form: there is a nonnegative matrix R
whose columns add up to one with R x P_S = P_I. Finding R is a linear
feasibility problem, solved exactly; when there is none the solver returns a
Farkas certificate, which the attack construction uses.
'''

import logging

from hyperflow.lp.program import LinearProgram, EQ
from hyperflow.lp.simplex import solve_feasibility
from hyperflow.measures.measures import ft
from hyperflow.measures.orders import check_same_domains
from hyperflow.probcore.values import format_value
from hyperflow.refine.matrices import RatMatrix
from hyperflow.refine.partitions import extract_partition, reduce_partition
from hyperflow.utils.exceptions import InternalAssertion

logger = logging.getLogger(__name__)


class RefinementWitness(object):
    '''
    A refinement matrix for every visible value, rows indexed by the
    fractions of the implementation, columns by those of the specification
    '''
    refines = True

    def __init__(self, matrices, spec_partitions, impl_partitions, hidden_states):
        self.matrices = matrices
        self.spec_partitions = spec_partitions
        self.impl_partitions = impl_partitions
        self.hidden_states = hidden_states

    def verify(self):
        '''
        Re-checks every matrix: a refinement matrix mapping the partition of
        the specification exactly onto that of the implementation
        '''
        for v, matrix in self.matrices.items():
            if not matrix.is_refinement_matrix():
                return False
            spec = self.spec_partitions[v].matrix(self.hidden_states)
            impl = self.impl_partitions[v].matrix(self.hidden_states)
            if matrix * spec != impl:
                return False
        return True

    def __repr__(self):
        return 'RefinementWitness({0})'.format(
            {format_value(v): matrix for v, matrix in self.matrices.items()})

    def to_json(self):
        return {'refines': True,
                'witness': [{'v': format_value(v), 'R': matrix.to_json()}
                            for v, matrix in self.matrices.items()]}


class NotRefined(object):
    '''
    Refinement fails at visible value v, or already on the functional
    behaviour when ``functional`` is set
    '''
    refines = False

    def __init__(self, v=None, functional=False, certificate=None, spec_partition=None,
                 impl_partition=None):
        self.v = v
        self.functional = functional
        self.certificate = certificate
        self.spec_partition = spec_partition
        self.impl_partition = impl_partition

    def __repr__(self):
        if self.functional:
            return 'NotRefined(functional)'
        return 'NotRefined(v={0})'.format(format_value(self.v))

    def to_json(self):
        data = {'refines': False, 'functional': self.functional}
        if self.v is not None:
            data['v'] = format_value(self.v)
        return data


def refinement_lp(spec_partition, impl_partition, hidden_states):
    '''
    The feasibility problem R >= 0, columns of R add up to one,
    R x P_S = P_I

    Variable R[j][f] has index j * n + f, n the number of fractions of the
    specification. The first n rows are the column sums, then one row for
    every fraction j of the implementation and hidden state h.
    '''
    n, m = len(spec_partition), len(impl_partition)
    names = ['R[{0}][{1}]'.format(j, f) for j in range(m) for f in range(n)]
    lp = LinearProgram(m * n, names)
    for f in range(n):
        lp.add_constraint({j * n + f: 1 for j in range(m)}, EQ, 1, label='column {0}'.format(f))
    for j, target in enumerate(impl_partition):
        for h in hidden_states:
            coeffs = {j * n + f: source.prob(h) for f, source in enumerate(spec_partition)
                      if source.prob(h)}
            lp.add_constraint(coeffs, EQ, target.prob(h), label='row {0} at {1}'.format(j, h))
    return lp


def refine_partition(spec_partition, impl_partition, hidden_states):
    '''
    Solves the refinement problem for one pair of reduced partitions

    :return: (RatMatrix or None, Infeasible result or None)
    '''
    n, m = len(spec_partition), len(impl_partition)
    result = solve_feasibility(refinement_lp(spec_partition, impl_partition, hidden_states))
    if not result.feasible:
        if not result.verify():
            raise InternalAssertion('refinement certificate does not verify')
        return None, result
    matrix = RatMatrix([[result.point[j * n + f] for f in range(n)] for j in range(m)], n)
    return matrix, None


def check_refinement(spec, impl):
    '''
    Decides whether the hyper-distribution spec is securely refined by impl

    :param spec: HyperDist of the specification
    :param impl: HyperDist of the implementation
    :return: RefinementWitness or NotRefined, for the first failing visible
             value in canonical order
    :raise DomainMismatch: the hypers are over different scopes
    '''
    check_same_domains(spec, impl)
    if ft(spec) != ft(impl):
        logger.debug('functional behaviour differs')
        return NotRefined(functional=True)

    hidden_states = spec.scope.hidden_states()
    matrices, spec_partitions, impl_partitions = {}, {}, {}
    for v in spec.visible_values:
        spec_partition = reduce_partition(extract_partition(spec, v))
        impl_partition = reduce_partition(extract_partition(impl, v))
        matrix, infeasible = refine_partition(spec_partition, impl_partition, hidden_states)
        if matrix is None:
            logger.debug('no refinement at v={0}'.format(format_value(v)))
            return NotRefined(v, certificate=infeasible, spec_partition=spec_partition,
                              impl_partition=impl_partition)
        matrices[v] = matrix
        spec_partitions[v] = spec_partition
        impl_partitions[v] = impl_partition

    witness = RefinementWitness(matrices, spec_partitions, impl_partitions, hidden_states)
    if not witness.verify():
        raise InternalAssertion('refinement witness does not verify')
    return witness


def refines(spec, impl):
    return check_refinement(spec, impl).refines
