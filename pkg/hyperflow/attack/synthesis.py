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
Distinguishing contexts.

When S is not refined by I there is a context C, run after both, under which
an attacker guessing the hidden value in one try does strictly better
against I than against S. The context overwrites the hidden state through
an attack channel when the visible state is the one where refinement
failed, and sets it to a constant otherwise. Hidden states other than a
single integer variable are overwritten through an integer label variable
the context adds.
'''

import logging

from hyperflow.attack.channel import build_attack_channel
from hyperflow.attack.exceptions import PreconditionViolated, VertexBudgetExceeded
from hyperflow.attack.separation import (
    METHOD_CERTIFICATE,
    METHOD_VERTICES,
    certificate_direction,
    separating_direction,
)
from hyperflow.lang.ast import (
    Assign,
    Binary,
    Choose,
    Cond,
    Domain,
    Explicit,
    Hprog,
    IfElse,
    Literal,
    Seq,
    Var,
    VarDecl,
    Visibility,
    Weighted,
)
from hyperflow.lang.parser import parse
from hyperflow.lang.printer import pretty_print
from hyperflow.measures.measures import bayes_vuln
from hyperflow.measures.orders import FAILS_MEASURE, elementary_compare
from hyperflow.probcore.values import canonical_number, value_kind
from hyperflow.refine.partitions import bv_partition, extract_partition, reduce_partition
from hyperflow.refine.refinement import check_refinement
from hyperflow.semantics.evaluator import eval_program
from hyperflow.semantics.hyper import reduce_hyper
from hyperflow.semantics.state import Scope, SplitState
from hyperflow.utils.exceptions import InternalAssertion
from hyperflow.utils.helpers import format_rational

logger = logging.getLogger(__name__)

METHOD_AUTO = 'auto'
METHODS = (METHOD_AUTO, METHOD_VERTICES, METHOD_CERTIFICATE)

LABEL = 'attack'


class AttackReport(object):
    '''
    The context and what it does to both programs. A report is returned
    even when the verdict is unexpectedly false, for diagnosis.
    '''

    def __init__(self, context, channel, trigger, spec_hyper, impl_hyper, direction=None):
        self.context = context
        self.channel = channel
        self.trigger = trigger
        self.spec_hyper = spec_hyper
        self.impl_hyper = impl_hyper
        self.direction = direction
        self.bv_spec = bayes_vuln(spec_hyper)
        self.bv_impl = bayes_vuln(impl_hyper)

    @property
    def verdict(self):
        return self.bv_impl > self.bv_spec

    @property
    def source(self):
        return pretty_print(self.context)

    def partition_vulnerabilities(self):
        '''
        Bayes vulnerability of both partitions at the trigger
        '''
        return tuple(bv_partition(reduce_partition(extract_partition(hyper, self.trigger)))
                     for hyper in (self.spec_hyper, self.impl_hyper))

    def __repr__(self):
        return 'AttackReport(bv_S={0}, bv_I={1}, verdict={2})'.format(
            self.bv_spec, self.bv_impl, self.verdict)

    def to_json(self):
        scope = self.spec_hyper.scope
        spec_part, impl_part = self.partition_vulnerabilities()
        return {
            'trigger': scope.format_visible(self.trigger),
            'method': self.direction.method if self.direction is not None else None,
            'channel': self.channel.to_json(),
            'bv_spec': format_rational(self.bv_spec),
            'bv_impl': format_rational(self.bv_impl),
            'partition_bv_spec': format_rational(spec_part),
            'partition_bv_impl': format_rational(impl_part),
            'verdict': self.verdict,
            'context': self.source,
        }


def _literal(value):
    if value_kind(value) == 'num':
        return Literal(canonical_number(value))
    return Literal(value)


def state_guard(names, values):
    '''
    name1 = value1 and name2 = value2 and ...
    '''
    guard = None
    for name, value in zip(names, values):
        test = Binary('=', Var(name), _literal(value))
        guard = test if guard is None else Binary('and', guard, test)
    return guard


def constant_of(domain):
    if domain.kind == 'num' and 0 in domain:
        return 0
    return domain.values[0]


def label_name(scope):
    '''
    A hidden variable name the programs do not use
    '''
    name, count = LABEL, 0
    while name in scope:
        count += 1
        name = '{0}{1}'.format(LABEL, count)
    return name


def weight_expression(channel, column, hidden_names):
    '''
    Weight of one output value as a function of the old hidden state, a
    chain of conditionals over the rows that differ from the last one
    '''
    weights = [channel.matrix[i, column] for i in range(len(channel.states))]
    expr = _literal(weights[-1])
    for state, weight in reversed(list(zip(channel.states, weights))):
        if weight != weights[-1]:
            expr = IfElse(_literal(weight), state_guard(hidden_names, state), expr)
    return expr


def context_statement(channel, scope, trigger, target):
    '''
    if v = v' then target <- channel row of h else target := constant fi,
    followed by forgetting the old hidden state when target is a label
    variable of its own

    :param scope: Scope of the programs, without the label variable
    '''
    hidden_names = scope.hidden_names
    entries = [Weighted(_literal(value), weight_expression(channel, j, hidden_names))
               for j, value in enumerate(channel.columns) if any(channel.matrix.column(j))]
    overwrite = Choose(target, Explicit(entries))
    if channel.relabels:
        constant = Assign(target, Literal(0))
    else:
        constant = Assign(target, _literal(constant_of(scope.declaration(target).domain)))
    statement = overwrite
    if scope.visible_names:
        statement = Cond(state_guard(scope.visible_names, trigger), overwrite, constant)
    if channel.relabels:
        for name in hidden_names:
            forget = Assign(name, _literal(constant_of(scope.declaration(name).domain)))
            statement = Seq(statement, forget)
    return statement


def build_context(program, channel, trigger):
    '''
    The context as a complete program. A single integer hidden variable has
    its domain widened by the fresh output values; any other hidden state
    gets a label variable of its own, declared last.

    :param program: Hprog whose declarations the context shares
    :param channel: AttackChannel
    :param trigger: visible state where refinement failed
    :return: Hprog
    '''
    scope = Scope.from_decls(program)
    if channel.relabels:
        target = label_name(scope)
        decls = list(program.decls)
        decls.append(VarDecl(target, Domain(channel.columns), Visibility('hid')))
        return Hprog(decls, context_statement(channel, scope, trigger, target))

    target = scope.hidden_names[0]
    decls = []
    for decl in program.decls:
        if decl.name == target:
            decl = VarDecl(decl.name, decl.domain.extended(channel.columns), decl.visibility)
        decls.append(decl)
    return Hprog(decls, context_statement(channel, scope, trigger, target))


def embed_hyper(hyper, scope):
    '''
    hyper over the scope of a context; hidden variables the context adds
    start at 0
    '''
    extra = len(scope.hidden) - len(hyper.scope.hidden)
    if not extra:
        return hyper
    entries = [(SplitState(s.v, s.delta.map(lambda h: h + (0,) * extra)), p)
               for s, p in hyper.items()]
    return reduce_hyper(entries, scope)


def run_context(context, spec_hyper, impl_hyper, channel, trigger, direction=None):
    '''
    Runs the context after both programs and checks the outcome twice: with
    the elementary Bayes order, and with the context re-parsed from its
    printed source

    :return: AttackReport
    :raise InternalAssertion: the two checks disagree with the report
    '''
    scope = Scope.from_decls(context)
    report = AttackReport(context, channel, trigger,
                          eval_program(context.body, embed_hyper(spec_hyper, scope), scope),
                          eval_program(context.body, embed_hyper(impl_hyper, scope), scope),
                          direction)

    reparsed = parse(report.source)
    scope = Scope.from_decls(reparsed)
    spec_again = eval_program(reparsed, embed_hyper(spec_hyper, scope))
    impl_again = eval_program(reparsed, embed_hyper(impl_hyper, scope))
    if (bayes_vuln(spec_again), bayes_vuln(impl_again)) != (report.bv_spec, report.bv_impl):
        raise InternalAssertion('re-parsed context changes the vulnerabilities')

    if not report.verdict:
        logger.error('attack context does not separate: {0!r}'.format(report))
        return report
    outcome = elementary_compare(report.spec_hyper, report.impl_hyper).outcome
    if outcome != FAILS_MEASURE:
        raise InternalAssertion('elementary order reports {0} for a separating context'
                                .format(outcome))
    return report


def find_direction(failure, hidden_states, method=METHOD_AUTO, cap=None):
    '''
    A separating direction for a failed refinement check, by vertex
    enumeration or from the Farkas certificate. The automatic method falls
    back to the certificate when there are too many vertices.
    '''
    args = (failure.spec_partition, failure.impl_partition, hidden_states)
    if method == METHOD_CERTIFICATE:
        return certificate_direction(failure.certificate, *args)
    if method == METHOD_VERTICES:
        return separating_direction(*args, cap=cap)
    try:
        return separating_direction(*args, cap=cap)
    except VertexBudgetExceeded as error:
        logger.info('{0}, using the refinement certificate'.format(error.message))
        return certificate_direction(failure.certificate, *args)


def synthesize_and_verify(spec, impl, init, method=METHOD_AUTO, cap=None):
    '''
    Builds a context that distinguishes spec from impl by Bayes
    vulnerability and checks it

    :param spec: Hprog of the specification
    :param impl: Hprog of the implementation, same declarations
    :param init: SplitState or HyperDist both programs start from
    :param method: 'auto', 'vertices' or 'certificate'
    :return: AttackReport
    :raise PreconditionViolated: impl refines spec, or they differ functionally
    '''
    if method not in METHODS:
        raise PreconditionViolated('unknown direction method {0!r}'.format(method))
    scope = Scope.from_decls(spec)
    if Scope.from_decls(impl) != scope:
        raise PreconditionViolated('the programs declare different variables')
    hidden_states = scope.hidden_states()

    spec_hyper = eval_program(spec, init, scope)
    impl_hyper = eval_program(impl, init, scope)
    failure = check_refinement(spec_hyper, impl_hyper)
    if failure.refines:
        raise PreconditionViolated('the implementation refines the specification')
    if failure.functional:
        raise PreconditionViolated('the programs differ functionally, no context is needed')

    direction = find_direction(failure, hidden_states, method, cap)
    channel = build_attack_channel(direction, trigger=failure.v)
    context = build_context(spec, channel, failure.v)
    logger.debug('attack context at {0}:\n{1}'.format(failure.v, pretty_print(context)))
    return run_context(context, spec_hyper, impl_hyper, channel, failure.v, direction)
