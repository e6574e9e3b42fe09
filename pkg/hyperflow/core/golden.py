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
Registry of worked examples with known results. The selftest command runs
all of them; every check compares a computed value with the published one,
exactly, or within SHANNON_TOLERANCE for entropies.
'''

import logging
from collections import OrderedDict
from fractions import Fraction

from hyperflow.attack.channel import build_attack_channel
from hyperflow.attack.separation import direction_from_normal
from hyperflow.attack.synthesis import build_context, run_context, synthesize_and_verify
from hyperflow.core.initspec import InitSpec
from hyperflow.core.services import load_program
from hyperflow.lang.agents import project_view
from hyperflow.lang.parser import parse
from hyperflow.measures.measures import (
    BigFloat,
    bayes_vuln,
    guessing_entropy,
    marginal_guesswork,
    shannon_entropy,
)
from hyperflow.probcore.dist import mk_dist
from hyperflow.probcore.values import Atom
from hyperflow.refine.decompose import decompose_refinement
from hyperflow.refine.matrices import RatMatrix
from hyperflow.refine.refinement import check_refinement
from hyperflow.semantics.evaluator import eval_hyper, eval_program
from hyperflow.semantics.hyper import HyperDist, reduce_hyper
from hyperflow.semantics.normal_form import check_atomic_distribution
from hyperflow.semantics.state import Scope, SplitState
from hyperflow.utils.constants import EXTERNAL_AGENT, SPACE_HIDDEN
from hyperflow.utils.helpers import format_rational, hyperflow_setting

logger = logging.getLogger(__name__)

BOT = Atom('bot')
THIRDS = {0: Fraction(1, 3), 1: Fraction(1, 3), 2: Fraction(1, 3)}

registry = OrderedDict()


class Check(object):
    '''
    One computed value against its expected value
    '''

    def __init__(self, label, expected, actual):
        self.label = label
        self.expected = expected
        self.actual = actual

    @property
    def passed(self):
        if isinstance(self.actual, BigFloat):
            gap = abs(Fraction(str(self.actual)) - Fraction(self.expected))
            return gap <= hyperflow_setting('SHANNON_TOLERANCE')
        return self.expected == self.actual

    def to_json(self):
        return {'check': self.label, 'expected': _show(self.expected),
                'actual': _show(self.actual), 'passed': self.passed}


def _show(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (bool, int)):
        return value
    return str(value)


def golden(name):
    '''
    Registers a function returning a list of Checks
    '''
    def register(function):
        registry[name] = function
        return function
    return register


def hidden(weights):
    return mk_dist((((h,), p) for h, p in weights.items()), space=SPACE_HIDDEN)


def split_hyper(scope, entries):
    return reduce_hyper([(SplitState((v,), hidden(delta)), p) for v, delta, p in entries], scope)


def threebox(name):
    return eval_program(load_program(name), SplitState((BOT,), hidden(THIRDS)))


@golden('three-box')
def three_box():
    context = parse('vis v : {bot, w, b}; hid h : {0..2}; h := h div 2')
    spec, impl = threebox('threebox_S'), threebox('threebox_I2')
    return [
        Check('bv S', Fraction(2, 3), bayes_vuln(spec)),
        Check('bv I1', Fraction(1, 3), bayes_vuln(threebox('threebox_I1'))),
        Check('bv I2', Fraction(2, 3), bayes_vuln(impl)),
        Check('bv C(S)', Fraction(5, 6), bayes_vuln(eval_hyper(context, spec))),
        Check('bv C(I2)', Fraction(1), bayes_vuln(eval_hyper(context, impl))),
    ]


@golden('general-choice')
def general_choice():
    program = parse('vis v : {0}; hid h : {1/4, 1/2}; skip [h] skip')
    init = SplitState((0,), hidden({Fraction(1, 4): Fraction(1, 2),
                                    Fraction(1, 2): Fraction(1, 2)}))
    return [Check('bv', Fraction(5, 8), bayes_vuln(eval_program(program, init)))]


def rounding():
    spec, impl = load_program('P4'), load_program('P2')
    init = SplitState.point((0,), (1,))
    return spec, impl, init, eval_program(spec, init), eval_program(impl, init)


@golden('rounding')
def rounding_refinement():
    spec, impl, init, spec_hyper, impl_hyper = rounding()
    forward = check_refinement(impl_hyper, spec_hyper)
    backward = check_refinement(spec_hyper, impl_hyper)
    return [
        Check('bv P2', Fraction(5, 6), bayes_vuln(impl_hyper)),
        Check('bv P4', Fraction(5, 6), bayes_vuln(spec_hyper)),
        Check('P2 refined by P4', True, forward.refines and forward.verify()),
        Check('P4 not refined by P2', False, backward.refines),
        Check('failing v', (1,), backward.v),
    ]


@golden('rounding-attack')
def rounding_attack():
    spec, impl, init, spec_hyper, impl_hyper = rounding()
    failure = check_refinement(spec_hyper, impl_hyper)
    hidden_states = spec_hyper.scope.hidden_states()
    checks = []
    published = [
        ([-1, 0, 3, 0, 0, 0, 0, 0, 0], Fraction(8, 15), Fraction(11, 20), None),
        ([0, 0, 2, 1, 0, 0, 1, 0, 0], Fraction(29, 48), Fraction(5, 8),
         (Fraction(13, 48), Fraction(7, 24))),
    ]
    for normal, bv_spec, bv_impl, partition_bv in published:
        direction = direction_from_normal(normal, failure.spec_partition,
                                          failure.impl_partition, hidden_states)
        channel = build_attack_channel(direction, trigger=failure.v)
        context = build_context(spec, channel, failure.v)
        report = run_context(context, spec_hyper, impl_hyper, channel, failure.v, direction)
        label = 'normal {0}'.format(normal)
        checks.append(Check(label + ' bv P4;C', bv_spec, report.bv_spec))
        checks.append(Check(label + ' bv P2;C', bv_impl, report.bv_impl))
        if partition_bv:
            checks.append(Check(label + ' partitions', partition_bv,
                                report.partition_vulnerabilities()))
    report = synthesize_and_verify(spec, impl, init)
    checks.append(Check('synthesized context separates', True, report.verdict))
    return checks


@golden('decomposition')
def decomposition():
    steps = decompose_refinement(RatMatrix([[Fraction(1, 3), Fraction(3, 4)],
                                            [Fraction(2, 3), Fraction(1, 4)]]))
    return [
        Check('coefficients', [Fraction(1, 4), Fraction(1, 12), Fraction(2, 3)],
              [c for c, simple in steps]),
        Check('simple matrices', [RatMatrix.identity(2), RatMatrix([[1, 1], [0, 0]]),
                                  RatMatrix([[0, 1], [1, 0]])],
              [simple for c, simple in steps]),
    ]


@golden('entropies')
def entropies():
    lg3 = Fraction(158496250072115618145, 10 ** 20)
    context = parse('vis v : {bot, w, b}; hid h : {0..2}; h := 1 if h = 2 else h')
    spec, impl = threebox('threebox_S'), threebox('threebox_I2')
    spec_after, impl_after = eval_hyper(context, spec), eval_hyper(context, impl)
    return [
        Check('H I2', Fraction(2, 3), shannon_entropy(impl)),
        Check('H S', lg3 - Fraction(2, 3), shannon_entropy(spec)),
        Check('H C(S)', (lg3 - Fraction(2, 3)) / 2, shannon_entropy(spec_after)),
        Check('H C(I2)', Fraction(2, 3), shannon_entropy(impl_after)),
        Check('GE S', Fraction(4, 3), guessing_entropy(spec)),
        Check('GE I2', Fraction(4, 3), guessing_entropy(impl)),
        Check('GE C(S)', Fraction(7, 6), guessing_entropy(spec_after)),
        Check('GE C(I2)', Fraction(4, 3), guessing_entropy(impl_after)),
    ]


@golden('guesswork')
def guesswork():
    half = Fraction(1, 2)
    scope = Scope.from_decls(parse('vis v : {0}; hid h : {0..4}; skip'))
    quarter = Fraction(1, 4)
    split = split_hyper(scope, [(0, {0: 1}, half), (0, {1: quarter, 2: quarter, 3: quarter,
                                                        4: quarter}, half)])
    eighth = Fraction(1, 8)
    joined = split_hyper(scope, [(0, {0: half, 1: eighth, 2: eighth, 3: eighth, 4: eighth}, 1)])

    source = 'vis v : {bot, w, b}; hid h : {-3..2}; '
    wide = Scope.from_decls(parse(source + 'skip'))

    def mixed(weights):
        result = {h: p / 2 for h, p in weights.items()}
        result.update({h: Fraction(1, 6) for h in (-3, -2, -1)})
        return result

    spec = split_hyper(wide, [(BOT, mixed({1: Fraction(1, 3), 2: Fraction(2, 3)}), half),
                              (BOT, mixed({0: Fraction(2, 3), 1: Fraction(1, 3)}), half)])
    impl = split_hyper(wide, [(BOT, mixed({2: 1}), Fraction(1, 3)),
                              (BOT, mixed({0: half, 1: half}), Fraction(2, 3))])
    context = parse(source + 'h := (h div 2 if h >= 0 else h)')
    return [
        Check('G split', 1, marginal_guesswork(split, half)),
        Check('G joined', 1, marginal_guesswork(joined, half)),
        Check('G S', 2, marginal_guesswork(spec, half)),
        Check('G I', 2, marginal_guesswork(impl, half)),
        Check('G C(S)', 2, marginal_guesswork(eval_hyper(context, spec), half)),
        Check('G C(I)', 1, marginal_guesswork(eval_hyper(context, impl), half)),
    ]


@golden('encryption-lemma')
def encryption_lemma():
    program = load_program('encryption_lemma')
    scope = Scope.from_decls(program)
    checks = []
    priors = [{False: 1}, {True: 1}, {False: Fraction(1, 2), True: Fraction(1, 2)}]
    for prior in priors:
        init = SplitState((), hidden(prior))
        checks.append(Check('skip from {0}'.format(init.delta), True,
                            eval_program(program, init) == HyperDist.point(init, scope)))
    return checks


@golden('atomicity')
def atomicity():
    overwrite = parse('vis v : {0, 1}; hid h : {0, 1}; v := h; v := 0')
    encrypt = parse('vis v : {false, true}; hid h : {false, true}; hid e : {false, true}; '
                    'v <- uniform{false, true}; h := v xor e')
    return [
        Check('v := h; v := 0', False, check_atomic_distribution(
            overwrite.body.first, overwrite.body.second, Scope.from_decls(overwrite)).holds),
        Check('pad then encrypt', True, check_atomic_distribution(
            encrypt.body.first, encrypt.body.second, Scope.from_decls(encrypt)).holds),
    ]


def judge_priors(scope):
    '''
    Initial states for one agent's view: every point, the uniform prior and
    sampled priors over the hidden votes
    '''
    for v in scope.visible_states():
        for h in scope.hidden_states():
            yield SplitState.point(v, h)
    names = [decl.name for decl in scope.decls]
    for prior in ('uniform', 'sample:3'):
        yield from InitSpec(';'.join('{0}~{1}'.format(name, prior) for name in names),
                            scope).split_states()


def judges_equivalent(impl_name):
    spec, impl = load_program('three_judges_spec'), load_program(impl_name)
    checks = []
    for agent in ('A', 'B', 'C', EXTERNAL_AGENT):
        spec_view, impl_view = project_view(spec, agent), project_view(impl, agent)
        for state in judge_priors(Scope.from_decls(spec_view)):
            spec_hyper = eval_program(spec_view, state)
            impl_hyper = eval_program(impl_view, state)
            both = check_refinement(spec_hyper, impl_hyper).refines \
                and check_refinement(impl_hyper, spec_hyper).refines
            checks.append(Check('{0} from {1!r}'.format(agent, state), True, both))
    return checks


@golden('three-judges')
def three_judges():
    return judges_equivalent('three_judges_fig2')


@golden('three-judges-oblivious-transfer')
def three_judges_oblivious_transfer():
    return judges_equivalent('three_judges_fig3')


def run_case(name):
    '''
    Runs one registered case

    :return: list of Checks
    '''
    logger.info('golden case {0}'.format(name))
    return registry[name]()
