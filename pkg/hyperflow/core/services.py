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
What the management commands and the API views share: loading programs,
cached evaluation and pointwise comparison over initial states.
'''

import logging
import os

from django.core.cache import cache

from hyperflow.core.exceptions import UnknownProgram
from hyperflow.lang.parser import parse
from hyperflow.lang.printer import pretty_print
from hyperflow.measures.measures import MeasureKind
from hyperflow.measures.orders import elementary_compare
from hyperflow.refine.refinement import check_refinement
from hyperflow.semantics.evaluator import eval_program
from hyperflow.semantics.hyper import HyperDist
from hyperflow.utils.cache import cache_mapper, get_evaluation_cache_name
from hyperflow.utils.helpers import hyperflow_setting

logger = logging.getLogger(__name__)

ORDER_REFINE = 'refine'
ORDER_ELEMENTARY = 'elementary'


def corpus_file(name):
    if not name.endswith('.hprog'):
        name += '.hprog'
    return os.path.join(hyperflow_setting('CORPUS_DIR'), name)


def corpus_key(name):
    '''
    Cache key of a parsed corpus program, a new one whenever the file changes
    '''
    path = corpus_file(name)
    stamp = os.stat(path).st_mtime_ns if os.path.isfile(path) else 0
    return cache_mapper.get_corpus_program('{0}-{1}'.format(os.path.basename(path), stamp))


def read_source(name):
    '''
    The text of a program file, falling back to the corpus for bare names
    '''
    for path in (name, corpus_file(name)):
        if os.path.isfile(path):
            with open(path) as source:
                return source.read()
    raise UnknownProgram('no program file {0}'.format(name))


def load_program(name):
    '''
    Parses and validates a program file. Corpus programs are kept in the
    cache once parsed.
    '''
    if os.path.isfile(name):
        return parse(read_source(name))

    key = corpus_key(name)
    program = cache.get(key)
    if program is None:
        program = parse(read_source(name))
        cache.set(key, program)
    return program


def evaluation_key(program, init):
    return get_evaluation_cache_name(pretty_print(program), repr(init))


def evaluate(program, init):
    '''
    Final hyper-distribution of program from a split-state or a
    hyper-distribution, memoised when CACHE_EVALUATIONS is set
    '''
    if not hyperflow_setting('CACHE_EVALUATIONS'):
        return eval_program(program, init)

    key = evaluation_key(program, init)
    result = cache.get(key)
    if result is None:
        result = eval_program(program, init)
        cache.set(key, result)
    else:
        logger.debug('evaluation cache hit')
    return result


def parse_order(text):
    '''
    Reads "refine" or "elementary:MEASURE"

    :return: (order, MeasureKind or None)
    '''
    order, _, measure = text.partition(':')
    if order == ORDER_REFINE and not measure:
        return ORDER_REFINE, None
    if order == ORDER_ELEMENTARY:
        return ORDER_ELEMENTARY, MeasureKind.parse(measure or 'bayes')
    raise ValueError('unknown order "{0}", use refine or elementary:MEASURE'.format(text))


class PointResult(object):
    '''
    The outcome of one comparison from one initial split-state
    '''

    def __init__(self, state, result):
        self.state = state
        self.result = result

    @property
    def holds(self):
        if hasattr(self.result, 'refines'):
            return self.result.refines
        return self.result.holds


def compare_programs(spec, impl, init_spec, order):
    '''
    Compares two programs pointwise, from every initial split-state of
    init_spec in turn

    :param order: (order, MeasureKind) as returned by parse_order
    :return: list of PointResult, in canonical order of the initial states
    '''
    kind, measure = order
    results = []
    for state in sorted(init_spec.split_states(), key=lambda s: s.sort_key()):
        spec_hyper = evaluate(spec, state)
        impl_hyper = evaluate(impl, state)
        if kind == ORDER_REFINE:
            result = check_refinement(spec_hyper, impl_hyper)
        else:
            result = elementary_compare(spec_hyper, impl_hyper, measure)
        results.append(PointResult(state, result))
    return results


def initial_hyper(init_spec):
    '''
    The single initial hyper-distribution of an unsampled specification
    '''
    hypers = init_spec.hypers()
    if len(hypers) != 1:
        raise ValueError('expected one initial point, {0} are sampled'.format(len(hypers)))
    return hypers[0]


def as_initial(hyper):
    '''
    A one-point hyper-distribution as its split-state
    '''
    if isinstance(hyper, HyperDist) and len(hyper) == 1:
        return hyper.split_states[0]
    return hyper
