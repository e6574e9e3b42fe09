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

import functools
import logging

from rest_framework import status
from rest_framework.decorators import api_view
from rest_framework.response import Response

from hyperflow.core.api.serializers import (
    EvaluateSerializer,
    MeasureSerializer,
    RefineSerializer
)
from hyperflow.core.initspec import InitSpec
from hyperflow.core.services import ORDER_REFINE, as_initial, compare_programs, evaluate
from hyperflow.lang.parser import parse
from hyperflow.measures.measures import MeasureKind, format_measure
from hyperflow.semantics.state import Scope
from hyperflow.utils.exceptions import HyperflowError, InternalAssertion


logger = logging.getLogger(__name__)


def error_response(error):
    '''
    Bad requests for invalid programs and states, server errors for failed
    internal checks
    '''
    if isinstance(error, InternalAssertion):
        logger.error(error.message)
        return Response({'detail': error.message}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
    message = error.message if isinstance(error, HyperflowError) else str(error)
    return Response({'detail': message}, status=status.HTTP_400_BAD_REQUEST)


def validated(serializer_class):
    '''
    Validates the request body and hands the data to the view
    '''
    def decorator(view):
        @functools.wraps(view)
        def wrapper(request):
            serializer = serializer_class(data=request.data)
            serializer.is_valid(raise_exception=True)
            try:
                return Response(view(serializer.validated_data))
            except (HyperflowError, ValueError) as error:
                return error_response(error)
        return wrapper
    return decorator


def _init(program, data):
    return InitSpec(data['init'], Scope.from_decls(program), data['seed'])


@api_view(['POST'])
@validated(EvaluateSerializer)
def evaluate_program(data):
    '''
    Final hyper-distributions of a program, one per initial point
    '''
    program = parse(data['source'])
    init = _init(program, data)
    return {'init': init.to_json(),
            'results': [evaluate(program, as_initial(hyper)).to_json()
                        for hyper in init.hypers()]}


@api_view(['POST'])
@validated(MeasureSerializer)
def measure_program(data):
    '''
    A measure of the final hyper-distributions
    '''
    program = parse(data['source'])
    measure = MeasureKind.parse(data['measure'])
    init = _init(program, data)
    values = [measure.value(evaluate(program, as_initial(hyper)), data['precision'])
              for hyper in init.hypers()]
    return {'measure': str(measure),
            'init': init.to_json(),
            'values': [format_measure(value) for value in values]}


@api_view(['POST'])
@validated(RefineSerializer)
def refine_programs(data):
    '''
    Refinement witness or failing visible value, per initial split-state
    '''
    spec = parse(data['spec'])
    impl = parse(data['impl'])
    init = _init(spec, data)
    results = compare_programs(spec, impl, init, (ORDER_REFINE, None))
    return {'init': init.to_json(),
            'refines': all(result.holds for result in results),
            'results': [dict(result.result.to_json(), state=init.describe(result.state))
                        for result in results]}
