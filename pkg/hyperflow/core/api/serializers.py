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

from rest_framework import serializers

from hyperflow.utils.constants import MEASURE_BAYES


class EvaluateSerializer(serializers.Serializer):
    '''
    A program and its initial state
    '''
    source = serializers.CharField(trim_whitespace=False)
    init = serializers.CharField()
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)


class MeasureSerializer(EvaluateSerializer):
    '''
    Evaluation request with the measure to apply
    '''
    measure = serializers.CharField(default=MEASURE_BAYES)
    precision = serializers.IntegerField(required=False, allow_null=True, default=None,
                                         min_value=1)


class RefineSerializer(serializers.Serializer):
    '''
    Specification and implementation sources
    '''
    spec = serializers.CharField(trim_whitespace=False)
    impl = serializers.CharField(trim_whitespace=False)
    init = serializers.CharField()
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)
