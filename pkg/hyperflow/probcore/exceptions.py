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

from hyperflow.utils.exceptions import HyperflowError


class ProbabilityError(HyperflowError):
    '''
    Base class for errors when building or transforming distributions
    '''
    pass


class NegativeWeight(ProbabilityError):
    pass


class WeightOverflow(ProbabilityError):
    '''
    The weights of a (sub-)distribution add up to more than one
    '''
    pass


class ZeroWeight(ProbabilityError):
    '''
    A distribution with total weight zero can't be normalized
    '''
    pass


class ZeroCondition(ProbabilityError):
    '''
    Conditioning on an event with probability zero
    '''
    pass


class SpaceMismatch(ProbabilityError):
    '''
    Two distributions over different spaces were combined
    '''
    pass
