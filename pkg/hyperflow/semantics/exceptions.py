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


class SemanticsError(HyperflowError):
    '''
    Base class for errors raised while evaluating a program
    '''
    pass


class DistNotOneSumming(SemanticsError):
    '''
    The weights of a distribution expression do not add up to one in some
    reachable state
    '''
    pass


class DomainViolation(SemanticsError):
    '''
    A variable was given a value outside its declared domain
    '''
    pass


class ProbabilityOutOfRange(SemanticsError):
    pass


class UnsupportedConstruct(SemanticsError):
    '''
    A construct the chosen backend can't handle, e.g. a local block in the
    normal form
    '''
    pass


class LocalInAtomic(SemanticsError):
    pass
