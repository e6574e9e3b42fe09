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


class HyperflowError(Exception):
    '''
    Base class for all errors raised by the hyperflow apps
    '''

    def __init__(self, message, **details):
        self.message = message
        self.details = details
        super(HyperflowError, self).__init__(message)


class InternalAssertion(HyperflowError):
    '''
    An internal consistency check failed (e.g. an LP certificate that does not
    verify, or two evaluation backends that disagree)
    '''
    pass
