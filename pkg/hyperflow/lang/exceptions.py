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


class LanguageError(HyperflowError):
    '''
    Base class for errors in program sources, optionally with a position
    '''

    def __init__(self, message, line=None, column=None, diagnostics=()):
        self.line, self.column = line, column
        self.diagnostics = list(diagnostics)
        if line is not None:
            if column is not None:
                message = "Line {0}, column {1}: {2}".format(line, column, message)
            else:
                message = "Line {0}: {1}".format(line, message)
        super(LanguageError, self).__init__(message, line=line, column=column)


class HprogSyntaxError(LanguageError):
    pass


class UndeclaredVariable(LanguageError):
    pass


class TypeMismatch(LanguageError):
    pass


class UnknownAgent(LanguageError):
    pass


class ExpressionError(LanguageError):
    '''
    An expression could not be evaluated (e.g. division by zero at run time)
    '''
    pass


class ValidationFailed(LanguageError):
    '''
    Raised by parse when validation reports an error that has no more
    specific class; all diagnostics are kept in ``diagnostics``
    '''
    pass
