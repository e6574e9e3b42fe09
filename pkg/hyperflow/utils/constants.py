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

from fractions import Fraction


# Exit codes of the command line tools
EXIT_OK = 0
EXIT_VERDICT_FAILS = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# Reserved agent name, sees only globally visible variables
EXTERNAL_AGENT = 'external'

# Textual forms of special values
TRUE_TOKEN = 'true'
FALSE_TOKEN = 'false'

ZERO = Fraction(0)
ONE = Fraction(1)

# Spaces a finite distribution may live in
SPACE_VISIBLE = 'V'
SPACE_HIDDEN = 'H'
SPACE_JOINT = 'VH'
SPACE_HYPER = 'hyper'

# Measure names as used on the command line
MEASURE_BAYES = 'bayes'
MEASURE_SHANNON = 'shannon'
MEASURE_GUESSING_ENTROPY = 'gentropy'
MEASURE_GUESSWORK = 'guesswork'
MEASURES = (MEASURE_BAYES, MEASURE_SHANNON, MEASURE_GUESSING_ENTROPY, MEASURE_GUESSWORK)
