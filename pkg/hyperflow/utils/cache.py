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

import logging
import hashlib

from django.core.cache import cache
from django.utils.encoding import force_bytes


logger = logging.getLogger(__name__)


def get_evaluation_cache_name(*args):
    '''
    Calculates the cache key for an evaluation from its textual ingredients
    (printed program, initial state, ...)
    '''
    key = u':'.join([str(arg) for arg in args])
    return cache_mapper.get_evaluation(hashlib.md5(force_bytes(key)).hexdigest())


def reset_evaluation(*args):
    '''
    Deletes one cached evaluation
    '''
    cache.delete(get_evaluation_cache_name(*args))


class CacheKeyMapper(object):
    '''
    Simple class for mapping the cache keys of different objects
    '''

    # Keys used by the cache
    EVALUATION_CACHE_KEY = 'hyperflow-evaluation-{0}'
    CORPUS_CACHE_KEY = 'hyperflow-corpus-{0}'

    def get_evaluation(self, digest):
        '''
        Return the evaluation cache key
        '''
        return self.EVALUATION_CACHE_KEY.format(digest)

    def get_corpus_program(self, name):
        '''
        Return the cache key for a parsed corpus program
        '''
        return self.CORPUS_CACHE_KEY.format(name)


cache_mapper = CacheKeyMapper()
