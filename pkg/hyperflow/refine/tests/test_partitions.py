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

from hypothesis import given, settings

from hyperflow.core.tests.base_testcase import HyperflowTestCase, F, load, hidden
from hyperflow.core.tests import generators
from hyperflow.probcore.dist import FiniteDist
from hyperflow.probcore.values import Atom
from hyperflow.refine.matrices import RatMatrix
from hyperflow.refine.partitions import (
    Partition,
    apply_refinement,
    bv_partition,
    extract_partition,
    hyper_from_partitions,
    reduce_partition,
    similar,
)
from hyperflow.semantics.evaluator import eval_program
from hyperflow.semantics.state import SplitState
from hyperflow.utils.constants import SPACE_HIDDEN

BOT = Atom('bot')
STATES = [(0,), (1,), (2,)]


def fraction(*weights):
    return generators.sub_distribution(weights, STATES)


class PartitionTestCase(HyperflowTestCase):
    '''
    Tests partitions of a hyper-distribution
    '''

    def setUp(self):
        super(PartitionTestCase, self).setUp()
        init = SplitState((BOT,), hidden({0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}))
        self.spec = eval_program(load('threebox_S'), init)

    def test_extract(self):
        '''
        The two split-states of the three boxes, scaled by one half
        '''
        partition = extract_partition(self.spec, (BOT,))
        self.assertEqual(partition, Partition([fraction(0, F(1, 6), F(1, 3)),
                                               fraction(F(1, 3), F(1, 6), 0)]))
        self.assertEqual(partition.weight, 1)
        self.assertTrue(partition.is_reduced)
        self.assertEqual(bv_partition(partition), F(2, 3))
        self.assertDistEqual(partition.total(), {(h,): F(1, 3) for h in range(3)})
        self.assertEqual(len(extract_partition(self.spec, (Atom('w'),))), 0)

    def test_reduce(self):
        '''
        Similar fractions are added up, empty ones dropped
        '''
        partition = Partition([fraction(F(1, 4), F(1, 4)), fraction(F(1, 8), F(1, 8)),
                               fraction(0, 0, F(1, 4)), FiniteDist(space=SPACE_HIDDEN)])
        self.assertFalse(partition.is_reduced)
        reduced = reduce_partition(partition)
        self.assertEqual(reduced, Partition([fraction(F(3, 8), F(3, 8)), fraction(0, 0, F(1, 4))]))
        self.assertTrue(reduced.is_reduced)
        self.assertEqual(reduced.weight, partition.weight)
        self.assertTrue(similar(partition, reduced))
        other = Partition([fraction(F(3, 4)), fraction(0, 0, F(1, 4))])
        self.assertFalse(similar(partition, other))

    def test_order(self):
        '''
        The order fractions are given in does not matter
        '''
        first, second = fraction(F(1, 2)), fraction(0, F(1, 4), F(1, 4))
        self.assertEqual(Partition([first, second]), Partition([second, first]))
        self.assertEqual(hash(Partition([first, second])), hash(Partition([second, first])))

    def test_matrix(self):
        '''
        One row per fraction, one column per hidden state
        '''
        partition = Partition([fraction(F(1, 2)), fraction(0, F(1, 4), F(1, 4))])
        matrix = partition.matrix(STATES)
        self.assertEqual((matrix.rows, matrix.cols), (2, 3))
        self.assertEqual(Partition.from_matrix(matrix, STATES), partition)

    def test_apply_refinement(self):
        '''
        Merging both fractions gives the total
        '''
        partition = Partition([fraction(F(1, 2)), fraction(0, F(1, 4), F(1, 4))])
        merged = apply_refinement(RatMatrix([[1, 1]]), partition, STATES)
        self.assertEqual(merged, Partition([partition.total()]))
        same = apply_refinement(RatMatrix.identity(2), partition, STATES)
        self.assertEqual(same, partition)

    def test_hyper_from_partitions(self):
        '''
        A hyper-distribution is rebuilt from its partitions
        '''
        partitions = {v: extract_partition(self.spec, v) for v in self.spec.visible_values}
        self.assertEqual(hyper_from_partitions(partitions, self.spec.scope), self.spec)

    @settings(max_examples=100, deadline=None)
    @given(generators.hyper_dists(generators.scope()))
    def test_partitions_rebuild(self, value):
        '''
        Extracting and rebuilding is the identity on canonical hypers
        '''
        partitions = {v: extract_partition(value, v) for v in value.visible_values}
        for partition in partitions.values():
            self.assertTrue(partition.is_reduced)
        self.assertEqual(sum(p.weight for p in partitions.values()), 1)
        self.assertEqual(hyper_from_partitions(partitions, value.scope), value)
