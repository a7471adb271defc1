import unittest

from jacksov.exceptions import PartitionError
from jacksov.partitions import (
    Partition,
    all_partitions,
    conjugate,
    dominance_leq,
    partitions_of,
)


class TestPartition(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(Partition.parse("2,1,0").parts, (2, 1, 0))
        self.assertEqual(Partition.parse("3, 1").parts, (3, 1))
        with self.assertRaises(PartitionError):
            Partition.parse("2,x")

    def test_invalid(self):
        with self.assertRaises(PartitionError):
            Partition((1, 2))
        with self.assertRaises(PartitionError):
            Partition((1, -1))

    def test_properties(self):
        lam = Partition((4, 2, 1, 0))
        self.assertEqual(lam.weight, 7)
        self.assertEqual(lam.length, 3)
        self.assertEqual(len(lam), 4)
        self.assertEqual(lam.diff(1, 3), 3)
        self.assertEqual(str(lam), "(4,2,1,0)")
        self.assertEqual(lam.reduced().parts, (4, 2, 1, 0))
        self.assertEqual(Partition((3, 2, 2)).reduced().parts, (1, 0, 0))

    def test_padded(self):
        self.assertEqual(Partition((2, 1)).padded(4).parts, (2, 1, 0, 0))
        self.assertEqual(Partition((2, 1, 0, 0)).padded(2).parts, (2, 1))
        with self.assertRaises(PartitionError):
            Partition((2, 1, 1)).padded(2)

    def test_conjugate(self):
        self.assertEqual(Partition((3, 1)).conjugate().parts, (2, 1, 1))
        self.assertEqual(conjugate((2, 2, 0)), (2, 2))
        self.assertEqual(conjugate(()), ())

    def test_multiplicities(self):
        self.assertEqual(Partition((2, 2, 1, 0)).multiplicities(), {2: 2, 1: 1})


class TestDominance(unittest.TestCase):
    def test_order(self):
        self.assertTrue(dominance_leq((2, 1, 1), (3, 1, 0)))
        self.assertFalse(dominance_leq((3, 0, 0), (2, 1, 0)))
        self.assertTrue(dominance_leq((2, 1), (2, 1, 0)))
        # incomparable pair
        self.assertFalse(dominance_leq((3, 1, 1, 1), (2, 2, 2, 0)))
        self.assertFalse(dominance_leq((2, 2, 2, 0), (3, 1, 1, 1)))

    def test_weights_must_match(self):
        with self.assertRaises(PartitionError):
            dominance_leq((2, 0), (1, 0))


class TestEnumeration(unittest.TestCase):
    def test_partitions_of(self):
        self.assertEqual(partitions_of(4, 2), [(4, 0), (3, 1), (2, 2)])
        self.assertEqual(partitions_of(3, 3), [(3, 0, 0), (2, 1, 0), (1, 1, 1)])
        self.assertEqual(
            partitions_of(4, 4, max_part=2), [(2, 2, 0, 0), (2, 1, 1, 0), (1, 1, 1, 1)]
        )
        self.assertEqual(partitions_of(0, 2), [(0, 0)])
        self.assertEqual(partitions_of(-1, 2), [])

    def test_lex_order_extends_dominance(self):
        basis = partitions_of(6, 3)
        for i, lam in enumerate(basis):
            for mu in basis[i + 1 :]:
                self.assertFalse(dominance_leq(lam, mu), (lam, mu))

    def test_all_partitions(self):
        self.assertEqual(
            [p.parts for p in all_partitions(2, 1)], [(1, 1), (1, 0), (0, 0)]
        )
        self.assertEqual(
            [p.parts for p in all_partitions(3, 1, max_last=0)],
            [(1, 1, 0), (1, 0, 0), (0, 0, 0)],
        )
