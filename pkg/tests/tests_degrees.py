""" Tests of module pybetti.degrees """
import pickle
import unittest
from fractions import Fraction

from pybetti.degrees import INF, Infinity, DegreeSequence, iter_degree_sequences, is_finite
from pybetti.errors import ValidationError, ParseError


class tests_degrees(unittest.TestCase):

    def test_infinity(self):
        """ INF is a singleton greater than any integer or fraction """
        self.assertIs(Infinity(), INF)
        self.assertTrue(INF > 10**100)
        self.assertTrue(10**100 < INF)
        self.assertTrue(Fraction(7, 3) < INF)
        self.assertFalse(INF < 3)
        self.assertFalse(INF < INF)
        self.assertTrue(INF <= INF)
        self.assertEqual(INF, INF)
        self.assertNotEqual(INF, 3)
        self.assertIs(pickle.loads(pickle.dumps(INF)), INF)
        self.assertFalse(is_finite(INF))
        self.assertTrue(is_finite(0))

    def test_validation(self):
        """ test constructor checks """
        DegreeSequence((0, 1, 2, 5))
        DegreeSequence((0, 2, INF, INF))
        DegreeSequence((-3, -1))

        # not strictly increasing
        with self.assertRaises(ValidationError):
            DegreeSequence((0, 1, 1, 3))
        with self.assertRaises(ValidationError):
            DegreeSequence((0, 2, 1))

        # finite after infinite
        with self.assertRaises(ValidationError):
            DegreeSequence((0, INF, 3))

        # not integers
        with self.assertRaises(ValidationError):
            DegreeSequence((0, 1.5, 3))
        with self.assertRaises(ValidationError):
            DegreeSequence((False, True))

        with self.assertRaises(ValidationError):
            DegreeSequence(())

    def test_immutable(self):
        sequence = DegreeSequence((0, 1, 2))
        with self.assertRaises(AttributeError):
            sequence.foo = 1
        self.assertEqual(pickle.loads(pickle.dumps(sequence)), sequence)
        self.assertEqual(hash(sequence), hash(DegreeSequence((0, 1, 2))))

    def test_parse(self):
        self.assertEqual(DegreeSequence.parse("(0,1,2,inf)"), DegreeSequence((0, 1, 2, INF)))
        self.assertEqual(DegreeSequence.parse(" ( 0, 2 ,3, 5 ) "), DegreeSequence((0, 2, 3, 5)))
        self.assertEqual(DegreeSequence.parse("0,1,oo,∞"), DegreeSequence((0, 1, INF, INF)))
        self.assertEqual(DegreeSequence.parse("(0)", 3), DegreeSequence((0, INF, INF, INF)))

        for literal in ("", "()", "(0,,1)", "(0,a)", "(0,1.5)", "(2,1)", "(0,inf,2)"):
            with self.assertRaises(ParseError):
                DegreeSequence.parse(literal)

        # parse errors are validation errors
        with self.assertRaises(ValidationError):
            DegreeSequence.parse("(1,1)")

    def test_str(self):
        sequence = DegreeSequence((0, 1, 2, INF))
        self.assertEqual(str(sequence), "(0,1,2,inf)")
        self.assertEqual(repr(sequence), "DegreeSequence((0,1,2,inf))")
        self.assertEqual(DegreeSequence.parse(str(sequence)), sequence)

    def test_length(self):
        self.assertEqual(DegreeSequence((0, 1, 2, 5)).length, 3)
        self.assertEqual(DegreeSequence((0, 1, INF, INF)).length, 1)
        self.assertEqual(DegreeSequence((0, INF, INF, INF)).length, 0)
        with self.assertRaises(ValidationError):
            _ = DegreeSequence((INF, INF)).length
        self.assertEqual(DegreeSequence((0, 1, 2, 5)).n, 3)

    def test_padded(self):
        self.assertEqual(DegreeSequence((0, 2)).padded(3), DegreeSequence((0, 2, INF, INF)))
        self.assertEqual(DegreeSequence((0, 2)).padded(1), DegreeSequence((0, 2)))
        with self.assertRaises(ValidationError):
            DegreeSequence((0, 2, 3)).padded(1)

    def test_order(self):
        """ termwise partial order with INF greatest """
        d = DegreeSequence((0, 1, 2, 5))
        e = DegreeSequence((0, 2, 3, 5))
        f = DegreeSequence((0, 1, 2, INF))
        self.assertTrue(d < e)
        self.assertTrue(d <= e)
        self.assertTrue(e > d)
        self.assertTrue(e >= d)
        self.assertFalse(d < d)
        self.assertTrue(d <= d)
        self.assertTrue(d < f)
        self.assertFalse(e < f)
        self.assertFalse(f < e)

        with self.assertRaises(ValidationError):
            _ = d < DegreeSequence((0, 1, 2))

    def test_iter_degree_sequences(self):
        sequences = list(iter_degree_sequences(3, 8))
        self.assertEqual(len(sequences), 9 + 36 + 84 + 126)
        self.assertEqual(len(set(sequences)), len(sequences))
        self.assertEqual(sequences[0], DegreeSequence((0, INF, INF, INF)))
        self.assertTrue(all(sequence.is_finite(0) for sequence in sequences))

        self.assertEqual(len(list(iter_degree_sequences(4, 8))), 381)
        self.assertEqual(list(iter_degree_sequences(3, 0)), [DegreeSequence((0, INF, INF, INF))])

        full = list(iter_degree_sequences(3, 5, full_length=True))
        self.assertEqual(len(full), 15)
        self.assertTrue(all(sequence.length == 3 for sequence in full))
