""" Tests of module pybetti.diagrams """
import math
import pickle
import unittest
from fractions import Fraction

from pybetti.degrees import INF, DegreeSequence, iter_degree_sequences
from pybetti.diagrams import BettiDiagram, HilbertNumerator, pure_diagram, \
    smallest_integral_point, top_strand, normalizing_factor, to_rational
from pybetti.diagramformat import parse_diagram
from pybetti.errors import ValidationError, NotInConeError, NonNegativityViolation

# (degree sequence, pi_d, pi~_d), entries listed column by column
PURE_DIAGRAMS = [
    ((0, 1, 2, 4), ("1/8", "1/3", "1/4", "1/24"), (3, 8, 6, 1)),
    ((0, 1, 2, 5), ("1/10", "1/4", "1/6", "1/60"), (6, 15, 10, 1)),
    ((0, 2, 3, 5), None, (1, 5, 5, 1)),
    ((0, 3, 4, 5), None, (1, 10, 15, 6)),
    ((0, 2, 3, 4), ("1/24", "1/4", "1/3", "1/8"), (1, 6, 8, 3)),
    ((0, 1, 3, 4), ("1/12", "1/6", "1/6", "1/12"), (1, 2, 2, 1)),
    ((0, 1, 2, 3), None, (1, 3, 3, 1)),
    ((0, 2, 3, 4, 5, 8), None, (3, 40, 96, 90, 32, 1)),
    ((0, 3, 4, 6, 7, 8), None, (5, 112, 210, 280, 240, 63)),
    ((0, INF, INF, INF), ("1",), (1,)),
]


def column_values(diagram):
    """ the nonzero entries of a pure diagram, column by column """
    return tuple(value for _, value in diagram.items())


class tests_diagrams(unittest.TestCase):

    def test_to_rational(self):
        self.assertEqual(to_rational(3), Fraction(3))
        self.assertEqual(to_rational("6/5"), Fraction(6, 5))
        self.assertEqual(to_rational(Fraction(1, 2)), Fraction(1, 2))
        for value in (0.5, True, "0.5", "1e3", "a", None, "1/0"):
            with self.assertRaises(ValidationError):
                to_rational(value)

    def test_diagram_basics(self):
        diagram = BettiDiagram(3, {(0, 0): 2, (1, 1): 3, (2, 2): 2, (1, 2): 0})
        self.assertEqual(diagram.n, 3)
        self.assertEqual(diagram[(1, 2)], 0)
        self.assertEqual(diagram[(1, 1)], 3)
        self.assertEqual(diagram.positions(), {(0, 0), (1, 1), (2, 2)})
        self.assertEqual(diagram.column(1), {1: 3})
        self.assertEqual(diagram.min_degree(3), None)
        self.assertEqual(diagram.nonzero_columns(), [0, 1, 2])
        self.assertEqual(diagram.projective_dimension, 2)
        self.assertEqual(diagram.regularity, 0)
        self.assertTrue(diagram.is_integral())
        self.assertTrue(diagram.is_nonnegative())
        self.assertFalse(diagram.is_zero())
        self.assertTrue(BettiDiagram(3).is_zero())
        self.assertIsNone(BettiDiagram(3).regularity)

        with self.assertRaises(ValidationError):
            BettiDiagram(3, {(4, 4): 1})
        with self.assertRaises(ValidationError):
            BettiDiagram(3, {(0, 0): 0.5})
        with self.assertRaises(ValidationError):
            BettiDiagram(-1)

    def test_immutable(self):
        diagram = BettiDiagram(2, {(0, 0): 1})
        with self.assertRaises(AttributeError):
            diagram.n = 3
        self.assertEqual(pickle.loads(pickle.dumps(diagram)), diagram)
        self.assertEqual(hash(diagram), hash(BettiDiagram(2, {(0, 0): Fraction(1)})))

    def test_from_rows(self):
        diagram = BettiDiagram.from_rows([["2", "3", "2", "-"],
                                          [None, 3, 3, 0],
                                          ["-", "2", "3", "2"]])
        self.assertEqual(diagram, parse_diagram("2 3 2 -\n- 3 3 -\n- 2 3 2"))
        self.assertEqual(diagram[(3, 5)], 2)
        with self.assertRaises(ValidationError):
            BettiDiagram.from_rows([[1, 2], [1]])

    def test_arithmetic(self):
        pure = smallest_integral_point(DegreeSequence((0, 1, 2, 5)))
        self.assertEqual(column_values(pure.scale(Fraction(1, 5))),
                         (Fraction(6, 5), 3, 2, Fraction(1, 5)))
        self.assertEqual(Fraction(1, 5) * pure, pure * Fraction(1, 5))
        self.assertTrue((pure - pure).is_zero())
        self.assertEqual(pure + pure, 2 * pure)
        self.assertEqual(pure.subtract_nonneg(pure.scale(Fraction(1, 2))), pure.scale("1/2"))

        with self.assertRaises(NonNegativityViolation) as context:
            pure.scale(Fraction(1, 2)).subtract_nonneg(pure)
        self.assertEqual(context.exception.diagram, pure.scale(Fraction(-1, 2)))

        with self.assertRaises(ValidationError):
            _ = pure + BettiDiagram(2)

    def test_pure_diagram(self):
        for sequence, expected_pure, expected_tilde in PURE_DIAGRAMS:
            sequence = DegreeSequence(sequence)
            pure = pure_diagram(sequence)
            if expected_pure is not None:
                self.assertEqual(column_values(pure),
                                 tuple(Fraction(value) for value in expected_pure))
            self.assertEqual(column_values(smallest_integral_point(sequence)), expected_tilde)

            # entries sit exactly at the finite positions of the sequence
            self.assertEqual(pure.positions(),
                             {(i, degree) for i, degree in enumerate(sequence)
                              if degree is not INF})

        with self.assertRaises(ValidationError):
            pure_diagram(DegreeSequence((INF, INF)))
        with self.assertRaises(ValidationError):
            pure_diagram((0, 2, 1))

    def test_smallest_integral_point_window(self):
        """ pi~_d is an integral multiple of pi_d with coprime entries """
        for n in range(1, 6):
            for sequence in iter_degree_sequences(n, 12):
                point = smallest_integral_point(sequence)
                values = [int(value) for _, value in point.items()]
                self.assertTrue(point.is_integral())
                self.assertEqual(math.gcd(*values), 1)
                self.assertEqual(point, pure_diagram(sequence).scale(normalizing_factor(sequence)))

    def test_duality(self):
        """ pi~ of the dual sequence is the reversed pi~ """
        for sequence in iter_degree_sequences(3, 9, full_length=True):
            c = sequence[3]
            dual = DegreeSequence(tuple(c - degree for degree in reversed(sequence.entries)))
            self.assertEqual(column_values(smallest_integral_point(dual)),
                             tuple(reversed(column_values(smallest_integral_point(sequence)))))
            self.assertEqual(smallest_integral_point(sequence).dual(c),
                             smallest_integral_point(dual))

    def test_top_strand(self):
        example = parse_diagram("2 3 2 -\n- 3 3 -\n- 2 3 2")
        self.assertEqual(top_strand(example), DegreeSequence((0, 1, 2, 5)))

        for sequence in iter_degree_sequences(3, 7):
            self.assertEqual(top_strand(pure_diagram(sequence)), sequence)

        with self.assertRaises(ValidationError):
            top_strand(BettiDiagram(3))
        with self.assertRaises(NotInConeError):
            top_strand(BettiDiagram(3, {(0, 0): 1, (1, 3): 1, (2, 2): 1}))
        with self.assertRaises(NotInConeError):
            top_strand(BettiDiagram(3, {(0, 0): 1, (2, 2): 1}))
        with self.assertRaises(NotInConeError):
            top_strand(BettiDiagram(3, {(0, 0): 1, (1, 1): -1}))

    def test_hilbert_numerator(self):
        cube = smallest_integral_point(DegreeSequence((0, 1, 2, 3)))
        self.assertEqual(cube.hilbert_numerator(), HilbertNumerator({0: 1, 1: -3, 2: 3, 3: -1}))
        self.assertTrue(cube.is_finite_length_consistent(3))
        self.assertEqual(cube.codimension(), 3)

        intro = parse_diagram("4 8 6 -\n- 6 8 4")
        numerator = intro.hilbert_numerator()
        self.assertEqual(numerator, HilbertNumerator({0: 4, 1: -8, 3: 8, 4: -4}))
        self.assertTrue(intro.is_finite_length_consistent(3))
        self.assertEqual(numerator.quotient(3), HilbertNumerator({0: 4, 1: 4}))
        self.assertEqual(numerator.order_at_one(), 3)

        single = BettiDiagram(3, {(0, 0): 1})
        self.assertEqual(single.hilbert_numerator(), HilbertNumerator({0: 1}))
        self.assertFalse(single.is_finite_length_consistent(3))
        self.assertEqual(single.codimension(), 0)
        with self.assertRaises(ValidationError):
            single.hilbert_numerator().quotient(1)
        with self.assertRaises(ValidationError):
            single.is_finite_length_consistent(2)

        self.assertIs(BettiDiagram(3).codimension(), INF)

    def test_hilbert_numerator_shifted(self):
        """ negative degrees are handled through a shift """
        shifted = pure_diagram(DegreeSequence((-2, -1, 0, 1))).scale(6)
        self.assertEqual(shifted.hilbert_numerator().coefficients,
                         {-2: 1, -1: -3, 0: 3, 1: -1})
        self.assertEqual(shifted.codimension(), 3)
        self.assertEqual(shifted.hilbert_numerator().quotient(3), HilbertNumerator({-2: 1}))

    def test_hilbert_numerator_linear(self):
        d = smallest_integral_point(DegreeSequence((0, 1, 2, 5)))
        e = smallest_integral_point(DegreeSequence((0, 2, 3, 5)))
        a, b = Fraction(2, 3), Fraction(-5, 7)
        self.assertEqual((d.scale(a) + e.scale(b)).hilbert_numerator(),
                         d.hilbert_numerator() * a + e.hilbert_numerator() * b)

    def test_dual(self):
        diagram = parse_diagram("2 3 2 -\n- 3 3 -\n- 2 3 2")
        self.assertEqual(diagram.dual(), diagram)
        self.assertEqual(diagram.dual(6)[(0, 1)], 2)
        with self.assertRaises(ValidationError):
            BettiDiagram(3, {(0, 0): 1}).dual()
