""" Tests of module pybetti.monotonicity """
import unittest
from fractions import Fraction

from pybetti.degrees import INF, DegreeSequence
from pybetti.monotonicity import strand_ratio, check_monotonicity, sweep_verify, maximal_chain
from pybetti.errors import ValidationError


def seq(*entries):
    return DegreeSequence(entries)


class tests_monotonicity(unittest.TestCase):

    def test_strand_ratio(self):
        self.assertEqual(strand_ratio(seq(0, 1, 2, 5), 1), Fraction(3, 2))
        self.assertEqual(strand_ratio(seq(0, 1, 2, 4), 1), Fraction(4, 3))
        self.assertEqual(strand_ratio(seq(0, 1, 2, 6), 1), Fraction(8, 5))
        self.assertEqual(strand_ratio(seq(0, 1, 2, INF), 1), 2)
        self.assertIs(strand_ratio(seq(0, 1, INF, INF), 1), INF)
        self.assertEqual(strand_ratio((0, 1, 2, 5), 1), Fraction(3, 2))
        with self.assertRaises(ValidationError):
            strand_ratio(seq(0, 1, INF, INF), 2)
        with self.assertRaises(ValidationError):
            strand_ratio(seq(0, 1, 2, 5), 3)

    def test_check_monotonicity(self):
        self.assertTrue(check_monotonicity(seq(0, 1, 2, 4), seq(0, 1, 2, 5), 1))
        self.assertTrue(check_monotonicity(seq(0, 1, 2, 5), seq(0, 1, 2, 6), 1))
        self.assertTrue(check_monotonicity(seq(0, 1, 2, 6), seq(0, 1, 2, INF), 1))
        self.assertTrue(check_monotonicity(seq(0, 1, 3, 4), seq(0, 2, 3, 4), 2))

    def test_check_monotonicity_errors(self):
        with self.assertRaises(ValidationError):
            check_monotonicity(seq(0, 1, 2, 5), seq(0, 1, 2, 5), 1)
        with self.assertRaises(ValidationError):
            check_monotonicity(seq(0, 1, 2, 6), seq(0, 1, 2, 5), 1)
        with self.assertRaises(ValidationError):
            check_monotonicity(seq(0, 1, 2, 5), seq(0, 1, 3, 5), 1)
        with self.assertRaises(ValidationError):
            check_monotonicity(seq(0, 1, INF, INF), seq(0, 1, INF, INF), 1)
        with self.assertRaises(ValidationError):
            check_monotonicity(seq(0, 1, 2, 5), seq(0, 1, 2), 1)

    def test_sweep(self):
        for n in range(1, 5):
            report = sweep_verify(8, n)
            self.assertGreater(report.checked, 0)
            self.assertEqual(report.counterexamples, [])
            self.assertEqual(report.indices, tuple(range(n)))

    def test_sweep_large_window(self):
        report = sweep_verify(10, 5)
        self.assertGreater(report.checked, 0)
        self.assertEqual(report.counterexamples, [])

    def test_sweep_single_index(self):
        report = sweep_verify(6, 3, 1)
        self.assertEqual(report.indices, (1,))
        self.assertEqual(report.counterexamples, [])
        self.assertLess(report.checked, sweep_verify(6, 3).checked)

    def test_sweep_empty(self):
        report = sweep_verify(0, 3)
        self.assertEqual(report.checked, 0)
        self.assertEqual(report.counterexamples, [])
        with self.assertRaises(ValidationError):
            sweep_verify(5, 3, 3)

    def test_maximal_chain(self):
        self.assertEqual(maximal_chain(seq(0, 1, 2, 4), seq(0, 2, 3, 5)),
                         [seq(0, 1, 2, 4), seq(0, 1, 2, 5), seq(0, 1, 3, 5), seq(0, 2, 3, 5)])
        self.assertEqual(maximal_chain(seq(0, 1, 2, 3), seq(0, 1, INF, INF)),
                         [seq(0, 1, 2, 3), seq(0, 1, 2, INF), seq(0, 1, INF, INF)])
        self.assertEqual(maximal_chain(seq(0, 1, 2, 3), seq(0, 1, 2, 3)), [seq(0, 1, 2, 3)])
        with self.assertRaises(ValidationError):
            maximal_chain(seq(0, 2, 3, 5), seq(0, 1, 2, 4))

    def test_ratios_increase_along_maximal_chain(self):
        for d, e, i in ((seq(0, 1, 2, 4), seq(0, 1, 2, 8), 1),
                        (seq(0, 1, 3, 4, 6), seq(0, 2, 3, 4, 9), 2),
                        (seq(1, 2, 4, 5), seq(1, 2, 5, INF), 0)):
            chain = maximal_chain(d, e)
            ratios = [strand_ratio(c, i) for c in chain]
            for smaller, larger in zip(ratios, ratios[1:]):
                self.assertLess(smaller, larger)
