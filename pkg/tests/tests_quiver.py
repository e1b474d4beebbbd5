""" Tests of module pybetti.quiver """
import itertools
import unittest

from pybetti.diagrams import BettiDiagram
from pybetti.diagramformat import parse_diagram, format_diagram
from pybetti.quiver import Triplet, Member, Excluded, PROVED, ASSERTED, GENERATORS, \
    generators, make_triplet, add_triplets, triplet_to_diagram, diagram_to_triplet, \
    is_admissible, admissible_by_congruence, decompose_triplet, classify, is_in_bmod, \
    enumerate_members
from pybetti.errors import ValidationError, NotInSimplexError

GENERATOR_DIAGRAMS = {
    (6, 0, 0): "3 8 6 -\n- - - 1",
    (0, 0, 6): "1 - - -\n- 6 8 3",
    (1, 2, 1): "1 2 1 -\n- 1 2 1",
    (3, 3, 0): "2 5 3 -\n- - 1 1",
    (0, 3, 3): "1 1 - -\n- 3 5 2",
    (1, 8, 1): "2 4 1 -\n- 1 4 2",
    (3, 9, 0): "3 7 3 -\n- - 3 2",
    (0, 9, 3): "2 3 - -\n- 3 7 3",
    (0, 12, 0): "2 4 - -\n- - 4 2",
    (0, 18, 0): "3 6 - -\n- - 6 3",
}


def triplets(bound):
    for total in range(bound + 1):
        for r in range(total + 1):
            for s in range(total - r + 1):
                yield Triplet(r, s, total - r - s)


class tests_quiver(unittest.TestCase):

    def test_make_triplet(self):
        self.assertEqual(make_triplet(1, 2, 1), Triplet(1, 2, 1))
        for bad in ((-1, 0, 0), (1.0, 2, 1), (True, 2, 1), ("1", 2, 1)):
            with self.assertRaises(ValidationError):
                make_triplet(*bad)
        self.assertEqual(add_triplets((1, 2, 1), (3, 3, 0), (0, 0, 6)), Triplet(4, 5, 7))
        self.assertEqual(add_triplets(), Triplet(0, 0, 0))

    def test_generators(self):
        self.assertEqual(len(GENERATORS), 10)
        self.assertEqual([triplet for triplet, _ in generators()], list(GENERATOR_DIAGRAMS))
        for triplet, diagram in generators():
            self.assertEqual(format_diagram(diagram), GENERATOR_DIAGRAMS[triplet])
            self.assertTrue(diagram.is_integral())
            self.assertTrue(diagram.is_finite_length_consistent())

    def test_diagram_to_triplet(self):
        self.assertEqual(diagram_to_triplet(parse_diagram("2 4 1 -\n- 1 4 2")), (1, 8, 1))
        for triplet in triplets(20):
            self.assertEqual(diagram_to_triplet(triplet_to_diagram(*triplet)), triplet)

    def test_diagram_to_triplet_errors(self):
        with self.assertRaises(NotInSimplexError):
            diagram_to_triplet(BettiDiagram(2, {(0, 0): 1}))
        with self.assertRaises(NotInSimplexError):
            diagram_to_triplet(parse_diagram("1 3 3 1"))
        with self.assertRaises(NotInSimplexError):
            diagram_to_triplet(BettiDiagram(3, {(0, 0): 1}))
        with self.assertRaises(NotInSimplexError):
            diagram_to_triplet(triplet_to_diagram(1, 2, 1).scale(-1))

    def test_admissibility(self):
        for triplet in triplets(60):
            self.assertEqual(admissible_by_congruence(*triplet), is_admissible(*triplet),
                             triplet)
        self.assertFalse(is_admissible(1, 1, 1))
        with self.assertRaises(ValidationError):
            admissible_by_congruence(-3, 3, 0)

    def test_duality(self):
        """ the dual of (r, s, t) is (t, s, r) """
        for triplet in triplets(12):
            if triplet.r or triplet.s or triplet.t:
                self.assertEqual(triplet_to_diagram(*triplet).dual(4),
                                 triplet_to_diagram(triplet.t, triplet.s, triplet.r))
            if is_admissible(*triplet):
                self.assertEqual(type(classify(*triplet)),
                                 type(classify(triplet.t, triplet.s, triplet.r)))

    def test_is_in_bmod(self):
        self.assertEqual(is_in_bmod(2, 4, 2), Member(((1, 2, 1), (1, 2, 1))))
        self.assertEqual(is_in_bmod(6, 0, 0), Member(((6, 0, 0),)))
        self.assertEqual(is_in_bmod(0, 0, 0), Member(()))
        self.assertEqual(is_in_bmod(0, 6, 0), Excluded("s=6 exception", PROVED))
        self.assertEqual(is_in_bmod(3, 0, 3).provenance, PROVED)
        self.assertEqual(is_in_bmod(2, 1, 5).family, "s=1, family (2+6γ,1,5+6α)")
        self.assertEqual(is_in_bmod(5, 1, 2).family, "s=1, family (5+6γ,1,2+6α)")
        self.assertEqual(is_in_bmod(4, 2, 10).family, "s=2, family (4+6γ,2,4+6α)")
        self.assertEqual(is_in_bmod(5, 4, 5), Excluded("s=4, family (5+6γ,4,5+6α)", ASSERTED))
        with self.assertRaises(ValidationError):
            is_in_bmod(1, 1, 1)

    def test_decompositions_sum_up(self):
        for triplet in triplets(24):
            if not is_admissible(*triplet):
                continue
            result = is_in_bmod(*triplet)
            if isinstance(result, Member):
                self.assertEqual(add_triplets(*result.decomposition), triplet)
                self.assertTrue(all(generator in GENERATORS
                                    for generator in result.decomposition))

    def test_classifier_and_search_agree(self):
        report = enumerate_members(30)
        self.assertEqual(report.disagreements, [])
        self.assertEqual(len(report.results),
                         sum(1 for triplet in triplets(30) if admissible_by_congruence(*triplet)))
        excluded = [triplet for triplet, result in report.results if isinstance(result, Excluded)]
        self.assertIn((0, 6, 0), excluded)
        self.assertIn((3, 0, 3), excluded)
        self.assertNotIn((0, 18, 0), excluded)

        report = enumerate_members(0)
        self.assertEqual(report.results, [((0, 0, 0), Member(()))])
        self.assertEqual(report.disagreements, [])

    def test_closure(self):
        for first, second in itertools.combinations_with_replacement(GENERATORS, 2):
            self.assertIsInstance(is_in_bmod(*add_triplets(first, second)), Member)

    def test_minimality(self):
        """ no generator is a sum of the others """
        for generator in GENERATORS:
            others = [other for other in GENERATORS if other != generator]
            self.assertIsNone(decompose_triplet(generator, others))

    def test_decompose_triplet(self):
        self.assertEqual(decompose_triplet((0, 24, 0)), ((0, 12, 0), (0, 12, 0)))
        self.assertEqual(decompose_triplet((0, 30, 0)), ((0, 12, 0), (0, 18, 0)))
        self.assertIsNone(decompose_triplet((0, 6, 0)))
        with self.assertRaises(ValidationError):
            decompose_triplet((1, 2, 1), [(0, 0, 0)])
