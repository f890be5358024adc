import unittest
from collections import Counter
from itertools import product
from pathlib import Path
import sys


ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))


from hypercube_walks.centralizer.basis import (  # noqa: E402
    BasisElement,
    enumerate_basis,
    expand_Td,
    module_basis,
    project,
)
from hypercube_walks.centralizer.bratteli import (  # noqa: E402
    WalkPath,
    bratteli,
    diagram_to_paths,
    paths_to_diagram,
)
from hypercube_walks.centralizer.dimensions import (  # noqa: E402
    dim_module,
    dim_Zk_Z2n_diagrammatic,
    dim_Zk_Z2n_spectral,
    multiplicity_multinomial,
)
from hypercube_walks.core.config import LimitsConfig  # noqa: E402
from hypercube_walks.core.errors import CapExceededError  # noqa: E402
from hypercube_walks.core.group import GroupElement as G  # noqa: E402
from hypercube_walks.partitions.setpart import SetPartition, dim_Zk_G21n, enumerate_partitions  # noqa: E402
from hypercube_walks.spectral.walks import walk_count_cube_closed  # noqa: E402

D1 = SetPartition.from_labels([1, 1, 1, 1])
D2 = SetPartition.from_labels([1, 1, 2, 2])
D3 = SetPartition.from_labels([1, 2, 2, 1])
D4 = SetPartition.from_labels([1, 2, 1, 2])


class TestBasisElement(unittest.TestCase):
    def test_serialization(self) -> None:
        e = BasisElement(3, (2, 2, 3, 3, 3), (2, 1, 2, 1, 3))
        self.assertEqual(e.to_string(), "E[2,2,3,3,3]^[2,1,2,1,3]")
        self.assertEqual(e.compact(), "E_22333^21213")
        self.assertEqual(BasisElement.parse("E_22333^21213", 3), e)
        self.assertEqual(BasisElement.parse("E[2,2,3,3,3]^[2,1,2,1,3]", 3), e)
        self.assertEqual(e.endpoint, G.parse("001"))

    def test_parity_condition(self) -> None:
        with self.assertRaises(ValueError):
            BasisElement(3, (1, 2), (1, 3))
        with self.assertRaises(ValueError):
            BasisElement(3, (1, 4), (1, 4))

    def test_compact_needs_small_n(self) -> None:
        with self.assertRaises(ValueError):
            BasisElement(10, (10,), (10,)).compact()

    def test_diagram(self) -> None:
        self.assertEqual(BasisElement(3, (1, 2), (2, 1)).diagram(), D3)
        self.assertEqual(BasisElement(3, (3, 3), (1, 1)).diagram(), D2)
        e = BasisElement(3, (2, 2, 3, 3, 3), (2, 1, 2, 1, 3))
        self.assertIn(e, list(expand_Td(e.diagram(), 3)))


class TestEnumerateBasis(unittest.TestCase):
    def test_counts(self) -> None:
        self.assertEqual(sum(1 for _ in enumerate_basis(2, 3)), 21)
        for n in range(1, 5):
            self.assertEqual(sum(1 for _ in enumerate_basis(1, n)), n)
        self.assertEqual(sum(1 for _ in enumerate_basis(5, 3, G.parse("001"))), 3721)

    def test_lexicographic(self) -> None:
        items = list(enumerate_basis(3, 2))
        self.assertEqual(items, sorted(items))

    def test_budget(self) -> None:
        with self.assertRaises(CapExceededError) as ctx:
            list(enumerate_basis(5, 3, limits=LimitsConfig(budget=100)))
        self.assertEqual(ctx.exception.flag, "--budget")

    def test_module_basis(self) -> None:
        for a in G.all(3):
            words = list(module_basis(4, 3, a))
            self.assertEqual(len(words), dim_module(4, 3, a))
            self.assertEqual(sum(1 for _ in enumerate_basis(4, 3, a)), len(words) ** 2)


class TestDimensions(unittest.TestCase):
    def test_spectral(self) -> None:
        self.assertEqual(dim_Zk_Z2n_spectral(2, 3), 21)
        self.assertEqual(dim_Zk_Z2n_spectral(5, 3), 14763)
        self.assertEqual(dim_Zk_Z2n_spectral(1, 7), 7)

    def test_diagrammatic(self) -> None:
        self.assertEqual(dim_Zk_Z2n_diagrammatic(2, 3), 21)
        self.assertEqual(dim_Zk_Z2n_diagrammatic(6, 3), 132861)
        self.assertEqual(dim_Zk_Z2n_diagrammatic(1, 5), 5)

    def test_three_routes(self) -> None:
        for n in range(1, 5):
            for k in range(0, 6):
                spectral = dim_Zk_Z2n_spectral(k, n)
                self.assertEqual(spectral, dim_Zk_Z2n_diagrammatic(k, n))
                self.assertEqual(spectral, walk_count_cube_closed(n, 0, 2 * k))
                self.assertEqual(spectral, sum(1 for _ in enumerate_basis(k, n)))
                self.assertLessEqual(dim_Zk_G21n(max(k, 1), n), dim_Zk_Z2n_spectral(max(k, 1), n))

    def test_dim_module(self) -> None:
        self.assertEqual(dim_module(3, 3, G.parse("111")), 6)
        self.assertEqual(dim_module(4, 3, G.zero(3)), 21)
        self.assertEqual(dim_module(1, 3, G.parse("110")), 0)

    def test_multinomial_route(self) -> None:
        self.assertEqual(multiplicity_multinomial(5, 3, 1), 61)
        self.assertEqual(multiplicity_multinomial(3, 3, 3), 6)
        self.assertEqual(multiplicity_multinomial(2, 3, 2), 2)
        self.assertEqual(multiplicity_multinomial(0, 3, 0), 1)
        for n in range(1, 5):
            for h in range(n + 1):
                for k in range(7):
                    self.assertEqual(multiplicity_multinomial(k, n, h), walk_count_cube_closed(n, h, k))


class TestExpandTd(unittest.TestCase):
    def test_d1(self) -> None:
        self.assertEqual([e.compact() for e in expand_Td(D1, 3)], ["E_11^11", "E_22^22", "E_33^33"])

    def test_d2_follows_orbit_rule(self) -> None:
        summands = {e.compact() for e in expand_Td(D2, 3)}
        self.assertEqual(
            summands,
            {"E_11^22", "E_11^33", "E_22^11", "E_22^33", "E_33^11", "E_33^22"},
        )

    def test_d4(self) -> None:
        summands = [e.compact() for e in expand_Td(D4, 3)]
        self.assertEqual(len(summands), 6)
        self.assertIn("E_12^12", summands)
        self.assertIn("E_21^21", summands)

    def test_single_block(self) -> None:
        single = SetPartition.from_labels([1] * 6)
        self.assertEqual(sum(1 for _ in expand_Td(single, 5)), 5)

    def test_errors(self) -> None:
        with self.assertRaises(ValueError):
            list(expand_Td(SetPartition.from_labels([1, 2, 3, 4]), 3))
        with self.assertRaises(ValueError):
            list(expand_Td(SetPartition.from_labels([1, 2]), 3))

    def test_disjoint_cover(self) -> None:
        for n in range(1, 4):
            for k in range(1, 4):
                summands = []
                for d in enumerate_partitions(k, n, even_only=True):
                    summands.extend(expand_Td(d, n))
                self.assertEqual(len(summands), len(set(summands)))
                self.assertEqual(set(summands), set(enumerate_basis(k, n)))

    def test_project(self) -> None:
        self.assertEqual(project(expand_Td(D2, 3), (3, 3), (1, 1)), BasisElement(3, (3, 3), (1, 1)))
        self.assertIsNone(project(expand_Td(D1, 3), (1, 2), (1, 2)))
        self.assertEqual(project(expand_Td(D4, 3), (1, 2), (1, 2)), BasisElement(3, (1, 2), (1, 2)))


class TestBratteli(unittest.TestCase):
    def test_n3_levels(self) -> None:
        levels = bratteli(3, 6)
        rows = [[m for _, m in level.items()] for level in levels]
        self.assertEqual(
            rows,
            [
                [1],
                [1, 1, 1],
                [3, 2, 2, 2],
                [7, 7, 7, 6],
                [21, 20, 20, 20],
                [61, 61, 61, 60],
                [183, 182, 182, 182],
            ],
        )
        self.assertEqual(
            [level.sum_of_squares() for level in levels],
            [1, 3, 21, 183, 1641, 14763, 132861],
        )
        self.assertEqual(levels[3].sum_of_squares(), 7 * 7 * 3 + 6 * 6)

    def test_matches_module_dimensions(self) -> None:
        for n in range(1, 5):
            for level in bratteli(n, 6):
                for a in G.all(n):
                    self.assertEqual(level.multiplicity(a), dim_module(level.level, n, a))
                self.assertEqual(level.sum_of_squares(), dim_Zk_Z2n_spectral(level.level, n))

    def test_n1_alternates(self) -> None:
        levels = bratteli(1, 3)
        self.assertEqual([[str(a) for a, _ in level.items()] for level in levels], [["0"], ["1"], ["0"], ["1"]])

    def test_cap(self) -> None:
        with self.assertRaises(CapExceededError):
            bratteli(6, 2, limits=LimitsConfig(max_n=5))


class TestPaths(unittest.TestCase):
    def test_highlighted_pair(self) -> None:
        e = paths_to_diagram(WalkPath(3, (2, 2, 3, 3, 3)), WalkPath(3, (2, 1, 2, 1, 3)))
        self.assertEqual(e.compact(), "E_22333^21213")
        self.assertEqual(diagram_to_paths(e), (WalkPath(3, (2, 2, 3, 3, 3)), WalkPath(3, (2, 1, 2, 1, 3))))

    def test_walk_vertices(self) -> None:
        path = WalkPath(3, (2, 2, 3))
        self.assertEqual([str(v) for v in path.vertices()], ["000", "010", "000", "001"])
        self.assertEqual(path.weights(), [0, 1, 0, 1])

    def test_diagonal(self) -> None:
        rho = WalkPath(2, (1, 2, 1))
        e = paths_to_diagram(rho, rho)
        self.assertEqual(e.alpha, e.beta)

    def test_endpoint_mismatch(self) -> None:
        with self.assertRaises(ValueError):
            paths_to_diagram(WalkPath(3, (1, 2)), WalkPath(3, (1, 3)))

    def test_bijection_counts(self) -> None:
        n = 3
        for k in range(0, 6):
            images = set()
            per_endpoint: Counter = Counter()
            words = list(product(range(1, n + 1), repeat=k))
            for alpha in words:
                for beta in words:
                    rho1, rho2 = WalkPath(n, alpha), WalkPath(n, beta)
                    if rho1.endpoint != rho2.endpoint:
                        continue
                    e = paths_to_diagram(rho1, rho2)
                    images.add(e)
                    per_endpoint[e.endpoint] += 1
            self.assertEqual(images, set(enumerate_basis(k, n)))
            for a in G.all(n):
                self.assertEqual(per_endpoint[a], dim_module(k, n, a) ** 2)


if __name__ == "__main__":
    unittest.main()
