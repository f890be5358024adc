import unittest
from pathlib import Path
import sys


ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))


from hypercube_walks.core.errors import DimensionMismatchError, InexactDivisionError  # noqa: E402
from hypercube_walks.core.group import GroupElement, character_value, hamming_weight  # noqa: E402
from hypercube_walks.core.matrix import IntMatrix, commutator, evaluate_polynomial  # noqa: E402
from hypercube_walks.core.poly import (  # noqa: E402
    IntPolynomial,
    RationalFunction,
    linear_factor_multiplicities,
    one_minus,
    poly_from_roots,
    series_expand,
)


class TestGroupElement(unittest.TestCase):
    def test_parse_and_str(self) -> None:
        a = GroupElement.parse("110")
        self.assertEqual(a.n, 3)
        self.assertEqual(a.bits, (1, 1, 0))
        self.assertEqual(a.index, 6)
        self.assertEqual(str(a), "110")
        self.assertEqual(GroupElement.parse("(1,1,0)"), a)

    def test_parse_rejects_malformed(self) -> None:
        for text in ("", "1a0", "012"):
            with self.assertRaises(ValueError):
                GroupElement.parse(text)
        with self.assertRaises(ValueError):
            GroupElement.parse("11", n=3)

    def test_unit_is_coordinate_one_first(self) -> None:
        self.assertEqual(str(GroupElement.unit(3, 1)), "100")
        self.assertEqual(str(GroupElement.unit(3, 3)), "001")
        self.assertEqual(str(GroupElement.sum_of_units(3, [2, 2, 3, 3, 3])), "001")

    def test_hamming_weight(self) -> None:
        self.assertEqual(hamming_weight(GroupElement.parse("10110")), 3)
        self.assertEqual(hamming_weight(GroupElement.zero(4)), 0)
        self.assertEqual(hamming_weight(GroupElement.parse("1111")), 4)

    def test_character_value(self) -> None:
        self.assertEqual(character_value(GroupElement.parse("110"), GroupElement.parse("100")), -1)
        self.assertEqual(character_value(GroupElement.parse("110"), GroupElement.parse("110")), 1)
        zero = GroupElement.zero(3)
        for b in GroupElement.all(3):
            self.assertEqual(character_value(zero, b), 1)

    def test_addition_needs_same_dimension(self) -> None:
        self.assertEqual(GroupElement.parse("110") + GroupElement.parse("011"), GroupElement.parse("101"))
        with self.assertRaises(DimensionMismatchError):
            GroupElement.parse("11") + GroupElement.parse("110")

    def test_rejects_large_n(self) -> None:
        with self.assertRaises(ValueError):
            GroupElement(65, 0)

    def test_all_in_index_order(self) -> None:
        self.assertEqual([str(a) for a in GroupElement.all(2)], ["00", "01", "10", "11"])


class TestPolynomial(unittest.TestCase):
    def test_arithmetic(self) -> None:
        p = IntPolynomial((-1, 0, 1))
        q = IntPolynomial((-9, 0, 1))
        self.assertEqual((p * q).coeffs, (9, 0, -10, 0, 1))
        self.assertEqual(str(p * q), "t^4 - 10t^2 + 9")
        self.assertEqual((p + q).coeffs, (-10, 0, 2))
        self.assertEqual((p - p).coeffs, ())
        self.assertEqual((3 * p).coeffs, (-3, 0, 3))

    def test_exact_division(self) -> None:
        product = IntPolynomial((1, 0, -10, 0, 9))
        self.assertEqual(product.exact_divide(one_minus(3)).coeffs, (1, 3, -1, -3))
        self.assertIsNone(IntPolynomial((1, 1)).try_divide(IntPolynomial((1, 2))))
        with self.assertRaises(InexactDivisionError):
            IntPolynomial((1, 0, 1)).exact_divide(IntPolynomial((1, 1)))
        with self.assertRaises(InexactDivisionError):
            IntPolynomial((3, 5)).divide_scalar(2)

    def test_poly_from_roots(self) -> None:
        self.assertEqual(str(poly_from_roots([1, -1])), "t^2 - 1")
        self.assertEqual(poly_from_roots([2, 0, -2]).coeffs, (0, -4, 0, 1))

    def test_series_expand(self) -> None:
        f = RationalFunction(IntPolynomial((1,)), IntPolynomial((1, 0, -1)))
        self.assertEqual(series_expand(f, 4), [1, 0, 1, 0, 1])
        g = RationalFunction(IntPolynomial((1, 0, -7)), IntPolynomial((1, 0, -10, 0, 9)))
        self.assertEqual(g.series(8), [1, 0, 3, 0, 21, 0, 183, 0, 1641])
        self.assertEqual(series_expand(RationalFunction(IntPolynomial(), IntPolynomial((1, 1))), 3), [0, 0, 0, 0])

    def test_rational_reduce(self) -> None:
        num = IntPolynomial((0, 0, 2)) * IntPolynomial((1, 0, -1)) ** 2
        den = IntPolynomial((1, 0, -9)) * IntPolynomial((1, 0, -1)) ** 3
        reduced = RationalFunction(num, den).reduce([3, 1, -1, -3])
        self.assertEqual(reduced.num.coeffs, (0, 0, 2))
        self.assertEqual(reduced.den.coeffs, (1, 0, -10, 0, 9))

    def test_rational_normalizes_sign(self) -> None:
        f = RationalFunction(IntPolynomial((2,)), IntPolynomial((-1, 1)))
        self.assertEqual(f.num.coeffs, (-2,))
        self.assertEqual(f.den.coeffs, (1, -1))
        with self.assertRaises(ValueError):
            RationalFunction(IntPolynomial((1,)), IntPolynomial((3, 1)))

    def test_linear_factor_multiplicities(self) -> None:
        den = IntPolynomial((1, 0, -9)) * IntPolynomial((1, 0, -1)) ** 3
        self.assertEqual(linear_factor_multiplicities(den, [3, 1, -1, -3]), [(3, 1), (1, 3), (-1, 3), (-3, 1)])


class TestIntMatrix(unittest.TestCase):
    def test_products(self) -> None:
        a = IntMatrix.from_rows([[0, 1], [1, 0]])
        self.assertEqual(a @ a, IntMatrix.identity(2))
        self.assertEqual(a.power(3), a)
        self.assertEqual(a.matvec([5, 7]), [7, 5])
        self.assertEqual(a.vecmat([5, 7]), [7, 5])

    def test_commutator_and_trace(self) -> None:
        r = IntMatrix.from_rows([[0, 0], [1, 0]])
        l = IntMatrix.from_rows([[0, 1], [0, 0]])
        self.assertEqual(commutator(l, r), IntMatrix.diagonal([1, -1]))
        self.assertEqual(commutator(l, r).trace(), 0)

    def test_evaluate_polynomial(self) -> None:
        a = IntMatrix.from_rows([[0, 1], [1, 0]])
        self.assertTrue(evaluate_polynomial(IntPolynomial((-1, 0, 1)), a).is_zero())

    def test_shape_errors(self) -> None:
        with self.assertRaises(DimensionMismatchError):
            IntMatrix.identity(2) @ IntMatrix.identity(3)
        with self.assertRaises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_delete_row_col(self) -> None:
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        self.assertEqual(m.delete_row_col(0).to_rows(), [[5, 6], [8, 9]])


if __name__ == "__main__":
    unittest.main()
