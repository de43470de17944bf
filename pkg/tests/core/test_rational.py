import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.core import (
    format_rational,
    parse_rational_list,
    pochhammer,
    sign,
    to_rational,
)
from mhahn.errors import (
    InputError,
    RationalSyntaxError,
)


class TestToRational(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(to_rational("7/2"), Fraction(7, 2))
        self.assertEqual(to_rational("-3/4"), Fraction(-3, 4))
        self.assertEqual(to_rational(" 6/4 "), Fraction(3, 2))
        self.assertEqual(to_rational("5"), Fraction(5))
        self.assertEqual(to_rational(5), Fraction(5))
        self.assertEqual(to_rational(Fraction(1, 3)), Fraction(1, 3))

    def test_reject(self):
        for bad in ["1.5", "1/0", "a/2", "", "1/-2", "1e3"]:
            with self.assertRaises(RationalSyntaxError, msg=bad):
                to_rational(bad)
        with self.assertRaises(RationalSyntaxError):
            to_rational(0.5)
        with self.assertRaises(RationalSyntaxError):
            to_rational(True)

    def test_input_error(self):
        # the CLI maps every InputError to exit code 2
        with self.assertRaises(InputError):
            to_rational("x")

    def test_format(self):
        self.assertEqual(format_rational(Fraction(6, 4)), "3/2")
        self.assertEqual(format_rational(Fraction(-4, 2)), "-2")
        self.assertEqual(format_rational("0/7"), "0")

    def test_list(self):
        self.assertEqual(
            parse_rational_list("1,1/2,-3"), [Fraction(1), Fraction(1, 2), Fraction(-3)]
        )
        with self.assertRaises(RationalSyntaxError):
            parse_rational_list(",")


class TestPochhammer(unittest.TestCase):
    def test_values(self):
        self.assertEqual(pochhammer(3, 0), 1)
        self.assertEqual(pochhammer(3, 3), 60)
        self.assertEqual(pochhammer("1/2", 2), Fraction(3, 4))
        self.assertEqual(pochhammer(-2, 3), 0)
        self.assertEqual(pochhammer(-2, 2), 2)

    def test_sign(self):
        self.assertEqual(sign(Fraction(-1, 3)), -1)
        self.assertEqual(sign(Fraction(0)), 0)
        self.assertEqual(sign(Fraction(2)), 1)
