import json
import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.core import (
    RMatrix,
)
from mhahn.utils import (
    ExactTable,
    dumps_csv,
    dumps_json,
)


class TestDumpsJson(unittest.TestCase):
    def test_schema(self):
        text = dumps_json({"command": "tables"})
        self.assertEqual(list(json.loads(text).keys()), ["schema", "command"])
        self.assertEqual(json.loads(text)["schema"], 1)
        self.assertTrue(text.endswith("}\n"))

    def test_unicode(self):
        self.assertIn("κ", dumps_json({"name": "κ2"}))


class TestExactTable(unittest.TestCase):
    def setUp(self):
        self.table = ExactTable("norms", ["n", "v"], approx_columns=["v"])
        self.table.append([0, Fraction(7, 3)])
        self.table.append([1, Fraction(112)])

    def test_to_dict(self):
        self.assertEqual(
            self.table.to_dict(),
            {
                "name": "norms",
                "columns": ["n", "v"],
                "rows": [["0", "7/3"], ["1", "112"]],
            },
        )
        ret = self.table.to_dict(with_approx=True)
        self.assertEqual(ret["approx"], [[None, "2.33333333333"], [None, "112"]])

    def test_append(self):
        with self.assertRaises(AssertionError):
            self.table.append([1, 2, 3])

    def test_from_matrix(self):
        table = ExactTable.from_matrix("values", RMatrix([[1, "1/2"]]), prefix="s=")
        self.assertEqual(table.columns, ["s=0", "s=1"])
        self.assertEqual(table.to_dict()["rows"], [["1", "1/2"]])

    def test_csv(self):
        text = dumps_csv([self.table])
        self.assertEqual(
            text,
            "table,row,column,value\n"
            "norms,0,n,0\n"
            "norms,0,v,7/3\n"
            "norms,1,n,1\n"
            "norms,1,v,112\n",
        )
        text = dumps_csv([self.table], with_approx=True)
        lines = text.splitlines()
        self.assertEqual(lines[0], "table,row,column,value,approx")
        self.assertEqual(lines[1], "norms,0,n,0,")
        self.assertEqual(lines[2], "norms,0,v,7/3,2.33333333333")

    def test_csv_strings(self):
        table = ExactTable("checks", ["check", "detail"])
        table.append(["[K1,P]=0", "a,b"])
        self.assertEqual(
            dumps_csv([table]).splitlines()[1:],
            ["checks,0,check,\"[K1,P]=0\"", "checks,0,detail,\"a,b\""],
        )
