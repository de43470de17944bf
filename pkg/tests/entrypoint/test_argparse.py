import unittest

from context import (
    mhahn,
)

from mhahn.entrypoint.common import (
    RunConfig,
    expand_idx,
)
from mhahn.entrypoint.main import (
    main_parser,
    parse_args,
    verify_commands,
)
from mhahn.errors import (
    InputError,
)


class ParserTest(unittest.TestCase):
    def setUp(self):
        self.parser = main_parser()

    def test_hahn_commands(self):
        for cmd in ["tables", "verify-h", "dual-rep"]:
            parsed = self.parser.parse_args(
                [cmd, "--alpha", "7/2", "--beta", "3", "--N", "2"]
            )
            self.assertEqual(parsed.command, cmd)
            self.assertEqual(parsed.alpha, "7/2")
            self.assertEqual(parsed.N, 2)
            self.assertEqual(parsed.format, "json")
            self.assertIsNone(parsed.output)

    def test_coupling_commands(self):
        for cmd in ["verify-sl", "cg"]:
            parsed = self.parser.parse_args(
                [cmd, "--mu-a", "1/2", "--mu-b", "1", "--N", "3", "--eps-b", "-1"]
            )
            self.assertEqual(parsed.command, cmd)
            self.assertEqual(parsed.mu_a, "1/2")
            self.assertEqual(parsed.eps_a, 1)
            self.assertEqual(parsed.eps_b, -1)
        parsed = self.parser.parse_args(
            ["verify-sl", "--mu-a", "0", "--mu-b", "0", "--N", "1"]
        )
        self.assertEqual(parsed.cutoff, 12)
        self.assertIn("cg", verify_commands)

    def test_bad_eps(self):
        with self.assertRaises(SystemExit):
            self.parser.parse_args(
                ["cg", "--mu-a", "0", "--mu-b", "0", "--N", "1", "--eps-a", "2"]
            )

    def test_dual_rep(self):
        parsed = self.parser.parse_args(
            [
                "dual-rep",
                "--alpha",
                "3",
                "--beta",
                "2",
                "--N",
                "1",
                "--params",
                "1,1/2",
                "--notes",
                "--format",
                "csv",
            ]
        )
        self.assertEqual(parsed.params, "1,1/2")
        self.assertTrue(parsed.notes)
        self.assertEqual(parsed.format, "csv")

    def test_sweep(self):
        parsed = self.parser.parse_args(
            ["sweep", "foo.json", "-k", "--seed", "3", "-n", "0-4", "7", "-o", "out"]
        )
        self.assertEqual(parsed.CONFIG, "foo.json")
        self.assertTrue(parsed.keep_going)
        self.assertEqual(parsed.seed, 3)
        self.assertEqual(parsed.n_values, ["0-4", "7"])
        self.assertEqual(parsed.format, "text")
        self.assertEqual(parsed.output, "out")
        parsed = self.parser.parse_args(["sweep"])
        self.assertIsNone(parsed.CONFIG)
        self.assertFalse(parsed.keep_going)

    def test_tables_approx(self):
        parsed = self.parser.parse_args(
            ["tables", "--alpha", "4", "--beta", "4", "--N", "2", "--approx"]
        )
        self.assertTrue(parsed.approx)
        with self.assertRaises(SystemExit):
            self.parser.parse_args(
                ["verify-h", "--alpha", "4", "--beta", "4", "--N", "2", "--approx"]
            )

    def test_no_command(self):
        parsed = parse_args([])
        self.assertIsNone(parsed.command)


class RunConfigTest(unittest.TestCase):
    def test_from_args(self):
        cfg = RunConfig.from_args(
            parse_args(
                [
                    "dual-rep",
                    "--alpha",
                    "7/2",
                    "--beta",
                    "3",
                    "--N",
                    "2",
                    "--params",
                    "1,-1,1/2",
                ]
            )
        )
        self.assertEqual(str(cfg.alpha), "7/2")
        self.assertEqual([str(vv) for vv in cfg.params], ["1", "-1", "1/2"])
        self.assertEqual(cfg.eps_a, 1)
        cfg = RunConfig.from_args(parse_args(["sweep", "-n", "0-3", "5"]))
        self.assertEqual(cfg.n_values, (0, 1, 2, 5))
        self.assertIsNone(cfg.config)

    def test_bad_rational(self):
        with self.assertRaises(InputError):
            RunConfig.from_args(
                parse_args(["tables", "--alpha", "0.5", "--beta", "3", "--N", "2"])
            )


class ExpandIdxTest(unittest.TestCase):
    def test_expand(self):
        self.assertEqual(expand_idx(["0-4", "7", "10-20:5"]), [0, 1, 2, 3, 7, 10, 15])
        self.assertEqual(expand_idx([3, "1", "2-4"]), [1, 2, 3])

    def test_bad(self):
        with self.assertRaises(InputError):
            expand_idx(["a-b"])
        with self.assertRaises(InputError):
            expand_idx(["1-2-3"])
