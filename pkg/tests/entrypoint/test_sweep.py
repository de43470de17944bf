import json
import os
import unittest
from pathlib import (
    Path,
)

import mock
from context import (
    mhahn,
    skip_ut_slow,
    skip_ut_slow_reason,
)

from mhahn.entrypoint.args import (
    normalize_sweep_config,
)
from mhahn.entrypoint.main import (
    main,
)
from mhahn.entrypoint.sweep import (
    CellResult,
    make_cells,
    run_sweep,
    sweep_summary,
)

small_config = {
    "n_max": 1,
    "n_max_poly": 1,
    "n_max_kappa": 1,
    "mu_values": ["0"],
    "cutoff": 4,
    "gauges": 1,
    "random_points": 2,
}


class TestSweepConfig(unittest.TestCase):
    def test_defaults(self):
        config = normalize_sweep_config({})
        self.assertEqual(config["n_max"], 9)
        self.assertEqual(config["n_max_poly"], 12)
        self.assertEqual(config["n_max_kappa"], 10)
        self.assertEqual(config["mu_values"], ["0", "1/2", "1", "3/2"])
        self.assertEqual(config["gauges"], 3)
        self.assertEqual(config["seed"], 0)
        self.assertIsNone(config["params"])

    def test_unknown_key(self):
        with self.assertRaises(Exception):
            normalize_sweep_config({"n_maxx": 3})


class TestMakeCells(unittest.TestCase):
    def setUp(self):
        self.config = normalize_sweep_config(dict(small_config))

    def test_count(self):
        cells = make_cells(self.config)
        suites = [cc.suite for cc in cells]
        self.assertEqual(len(cells), 36)
        self.assertEqual(suites.count("poly"), 6)
        self.assertEqual(suites.count("h"), 6)
        self.assertEqual(suites.count("dual"), 12)
        self.assertEqual(suites.count("kappa"), 8)
        self.assertEqual(suites.count("cg"), 2)
        self.assertEqual(suites.count("module"), 2)
        keys = [cc.key for cc in cells]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(len(set(keys)), len(keys))
        self.assertIn("poly:N=00:alpha=1/3,beta=7/5", keys)
        self.assertIn("dual:N=01:alpha=3,beta=2:gauge=1", keys)
        self.assertIn("module:N=04:eps=-1,mu=0", keys)

    def test_n_values(self):
        cells = make_cells(self.config, n_values=[1])
        self.assertTrue(all(cc.N == 1 for cc in cells if cc.suite != "module"))
        self.assertEqual(len(cells), 3 + 3 + 6 + 4 + 1 + 2)

    def test_explicit_params(self):
        config = normalize_sweep_config(
            {**small_config, "params": {"even": [["-1/2", "3"], ["3/2", "3"]]}}
        )
        # alpha = -1/2 is outside the even regime of N = 0 and skipped
        cells = make_cells(config, n_values=[0])
        self.assertEqual(
            [cc.key for cc in cells if cc.suite == "h"],
            ["h:N=00:alpha=3/2,beta=3"],
        )


def _fail_on(key):
    def run(cell):
        return CellResult(cell.key, cell.key != key, 1, "")

    return run


class TestRunSweep(unittest.TestCase):
    def setUp(self):
        self.cells = make_cells(normalize_sweep_config(dict(small_config)))

    def test_stop_at_failure(self):
        bad = self.cells[3].key
        with mock.patch("mhahn.entrypoint.sweep.run_cell", side_effect=_fail_on(bad)):
            results = run_sweep(self.cells)
            self.assertEqual(len(results), 4)
            self.assertFalse(results[-1].passed)
            results = run_sweep(self.cells, keep_going=True)
            self.assertEqual(len(results), 36)
        summary = sweep_summary(results, 36).splitlines()
        self.assertEqual(summary[3], f"{bad} FAIL 1")
        self.assertEqual(summary[-1], "# cells 36 run 36 passed 35 failed 1")


@unittest.skipIf(skip_ut_slow, skip_ut_slow_reason)
class TestCmdSweep(unittest.TestCase):
    def setUp(self):
        self.config = Path("mhahn_sweep.json")
        self.config.write_text(json.dumps(small_config), encoding="utf-8")
        self.out = Path("mhahn_sweep_out")

    def tearDown(self):
        for ff in [self.config, self.out]:
            if ff.is_file():
                os.remove(ff)

    @mock.patch.dict(os.environ, {"MHAHN_THREADS": "1"})
    def test_text(self):
        ret = main(["sweep", str(self.config), "-o", str(self.out)])
        self.assertEqual(ret, 0)
        lines = self.out.read_text(encoding="utf-8").splitlines()
        self.assertEqual(len(lines), 37)
        first = "cg:N=00:mu_a=0,mu_b=0,eps_a=+1,eps_b=+1 pass"
        self.assertTrue(lines[0].startswith(first))
        self.assertEqual(lines[-1], "# cells 36 run 36 passed 36 failed 0")

    @mock.patch.dict(os.environ, {"MHAHN_THREADS": "1"})
    def test_json(self):
        ret = main(
            [
                "sweep",
                str(self.config),
                "--format",
                "json",
                "--seed",
                "7",
                "-n",
                "1",
                "-o",
                str(self.out),
            ]
        )
        self.assertEqual(ret, 0)
        data = json.loads(self.out.read_text(encoding="utf-8"))
        self.assertTrue(data["passed"])
        self.assertEqual(data["config"]["seed"], 7)
        self.assertEqual(len(data["cells"]), 19)
        self.assertTrue(all(cc["verdict"] == "pass" for cc in data["cells"]))

    def test_bad_config(self):
        self.config.write_text(json.dumps({"n_maxx": 1}), encoding="utf-8")
        self.assertEqual(main(["sweep", str(self.config)]), 2)
        self.assertEqual(main(["sweep", "mhahn_no_such_config.json"]), 2)
        self.assertEqual(main(["sweep", "-n", "a-b"]), 2)
