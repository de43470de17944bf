import os
import sys


def pytest_collectstart(collector):
    # Each test sub-package ships its own ``context.py`` imported as a
    # top-level module; make the one next to the module being collected
    # importable before the module itself is imported.
    path = getattr(collector, "path", None)
    if path is None or path.suffix != ".py":
        return
    test_dir = str(path.parent)
    if sys.path[:1] != [test_dir]:
        if test_dir in sys.path:
            sys.path.remove(test_dir)
        sys.path.insert(0, test_dir)
        sys.modules.pop("context", None)
