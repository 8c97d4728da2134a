"""Smoke test for the pyfreecurve extension.

Uses an installed module if there is one (e.g. after `maturin develop`),
otherwise builds the cdylib with cargo and loads it from a temp dir.
"""

import importlib
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("pyfreecurve")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "pyfreecurve", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libpyfreecurve.so"
    tmp = Path(tempfile.mkdtemp())
    shutil.copy(built, tmp / "pyfreecurve.so")
    sys.path.insert(0, str(tmp))
    return importlib.import_module("pyfreecurve")


def main():
    fc = load()
    print("pyfreecurve", fc.__version__)

    braid = fc.Arrangement(["x", "y", "z", "x-y", "x-z", "y-z"])
    report = braid.divisor().analyze()
    assert report["is_free"] and report["exponents"] == [1, 2, 3], report["exponents"]
    assert report["regular_syzygy"]["witness"]["degree"] == 3
    assert len(braid.singular_points()) == 7
    assert not braid.is_near_pencil()
    print("braid: free, exponents", report["exponents"])

    d = fc.Divisor("x*(x+y)*(x-y)*(x+2*y)*(x^2+y*z)")
    assert d.milnor_tjurina() == (19, 20)
    print("four lines and a conic: tau, mu =", d.milnor_tjurina())

    tangent = fc.Divisor("y*(x^2+y*z)")
    assert [len(c) for c in tangent.syzygies()] == [3, 3]

    gb = fc.groebner_basis(["x^2 - y", "x*y - 1"], ["x", "y"], order="lex")
    assert sorted(gb) == ["-y^2 + x", "y^3 - 1"], gb

    betti = fc.betti_table(
        ["y*z*w*(x+y+z+w) + x*y*z*w", "x*z*w*(x+y+z+w) + x*y*z*w",
         "x*y*w*(x+y+z+w) + x*y*z*w", "x*y*z*(x+y+z+w) + x*y*z*w"],
        ["x", "y", "z", "w"],
    )
    assert [b for (i, _, b) in betti] == [1, 4, 6, 4, 1], betti
    print("four planes: betti", betti)

    code, out, _ = fc.run(["verify-corpus"])
    assert code == 0 and "0 failed" in out

    try:
        fc.Arrangement(["x", "y", "2*x"])
    except ValueError as e:
        print("duplicate line rejected:", e)
    else:
        raise AssertionError("duplicate line accepted")

    print("ok")


if __name__ == "__main__":
    main()
