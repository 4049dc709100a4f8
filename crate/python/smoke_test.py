"""Smoke test for the Python extension.

Builds the cdylib with cargo (unless CHEBFIB_LIB points at a built library),
loads it as `chebfib` and exercises the main entry points.
"""

import os
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    lib = os.environ.get("CHEBFIB_LIB")
    if lib is None:
        subprocess.run(["cargo", "build", "-q", "-p", "chebfib-py"], cwd=ROOT, check=True)
        lib = ROOT / "target" / "debug" / "libchebfib_py.so"
    tmp = tempfile.mkdtemp()
    shutil.copy(lib, Path(tmp) / "chebfib.so")
    sys.path.insert(0, tmp)
    import chebfib

    return chebfib


def main():
    cf = load()

    assert cf.a138573(10) == [0, 1, 2, 5, 16, 45, 130, 377, 1088, 3145]
    assert [cf.fib(n) for n in range(-4, 5)] == [-3, 2, -1, 1, 0, 1, 1, 2, 3]
    assert cf.lucas(50) == 28143753123
    assert cf.coeff_c(4, 2) == 10  # 4/6 * C(6,2)
    assert cf.coeff_c(5, 3) == Fraction(35, 2)  # 5/8 * C(8,2)

    # T_5 = 16x^5 - 20x^3 + 5x
    assert cf.cheb_coeffs("T", 5) == [0, 5, 0, -20, 0, 16]
    assert cf.cheb_eval("U", 4, Fraction(1, 2)) == -1

    alpha, beta = cf.Elem.golden()
    assert alpha + beta == 1 and alpha * beta == -1
    assert ((alpha ** 20 - beta ** 20) / cf.Elem.q5(0, 1)).to_fraction() == 6765
    assert {cf.Elem(3), cf.Elem.q5(3, 0)} == {cf.Elem(3)}

    lhs, rhs = cf.evaluate("thm2.T.sum.odd-s", {"s": 3, "n": 7})
    assert lhs == rhs and lhs.is_rational()

    out = cf.verify("lem5.3", "quick", {"n": (0, 3), "p": (1, 1)})
    printed = [o["status"] for o in out if o["form"] == "printed"]
    corrected = [o["status"] for o in out if o["form"] == "corrected"]
    assert "fail" in printed and set(corrected) == {"pass"}

    summary = cf.verify_all("quick")
    assert summary["failures"] == []
    typos = [i for i, (status, _, _) in summary["entries"].items() if status == "typo-suspect"]
    assert {"note.2", "lem5.3", "s4.thm3"} <= set(typos)

    assert all(failed == 0 for _, failed in cf.section5(12).values())
    assert all(cf.chu_guo_lhs(n, m) == cf.chu_guo_closed(n, m) for m in range(5) for n in range(3, 20))

    print(f"python smoke test ok: {len(cf.catalog())} catalog entries, {len(typos)} typo-suspect")


if __name__ == "__main__":
    main()
