"""Smoke test for the varregion_py extension.

Build first with `cargo build -p varregion-py` (or `--release`); the script
copies the shared library next to a temporary import path and exercises the
main entry points.
"""

import cmath
import importlib
import math
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def find_library():
    names = ["libvarregion_py.so", "libvarregion_py.dylib", "varregion_py.dll"]
    for profile in ("release", "debug"):
        for name in names:
            p = ROOT / "target" / profile / name
            if p.exists():
                return p
    sys.exit("extension not built: run `cargo build -p varregion-py` first")


def load():
    lib = find_library()
    tmp = Path(tempfile.mkdtemp())
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy(lib, tmp / ("varregion_py" + suffix))
    sys.path.insert(0, str(tmp))
    return importlib.import_module("varregion_py")


def close(a, b, tol):
    return abs(a - b) < tol


def main():
    vr = load()

    assert close(vr.phi_ctc(0.0, "minus"), -math.log(4), 1e-15)
    assert vr.phi_ctc(1.0, "plus") == math.inf
    assert close(vr.phi_star(0.0, "minus", r=0.5), -2 * math.log(1.5), 1e-12)
    assert close(vr.phi_star(0.3, "plus", r=0.4, **{"class": "convex"}),
                 0.5 * vr.phi_star(0.3, "plus", r=0.4), 1e-12)
    center, radius = vr.grunsky_region(0.5)
    assert close(center.real, -math.log(0.75), 1e-15) and close(radius, math.log(3), 1e-15)

    b0 = vr.b0()
    pair = vr.common_tangent()
    assert close(b0, 0.24001, 5e-6)
    assert close(pair.b0, b0, 1e-8) and pair.max_residual < 1e-9

    assert close(vr.gamma(0.0), complex(math.log(4), 0.0), 1e-15)
    curve = vr.gamma_curve(256)
    assert len(curve) == 256 and close(curve[0][1], curve[-1][1].conjugate(), 1e-15)

    kind, value = vr.power_bound(2.0, 0.2)
    assert kind == "inf" and close(value, 2 * vr.phi_ctc(0.1, "minus"), 1e-12)
    try:
        vr.power_bound(0.0, 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("a = 0 must be rejected")

    m = vr.AtomicMeasure.random(7, 5)
    assert close(sum(w for _, w in m.atoms), 1.0, 1e-14)
    for r in (0.1, 0.5, 0.9):
        assert vr.marx_contains(m.sample_starlike(r), r)
        w = vr.sample_ctc(11, r)
        assert vr.region_contains(w) and abs(w.imag) < 1.5 * math.pi

    koebe = vr.AtomicMeasure([(0.0, 1.0)])
    assert close(koebe.sample_starlike(0.5), complex(-2 * math.log(0.5), 0.0), 1e-14)
    assert close(vr.pointwise_h(0j), 0j, 1e-300)
    assert close(vr.curve_extremum(0.0)[1], math.log(4), 1e-12)
    assert cmath.isfinite(vr.biernacki_samples(0.5, 10)[3])

    print("varregion_py smoke test passed")


if __name__ == "__main__":
    main()
