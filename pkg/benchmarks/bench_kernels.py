"""Compare the compiled and pure-Python super-Jacobi sweep kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--skip-e8]

Each algebra is swept by both backends; the results must agree exactly
(same number of triples checked, same first counterexample).
"""

import argparse
import time

import numpy as np

from tits3 import _kernels_py
from tits3.altsuper import build_b12, build_b_gamma, build_divided_powers
from tits3.char3 import build_char3_superalgebra
from tits3.composition import bracket_algebra, build_composition, restricted_norm
from tits3.jordan import build_h3, tits_construction
from tits3.scalars import GF3, GF5, GF7

try:
    from tits3 import _kernels as compiled
except ImportError:
    compiled = None


def workloads(skip_e8: bool):
    C3 = build_composition("split-cayley", GF3)
    s, n = bracket_algebra(C3), restricted_norm(C3)
    yield "s over GF(5) (fails)", bracket_algebra(build_composition("split-cayley", GF5))
    yield "bj", build_char3_superalgebra(s, n, build_b12(GF3)).g
    for N in (1, 2):
        B = build_b_gamma(build_divided_powers(N, GF3))
        yield f"Bj(1;{N}|7)", build_char3_superalgebra(s, n, B.algebra).g
    C7 = build_composition("split-cayley", GF7)
    yield "T(C, H3(k))", tits_construction(C7, build_h3(build_composition("ground-field", GF7)),
                                           check=False).algebra
    if not skip_e8:
        yield "T(C, H3(C))", tits_construction(C7, build_h3(C7), check=False).algebra


def sweep(impl, alg):
    ptr, idx, val = alg.csr()
    par = np.array(alg.parity, dtype=np.int64)
    t0 = time.perf_counter()
    res = impl.jacobi_sweep(ptr, idx, val, par, alg.field.char)
    return time.perf_counter() - t0, res


def best(impl, alg, repeat):
    times, res = [], None
    for _ in range(repeat):
        dt, res = sweep(impl, alg)
        times.append(dt)
    return min(times), res


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-e8", action="store_true", help="leave out the 248-dim algebra")
    args = ap.parse_args()
    if compiled is None:
        print("compiled kernel not built; timing the Python backend only")
    print(f"{'algebra':<22}{'dim':>5}{'triples':>12}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, alg in workloads(args.skip_e8):
        tp, rp = best(_kernels_py, alg, args.repeat)
        if compiled is not None:
            tc, rc = best(compiled, alg, args.repeat)
            assert rc[0] == rp[0] and rc[1] == rp[1], f"backends disagree on {name}"
            if rc[2] is not None:
                assert [int(x) for x in rc[2]] == [int(x) for x in rp[2]]
            ctext, speed = f"{tc:11.3f}", f"{tp / tc:8.1f}x"
        else:
            ctext, speed = f"{'-':>11}", f"{'-':>9}"
        print(f"{name:<22}{alg.dim:>5}{rp[0]:>12}{tp:11.3f}{ctext}{speed}")


if __name__ == "__main__":
    main()
