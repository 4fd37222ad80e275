"""Time the compiled and numpy minimum-weight kernels on the same inputs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from schurcodes.bilinear import build_scheme
from schurcodes.code import code_from_rows
from schurcodes.concat import concat_build
from schurcodes.evaluation import EvalCodeSpec, eval_code
from schurcodes.field import field_make
from schurcodes.kernels import available_backends, min_block_weight
from schurcodes.products import power
from schurcodes.verify import random_code


def cases():
    F8 = field_make(2, 3)
    outer = eval_code(EvalCodeSpec(F8, tuple(F8.nonzero()), 1))
    square = power(concat_build(build_scheme(2, 1), outer), 2)
    yield "binary [42,21] square of the concatenated code", list(square.rows), 2, 1

    F27 = field_make(3, 3)
    rs = eval_code(EvalCodeSpec(F27, tuple(F27.nonzero())[:12], 3))
    yield "F_27 [12,4] Reed-Solomon, 3-blocks (3^12 words)", rs.prime_basis().tolist(), 3, 3

    import random

    rng = random.Random(1)
    C = random_code(rng, 3, 30, 11)
    yield "random ternary [30,11]", list(C.rows), 3, 1

    F2 = field_make(2)
    wide = code_from_rows(F2, 200, [[rng.randrange(2) for _ in range(200)] for _ in range(18)])
    yield "random binary [200,18]", list(wide.rows), 2, 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    print("case\t" + "\t".join(f"{b}_s" for b in backends) + "\tdmin\tspeedup")
    for name, basis, p, block in cases():
        times, results = [], set()
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                start = time.perf_counter()
                results.add(min_block_weight(basis, p, block, backend=b))
                best = min(best, time.perf_counter() - start)
            times.append(best)
        assert len(results) == 1, f"backends disagree on {name}: {results}"
        speed = f"{times[-1] / times[0]:.1f}x" if len(times) == 2 else "-"
        print(f"{name}\t" + "\t".join(f"{t:.4f}" for t in times) + f"\t{results.pop()}\t{speed}")


if __name__ == "__main__":
    main()
