#!/usr/bin/env python3
"""Print the a-priori cardinality bounds over a (degree, variables) grid.

Three tables: the bound on detected non-properness values from a single
super-polar curve, the bound on the non-trivial asymptotic value set, and
the bound on the full asymptotic value set.  The optional component list
(--components d:k, repeatable) tightens all three when positive-dimensional
singular components of known degree d and dimension k are present.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from polarvalues.bounds import (
    SingularComponentData,
    bound_kinf,
    bound_nk,
    bound_superpolar,
)


def parse_components(texts):
    if not texts:
        return None
    pairs = []
    for text in texts:
        degree, _, dimension = text.partition(":")
        pairs.append((int(degree), int(dimension)))
    return SingularComponentData(components=tuple(pairs))


def table(name, fn, degrees, nvars, data):
    print(name)
    print("%6s" % "d\\n" + "".join("%10d" % n for n in nvars))
    for d in degrees:
        cells = []
        for n in nvars:
            try:
                cells.append("%10d" % fn(d, n, data))
            except ValueError:
                cells.append("%10s" % "-")
        print("%6d" % d + "".join(cells))
    print()


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-degree", type=int, default=2)
    parser.add_argument("--max-degree", type=int, default=9)
    parser.add_argument("--min-vars", type=int, default=2)
    parser.add_argument("--max-vars", type=int, default=6)
    parser.add_argument(
        "--components",
        action="append",
        metavar="DEG:DIM",
        help="singular component of given degree and dimension (repeatable)",
    )
    args = parser.parse_args(argv)

    degrees = range(args.min_degree, args.max_degree + 1)
    nvars = range(args.min_vars, args.max_vars + 1)
    data = parse_components(args.components)
    if data is not None:
        print("with singular components:", data.components, "\n")
    table("superpolar values per curve", bound_superpolar, degrees, nvars, data)
    table("non-trivial asymptotic values", bound_nk, degrees, nvars, data)
    table("all asymptotic values", bound_kinf, degrees, nvars, data)
    return 0


if __name__ == "__main__":
    sys.exit(main())
