"""Write the JSON inputs under data/ used by the README examples and CLI tests."""

import json
import os
import sys
from itertools import product

from polycup import fixtures, io
from polycup.complex import Cochain
from polycup.geometry import vol_cocycle

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def write(name, obj):
    with open(os.path.join(OUT, name), "w") as fh:
        fh.write(io.dumps(obj) + "\n")


def main():
    os.makedirs(OUT, exist_ok=True)
    sq = fixtures.square()
    write("square.json", io.complex_to_json(sq))
    write("square_vol1.json", io.cochain_to_json(vol_cocycle(sq, 1)))
    write("square_unit.json", io.cochain_to_json(Cochain(sq, 0, {v: 1 for v in sq.cells_of_dim(0)})))
    # d of the vertex values (0, 1, 3, 7): a scalar 1-coboundary
    write("square_r1.json", {"degree": 1, "ring": "Q", "values": {"4": "1", "5": "2", "6": "4", "7": "7"}})
    broken = io.complex_to_json(sq)
    broken["cells"] = [c for c in broken["cells"] if c["vertices"] != [0, 1]]
    write("square_missing_edge.json", broken)
    write("crossing_segments.json", {"dim": 2, "vertices": [["0", "0"], ["1", "1"], ["0", "1"], ["1", "0"]],
                                     "cells": [{"vertices": [i]} for i in range(4)]
                                     + [{"vertices": [0, 1]}, {"vertices": [2, 3]}]})
    write("cube.json", [list(p) for p in product((0, 1), repeat=3)])
    write("simplex3.json", [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    write("seg_x.json", [[0, 0], [1, 0]])
    write("seg_y.json", [[0, 0], [0, 1]])
    write("diagonal_square.json", io.complex_to_json(fixtures.diagonal_square()))
    write("segments_only.json", io.complex_to_json(fixtures.square_boundary()))
    tb = fixtures.tetra_boundary()
    write("tetra_boundary.json", io.complex_to_json(tb))
    return 0


if __name__ == "__main__":
    sys.exit(main())
