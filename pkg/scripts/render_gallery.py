#!/usr/bin/env python3
"""Render a small SVG gallery of every automaton into ./gallery/."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from toothpicks import engine, gridca
from toothpicks.render import RenderConfig, render_grid, render_structure

OUT = os.path.join(os.getcwd(), "gallery")

STRUCTURES = [
    ("toothpick", 53),
    ("toothpick", 64),
    ("corner", 31),
    ("leftist", 63),
    ("t", 16),
    ("y", 16),
]

GRIDS = [
    ("uw", gridca.uw_von_neumann(2), 32),
    ("moore8", gridca.MOORE8, 16),
    ("moore8_corner1", gridca.MOORE8_CORNER1, 16),
    ("moore8_corner2", gridca.MOORE8_CORNER2, 16),
    ("rule942", gridca.RULE942, 16),
    ("toothpick_digraph", gridca.TOOTHPICK_DIGRAPH, 32),
    ("maltese", gridca.MALTESE, 17),
]


def main() -> int:
    os.makedirs(OUT, exist_ok=True)
    cfg = RenderConfig(scale=10)
    for variant, stages in STRUCTURES:
        path = os.path.join(OUT, f"{variant}_{stages}.svg")
        with open(path, "w") as fh:
            fh.write(render_structure(engine.grow(variant, stages), cfg))
        print("wrote", path)
    for name, rule, stages in GRIDS:
        path = os.path.join(OUT, f"{name}_{stages}.svg")
        grid = gridca.CellGrid(rule).grow(stages)
        with open(path, "w") as fh:
            fh.write(render_grid(grid, cfg))
        print("wrote", path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
