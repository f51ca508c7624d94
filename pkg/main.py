"""
Extremal tuple families: command-line entry point.

Subcommands:
1. CORE: validate, grid, conditions, gallery
2. CONSTRUCTIONS: construct (base-interleave, product, boost, affine, discretize)
3. SEARCH: search, grow, sample
4. CONTINUOUS: alpha, optimize-x, profile, improve
5. STRUCTURE: decompose, hyper, ruzsa

Run `python main.py <subcommand> --help` for the options of each.
"""

import sys

from src.cli import run


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
