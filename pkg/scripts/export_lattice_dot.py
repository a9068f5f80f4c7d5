#!/usr/bin/env python3
"""Write the sign-labeled Young lattice as DOT.

Usage: export_lattice_dot.py [max_size] [output.dot]

With max_size 4 this renders the familiar truncation of the lattice with
its sign labels.  Render with e.g. `dot -Tpdf lattice.dot -o lattice.pdf`.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from youngquiver.quiver import quiver_slice, to_dot
from youngquiver.signs import arrow_sign


def main() -> int:
    max_size = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    dot = to_dot(quiver_slice(max_size), arrow_sign)
    if len(sys.argv) > 2:
        pathlib.Path(sys.argv[2]).write_text(dot + "\n", encoding="utf-8")
        print(f"wrote {sys.argv[2]}")
    else:
        print(dot)
    return 0


if __name__ == "__main__":
    sys.exit(main())
