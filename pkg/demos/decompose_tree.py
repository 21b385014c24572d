"""Split a tree drawing into the fewest increasing-chord subtrees.

The star4_cross fixture is a four-ray star whose opposite rays bend
toward each other. Under proper contacts (a shared vertex must be a
leaf of at least one side) it needs three components; letting
components interleave freely at the center gets it down to two. The
exact sizes are checked against the brute-force oracle before the
colored partition is rendered.
"""

from pathlib import Path

from grrdecomp.drawing import default_root, root_tree
from grrdecomp.formats import parse_drawing, serialize_partition
from grrdecomp.oracle import brute_force_all_modes
from grrdecomp.svg import render_svg
from grrdecomp.treedecomp import min_gtd_exact, validate_partition

ROOT = Path(__file__).resolve().parent.parent
OUT = Path(__file__).resolve().parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    d = parse_drawing((ROOT / "fixtures" / "star4_cross.json").read_text())
    rt = root_tree(d, default_root(d))
    oracle = brute_force_all_modes(d)
    for mode in ("proper", "noncrossing"):
        p = min_gtd_exact(rt, mode)
        assert validate_partition(d, p).ok
        assert p.size == oracle[mode][0]
        comps = ", ".join("{" + ", ".join(map(str, sorted(c))) + "}"
                          for c in p.components)
        print(f"{mode}: {p.size} components: {comps}")
        svg = OUT / f"star4_{mode}.svg"
        svg.write_text(render_svg(d, p), encoding="utf-8")
        part = OUT / f"star4_{mode}.json"
        part.write_text(serialize_partition(p), encoding="utf-8")
        print(f"  wrote {svg} and {part}")


if __name__ == "__main__":
    main()
