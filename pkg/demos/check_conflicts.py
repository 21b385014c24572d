"""Find the edge pairs that make a tree drawing non-greedy.

Loads two drawings from the fixtures directory: one where every vertex
pair is already joined by an increasing-chord path, and a comb whose
teeth lean at each other. For the comb, every conflicting pair is
printed together with a witness: a point p interior to one edge whose
normal line strikes the other edge, so a path through both edges cannot
keep all chords growing.
"""

from pathlib import Path

from grrdecomp.analysis import (
    conflicting_pairs,
    drawing_edges_conflict,
    tree_increasing_chord,
)
from grrdecomp.formats import parse_drawing
from grrdecomp.svg import render_svg

ROOT = Path(__file__).resolve().parent.parent
OUT = Path(__file__).resolve().parent / "out"


def load(name):
    return parse_drawing((ROOT / "fixtures" / f"{name}.json").read_text())


def main():
    OUT.mkdir(exist_ok=True)
    for name in ("p_ic", "comb"):
        d = load(name)
        pairs = conflicting_pairs(d)
        verdict = "increasing-chord" if not pairs else "conflicted"
        print(f"{name}: {d.n_edges} edges, {verdict}")
        assert tree_increasing_chord(d, range(d.n_edges)) == (not pairs)
        witnesses = []
        for e, f in pairs:
            w = drawing_edges_conflict(d, e, f) or drawing_edges_conflict(d, f, e)
            witnesses.append(w)
            print(f"  edges {e} and {f}: normal at ({w.p.x}, {w.p.y}) "
                  f"strikes ({w.hit.x}, {w.hit.y})")
        svg = OUT / f"{name}_conflicts.svg"
        svg.write_text(render_svg(d, witnesses), encoding="utf-8")
        print(f"  wrote {svg}")


if __name__ == "__main__":
    main()
