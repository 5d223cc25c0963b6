#!/usr/bin/env python3
"""Regenerate the tvtri fixtures from Regina triangulations.

Usage: python3 scripts/export_fixtures.py [outdir]   (requires `pip install regina`)
"""
import sys
from pathlib import Path

import regina

# Edge slots in tvtri order: e12 e13 e23 e34 e24 e14 (vertices 1..4 -> Regina 0..3).
SLOTS = [(0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (0, 3)]


def export(name, tri, b0, b2, note):
    assert tri.isValid() and tri.isConnected()
    interior = sum(1 for v in tri.vertices() if not v.isIdeal())
    lines = [
        "tvtri 1",
        f"# {note}",
        f"# isosig={tri.isoSig()} b0={b0} b2={b2}",
        f"name {name}",
        f"vertices {interior}",
        f"edges {tri.countEdges()}",
    ]
    for f in tri.triangles():
        lines.append("face " + " ".join(str(f.edge(k).index()) for k in range(3)))
    for tet in tri.tetrahedra():
        idx = [tet.edge(regina.Edge3.edgeNumber[a][b]).index() for a, b in SLOTS]
        lines.append("tet " + " ".join(map(str, idx)))
    return "\n".join(lines) + "\n"


def complement(link):
    t = link.complement()
    t.simplify()
    assert all(v.isIdeal() for v in t.vertices())
    return t


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
    out.mkdir(parents=True, exist_ok=True)
    fixtures = {
        "fig8": (regina.Example3.figureEight(), 1, 0, "figure-eight knot complement, 2 ideal tetrahedra (m004)"),
        "s3": (regina.Triangulation3.fromIsoSig("cMcabbgqs"), 1, 0, "one-vertex closed triangulation of the 3-sphere"),
        "trefoil": (complement(regina.ExampleLink.trefoil()), 1, 0, "trefoil knot complement"),
        "unknot": (complement(regina.Link(1)), 1, 0, "unknot complement (open solid torus)"),
        "borromean": (complement(regina.ExampleLink.borromean()), 1, 2, "Borromean rings complement"),
    }
    for name, (tri, b0, b2, note) in fixtures.items():
        (out / f"{name}.tvtri").write_text(export(name, tri, b0, b2, note))
        print("wrote", out / f"{name}.tvtri")


if __name__ == "__main__":
    main()
