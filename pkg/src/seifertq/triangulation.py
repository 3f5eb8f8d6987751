"""Generalized triangulations of compact 3-manifolds.

A triangulation is a set of abstract tetrahedra with faces glued in pairs by
affine maps.  The text format carries one line per tetrahedron,

    tet <id>: <g0> <g1> <g2> <g3>

where <gf> describes the gluing of the face opposite vertex f: either `-`
(an unglued boundary face) or `<tet>:<face>:<perm>` with <perm> a 4-letter
word over 0123 giving the vertex images (perm[v] is where vertex v goes).
Blank lines and `#` comments are ignored.  Gluings must be involutive (the
partner's entry points back with the inverse permutation) and must carry the
face across (perm[f] equals the partner face index).  A face may not be
glued to itself.

Edges and vertices of the glued complex are the orbits of per-tetrahedron
edges and vertices under the face identifications, computed by union-find.
Within a tetrahedron the six edges are indexed in the slot order

    (0,1) (0,2) (1,2) (2,3) (1,3) (0,3)

which is the tuple order consumed by six-j evaluations downstream: the four
faces of the tetrahedron then read off the tuple exactly as the symbol's
face triples do.
"""

from __future__ import annotations

from pathlib import Path

from .errors import TriangulationError

__all__ = [
    "Triangulation",
    "EDGE_SLOTS",
    "parse_triangulation",
    "load_triangulation",
    "s3_two_tetrahedra",
]

EDGE_SLOTS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (0, 3))

_FACE_VERTICES: tuple[tuple[int, int, int], ...] = tuple(
    tuple(v for v in range(4) if v != f) for f in range(4)
)


class _UnionFind:
    def __init__(self) -> None:
        self._parent: dict = {}

    def find(self, x):
        parent = self._parent.setdefault(x, x)
        if parent != x:
            parent = self._parent[x] = self.find(parent)
        return parent

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self._parent[ry] = rx

    def classes(self, items) -> dict:
        """Map each item to a dense class index, in first-seen order."""
        index: dict = {}
        out: dict = {}
        for item in items:
            root = self.find(item)
            out[item] = index.setdefault(root, len(index))
        return out


class Triangulation:
    """A face-paired collection of tetrahedra with derived cell classes."""

    def __init__(self, gluings: dict[tuple[int, int], tuple[int, int, tuple[int, ...]] | None]):
        tet_ids = sorted({t for t, _ in gluings})
        if tet_ids != list(range(len(tet_ids))):
            raise TriangulationError(f"tetrahedron ids must be 0..{len(tet_ids) - 1}, got {tet_ids}")
        self.tet_count = len(tet_ids)
        for t in tet_ids:
            for f in range(4):
                if (t, f) not in gluings:
                    raise TriangulationError(f"missing gluing entry for tet {t} face {f}")
        self.gluings = dict(gluings)
        self._validate()
        self._edge_index: dict[tuple[int, tuple[int, int]], int] | None = None
        self._edge_count = 0
        self._vertex_count = 0
        self._face_count = 0
        self._build_classes()

    # -- validation ---------------------------------------------------------

    def _validate(self) -> None:
        for (t, f), glue in self.gluings.items():
            if glue is None:
                continue
            t2, f2, perm = glue
            if sorted(perm) != [0, 1, 2, 3]:
                raise TriangulationError(f"tet {t} face {f}: {perm} is not a permutation of 0123")
            if (t2, f2) not in self.gluings:
                raise TriangulationError(f"tet {t} face {f} glued to nonexistent tet {t2} face {f2}")
            if (t2, f2) == (t, f):
                raise TriangulationError(f"tet {t} face {f} glued to itself")
            if perm[f] != f2:
                raise TriangulationError(
                    f"tet {t} face {f}: permutation sends vertex {f} to {perm[f]}, "
                    f"expected the partner face index {f2}"
                )
            partner = self.gluings[(t2, f2)]
            if partner is None:
                raise TriangulationError(f"tet {t2} face {f2} should glue back to tet {t} face {f}")
            t3, f3, perm2 = partner
            inverse = tuple(perm.index(v) for v in range(4))
            if (t3, f3) != (t, f) or tuple(perm2) != inverse:
                raise TriangulationError(
                    f"gluing of tet {t} face {f} is not involutive with tet {t2} face {f2}"
                )

    # -- derived cell classes -----------------------------------------------

    def _build_classes(self) -> None:
        edges = _UnionFind()
        vertices = _UnionFind()
        edge_items = [(t, e) for t in range(self.tet_count) for e in EDGE_SLOTS]
        vertex_items = [(t, v) for t in range(self.tet_count) for v in range(4)]
        for item in edge_items:
            edges.find(item)
        for item in vertex_items:
            vertices.find(item)

        faces = 0
        for (t, f), glue in self.gluings.items():
            if glue is None:
                faces += 1  # boundary face, its own class
                continue
            t2, f2, perm = glue
            if (t2, f2, t, f) > (t, f, t2, f2):
                faces += 1  # count each interior pair once
            for v in _FACE_VERTICES[f]:
                vertices.union((t, v), (t2, perm[v]))
            for u, v in ((0, 1), (0, 2), (1, 2)):
                a, b = _FACE_VERTICES[f][u], _FACE_VERTICES[f][v]
                image = tuple(sorted((perm[a], perm[b])))
                edges.union((t, (a, b)), (t2, image))

        self._edge_index = edges.classes(edge_items)
        self._edge_count = len(set(self._edge_index.values()))
        self._vertex_count = len(set(vertices.classes(vertex_items).values()))
        self._face_count = faces

    # -- queries --------------------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return all(glue is not None for glue in self.gluings.values())

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def face_count(self) -> int:
        return self._face_count

    @property
    def euler_characteristic(self) -> int:
        return self._vertex_count - self._edge_count + self._face_count - self.tet_count

    def tet_edge_classes(self, t: int) -> tuple[int, ...]:
        """Edge-class indices of tetrahedron t in slot order."""
        assert self._edge_index is not None
        return tuple(self._edge_index[(t, e)] for e in EDGE_SLOTS)


def parse_triangulation(text: str) -> Triangulation:
    """Parse the `tet <id>: ...` format; raises TriangulationError on bad input."""
    gluings: dict[tuple[int, int], tuple[int, int, tuple[int, ...]] | None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "tet" or not parts[1].isdigit() or not _:
            raise TriangulationError(f"line {lineno}: expected 'tet <id>: <g> <g> <g> <g>'")
        t = int(parts[1])
        entries = rest.split()
        if len(entries) != 4:
            raise TriangulationError(f"line {lineno}: expected 4 face gluings, got {len(entries)}")
        if (t, 0) in gluings:
            raise TriangulationError(f"line {lineno}: duplicate tetrahedron id {t}")
        for f, entry in enumerate(entries):
            if entry == "-":
                gluings[(t, f)] = None
                continue
            fields = entry.split(":")
            if len(fields) != 3:
                raise TriangulationError(f"line {lineno}: malformed gluing {entry!r}")
            tet_s, face_s, perm_s = fields
            if not tet_s.isdigit() or not face_s.isdigit():
                raise TriangulationError(f"line {lineno}: malformed gluing {entry!r}")
            if len(perm_s) != 4 or any(c not in "0123" for c in perm_s):
                raise TriangulationError(f"line {lineno}: malformed permutation {perm_s!r}")
            gluings[(t, f)] = (int(tet_s), int(face_s), tuple(int(c) for c in perm_s))
    if not gluings:
        raise TriangulationError("no tetrahedra found")
    return Triangulation(gluings)


def load_triangulation(path: str | Path) -> Triangulation:
    return parse_triangulation(Path(path).read_text())


def s3_two_tetrahedra() -> Triangulation:
    """The 3-sphere as two tetrahedra glued by the identity on all four faces."""
    gluings: dict[tuple[int, int], tuple[int, int, tuple[int, ...]] | None] = {}
    for f in range(4):
        gluings[(0, f)] = (1, f, (0, 1, 2, 3))
        gluings[(1, f)] = (0, f, (0, 1, 2, 3))
    return Triangulation(gluings)
