"""Brane tilings as combinatorial maps.

A tiling is a bipartite graph together with a rotation system: for every
vertex, the counterclockwise cyclic order of its incident edges.  Faces
are traced from the rotations, so the surface (and its genus) is implied
rather than stored.  The dual quiver has one node per face and one arrow
per edge, directed so that arrows run clockwise around black vertices,
i.e. every arrow crosses its edge with the black endpoint on its right.

Darts are pairs (edge index, direction), direction 0 meaning the edge
traversed black-to-white and 1 the reverse.  Face boundaries are stored
as head-to-tail dart walks, counterclockwise (face on the left).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

BLACK = "black"
WHITE = "white"

_NAME = re.compile(r"^[A-Za-z0-9_]+$")


class TilingError(ValueError):
    """Invalid tiling file or rotation system."""


@dataclass(frozen=True)
class Vertex:
    name: str
    color: str
    rotation: tuple[int, ...] = ()  # ccw cyclic order of incident edge indices


@dataclass(frozen=True)
class Edge:
    name: str
    black: int  # vertex index
    white: int


@dataclass(frozen=True)
class Face:
    """One tile; boundary is a ccw head-to-tail walk of darts."""
    id: int
    boundary: tuple[tuple[int, int], ...]  # (edge index, direction)

    def __len__(self):
        return len(self.boundary)


@dataclass(frozen=True)
class Arrow:
    edge: int
    tail: int  # face id
    head: int  # face id


@dataclass(frozen=True)
class DualQuiver:
    num_nodes: int
    arrows: tuple[Arrow, ...]  # indexed by edge

    def out_arrows(self, face):
        return [a.edge for a in self.arrows if a.tail == face]

    def in_arrows(self, face):
        return [a.edge for a in self.arrows if a.head == face]


@dataclass(frozen=True)
class Superpotential:
    """One signed cyclic arrow word per tiling vertex (+ black, - white)."""
    terms: tuple[tuple[int, tuple[int, ...]], ...]  # (sign, arrow cycle)


class BraneTiling:
    """Validated bipartite graph with rotation system, plus derived data.

    Immutable after construction; faces, genus, quiver and superpotential
    are computed eagerly since everything downstream needs them.
    """

    def __init__(self, vertices, edges, rotations):
        self.vertices: list[Vertex] = []
        self.edges: list[Edge] = []
        self._build(vertices, edges, rotations)
        self.faces: list[Face] = self._trace_faces()
        self._face_of_dart = {}
        for f in self.faces:
            for d in f.boundary:
                self._face_of_dart[d] = f.id
        self.genus: int = self._genus()
        self.quiver: DualQuiver = self._dual_quiver()
        self.superpotential: Superpotential = self._superpotential()

    # -- construction ---------------------------------------------------

    def _build(self, vertices, edges, rotations):
        vindex = {}
        for name, color in vertices:
            if name in vindex:
                raise TilingError(f"duplicate vertex {name!r}")
            if color not in (BLACK, WHITE):
                raise TilingError(f"vertex {name!r}: color must be black or white")
            vindex[name] = len(self.vertices)
            self.vertices.append(Vertex(name, color))
        eindex = {}
        incident = {v: [] for v in range(len(self.vertices))}
        for name, bname, wname in edges:
            if name in eindex:
                raise TilingError(f"duplicate edge {name!r}")
            for vn in (bname, wname):
                if vn not in vindex:
                    raise TilingError(f"edge {name!r}: unknown vertex {vn!r}")
            b, w = vindex[bname], vindex[wname]
            if self.vertices[b].color != BLACK or self.vertices[w].color != WHITE:
                raise TilingError(
                    f"edge {name!r} must join a black vertex to a white vertex")
            eindex[name] = len(self.edges)
            self.edges.append(Edge(name, b, w))
            incident[b].append(eindex[name])
            incident[w].append(eindex[name])
        if not self.edges:
            raise TilingError("tiling has no edges")
        seen_rot = set()
        rot = {}
        for vname, enames in rotations:
            if vname not in vindex:
                raise TilingError(f"rotation for unknown vertex {vname!r}")
            v = vindex[vname]
            if v in seen_rot:
                raise TilingError(f"duplicate rotation for vertex {vname!r}")
            seen_rot.add(v)
            eids = []
            for en in enames:
                if en not in eindex:
                    raise TilingError(f"rotation at {vname!r}: unknown edge {en!r}")
                eids.append(eindex[en])
            if sorted(eids) != sorted(incident[v]):
                raise TilingError(
                    f"rotation at {vname!r} must list its incident edges exactly once")
            rot[v] = tuple(eids)
        for v, vert in enumerate(self.vertices):
            if v not in rot:
                raise TilingError(f"vertex {vert.name!r} has no rotation line")
            if len(rot[v]) < 2:
                raise TilingError(f"vertex {vert.name!r} has degree < 2")
            self.vertices[v] = Vertex(vert.name, vert.color, rot[v])
        # connectivity
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for e in self.vertices[v].rotation:
                for u in (self.edges[e].black, self.edges[e].white):
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
        if len(seen) != len(self.vertices):
            raise TilingError("underlying graph is not connected")
        self._slot = {}  # (vertex, edge) -> index in rotation
        for v, vert in enumerate(self.vertices):
            for i, e in enumerate(vert.rotation):
                self._slot[(v, e)] = i

    # -- combinatorial map ----------------------------------------------

    def dart_origin(self, dart):
        e, d = dart
        return self.edges[e].black if d == 0 else self.edges[e].white

    def dart_terminus(self, dart):
        e, d = dart
        return self.edges[e].white if d == 0 else self.edges[e].black

    def slot(self, vertex, edge):
        return self._slot[(vertex, edge)]

    def degree(self, vertex):
        return len(self.vertices[vertex].rotation)

    def next_face_dart(self, dart):
        """Successor dart along the ccw boundary walk of the dart's face.

        At the terminus w, the walk departs along the edge one slot
        clockwise of the arrival edge (the corner between them lies on
        the face to the left).
        """
        e, _ = dart
        w = self.dart_terminus(dart)
        rotw = self.vertices[w].rotation
        s = self._slot[(w, e)]
        e2 = rotw[(s - 1) % len(rotw)]
        d2 = 0 if self.vertices[w].color == BLACK else 1
        return (e2, d2)

    def _trace_faces(self):
        faces = []
        unused = {(e, d) for e in range(len(self.edges)) for d in (0, 1)}
        while unused:
            start = min(unused)
            walk = [start]
            unused.discard(start)
            cur = self.next_face_dart(start)
            while cur != start:
                if cur not in unused:
                    raise TilingError("face tracing revisited a dart; bad rotation system")
                unused.discard(cur)
                walk.append(cur)
                cur = self.next_face_dart(cur)
            faces.append(Face(len(faces), tuple(walk)))
        return faces

    def _genus(self):
        v = len(self.vertices)
        e = len(self.edges)
        f = len(self.faces)
        chi = v - e + f
        if chi % 2 != 0:
            raise TilingError("odd Euler characteristic; not a closed surface map")
        g = (2 - chi) // 2
        if g < 0:
            raise TilingError("negative genus; rotation system is not a map")
        return g

    def face_of_dart(self, dart):
        return self._face_of_dart[dart]

    # -- dual quiver and superpotential ----------------------------------

    def _dual_quiver(self):
        arrows = []
        for e in range(len(self.edges)):
            tail = self._face_of_dart[(e, 0)]
            head = self._face_of_dart[(e, 1)]
            arrows.append(Arrow(e, tail, head))
        return DualQuiver(len(self.faces), tuple(arrows))

    def _vertex_cycle(self, v):
        """The directed arrow cycle around vertex v, as edge indices.

        Around black vertices arrows advance against the ccw rotation
        (clockwise); around white vertices they advance with it.
        """
        rotv = self.vertices[v].rotation
        if self.vertices[v].color == BLACK:
            return (rotv[0],) + tuple(reversed(rotv[1:]))
        return rotv

    def _superpotential(self):
        terms = []
        for v in range(len(self.vertices)):
            sign = 1 if self.vertices[v].color == BLACK else -1
            terms.append((sign, self._vertex_cycle(v)))
        return Superpotential(tuple(terms))

    def fterm_pair(self, edge):
        """The two broken loops for the arrow dual to `edge`.

        Returns (black word, white word): the cycles around the edge's
        black and white endpoints, each with the dual arrow deleted.
        Both run from the arrow's head face to its tail face.
        """
        if not 0 <= edge < len(self.edges):
            raise TilingError(f"unknown edge index {edge}")
        ed = self.edges[edge]
        out = []
        for v in (ed.black, ed.white):
            cyc = list(self._vertex_cycle(v))
            i = cyc.index(edge)
            out.append(tuple(cyc[i + 1:] + cyc[:i]))
        return tuple(out)

    @property
    def edge_names(self):
        return [e.name for e in self.edges]

    def edge_index(self, name):
        for i, e in enumerate(self.edges):
            if e.name == name:
                return i
        raise TilingError(f"unknown edge {name!r}")


def parse_tiling(text):
    """Parse tiling-file content into a validated BraneTiling.

    Grammar (line oriented, '#' comments):
        vertex <name> black|white
        edge <name> <black-vertex> <white-vertex>
        rotation <vertex> <edge> ...     # counterclockwise
    """
    vertices, edges, rotations = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "vertex":
                if len(parts) != 3:
                    raise TilingError("expected: vertex <name> black|white")
                _check_name(parts[1])
                vertices.append((parts[1], parts[2]))
            elif kind == "edge":
                if len(parts) != 4:
                    raise TilingError("expected: edge <name> <black> <white>")
                for p in parts[1:]:
                    _check_name(p)
                edges.append((parts[1], parts[2], parts[3]))
            elif kind == "rotation":
                if len(parts) < 3:
                    raise TilingError("expected: rotation <vertex> <edge> ...")
                for p in parts[1:]:
                    _check_name(p)
                rotations.append((parts[1], tuple(parts[2:])))
            else:
                raise TilingError(f"unknown directive {kind!r}")
        except TilingError as err:
            raise TilingError(f"line {lineno}: {err}") from None
    return BraneTiling(vertices, edges, rotations)


def _check_name(name):
    if not _NAME.match(name):
        raise TilingError(f"bad name {name!r}")
