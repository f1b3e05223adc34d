"""
Finite simplicial Lambda-tree: a vertex set and an edge list with positive
lengths, forming an acyclic connected graph, metrized by path length.
"""

# imports
import random
from collections import deque
from typing import Any, Hashable, Iterable

# project
from lambda_trees.errors import ConfigError, GroupParseError
from lambda_trees.groups import GroupElement, GroupId, parse_element
from lambda_trees.spaces.base_space import Piece, PiecewiseSpace, SegmentMap, SpaceKind
from lambda_trees.spaces.space_types import TreeEdge, TreePoint

# probability numerator (out of 4) of sampling a vertex rather than an edge point
VERTEX_SAMPLE_WEIGHT = 1


class TreeSpace(PiecewiseSpace):
    """
    Simplicial tree; each edge is a line whose coordinate is the offset from its
    first endpoint u.
    """

    kind = SpaceKind.TREE
    point_type = TreePoint

    def __init__(self, group: GroupId, vertices: Iterable[str], edges: Iterable[TreeEdge], name: str = "tree"):
        """
        Initialize and validate the tree.

        Args:
            group (GroupId): The group of edge lengths.
            vertices (Iterable[str]): Vertex names.
            edges (Iterable[TreeEdge]): Edges; the edge id is the position in this list.
            name (str): Source description, e.g. the edge-list file name.
        """
        super().__init__(group)
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.name = name

        # validate the structure
        if not self.vertices:
            raise ConfigError("tree requires at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ConfigError("tree vertex names must be unique")
        if len(self.edges) != len(self.vertices) - 1:
            raise ConfigError(
                f"tree with {len(self.vertices)} vertices needs {len(self.vertices) - 1} edges, got {len(self.edges)}"
            )
        for index, edge in enumerate(self.edges):
            if edge.u not in self.vertices or edge.v not in self.vertices:
                raise ConfigError(f"edge {index} joins unknown vertices {edge.u} -- {edge.v}")
            if edge.length.group != self.group or edge.length.sign <= 0:
                raise ConfigError(f"edge {index} needs a positive length in {self.group.value}, got {edge.length}")

        # adjacency: vertex -> [(neighbour, edge id)]
        self.adjacency: dict[str, list[tuple[str, int]]] = {vertex: [] for vertex in self.vertices}
        for index, edge in enumerate(self.edges):
            self.adjacency[edge.u].append((edge.v, index))
            self.adjacency[edge.v].append((edge.u, index))

        # all-pairs vertex paths as edge walks [(edge id, from vertex)]
        self.paths: dict[tuple[str, str], list[tuple[int, str]]] = {}
        self.vertex_distances: dict[tuple[str, str], GroupElement] = {}
        for source in self.vertices:
            self._index_from(source)

    def _index_from(self, source: str) -> None:
        """
        Breadth-first search from one vertex, recording walks and distances.
        """
        walks: dict[str, list[tuple[int, str]]] = {source: []}
        distances: dict[str, GroupElement] = {source: self.zero}
        queue = deque([source])
        while queue:
            vertex = queue.popleft()
            for neighbour, edge_id in self.adjacency[vertex]:
                if neighbour in walks:
                    continue
                walks[neighbour] = walks[vertex] + [(edge_id, vertex)]
                distances[neighbour] = distances[vertex] + self.edges[edge_id].length
                queue.append(neighbour)

        if len(walks) != len(self.vertices):
            raise ConfigError(f"tree is not connected: {source} reaches {len(walks)} of {len(self.vertices)} vertices")

        for target, walk in walks.items():
            self.paths[(source, target)] = walk
            self.vertex_distances[(source, target)] = distances[target]

    def describe(self) -> str:
        return f"tree:{self.name}"

    def make_point(self, edge_id: int, offset: GroupElement) -> TreePoint:
        """
        Canonical point at an offset along an edge; the endpoints map to vertices.
        """
        edge = self.edges[edge_id]
        if offset.is_zero():
            return TreePoint(vertex=edge.u)
        if offset == edge.length:
            return TreePoint(vertex=edge.v)
        return TreePoint(edge=edge_id, offset=offset)

    def vertex_point(self, name: str) -> TreePoint:
        """
        Point of a named vertex.
        """
        if name not in self.adjacency:
            raise ConfigError(f"unknown vertex {name}")
        return TreePoint(vertex=name)

    def in_domain(self, point: Any) -> bool:
        if point.is_vertex:
            return point.vertex in self.adjacency and point.edge is None
        if point.edge is None or not 0 <= point.edge < len(self.edges) or point.offset is None:
            return False
        return point.offset.group == self.group and self.zero < point.offset < self.edges[point.edge].length

    def exits(self, point: TreePoint) -> list[tuple[str, GroupElement]]:
        """
        Vertices a path can leave a point through, with the distance to each.
        """
        if point.is_vertex:
            return [(point.vertex, self.zero)]
        edge = self.edges[point.edge]
        return [(edge.u, point.offset), (edge.v, edge.length - point.offset)]

    def _route(self, p: TreePoint, q: TreePoint) -> tuple[GroupElement, str, str]:
        """
        Length of the shortest path from p to q and the exit vertices it uses.
        """
        best = None
        for a, to_a in self.exits(p):
            for b, to_b in self.exits(q):
                total = to_a + self.vertex_distances[(a, b)] + to_b
                if best is None or total < best[0]:
                    best = (total, a, b)
        return best

    def _distance(self, p: TreePoint, q: TreePoint) -> GroupElement:
        if not p.is_vertex and not q.is_vertex and p.edge == q.edge:
            return abs(q.offset - p.offset)
        return self._route(p, q)[0]

    def _edge_piece(self, edge_id: int, from_vertex: str) -> Piece:
        edge = self.edges[edge_id]
        if from_vertex == edge.u:
            return Piece(self.zero, edge.length, edge_id, self.zero, 1)
        return Piece(self.zero, edge.length, edge_id, edge.length, -1)

    def _geodesic(self, p: TreePoint, q: TreePoint) -> SegmentMap:
        if not p.is_vertex and not q.is_vertex and p.edge == q.edge:
            piece = Piece(self.zero, abs(q.offset - p.offset), p.edge, p.offset, 1 if p.offset <= q.offset else -1)
            return self._segment(p, q, [piece])

        _, a, b = self._route(p, q)
        pieces = []
        if not p.is_vertex:
            # leave p's edge through a
            to_u = a == self.edges[p.edge].u
            pieces.append(
                Piece(
                    self.zero,
                    p.offset if to_u else self.edges[p.edge].length - p.offset,
                    p.edge,
                    p.offset,
                    -1 if to_u else 1,
                )
            )
        pieces.extend(self._edge_piece(edge_id, from_vertex) for edge_id, from_vertex in self.paths[(a, b)])
        if not q.is_vertex:
            # enter q's edge through b
            from_u = b == self.edges[q.edge].u
            pieces.append(
                Piece(
                    self.zero,
                    q.offset if from_u else self.edges[q.edge].length - q.offset,
                    q.edge,
                    self.zero if from_u else self.edges[q.edge].length,
                    1 if from_u else -1,
                )
            )
        return self._segment(p, q, pieces)

    def _point_on_line(self, line: Hashable, coordinate: GroupElement) -> TreePoint:
        return self.make_point(line, coordinate)

    def _line_coordinates(self, line: Hashable, point: TreePoint) -> list[GroupElement]:
        edge = self.edges[line]
        if point.is_vertex:
            if point.vertex == edge.u:
                return [self.zero]
            if point.vertex == edge.v:
                return [edge.length]
            return []
        return [point.offset] if point.edge == line else []

    def sample_point(self, rng: random.Random, bound: int, mean_exponent: int) -> TreePoint:
        if not self.edges or rng.randrange(4) < VERTEX_SAMPLE_WEIGHT:
            return TreePoint(vertex=rng.choice(self.vertices))
        edge_id = rng.randrange(len(self.edges))
        offset = self.random_between(rng, self.zero, self.edges[edge_id].length, bound, mean_exponent)
        return self.make_point(edge_id, offset)

    def parse_point(self, text: str) -> TreePoint:
        text = text.strip()
        edge_text, separator, offset_text = text.partition("#")
        if not separator:
            return self.vertex_point(text)
        if not edge_text.isdigit() or int(edge_text) >= len(self.edges):
            raise GroupParseError("unknown edge id", text, 0)
        edge_id = int(edge_text)
        offset = parse_element(self.group, offset_text)
        if offset.sign < 0 or offset > self.edges[edge_id].length:
            raise GroupParseError("offset outside the edge", text, len(edge_text) + 1)
        return self.make_point(edge_id, offset)

    def format_point(self, point: TreePoint) -> str:
        if point.is_vertex:
            return point.vertex
        return f"{point.edge}#{point.offset}"
