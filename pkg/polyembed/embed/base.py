import enum

from polyembed.core.errors import InvalidInput


class GraphKind(enum.Enum):
    PATH = 'path'
    CYCLE = 'cycle'
    CLIQUE = 'clique'


MIN_SIZE = {
    GraphKind.PATH: (1, 'TooSmall', 'a path needs at least 1 edge'),
    GraphKind.CYCLE: (3, 'DegenerateCycle', 'a cycle needs at least 3 edges'),
    GraphKind.CLIQUE: (2, 'TooSmall', 'a clique needs at least 2 nodes'),
}


class GraphSpec(object):
    """
    The abstract graph to embed.

    The size of a path or a cycle is its edge count; the size of a clique
    is its node count.

    Parameters
    ----------
    kind (GraphKind): path, cycle or clique.
    size (int): Edge count (path, cycle) or node count (clique).
    strict (bool): Reject sizes below the kind's minimum. Claims read
        back from a file are built with strict=False so the verifier can
        report them as violations.
    """

    def __init__(self, kind, size, strict=True):
        self.kind = GraphKind(kind)
        self.size = int(size)
        if strict and self.is_degenerate:
            _, kind_name, detail = MIN_SIZE[self.kind]
            raise InvalidInput(kind_name, detail)

    @property
    def is_degenerate(self):
        return self.size < MIN_SIZE[self.kind][0]

    @property
    def node_count(self):
        if self.kind is GraphKind.PATH:
            return self.size + 1
        return self.size

    @property
    def edge_count(self):
        if self.kind is GraphKind.CLIQUE:
            return self.size * (self.size - 1) // 2
        return self.size

    def __eq__(self, other):
        return (isinstance(other, GraphSpec) and
                (self.kind, self.size) == (other.kind, other.size))

    def __repr__(self):
        return 'GraphSpec(%s, %d)' % (self.kind.value, self.size)


class Embedding(object):
    """
    A drawing of a graph on polygon vertices (or on the points of a point
    set): node k sits on vertex mapping[k], every edge is a pair of vertex
    indices.

    Parameters
    ----------
    mapping (list): Vertex index per graph node; injective for valid
        embeddings (the verifier checks).
    edges (list): (u, v) vertex index pairs.
    kind (GraphKind): The kind of graph drawn.
    optimal_claimed (bool): Whether the producer claims maximum size.
    diagnostics (list): Free-form notes from the producer.
    """

    def __init__(self, mapping, edges, kind, optimal_claimed=False,
            diagnostics=None):
        self.mapping = [int(v) for v in mapping]
        self.edges = [(int(u), int(v)) for u, v in edges]
        self.kind = GraphKind(kind)
        self.optimal_claimed = bool(optimal_claimed)
        self.diagnostics = list(diagnostics or [])

    @classmethod
    def path(cls, vertices, **kwargs):
        edges = list(zip(vertices[:-1], vertices[1:]))
        return cls(vertices, edges, GraphKind.PATH, **kwargs)

    @classmethod
    def cycle(cls, vertices, **kwargs):
        edges = list(zip(vertices, vertices[1:] + vertices[:1]))
        return cls(vertices, edges, GraphKind.CYCLE, **kwargs)

    @classmethod
    def clique(cls, vertices, **kwargs):
        edges = [(vertices[a], vertices[b])
                 for a in range(len(vertices)) for b in range(a + 1, len(vertices))]
        return cls(vertices, edges, GraphKind.CLIQUE, **kwargs)

    @property
    def size(self):
        """
        Edge count for paths and cycles, node count for cliques.
        """
        if self.kind is GraphKind.CLIQUE:
            return len(self.mapping)
        return len(self.edges)

    @property
    def vertex_set(self):
        return set(self.mapping)

    def graph_spec(self):
        return GraphSpec(self.kind, self.size)

    def graph_edges(self):
        """
        The edges expressed in graph node indices, or None when an edge
        endpoint is not in the mapping's image.
        """
        node_of = {}
        for node, vertex in enumerate(self.mapping):
            node_of.setdefault(vertex, node)
        try:
            return [(node_of[u], node_of[v]) for u, v in self.edges]
        except KeyError:
            return None

    def relabeled(self, permutation):
        """
        Same geometric drawing with graph nodes renumbered: node k becomes
        node permutation[k].
        """
        mapping = [None] * len(self.mapping)
        for old, new in enumerate(permutation):
            mapping[new] = self.mapping[old]
        return Embedding(mapping, self.edges, self.kind, self.optimal_claimed,
            self.diagnostics)

    def __eq__(self, other):
        return (isinstance(other, Embedding) and
                self.mapping == other.mapping and self.edges == other.edges and
                self.kind is other.kind and
                self.optimal_claimed == other.optimal_claimed and
                self.diagnostics == other.diagnostics)

    def __repr__(self):
        return 'Embedding(%s, mapping=%r, edges=%r)' % (
            self.kind.value, self.mapping, self.edges)
