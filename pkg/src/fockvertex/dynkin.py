"""Simply-laced Dynkin data: graph, pairing, orientation, lattice cocycle.

The two-cocycle on the root lattice is the standard bimultiplicative one
built from the edge orientation:  eps(a_i, a_j) = -1 when i = j or the edge
is oriented i -> j, and +1 otherwise.  The source never pins the sign table
down explicitly, so the generator table is kept as a config item
(`flip_diagonal` reverses the i = j entry, which serves as the negative
control for the relation suite).
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, Mapping, Tuple

Node = object


class DynkinGraph:
    """A finite simple graph with an antisymmetric edge orientation."""

    def __init__(self, nodes: Iterable, edges: Iterable[tuple],
                 orientation: Iterable[tuple] | None = None):
        self.nodes = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate nodes")
        node_set = set(self.nodes)
        edge_set = set()
        for a, b in edges:
            if a not in node_set or b not in node_set:
                raise ValueError(f"edge ({a},{b}) uses unknown node")
            if a == b:
                raise ValueError("loops are not allowed")
            key = frozenset((a, b))
            if key in edge_set:
                raise ValueError(f"multiple edge ({a},{b})")
            edge_set.add(key)
        self.edges = edge_set

        # Default orientation: a -> b when a precedes b in node order.
        order = {n: k for k, n in enumerate(self.nodes)}
        self._eps: Dict[Tuple[Node, Node], int] = {}
        oriented = set()
        if orientation is not None:
            for a, b in orientation:
                if frozenset((a, b)) not in edge_set:
                    raise ValueError(f"orientation ({a},{b}) is not an edge")
                self._eps[(a, b)] = 1
                self._eps[(b, a)] = -1
                oriented.add(frozenset((a, b)))
        for key in edge_set - oriented:
            a, b = sorted(key, key=lambda n: order[n])
            self._eps[(a, b)] = 1
            self._eps[(b, a)] = -1

    # -- Cartan data ----------------------------------------------------

    def pairing(self, i: Node, j: Node) -> int:
        """<alpha_i, alpha_j>: 2 on the diagonal, -1 across an edge, else 0."""
        if i not in set(self.nodes) or j not in set(self.nodes):
            raise KeyError(f"unknown node in pairing({i},{j})")
        if i == j:
            return 2
        return -1 if frozenset((i, j)) in self.edges else 0

    def adjacent(self, i: Node, j: Node) -> bool:
        return frozenset((i, j)) in self.edges

    def epsilon(self, i: Node, j: Node) -> int:
        """Orientation sign: +1 if i -> j, -1 if j -> i, 0 off edges."""
        return self._eps.get((i, j), 0)

    def adjacent_ordered_pairs(self):
        out = []
        for key in self.edges:
            a, b = tuple(key)
            out.extend([(a, b), (b, a)])
        return sorted(out, key=lambda p: (str(p[0]), str(p[1])))

    def orthogonal_ordered_pairs(self):
        out = []
        for i in self.nodes:
            for j in self.nodes:
                if i != j and not self.adjacent(i, j):
                    out.append((i, j))
        return out

    def __repr__(self) -> str:
        return f"DynkinGraph(nodes={list(self.nodes)!r}, edges={sorted(tuple(e) for e in self.edges)!r})"

    # -- serialization ----------------------------------------------------

    @staticmethod
    def from_json(text: str) -> "DynkinGraph":
        data = json.loads(text)
        return DynkinGraph(data["nodes"], [tuple(e) for e in data["edges"]],
                           [tuple(e) for e in data.get("orientation", [])] or None)

    def to_json(self) -> str:
        orientation = [[a, b] for (a, b), s in self._eps.items() if s == 1]
        return json.dumps({
            "nodes": list(self.nodes),
            "edges": sorted([sorted(tuple(e), key=str) for e in self.edges]),
            "orientation": sorted(orientation, key=str),
        })


def a_n(n: int) -> DynkinGraph:
    """Type A path graph on nodes 1..n (n >= 2)."""
    if n < 2:
        raise ValueError("a_n needs n >= 2 (single nodes via a custom edge list)")
    nodes = list(range(1, n + 1))
    return DynkinGraph(nodes, [(k, k + 1) for k in range(1, n)])


def d_n(n: int) -> DynkinGraph:
    """Type D on nodes 1..n (n >= 4): chain 1..n-2 with n-1 and n forking."""
    if n < 4:
        raise ValueError("d_n needs n >= 4")
    nodes = list(range(1, n + 1))
    edges = [(k, k + 1) for k in range(1, n - 2)]
    edges += [(n - 2, n - 1), (n - 2, n)]
    return DynkinGraph(nodes, edges)


def e_n(n: int) -> DynkinGraph:
    """Types E6, E7, E8 in Bourbaki numbering."""
    if n not in (6, 7, 8):
        raise ValueError("e_n needs n in {6,7,8}")
    nodes = list(range(1, n + 1))
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    if n >= 7:
        edges.append((6, 7))
    if n == 8:
        edges.append((7, 8))
    return DynkinGraph(nodes, edges)


def graph_by_name(name: str) -> DynkinGraph:
    name = name.strip().upper()
    kind, num = name[0], name[1:]
    if kind == "A":
        return a_n(int(num))
    if kind == "D":
        return d_n(int(num))
    if kind == "E":
        return e_n(int(num))
    raise ValueError(f"unknown graph name {name!r}")


# ---------------------------------------------------------------------------
# Root lattice
# ---------------------------------------------------------------------------

class RootLatticeElement:
    """Finitely supported integer combination of simple roots."""

    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[Node, int] | Iterable[tuple] = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        clean = tuple(sorted(((n, int(c)) for n, c in items if c != 0),
                             key=lambda kv: str(kv[0])))
        self.coords = clean

    @staticmethod
    def zero() -> "RootLatticeElement":
        return RootLatticeElement()

    @staticmethod
    def simple(i: Node) -> "RootLatticeElement":
        return RootLatticeElement({i: 1})

    def coeff(self, node: Node) -> int:
        for n, c in self.coords:
            if n == node:
                return c
        return 0

    def __add__(self, other: "RootLatticeElement") -> "RootLatticeElement":
        out = dict(self.coords)
        for n, c in other.coords:
            out[n] = out.get(n, 0) + c
        return RootLatticeElement(out)

    def __sub__(self, other: "RootLatticeElement") -> "RootLatticeElement":
        return self + (-other)

    def __neg__(self) -> "RootLatticeElement":
        return RootLatticeElement({n: -c for n, c in self.coords})

    def scale(self, k: int) -> "RootLatticeElement":
        return RootLatticeElement({n: k * c for n, c in self.coords})

    def norm_inf(self) -> int:
        return max((abs(c) for _, c in self.coords), default=0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootLatticeElement) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"RootLatticeElement({dict(self.coords)!r})"

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        return "+".join(f"{c}a{n}" if c != 1 else f"a{n}" for n, c in self.coords)


class Sector:
    """A lattice point together with a nonnegative Fock degree."""

    __slots__ = ("alpha", "n")

    def __init__(self, alpha: RootLatticeElement, n: int):
        if n < 0:
            raise ValueError("Fock degree must be nonnegative (negative sectors are the zero object)")
        self.alpha = alpha
        self.n = n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Sector) and self.alpha == other.alpha and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.alpha, self.n))

    def __repr__(self) -> str:
        return f"Sector({self.alpha!r}, n={self.n})"


class RootLattice:
    """Pairing, norms and the Frenkel-Kac sign table for a fixed graph."""

    def __init__(self, graph: DynkinGraph, flip_diagonal: bool = False):
        self.graph = graph
        self.flip_diagonal = flip_diagonal

    def pair_root(self, alpha: RootLatticeElement, i: Node) -> int:
        return sum(c * self.graph.pairing(n, i) for n, c in alpha.coords)

    def norm_half(self, alpha: RootLatticeElement) -> int:
        total = 0
        for n1, c1 in alpha.coords:
            for n2, c2 in alpha.coords:
                total += c1 * c2 * self.graph.pairing(n1, n2)
        assert total % 2 == 0
        return total // 2

    def _table(self, i: Node, j: Node) -> int:
        """cocycle on simple roots: -1 iff i=j or the edge is oriented i->j."""
        if i == j:
            return 1 if self.flip_diagonal else -1
        return -1 if self.graph.epsilon(i, j) == 1 else 1

    def cocycle(self, alpha: RootLatticeElement, beta: RootLatticeElement) -> int:
        """Bimultiplicative extension of the generator table."""
        parity = 0
        for n1, c1 in alpha.coords:
            for n2, c2 in beta.coords:
                if self._table(n1, n2) == -1:
                    parity += c1 * c2
        return -1 if parity % 2 else 1

    def ball(self, radius: int):
        """All lattice elements with sup-norm coordinates at most radius."""
        import itertools
        nodes = self.graph.nodes
        rng = range(-radius, radius + 1)
        for combo in itertools.product(rng, repeat=len(nodes)):
            yield RootLatticeElement(dict(zip(nodes, combo)))
