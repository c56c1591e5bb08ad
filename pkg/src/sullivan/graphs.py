"""Simple connected graphs, automorphism groups, and group realization.

The automorphism search is plain backtracking over vertex assignments
with degree/neighborhood pruning; pruning rules only discard genuinely
impossible partial maps, so the enumeration is exhaustive.  Any finite
group can be turned into a graph with that automorphism group by
replacing each colored arc of a Cayley graph with an asymmetric path
gadget; the construction is verified post hoc, never trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class GraphError(ValueError):
    pass


class Permutation:
    """Bijection on vertex labels; (p * q)(v) = p(q(v))."""

    __slots__ = ("mapping", "_key")

    def __init__(self, mapping: dict):
        if set(mapping) != set(mapping.values()):
            raise GraphError("not a bijection")
        self.mapping = dict(mapping)
        self._key = tuple(sorted(self.mapping.items()))

    def __call__(self, v):
        return self.mapping[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if set(self.mapping) != set(other.mapping):
            raise GraphError("permutations on different vertex sets")
        return Permutation({v: self.mapping[w] for v, w in other.mapping.items()})

    def inverse(self) -> "Permutation":
        return Permutation({w: v for v, w in self.mapping.items()})

    @staticmethod
    def identity(labels) -> "Permutation":
        return Permutation({v: v for v in labels})

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in self.mapping.items())

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity:
            p = p * self
            n += 1
        return n

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        moved = {v: w for v, w in sorted(self.mapping.items()) if v != w}
        return f"Permutation({moved or 'id'})"

    def cycles(self):
        seen, out = set(), []
        for v in sorted(self.mapping):
            if v in seen:
                continue
            cyc, w = [v], self.mapping[v]
            seen.add(v)
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self.mapping[w]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


class SimpleGraph:
    """Finite undirected simple graph with string vertex labels."""

    def __init__(self, vertices, edges):
        vs = tuple(str(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex labels")
        vset = set(vs)
        eset = set()
        for pair in edges:
            a, b = (str(x) for x in pair)
            if a == b:
                raise GraphError(f"loop at {a}")
            if a not in vset or b not in vset:
                raise GraphError(f"edge ({a},{b}) uses unknown vertex")
            eset.add(frozenset((a, b)))
        self.vertices = vs
        self.edges = frozenset(eset)
        adj = {v: set() for v in vs}
        for e in eset:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, a, b) -> bool:
        return frozenset((str(a), str(b))) in self.edges

    @property
    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def require_model_shape(self):
        """Connected with more than one vertex; model builders insist."""
        if len(self.vertices) < 2:
            raise GraphError("graph must have more than one vertex")
        if not self.is_connected:
            raise GraphError("graph must be connected")

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"SimpleGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "edges": sorted(sorted(e) for e in self.edges),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @staticmethod
    def from_dict(data) -> "SimpleGraph":
        return SimpleGraph(data["vertices"], data["edges"])

    @staticmethod
    def from_json(text: str) -> "SimpleGraph":
        return SimpleGraph.from_dict(json.loads(text))


def path_graph(n: int, prefix="v") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int, prefix="v") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int, prefix="v") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return SimpleGraph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def asymmetric_graph_6() -> SimpleGraph:
    """A 6-vertex graph with trivial automorphism group (smallest possible
    order for an asymmetric graph); a 5-cycle with one chord and one
    pendant."""
    return SimpleGraph(
        ["v1", "v2", "v3", "v4", "v5", "v6"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1"),
         ("v1", "v6"), ("v2", "v4")],
    )


# -- automorphism search -------------------------------------------------------


@dataclass(frozen=True)
class AutomorphismGroup:
    graph: SimpleGraph
    elements: tuple  # Permutations, deterministic order, identity first
    composition: tuple  # composition[i][j] = index of elements[i] * elements[j]
    inverses: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def index_of(self, p: Permutation) -> int:
        return self.elements.index(p)

    def as_group_table(self) -> "GroupTable":
        return GroupTable(self.composition)


def automorphisms(graph: SimpleGraph) -> AutomorphismGroup:
    """The full automorphism group, by exhaustive backtracking."""
    graph.require_model_shape()
    vs = sorted(graph.vertices)
    # invariant per vertex: (degree, sorted neighbor degrees)
    profile = {
        v: (graph.degree(v), tuple(sorted(graph.degree(w) for w in graph.neighbors(v))))
        for v in vs
    }
    class_size = {v: sum(1 for w in vs if profile[w] == profile[v]) for v in vs}
    # expansion order: most-constrained first, then always adjacent to the
    # already-ordered set, so partial maps are forced instead of guessed
    remaining = set(vs)
    order = []
    while remaining:
        attached = [
            v for v in remaining
            if any(w not in remaining for w in graph.neighbors(v))
        ]
        pool = attached or list(remaining)
        v = min(pool, key=lambda u: (class_size[u], u))
        order.append(v)
        remaining.remove(v)
    found = []
    assign = {}
    used = set()

    def extend(i):
        if i == len(order):
            found.append(Permutation(dict(assign)))
            return
        u = order[i]
        for w in vs:
            if w in used or profile[w] != profile[u]:
                continue
            ok = True
            for v2, w2 in assign.items():
                if graph.has_edge(u, v2) != graph.has_edge(w, w2):
                    ok = False
                    break
            if ok:
                assign[u] = w
                used.add(w)
                extend(i + 1)
                del assign[u]
                used.remove(w)

    extend(0)
    iden = Permutation.identity(vs)
    found.sort(key=lambda p: tuple(p(v) for v in vs))
    found.remove(iden)
    elements = [iden] + found
    index = {p: i for i, p in enumerate(elements)}
    comp, invs = [], []
    for p in elements:
        row = []
        for q in elements:
            pq = p * q
            if pq not in index:
                raise GraphError("automorphism set not closed under composition")
            row.append(index[pq])
        comp.append(tuple(row))
        invs.append(index[p.inverse()])
    return AutomorphismGroup(graph, tuple(elements), tuple(comp), tuple(invs))


# -- finite groups as multiplication tables ------------------------------------


class GroupTable:
    """Finite group on elements 0..m-1 given by its multiplication table."""

    def __init__(self, table, names=None):
        table = tuple(tuple(row) for row in table)
        m = len(table)
        for row in table:
            if len(row) != m or any(not (0 <= x < m) for x in row):
                raise GraphError("malformed multiplication table")
        identity = None
        for e in range(m):
            if all(table[e][x] == x and table[x][e] == x for x in range(m)):
                identity = e
                break
        if identity is None:
            raise GraphError("no identity element")
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise GraphError("table not associative")
        for a in range(m):
            if not any(table[a][b] == identity for b in range(m)):
                raise GraphError(f"element {a} has no inverse")
        self.table = table
        self.identity = identity
        self.names = tuple(names) if names else tuple(str(i) for i in range(m))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def closure(self, gens) -> set:
        span = {self.identity}
        frontier = list(span)
        while frontier:
            x = frontier.pop()
            for g in gens:
                for y in (self.mul(x, g), self.mul(g, x)):
                    if y not in span:
                        span.add(y)
                        frontier.append(y)
        return span

    def generates(self, gens) -> bool:
        return len(self.closure(gens)) == self.order

    def generating_sequence(self) -> list:
        gens, span = [], {self.identity}
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = self.closure(gens)
                if len(span) == self.order:
                    break
        return gens

    # named constructors

    @staticmethod
    def trivial() -> "GroupTable":
        return GroupTable(((0,),), names=("e",))

    @staticmethod
    def cyclic(n: int) -> "GroupTable":
        return GroupTable(
            [[(i + j) % n for j in range(n)] for i in range(n)],
            names=[f"g{i}" for i in range(n)],
        )

    @staticmethod
    def symmetric(n: int) -> "GroupTable":
        from itertools import permutations

        elems = sorted(permutations(range(n)))
        index = {p: i for i, p in enumerate(elems)}
        table = [
            [index[tuple(p[q[i]] for i in range(n))] for q in elems] for p in elems
        ]
        return GroupTable(table, names=[repr(list(p)) for p in elems])


def find_group_isomorphism(a: GroupTable, b: GroupTable):
    """A bijective homomorphism a -> b as {index: index}, or None.

    Exhaustive search over generator images with order-profile pruning;
    fine for the desk scale (order <= 48).
    """
    if a.order != b.order:
        return None
    orders_a = sorted(a.element_order(x) for x in range(a.order))
    orders_b = sorted(b.element_order(x) for x in range(b.order))
    if orders_a != orders_b:
        return None
    gens = a.generating_sequence()
    if not gens:  # trivial group
        return {a.identity: b.identity}

    def close(partial):
        """Extend {a-elt: b-elt} to the generated subgroup; None on clash."""
        mapping = dict(partial)
        mapping[a.identity] = b.identity
        frontier = list(mapping)
        while frontier:
            x = frontier.pop()
            for g, h in partial.items():
                for xa, xb in ((a.mul(x, g), b.mul(mapping[x], h)),
                               (a.mul(g, x), b.mul(h, mapping[x]))):
                    old = mapping.get(xa)
                    if old is None:
                        mapping[xa] = xb
                        frontier.append(xa)
                    elif old != xb:
                        return None
        return mapping

    candidates = [
        [y for y in range(b.order) if b.element_order(y) == a.element_order(g)]
        for g in gens
    ]

    def search(i, partial):
        if i == len(gens):
            mapping = close(partial)
            if mapping is None or len(mapping) != a.order:
                return None
            if len(set(mapping.values())) != a.order:
                return None
            for x in range(a.order):
                for y in range(a.order):
                    if mapping[a.mul(x, y)] != b.mul(mapping[x], mapping[y]):
                        return None
            return mapping
        for img in candidates[i]:
            partial[gens[i]] = img
            if close(dict(partial)) is not None:
                hit = search(i + 1, partial)
                if hit:
                    return hit
            del partial[gens[i]]
        return None

    return search(0, {})


# -- realization: group -> graph with that automorphism group -------------------


def frucht_graph(group: GroupTable, generators=None) -> SimpleGraph:
    """A simple connected graph whose automorphism group is the given group.

    Each colored arc (g, g*s_i) of the Cayley graph becomes a spine
    g - u - v - g*s_i with pendant paths of lengths 2i+1 at u and 2i+2 at
    v; the distinct tail lengths encode color and direction.  The result
    is verified against automorphisms() before being returned.
    """
    if group.order == 1:
        return asymmetric_graph_6()
    if generators is None:
        generators = group.generating_sequence()
    generators = list(generators)
    if group.identity in generators:
        raise GraphError("identity is not allowed as a generator")
    if not group.generates(generators):
        raise GraphError("given set does not generate the group")

    vertices = [f"g{x}" for x in range(group.order)]
    edges = []

    def chain(base, name, length):
        prev = base
        for j in range(length):
            nxt = f"{name}t{j}"
            vertices.append(nxt)
            edges.append((prev, nxt))
            prev = nxt

    for g in range(group.order):
        for i, s in enumerate(generators):
            h = group.mul(g, s)
            stem = f"a{g}s{i}"
            u, v = stem + "u", stem + "v"
            vertices.extend([u, v])
            edges.extend([(f"g{g}", u), (u, v), (v, f"g{h}")])
            chain(u, stem + "u", 2 * i + 1)
            chain(v, stem + "v", 2 * i + 2)

    graph = SimpleGraph(vertices, edges)
    auts = automorphisms(graph)
    witness = find_group_isomorphism(group, auts.as_group_table())
    if witness is None:
        raise GraphError(
            f"gadget construction failed verification: |Aut| = {auts.order}, "
            f"expected {group.order}"
        )
    return graph
