"""From a compatible subspace collection to the genus-labelled dual graph.

The recipe: order the collection by inclusion, count the orthogonal
relations at every vertex, expand vertices by their relation index, attach
labelled edges subject to the cancellation and spanning constraints, solve
the genus bookkeeping, and contract valence-two genus-0 vertices.  The
result is unique up to isomorphism; the search verifies that instead of
assuming it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from octadred.pictures import SubspaceCollection, Exceptional
from octadred.symplectic import (
    E3Element, Subspace, E3_FULL, ZERO_SPACE, e3, orthogonal_complement, span,
)

__all__ = [
    "GenusGraph", "UnsatisfiableRecipe", "NoMatch", "inclusion_graph",
    "relation_index", "subspace_graph", "stable_graph", "graph_isomorphic",
    "classify",
]


class UnsatisfiableRecipe(RuntimeError):
    pass


class NoMatch(ValueError):
    pass


@dataclass(frozen=True)
class GenusGraph:
    """Genus-labelled multigraph; edges are (i, j, optional label)."""

    genus: tuple[int, ...]
    edges: tuple[tuple[int, int, E3Element | None], ...]

    def degree(self, v: int) -> int:
        d = 0
        for a, b, _ in self.edges:
            d += (a == v) + (b == v)
        return d

    def cycle_rank(self) -> int:
        n = len(self.genus)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for a, b, _ in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return len(self.edges) - n + comps

    def total_genus(self) -> int:
        return sum(self.genus) + self.cycle_rank()

    def is_stable(self) -> bool:
        return all(g > 0 or self.degree(v) >= 3 for v, g in enumerate(self.genus))

    def to_json(self):
        return {
            "vertices": [{"genus": g} for g in self.genus],
            "edges": [[a, b, lab.letters if lab else None] for a, b, lab in self.edges],
        }

    @staticmethod
    def make(genus, edges) -> "GenusGraph":
        es = tuple(sorted((min(a, b), max(a, b), lab if len(t) > 2 else None)
                          for t in edges for a, b, lab in [(t[0], t[1], t[2] if len(t) > 2 else None)]))
        return GenusGraph(tuple(genus), es)


def graph_isomorphic(g1: GenusGraph, g2: GenusGraph) -> bool:
    """Genus- and multiplicity-preserving isomorphism, by brute force with
    degree/genus pruning (labels are ignored)."""
    n = len(g1.genus)
    if n != len(g2.genus) or len(g1.edges) != len(g2.edges):
        return False
    sig1 = sorted((g1.genus[v], g1.degree(v)) for v in range(n))
    sig2 = sorted((g2.genus[v], g2.degree(v)) for v in range(n))
    if sig1 != sig2:
        return False

    def em(g):
        out = {}
        for a, b, _ in g.edges:
            k = (min(a, b), max(a, b))
            out[k] = out.get(k, 0) + 1
        return out

    e1, e2 = em(g1), em(g2)
    for perm in itertools.permutations(range(n)):
        if any(g1.genus[v] != g2.genus[perm[v]] for v in range(n)):
            continue
        if all(e2.get((min(perm[a], perm[b]), max(perm[a], perm[b])), 0) == m
               for (a, b), m in e1.items()):
            return True
    return False


# ---------------------------------------------------------------------------
# inclusion structure


def inclusion_graph(c: SubspaceCollection) -> dict[Subspace, Subspace | None]:
    """Parent map; the root E3 (standing for the (0, E3) pair) maps to None."""
    verts = sorted(c.pairs, key=lambda s: (s.dim, s.rows)) + [E3_FULL]
    parent: dict[Subspace, Subspace | None] = {}
    for x in verts:
        if x == E3_FULL:
            parent[x] = None
            continue
        above = [y for y in verts if y != x and x <= y]
        best = min(above, key=lambda y: y.dim)
        # the smallest strictly-containing vertex is unique for compatible
        # collections; double-check instead of trusting it
        for y in above:
            if y.dim == best.dim and y != best:
                raise UnsatisfiableRecipe(f"non-unique parent for {x}")
        parent[x] = best
    return parent


def _children(parent_map, x):
    return [z for z, p in parent_map.items() if p == x]


def _self_int(x: Subspace) -> Subspace:
    return x.intersection(orthogonal_complement(x))


def relation_index(c: SubspaceCollection, x: Subspace):
    """(basis of rel(x) as frozensets of child intersection generators,
    delta_x).  Children sharing an intersection generator count once."""
    parent_map = inclusion_graph(c)
    return _relation_space(parent_map, x)


def _relation_space(parent_map, x):
    kids = _children(parent_map, x)
    ys = []
    for z in kids:
        zi = _self_int(z)
        if zi.dim == 1:
            y = next(v for v in zi.elements() if v)
            if y not in ys:
                ys.append(y)
    own = _self_int(x) if x != E3_FULL else ZERO_SPACE
    own_elems = own.elements()
    n = len(ys)
    members = []
    for mask in range(1, 1 << n):
        acc = e3("")
        for i in range(n):
            if mask >> i & 1:
                acc = acc + ys[i]
        if acc in own_elems:
            members.append(mask)
    basis_masks = []
    for m in sorted(members):
        r = m
        for b in basis_masks:
            r = min(r, r ^ b)
        if r:
            basis_masks.append(r)
            basis_masks.sort(reverse=True)
    basis_sets = [frozenset(ys[i] for i in range(n) if bm >> i & 1)
                  for bm in basis_masks]
    return basis_sets, len(basis_sets)


def subspace_graph(c: SubspaceCollection):
    """Tree encoding: (dim-or-'6*', boxed flag, sorted child encodings),
    where a child is boxed when it appears in an orthogonally dependent set
    of its parent."""
    parent_map = inclusion_graph(c)

    boxed: set[Subspace] = set()
    for x in parent_map:
        basis_sets, delta = _relation_space(parent_map, x)
        if delta > 0:
            involved = set().union(*basis_sets)
            for z in _children(parent_map, x):
                zi = _self_int(z)
                if zi.dim == 1 and next(v for v in zi.elements() if v) in involved:
                    boxed.add(z)

    def encode(x):
        kids = sorted((encode(z) for z in _children(parent_map, x)))
        label = "6*" if (x == E3_FULL and c.hyperelliptic is not None) else str(x.dim)
        return (label, x in boxed, tuple(kids))

    return encode(E3_FULL)


# ---------------------------------------------------------------------------
# the recipe


def stable_graph(c: SubspaceCollection) -> GenusGraph:
    graphs = _stable_graphs(c)
    first = graphs[0]
    for other in graphs[1:]:
        if not graph_isomorphic(first, other):
            raise UnsatisfiableRecipe("recipe produced non-isomorphic graphs")
    return first


def _stable_graphs(c: SubspaceCollection) -> list[GenusGraph]:
    parent_map = inclusion_graph(c)
    verts = list(parent_map)
    rel = {x: _relation_space(parent_map, x) for x in verts}
    delta = {x: rel[x][1] for x in verts}

    copies: dict[Subspace, list[int]] = {}
    idx = 0
    for x in verts:
        copies[x] = list(range(idx, idx + delta[x] + 1))
        idx += delta[x] + 1
    nvert = idx

    edge_groups = []
    for x in verts:
        if x == E3_FULL:
            continue
        d = _self_int(x).dim
        y = _self_int(x)
        lam = next((v for v in y.elements() if v), e3(""))
        par = parent_map[x]
        options = list(itertools.combinations_with_replacement(
            itertools.product(copies[x], copies[par]), d + 1))
        edge_groups.append((x, lam, options))

    results = []
    seen_keys = set()
    for choice in itertools.product(*(opts for _, _, opts in edge_groups)):
        edges = []
        for (x, lam, _), attach in zip(edge_groups, choice):
            for (vi, vj) in attach:
                edges.append((vi, vj, lam))
        if not _check_labels(edges, nvert, verts, copies, rel, parent_map):
            continue
        # deduplicate structurally identical attachment patterns
        key = tuple(sorted((min(a, b), max(a, b), lab) for a, b, lab in edges))
        if key in seen_keys:
            continue
        seen_keys.add(key)
        for genus in _genus_assignments(edges, nvert, verts, copies, parent_map):
            g = GenusGraph(tuple(genus),
                           tuple(sorted((min(a, b), max(a, b), lab)
                                        for a, b, lab in edges)))
            results.append(_contract(g))
    if not results:
        raise UnsatisfiableRecipe("no graph satisfies the recipe constraints")
    return results


def _check_labels(edges, nvert, verts, copies, rel, parent_map) -> bool:
    # (a) incident labels cancel at every vertex
    for v in range(nvert):
        acc = e3("")
        for a, b, lam in edges:
            if lam:
                if a == v:
                    acc = acc + lam
                if b == v:
                    acc = acc + lam
        if acc != e3(""):
            return False
    # (b)+(c) incoming label sets lie in rel and span it
    for x in verts:
        basis_sets, delta = rel[x]
        rel_elems = _span_sets(basis_sets)
        lam_in = []
        for v in copies[x]:
            counts: dict[E3Element, int] = {}
            for a, b, lam in edges:
                if b == v and lam:
                    counts[lam] = counts.get(lam, 0) + 1
            s = frozenset(y for y, k in counts.items() if k % 2)
            if s not in rel_elems:
                return False
            lam_in.append(s)
        if _gf2_rank_sets(lam_in) != delta:
            return False
    return True


def _span_sets(basis_sets):
    out = {frozenset()}
    for b in basis_sets:
        out |= {s ^ b for s in out}
    return out


def _gf2_rank_sets(sets):
    """Rank of a family of finite sets under symmetric difference."""
    universe = sorted({x for s in sets for x in s}, key=lambda x: x.letters)
    bit = {x: 1 << i for i, x in enumerate(universe)}
    basis = []
    for s in sets:
        r = 0
        for x in s:
            r |= bit[x]
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def _genus_assignments(edges, nvert, verts, copies, parent_map):
    below: dict[Subspace, set[int]] = {}

    def collect(x):
        vs = set(copies[x])
        for z, p in parent_map.items():
            if p == x:
                vs |= collect(z)
        return vs

    for x in verts:
        below[x] = collect(x)

    def h1(vset):
        es = [(a, b) for a, b, _ in edges if a in vset and b in vset]
        if not vset:
            return 0
        par = {v: v for v in vset}

        def find(v):
            while par[v] != v:
                par[v] = par[par[v]]
                v = par[v]
            return v

        comps = len(vset)
        for a, b in es:
            ra, rb = find(a), find(b)
            if ra != rb:
                par[ra] = rb
                comps -= 1
        return len(es) - len(vset) + comps

    targets = []
    for x in verts:
        gx = (x.dim - _self_int(x).dim) // 2 if x != E3_FULL else \
            (6 - 0) // 2
        inner = below[x]
        outer = set(range(nvert)) - inner
        xp_dim = 6 - x.dim if x != E3_FULL else 0
        gxp = (xp_dim - _self_int(x).dim) // 2 if x != E3_FULL else 0
        targets.append((inner, gx - h1(inner), outer, gxp - h1(outer)))

    out = []
    for assign in _bounded_assignments(nvert, 3):
        ok = True
        for inner, tin, outer, tout in targets:
            if sum(assign[v] for v in inner) != tin:
                ok = False
                break
            if sum(assign[v] for v in outer) != tout:
                ok = False
                break
        if ok:
            out.append(assign)
    return out


def _bounded_assignments(n, total):
    for combo in itertools.product(range(total + 1), repeat=n):
        if sum(combo) <= total:
            yield list(combo)


def _contract(g: GenusGraph) -> GenusGraph:
    genus = list(g.genus)
    edges = [(a, b, lab) for a, b, lab in g.edges]
    changed = True
    while changed:
        changed = False
        for v in range(len(genus)):
            if genus[v] != 0:
                continue
            incident = [i for i, (a, b, _) in enumerate(edges)
                        if a == v or b == v]
            endpoints = sum((edges[i][0] == v) + (edges[i][1] == v)
                            for i in incident)
            if endpoints != 2:
                continue
            if len(incident) == 1:
                raise UnsatisfiableRecipe("isolated loop after contraction")
            i1, i2 = incident
            u = edges[i1][0] if edges[i1][1] == v else edges[i1][1]
            w = edges[i2][0] if edges[i2][1] == v else edges[i2][1]
            lab = edges[i1][2] if edges[i1][2] == edges[i2][2] else None
            for i in sorted((i1, i2), reverse=True):
                edges.pop(i)
            edges.append((u, w, lab))
            # remove the vertex and reindex
            genus.pop(v)
            edges = [(a - (a > v), b - (b > v), l) for a, b, l in edges]
            changed = True
            break
    return GenusGraph(tuple(genus),
                      tuple(sorted((min(a, b), max(a, b), lab)
                                   for a, b, lab in edges)))


# ---------------------------------------------------------------------------
# classification against the catalog


def classify(g: GenusGraph, hyperelliptic: bool = False) -> str:
    from octadred.fixtures import DUAL_GRAPHS, HYPERELLIPTIC_TYPES

    if not g.is_stable() or g.total_genus() != 3:
        raise NoMatch("not a stable genus-3 graph")
    for name, ref in DUAL_GRAPHS().items():
        if graph_isomorphic(g, ref):
            if hyperelliptic:
                if name not in HYPERELLIPTIC_TYPES:
                    raise NoMatch(f"type ({name}) has no hyperelliptic form")
                return f"({name})_H"
            return f"({name})"
    raise NoMatch("no catalog entry matches")
