"""Full enumeration of compatible collections, their group orbits, the
atlas of catalog rows, and the degeneration graphs.

Everything here regenerates combinatorial data from first principles and
diffs it against the hand-encoded fixtures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from octadred.blocks import block, hyperelliptic_subset
from octadred.decompose import OctadPicture
from octadred.pictures import (
    SubspaceCollection, _canonical_side, _pair_ok, cremona_orbit,
    s8_equivalent, sigma_inverse,
)
from octadred.stable_graph import classify, stable_graph, subspace_graph
from octadred.symplectic import (
    LETTERS, Subspace, all_partitions, cremona_element, e3, group_closure,
    merotropic_pairs, s8_element, sp_group_generators,
)

__all__ = [
    "pair_index", "enumerate_compatible_collections", "orbit_partition",
    "hyperelliptic_subsets", "enumerate_hyperelliptic_collections",
    "build_atlas", "degeneration_graphs", "generate_stable_types",
]


# ---------------------------------------------------------------------------
# indexing and group action tables


@lru_cache(maxsize=None)
def pair_index():
    """The merotropic pairs as indexable objects: list of subspaces (the
    canonical side of each pair) plus a lookup by subspace rows."""
    subs = [_canonical_side(p[0]) for p in merotropic_pairs()]
    subs = sorted(set(subs), key=lambda s: (s.dim, s.rows))
    lookup = {s.rows: i for i, s in enumerate(subs)}
    return subs, lookup


@lru_cache(maxsize=None)
def _generators():
    return sp_group_generators()


@lru_cache(maxsize=None)
def _action_tables():
    """generator index -> pair id -> pair id."""
    subs, lookup = pair_index()
    tables = []
    for g in _generators():
        tables.append(tuple(lookup[_canonical_side(g(s)).rows] for s in subs))
    return tuple(tables)


@lru_cache(maxsize=None)
def _compat_masks():
    subs, _ = pair_index()
    n = len(subs)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if _pair_ok(subs[i], subs[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_compatible_collections():
    """All compatible collections as sorted tuples of pair ids (the empty
    tuple is the trivial collection)."""
    masks = _compat_masks()
    n = len(masks)
    out = []

    def extend(prefix, cand_mask, start):
        out.append(prefix)
        m = cand_mask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            extend(prefix + (j,), cand_mask & masks[j] & ~((1 << (j + 1)) - 1), j + 1)

    full = (1 << n) - 1
    extend((), full, 0)
    return out


def collection_from_ids(ids, hyp=None) -> SubspaceCollection:
    subs, _ = pair_index()
    return SubspaceCollection(frozenset(subs[i] for i in ids), hyp)


def orbit_partition(collections, extra_action=None):
    """Partition into orbits under the symplectic group generators.

    collections: iterable of hashable states; the action on a state is via
    the pair-id tables, or extra_action(gen_index, state) when given.
    Returns (orbit id per state dict, list of orbit representative states).
    """
    tables = _action_tables()

    def act(gi, state):
        if extra_action is not None:
            return extra_action(gi, state)
        t = tables[gi]
        return tuple(sorted(t[i] for i in state))

    orbit_of = {}
    reps = []
    for st in collections:
        if st in orbit_of:
            continue
        oid = len(reps)
        reps.append(st)
        orbit_of[st] = oid
        frontier = [st]
        while frontier:
            nxt = []
            for cur in frontier:
                for gi in range(len(tables)):
                    img = act(gi, cur)
                    if img not in orbit_of:
                        orbit_of[img] = oid
                        nxt.append(img)
            frontier = nxt
    return orbit_of, reps


# ---------------------------------------------------------------------------
# hyperelliptic side


@lru_cache(maxsize=None)
def hyperelliptic_subsets():
    """The 36 hyperelliptic subsets: index 0 is the pair-closure subset, the
    rest are the 35 partition subsets (A-side labels)."""
    subsets = [hyperelliptic_subset(block("tcu").picture())]
    labels = ["tcu"]
    for side, other in all_partitions():
        subsets.append(hyperelliptic_subset(block("line", side).picture()))
        labels.append(side)
    return tuple(subsets), tuple(labels)


@lru_cache(maxsize=None)
def _h_action_tables():
    subsets, _ = hyperelliptic_subsets()
    lookup = {s: i for i, s in enumerate(subsets)}
    tables = []
    for g in _generators():
        row = []
        for s in subsets:
            img = frozenset(g(x) for x in s)
            row.append(lookup[img])
        tables.append(tuple(row))
    return tuple(tables)


def enumerate_hyperelliptic_collections():
    """All (collection, subset) states: collections without 3-dimensional
    pairs whose members sit inside the subset."""
    subs, _ = pair_index()
    subsets, _ = hyperelliptic_subsets()
    masks = _compat_masks()
    fits = []
    for h in subsets:
        m = 0
        for i, s in enumerate(subs):
            if s.dim <= 2 and all(x in h for x in s.elements()):
                m |= 1 << i
        fits.append(m)

    out = []
    for hi, allowed in enumerate(fits):
        def extend(prefix, cand_mask, start):
            out.append(prefix + (("H", hi),))
            m = cand_mask
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                extend(prefix + (j,),
                       cand_mask & masks[j] & ~((1 << (j + 1)) - 1), j + 1)

        extend((), allowed, 0)
    return out


def _hyp_action(gi, state):
    tables = _action_tables()
    htab = _h_action_tables()
    *ids, (_, hi) = state
    return tuple(sorted(tables[gi][i] for i in ids)) + (("H", htab[gi][hi]),)


# ---------------------------------------------------------------------------
# atlas


@dataclass(frozen=True)
class AtlasRow:
    type_name: str
    hyperelliptic: bool
    space: tuple
    pictures: tuple  # ((OctadPicture, multiplicity), ...)
    orbit_size: int


def _row_from_rep(col: SubspaceCollection, hyp: bool, orbit_size: int) -> AtlasRow:
    pic = sigma_inverse(col)
    orbit = cremona_orbit(pic)
    g = stable_graph(col)
    name = classify(g, hyperelliptic=hyp)
    return AtlasRow(name, hyp, subspace_graph(col), tuple(orbit), orbit_size)


def build_atlas(progress=None):
    """Regenerate every catalog row and diff against the fixtures.

    Returns (rows, diffs); diffs empty on success.
    """
    from octadred.fixtures import atlas_rows

    rows = []
    diffs = []

    # plain rows
    cols = enumerate_compatible_collections()
    orbit_of, reps = orbit_partition(cols)
    sizes = {}
    for st, oid in orbit_of.items():
        sizes[oid] = sizes.get(oid, 0) + 1
    if len(reps) != 43:
        diffs.append(f"expected 43 plain orbits, found {len(reps)}")
    for oid, rep in enumerate(reps):
        col = collection_from_ids(rep)
        pic = sigma_inverse(col)
        if pic.exceptional:
            continue
        rows.append(_row_from_rep(col, False, sizes[oid]))
        if progress:
            progress(rows[-1])

    # hyperelliptic rows: phi-collections keep no subset; the rest pair with one
    phi_rows = [r for r in rows if any(e.family.startswith("phi")
                                       for p, _ in r.pictures for e in p.elements)]
    hyp_rows = []
    for r in rows:
        if any(e.family.startswith("phi") for p, _ in r.pictures
               for e in p.elements):
            hyp_rows.append(AtlasRow(r.type_name + "_H", True,
                                     _star(r.space), r.pictures, r.orbit_size))

    states = enumerate_hyperelliptic_collections()
    orbit_of_h, reps_h = orbit_partition(states, extra_action=_hyp_action)
    sizes_h = {}
    for st, oid in orbit_of_h.items():
        sizes_h[oid] = sizes_h.get(oid, 0) + 1
    subsets, _ = hyperelliptic_subsets()
    for oid, rep in enumerate(reps_h):
        *ids, (_, hi) = rep
        col = collection_from_ids(tuple(ids), subsets[hi])
        hyp_rows.append(_row_from_rep(col, True, sizes_h[oid]))
        if progress:
            progress(hyp_rows[-1])

    diffs.extend(_diff_rows(rows, atlas_rows(False)))
    diffs.extend(_diff_rows(hyp_rows, atlas_rows(True)))
    return rows + hyp_rows, diffs


def _star(space):
    label, boxed, kids = space
    return ("6*", boxed, kids)


def _diff_rows(rows, fixture):
    """Match generated rows against fixture rows (same type name, same
    subspace graph, same unlabelled pictures with multiplicities)."""
    diffs = []
    fixture = list(fixture)
    used = set()
    for r in rows:
        name = r.type_name.removesuffix("_H")
        cands = [i for i, (fname, fspace, fpics) in enumerate(fixture)
                 if fname == name and i not in used]
        hit = None
        for i in cands:
            fname, fspace, fpics = fixture[i]
            if fspace != r.space:
                continue
            if _pics_match(r.pictures, fpics):
                hit = i
                break
        if hit is None:
            diffs.append(f"no fixture row matches generated {r.type_name} "
                         f"(cands {len(cands)})")
        else:
            used.add(hit)
    for i, (fname, _, _) in enumerate(fixture):
        if i not in used:
            diffs.append(f"fixture row {fname} not generated")
    return diffs


def _pics_match(gen, fix):
    if len(gen) != len(fix):
        return False
    fix = list(fix)
    for p, m in gen:
        hit = None
        for i, (q, fm) in enumerate(fix):
            if fm == m and s8_equivalent(p, q):
                hit = i
                break
        if hit is None:
            return False
        fix.pop(hit)
    return True


# ---------------------------------------------------------------------------
# stable-type generation by degeneration moves


def generate_stable_types():
    """All genus-3 stable types by repeated degeneration from the smooth
    one: add a node to a component, or split a component in two.  Returns
    {codim: [GenusGraph, ...]} with graphs deduplicated up to isomorphism."""
    from octadred.stable_graph import GenusGraph, graph_isomorphic

    start = GenusGraph((3,), ())
    layers = {0: [start]}
    frontier = [start]
    codim = 0
    while frontier:
        codim += 1
        nxt = []
        for g in frontier:
            for h in _degenerations(g):
                if not h.is_stable() or h.total_genus() != 3:
                    continue
                if any(graph_isomorphic(h, k) for k in nxt):
                    continue
                nxt.append(h)
        if not nxt:
            break
        layers[codim] = nxt
        frontier = nxt
    return layers


def _degenerations(g):
    from octadred.stable_graph import GenusGraph

    n = len(g.genus)
    # add a node: drop a genus by one, add a loop
    for v in range(n):
        if g.genus[v] >= 1:
            genus = list(g.genus)
            genus[v] -= 1
            yield GenusGraph(tuple(genus), tuple(sorted(g.edges + ((v, v, None),))))
    # split a component into two joined at a node, redistributing genus and
    # edge endpoints
    for v in range(n):
        g0 = g.genus[v]
        slots = [i for i, (a, b, _) in enumerate(g.edges) for side in ((a == v,) if a == v else ()) ]
        ends = []
        for i, (a, b, _) in enumerate(g.edges):
            if a == v:
                ends.append((i, 0))
            if b == v:
                ends.append((i, 1))
        for g1 in range(g0 + 1):
            g2 = g0 - g1
            for pick in itertools.product((0, 1), repeat=len(ends)):
                genus = list(g.genus) + [g2]
                genus[v] = g1
                w = n
                edges = [list(e) for e in g.edges]
                for (i, side), c in zip(ends, pick):
                    if c:
                        edges[i][side] = w
                edges.append([v, w, None])
                yield GenusGraph(tuple(genus),
                                 tuple(sorted((min(a, b), max(a, b), lab)
                                              for a, b, lab in edges)))


# ---------------------------------------------------------------------------
# degeneration graphs


def degeneration_graphs():
    """Build SM3 / SM3-HE from the fixtures, regenerate the quotient graphs
    of picture-space degenerations, and report the comparison."""
    from octadred.fixtures import SM3_EDGES, SM3HE_EDGES

    report = {}

    # SM3 vertex set from the degeneration moves
    layers = generate_stable_types()
    count = sum(len(v) for v in layers.values())
    report["sm3_vertex_count"] = count
    names = {}
    for codim, graphs in layers.items():
        for g in graphs:
            names[classify(g)] = codim
    report["sm3_names_ok"] = (len(names) == count)

    # quotient of the picture degeneration graph
    q_edges, orbit_names = _quotient_graph_plain()
    report["g3_quotient_vertices"] = len(set(orbit_names.values()))
    report["g3_quotient_edges"] = sorted(q_edges)
    fixture_edges = sorted((f"({a})", f"({b})") for a, b in SM3_EDGES)
    report["sm3_match"] = (sorted(q_edges) == fixture_edges)

    qh_edges, orbit_names_h = _quotient_graph_hyp()
    report["g3he_quotient_vertices"] = len(set(orbit_names_h.values()))
    fixture_edges_h = sorted((f"({a})_H", f"({b})_H") for a, b in SM3HE_EDGES)
    report["sm3he_match"] = (sorted(qh_edges) == fixture_edges_h)
    report["g3he_quotient_edges"] = sorted(qh_edges)
    return report


def _quotient_graph_plain():
    masks = _compat_masks()
    subs, _ = pair_index()
    cols = enumerate_compatible_collections()
    orbit_of, reps = orbit_partition(cols)

    def name_of(ids):
        col = collection_from_ids(ids)
        pic = sigma_inverse(col)
        if pic.exceptional:
            return None
        return classify(stable_graph(col))

    orbit_names = {}
    for oid, rep in enumerate(reps):
        orbit_names[oid] = name_of(rep)

    edges = set()
    for oid, rep in enumerate(reps):
        if orbit_names[oid] is None:
            continue
        cand = (1 << len(subs)) - 1
        for i in rep:
            cand &= masks[i]
        present = set(rep)
        # move 1: adjoin a compatible pair of dimension <= 2
        m = cand
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            if j in present or subs[j].dim > 2:
                continue
            img = tuple(sorted(rep + (j,)))
            toid = orbit_of[img]
            if orbit_names[toid] is not None:
                edges.add((orbit_names[oid], orbit_names[toid]))
        # move 2: swap a pair for one whose self-intersection is it
        for i in rep:
            x = subs[i]
            if x.dim != 1:
                continue
            for j in range(len(subs)):
                y = subs[j]
                if y.dim != 3 or j in present:
                    continue
                from octadred.blocks import _self_intersection
                if _self_intersection(y) != x:
                    continue
                rest = tuple(k for k in rep if k != i)
                if any(not (masks[j] >> k & 1) for k in rest):
                    continue
                img = tuple(sorted(rest + (j,)))
                toid = orbit_of[img]
                if orbit_names[toid] is not None:
                    edges.add((orbit_names[oid], orbit_names[toid]))
    return edges, orbit_names


def _quotient_graph_hyp():
    masks = _compat_masks()
    subs, _ = pair_index()
    subsets, _ = hyperelliptic_subsets()

    # vertices: hyperelliptic states + phi-collections
    states = enumerate_hyperelliptic_collections()
    orbit_of_h, reps_h = orbit_partition(states, extra_action=_hyp_action)
    cols = enumerate_compatible_collections()
    orbit_of_p, reps_p = orbit_partition(cols)

    phi_ids = [i for i, s in enumerate(subs) if s.dim == 3]
    phi_set = set(phi_ids)

    def plain_name(oid):
        col = collection_from_ids(reps_p[oid])
        pic = sigma_inverse(col)
        if pic.exceptional or not any(subs[i].dim == 3 for i in reps_p[oid]):
            return None
        return classify(stable_graph(col), hyperelliptic=True)

    def hyp_name(oid):
        *ids, (_, hi) = reps_h[oid]
        col = collection_from_ids(tuple(ids), subsets[hi])
        return classify(stable_graph(col), hyperelliptic=True)

    names_h = {oid: hyp_name(oid) for oid in range(len(reps_h))}
    names_p = {oid: plain_name(oid) for oid in range(len(reps_p))}

    fits = []
    for h in subsets:
        m = 0
        for i, s in enumerate(subs):
            if s.dim <= 2 and all(x in h for x in s.elements()):
                m |= 1 << i
        fits.append(m)

    edges = set()

    def targets_from(ids, src_name):
        cand = (1 << len(subs)) - 1
        for i in ids:
            cand &= masks[i]
        m = cand
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            if j in ids:
                continue
            new_ids = tuple(sorted(ids + (j,)))
            if subs[j].dim == 3 or any(subs[i].dim == 3 for i in ids):
                # a phi-collection vertex
                if new_ids in orbit_of_p:
                    toid = orbit_of_p[new_ids]
                    if names_p[toid] is not None:
                        edges.add((src_name, names_p[toid]))
            else:
                for hi in range(len(subsets)):
                    if all(fits[hi] >> i & 1 for i in new_ids):
                        st = new_ids + (("H", hi),)
                        toid = orbit_of_h[st]
                        edges.add((src_name, names_h[toid]))

    for oid, rep in enumerate(reps_h):
        *ids, (_, hi) = rep
        targets_from(tuple(ids), names_h[oid])
    for oid, rep in enumerate(reps_p):
        if names_p[oid] is None:
            continue
        targets_from(rep, names_p[oid])
    return edges, {**names_h}
