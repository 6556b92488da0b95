"""Pictures as subspace collections and the symplectic group action.

Every picture element carries a pair (X, X-perp) of complementary subspaces
(or, for the two hyperelliptic kinds, a 29-element subset H).  Collections
of such pairs classify pictures; the group acts on collections, which
induces the action on pictures, and the 36 Cremona representatives give
each unlabelled picture its orbit multiplicities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from octadred.blocks import (
    PictureElement, elements_compatible, hyperelliptic_subset,
    picture_subspace, block,
)
from octadred.decompose import OctadPicture, picture_from_elements
from octadred.symplectic import (
    E3Element, Subspace, SpElement, E3_FULL, ZERO_SPACE, all_partitions,
    cremona_element, e3, orthogonal_complement, s8_element, span, LETTERS,
)

__all__ = [
    "SubspaceCollection", "Exceptional", "Incompatible", "sigma",
    "sigma_inverse", "sp_action_on_picture", "cremona_orbit",
    "cremona_images", "s8_equivalent",
]


class Exceptional(ValueError):
    pass


class Incompatible(ValueError):
    pass


@dataclass(frozen=True)
class SubspaceCollection:
    """Pairs (X, X-perp) with dim X <= 3, always containing (0, E3), plus an
    optional hyperelliptic subset containing every X."""

    pairs: frozenset[Subspace]
    hyperelliptic: frozenset[E3Element] | None = None

    def with_root(self) -> frozenset[Subspace]:
        return self.pairs | {ZERO_SPACE}

    def is_compatible(self) -> bool:
        subs = sorted(self.pairs, key=lambda s: s.rows)
        for s in subs:
            if s.dim < 1 or s.dim > 3:
                return False
            from octadred.symplectic import is_merotropic
            if not is_merotropic(s):
                return False
        for i in range(len(subs)):
            for j in range(i + 1, len(subs)):
                if not _pair_ok(subs[i], subs[j]):
                    return False
        if self.hyperelliptic is not None:
            for s in subs:
                if not all(x in self.hyperelliptic for x in s.elements()):
                    return False
        return True


@lru_cache(maxsize=None)
def _pair_ok(X: Subspace, Y: Subspace) -> bool:
    if X == Y:
        return True
    Xp, Yp = orthogonal_complement(X), orthogonal_complement(Y)
    if not (X <= Y or Y <= X or X <= Yp):
        return False
    if X <= Y.intersection(Yp) or Y <= X.intersection(Xp):
        return False
    return True


def _canonical_side(X: Subspace) -> Subspace:
    """The dim <= 3 representative of {X, X-perp}; for 3-3 pairs the
    lexicographically smaller row tuple."""
    Xp = orthogonal_complement(X)
    if X.dim < Xp.dim:
        return X
    if Xp.dim < X.dim:
        return Xp
    return X if X.rows <= Xp.rows else Xp


def sigma(p: OctadPicture) -> SubspaceCollection:
    """Subspace collection of a picture; hyperelliptic elements contribute
    the subset, not a pair."""
    if p.exceptional:
        raise Exceptional("the exceptional picture carries no collection")
    pairs = set()
    hyp = None
    for e in p.elements:
        if e.family in ("line", "tcu"):
            if hyp is not None:
                raise Incompatible("two hyperelliptic elements in one picture")
            hyp = hyperelliptic_subset(e)
        else:
            pairs.add(_canonical_side(picture_subspace(e)))
    return SubspaceCollection(frozenset(pairs), hyp)


def _classify_pair(X: Subspace) -> PictureElement:
    """Picture element of a merotropic subspace pair."""
    elems = sorted((x for x in X.elements() if x), key=lambda x: x.letters)
    pairs = [x for x in elems if len(x.letters) == 2]
    if X.dim == 1:
        (x,) = elems
        if len(x.letters) == 2:
            return PictureElement("alpha1", (x.letters,))
        lab = x.letters if "A" in x.letters else _comp(x.letters)
        return PictureElement("alpha2", (lab,))
    if X.dim == 2:
        if len(pairs) == 3:
            letters = set().union(*(set(x.letters) for x in pairs))
            return PictureElement("chi2", ("".join(sorted(letters)),))
        (pair,) = pairs
        quads = [x for x in elems if len(x.letters) == 4]
        q = set(quads[0].letters)
        a, b = pair.letters
        if a in q and b not in q:
            t1 = "".join(sorted(q - {a}))
        elif b in q and a not in q:
            t1 = "".join(sorted(q - {b}))
        else:
            q = set(_comp(quads[0].letters))
            t1 = "".join(sorted(q - ({a, b} & q)))
        t2 = _comp(pair.letters + t1)
        return PictureElement("chi1", (pair.letters,) + tuple(sorted((t1, t2))))
    # dim 3
    Xp = orthogonal_complement(X)
    own = pairs
    opp = [x for x in Xp.elements() if x and len(x.letters) == 2]
    if len(own) == 6:
        quad = "".join(sorted(set().union(*(set(x.letters) for x in own))))
        lab = quad if "A" in quad else _comp(quad)
        return PictureElement("phi3", (lab,))
    if len(own) == 4:
        # phi2: three mutually meeting pairs form the triple, one isolated
        tri = [x for x in own
               if sum(bool(set(x.letters) & set(y.letters)) for y in own if y != x) == 2]
        t1 = "".join(sorted(set().union(*(set(x.letters) for x in tri))))
        tri2 = [x for x in opp
                if sum(bool(set(x.letters) & set(y.letters)) for y in opp if y != x) == 2]
        t2 = "".join(sorted(set().union(*(set(x.letters) for x in tri2))))
        return PictureElement("phi2", tuple(sorted((t1, t2))))
    if len(own) == 2:
        side1 = frozenset(x.letters for x in own)
        side2 = frozenset(x.letters for x in opp)
        from octadred.blocks import _phi1_label
        return PictureElement("phi1", _phi1_label({side1, side2}))
    raise Incompatible(f"subspace {X} is not a picture class")


def _comp(letters: str) -> str:
    return "".join(c for c in LETTERS if c not in letters)


_H_TCU = hyperelliptic_subset(block("tcu").picture())


def _classify_subset(H: frozenset[E3Element]) -> PictureElement:
    if H == _H_TCU:
        return PictureElement("tcu", ())
    pairs = [x for x in H if len(x.letters) == 2]
    # the twelve pairs split 6/6 inside the two sides of the partition
    letters: dict[str, set] = {}
    for x in pairs:
        a, b = x.letters
        letters.setdefault(a, set()).add(b)
        letters.setdefault(b, set()).add(a)
    side = min(letters)
    group = {side} | letters[side]
    lab = "".join(sorted(group))
    lab = lab if "A" in lab else _comp(lab)
    cand = PictureElement("line", (lab,))
    if hyperelliptic_subset(cand) != H:
        raise Incompatible("subset is not a hyperelliptic subset")
    return cand


def sigma_inverse(c: SubspaceCollection) -> OctadPicture:
    elems = {_classify_pair(X) for X in c.pairs}
    if c.hyperelliptic is not None:
        elems.add(_classify_subset(c.hyperelliptic))
    pic = picture_from_elements(elems)
    lst = sorted(elems, key=lambda e: e.text())
    for i in range(len(lst)):
        for j in range(i + 1, len(lst)):
            if not elements_compatible(lst[i], lst[j]):
                raise Incompatible(f"{lst[i]} and {lst[j]} are not compatible")
    return pic


def sp_action_on_picture(g: SpElement, p: OctadPicture) -> OctadPicture:
    if p.exceptional:
        raise Exceptional("no action on the exceptional picture")
    col = sigma(p)
    pairs = frozenset(_canonical_side(g(X)) for X in col.pairs)
    hyp = None
    if col.hyperelliptic is not None:
        hyp = frozenset(g(x) for x in col.hyperelliptic)
    return sigma_inverse(SubspaceCollection(pairs, hyp))


# ---------------------------------------------------------------------------
# unlabelled pictures and Cremona orbits


def _letter_signature(p: OctadPicture) -> dict[str, tuple]:
    """Relabelling-invariant role multiset per letter, for match pruning."""
    sig = {c: [] for c in LETTERS}
    for e in p.elements:
        f, l = e.family, e.label
        if f == "alpha1":
            for c in LETTERS:
                sig[c].append(("a1", c in l[0]))
        elif f == "chi2":
            for c in LETTERS:
                sig[c].append(("x2", c in l[0]))
        elif f == "chi1":
            for c in LETTERS:
                sig[c].append(("x1", c in l[0]))
        elif f == "phi2":
            pair = _comp(l[0] + l[1])
            for c in LETTERS:
                sig[c].append(("p2", c in pair))
    return {c: tuple(sorted(v)) for c, v in sig.items()}


def s8_equivalent(p: OctadPicture, q: OctadPicture) -> bool:
    """Letter-relabelling equivalence, by signature-pruned backtracking."""
    if p.elements == q.elements:
        return True
    shape = lambda pic: sorted(e.family for e in pic.elements)
    if shape(p) != shape(q):
        return False
    sp, sq = _letter_signature(p), _letter_signature(q)
    from collections import Counter
    if Counter(sp.values()) != Counter(sq.values()):
        return False
    letters = sorted(LETTERS, key=lambda c: sum(1 for d in LETTERS if sq[d] == sp[c]))
    target = q.elements

    def extend(i, perm):
        if i == len(letters):
            return p.relabel(perm).elements == target
        c = letters[i]
        for d in LETTERS:
            if d not in perm.values() and sq[d] == sp[c]:
                perm[c] = d
                if extend(i + 1, perm):
                    return True
                del perm[c]
        return False

    return extend(0, {})


def cremona_images(p: OctadPicture) -> list[OctadPicture]:
    """Identity plus the 35 Cremona representatives applied to a picture."""
    images = [p]
    for side, other in all_partitions():
        images.append(sp_action_on_picture(cremona_element(side + "|" + other), p))
    return images


def cremona_orbit(p: OctadPicture):
    """The 36 transformations applied to a picture, grouped into unlabelled
    classes; returns a list of (representative, multiplicity), multiplicities
    summing to 36."""
    groups: list[list[OctadPicture]] = []
    for q in cremona_images(p):
        for g in groups:
            if s8_equivalent(g[0], q):
                g.append(q)
                break
        else:
            groups.append([q])
    out = [(g[0], len(g)) for g in groups]
    out.sort(key=lambda t: (-t[1], sorted(e.text() for e in t[0].elements)))
    return out
