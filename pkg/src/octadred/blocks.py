"""Building blocks of valuation data and their associated subspaces.

A block is an elementary valuation vector on the 70 quadruples of letters
(plus a twisted-cubic coordinate), labelled by letter data.  Nineteen kinds
exist; each kind induces a picture class invariant under coordinate changes
and carries either a subspace of the symplectic space or, for the two
hyperelliptic kinds, an explicit subset of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from octadred.symplectic import (
    LETTERS, E3Element, Subspace, e3, span, pairing, orthogonal_complement,
)

__all__ = [
    "QUADRUPLES", "QUAD_INDEX", "ValuationData", "Block", "PictureElement",
    "NotPhi", "block", "elementary_vector", "block_valuation",
    "enumerate_labelled_blocks", "block_subspace", "picture_subspace",
    "hyperelliptic_subset", "auxiliary_blocks", "pair_compatible",
    "picture_compatible", "elements_compatible",
]

QUADRUPLES = tuple("".join(c) for c in itertools.combinations(LETTERS, 4))
QUAD_INDEX = {q: i for i, q in enumerate(QUADRUPLES)}


class NotPhi(ValueError):
    pass


def _canon_set(letters) -> str:
    return "".join(sorted(set(letters)))


def _complement(letters: str) -> str:
    return "".join(c for c in LETTERS if c not in letters)


@dataclass(frozen=True)
class ValuationData:
    """70 quadruple values plus the twisted-cubic index, all rationals >= 0
    for octad data (signed values are allowed transiently, e.g. inside the
    coset-normalization arithmetic)."""

    plucker: tuple[Fraction, ...]
    dagger: Fraction = Fraction(0)

    @staticmethod
    def zero() -> "ValuationData":
        return ValuationData((Fraction(0),) * 70)

    @staticmethod
    def from_dict(vals: dict[str, Fraction | int], dagger=0) -> "ValuationData":
        v = [Fraction(0)] * 70
        for key, val in vals.items():
            v[QUAD_INDEX[_canon_set(key)]] = Fraction(val)
        return ValuationData(tuple(v), Fraction(dagger))

    def __getitem__(self, key: str) -> Fraction:
        return self.plucker[QUAD_INDEX[_canon_set(key)]]

    def __add__(self, other: "ValuationData") -> "ValuationData":
        return ValuationData(
            tuple(a + b for a, b in zip(self.plucker, other.plucker)),
            self.dagger + other.dagger,
        )

    def __sub__(self, other: "ValuationData") -> "ValuationData":
        return ValuationData(
            tuple(a - b for a, b in zip(self.plucker, other.plucker)),
            self.dagger - other.dagger,
        )

    def __rmul__(self, c) -> "ValuationData":
        c = Fraction(c)
        return ValuationData(tuple(c * a for a in self.plucker), c * self.dagger)

    def max(self, other: "ValuationData") -> "ValuationData":
        return ValuationData(
            tuple(max(a, b) for a, b in zip(self.plucker, other.plucker)),
            max(self.dagger, other.dagger),
        )

    def nonnegative(self) -> bool:
        return all(a >= 0 for a in self.plucker) and self.dagger >= 0

    def is_zero(self) -> bool:
        return not any(self.plucker) and not self.dagger

    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.plucker) if a)

    def to_json(self) -> dict:
        pl = {QUADRUPLES[i]: str(a) for i, a in enumerate(self.plucker) if a}
        return {"plucker": pl, "dagger": str(self.dagger)}

    @staticmethod
    def from_json(obj: dict) -> "ValuationData":
        vals = {k: Fraction(v) for k, v in obj.get("plucker", {}).items()}
        return ValuationData.from_dict(vals, Fraction(obj.get("dagger", "0")))


def elementary_vector(kind: str, T: str = "") -> ValuationData:
    """Coincidence vector: points of T colliding (pt), on a line (ln), on a
    plane (pln), or the whole octad on a twisted cubic (tc)."""
    if kind == "tc":
        return ValuationData((Fraction(0),) * 70, Fraction(1))
    drop = {"pt": 1, "ln": 2, "pln": 3}[kind]
    T = _canon_set(T)
    if not T:
        raise ValueError("empty support set")
    vals = tuple(
        Fraction(max(0, sum(c in T for c in q) - drop)) for q in QUADRUPLES
    )
    return ValuationData(vals)


def _pt(T):
    return elementary_vector("pt", T)


def _ln(T):
    return elementary_vector("ln", T)


def _pln(T):
    return elementary_vector("pln", T)


# ---------------------------------------------------------------------------
# block kinds, labelling canonicalization, and valuation formulas

KINDS = (
    "alpha1a", "alpha1b", "alpha2a", "alpha2b",
    "chi1a", "chi1b", "chi1c", "chi2a", "chi2b", "chi2c",
    "phi1a", "phi1b", "phi2a", "phi2b", "phi2c", "phi3a", "phi3b",
    "tcu", "line",
)

FAMILY = {k: ("alpha1" if k.startswith("alpha1") else
              "alpha2" if k.startswith("alpha2") else
              "chi1" if k.startswith("chi1") else
              "chi2" if k.startswith("chi2") else
              "phi1" if k.startswith("phi1") else
              "phi2" if k.startswith("phi2") else
              "phi3" if k.startswith("phi3") else k)
          for k in KINDS}


@dataclass(frozen=True)
class Block:
    """A labelled building block; equality follows the valuation vector."""

    kind: str
    label: tuple
    auxiliary: bool = False

    def valuation(self) -> ValuationData:
        return _block_valuation(self.kind, self.label)

    def picture(self) -> "PictureElement":
        return PictureElement(FAMILY[self.kind], _picture_label(self.kind, self.label))

    def text(self) -> str:
        return _block_text(self.kind, self.label)

    def __repr__(self):
        star = "*" if self.auxiliary else ""
        return f"<{self.text()}{star}>"


def _canon_label(kind: str, parts) -> tuple:
    """Normalize kind-specific labelling; see Table-1 symmetries."""
    if kind in ("alpha1a", "alpha1b"):
        (ab,) = parts
        return (_canon_set(ab),)
    if kind == "alpha2a":
        (abcd,) = parts
        abcd = _canon_set(abcd)
        return (abcd if "A" in abcd else _complement(abcd),)
    if kind == "alpha2b":
        (abcd,) = parts
        return (_canon_set(abcd),)
    if kind in ("chi1a", "chi1b"):
        ab, t1, t2 = parts
        return (_canon_set(ab),) + tuple(sorted((_canon_set(t1), _canon_set(t2))))
    if kind == "chi1c":
        ab, t1, t2 = parts
        return (_canon_set(ab), _canon_set(t1), _canon_set(t2))
    if kind in ("chi2a", "chi2b", "chi2c"):
        (abc,) = parts
        return (_canon_set(abc),)
    if kind == "phi1a":
        ab, cd, ef, gh = parts
        return (_canon_set(ab), _canon_set(cd)) + tuple(
            sorted((_canon_set(ef), _canon_set(gh))))
    if kind == "phi1b":
        ab, cd, ef, gh = parts
        return tuple(sorted((_canon_set(ab), _canon_set(cd)))) + tuple(
            sorted((_canon_set(ef), _canon_set(gh))))
    if kind == "phi2a":
        t1, t2 = parts
        return tuple(sorted((_canon_set(t1), _canon_set(t2))))
    if kind in ("phi2b", "phi2c"):
        t1, t2 = parts
        return (_canon_set(t1), _canon_set(t2))
    if kind in ("phi3a", "phi3b", "line"):
        (abcd,) = parts
        return (_canon_set(abcd),)
    if kind == "tcu":
        return ()
    raise ValueError(f"unknown kind {kind!r}")


def block(kind: str, *parts, auxiliary: bool = False) -> Block:
    return Block(kind, _canon_label(kind, parts), auxiliary)


@lru_cache(maxsize=None)
def _block_valuation(kind: str, label: tuple) -> ValuationData:
    if kind == "alpha1a":
        (ab,) = label
        return _pt(ab)
    if kind == "alpha1b":
        (ab,) = label
        return _pln(_complement(ab))
    if kind == "alpha2a":
        (abcd,) = label
        return _pln(abcd) + _pln(_complement(abcd))
    if kind == "alpha2b":
        (abcd,) = label
        return _pln(abcd) + _pt(abcd)
    if kind == "chi1a":
        ab, t1, t2 = label
        return (_ln(t1) + _ln(t2)).max(_pln(t1 + t2))
    if kind == "chi1b":
        ab, t1, t2 = label
        return _pt(ab).max(_pln(ab + t1) + _pln(ab + t2))
    if kind == "chi1c":
        ab, t1, t2 = label
        return (_ln(ab + t1) + _ln(t1)).max(_pt(t1))
    if kind == "chi2a":
        (abc,) = label
        rest = _complement(abc)
        return _ln(rest) + _pln(rest)
    if kind == "chi2b":
        (abc,) = label
        return _ln(abc) + _pt(abc)
    if kind == "chi2c":
        (abc,) = label
        return _ln(abc) + _pln(_complement(abc))
    if kind == "phi1a":
        ab, cd, ef, gh = label
        return _ln(ab + ef) + _ln(ab + gh) + _pln(ab + cd) + _pln(ef + gh)
    if kind == "phi1b":
        ab, cd, ef, gh = label
        return (_pt(ab) + _pt(cd)).max(_pln(ab + cd + ef) + _pln(ab + cd + gh))
    if kind == "phi2a":
        t1, t2 = label
        de = _complement(t1 + t2)
        return (_ln(t1) + _ln(t2)).max(_pln(t1 + de) + _pln(de + t2))
    if kind == "phi2b":
        t1, t2 = label
        d, e = _complement(t1 + t2)
        return _pt(d + e) + _ln(t1 + d) + _ln(t1 + e)
    if kind == "phi2c":
        t1, t2 = label
        d, e = _complement(t1 + t2)
        return _ln(t1 + d) + _ln(t1 + e) + _pln(t1 + t2)
    if kind == "phi3a":
        (abcd,) = label
        return _ln(abcd) + _pln(abcd) + _pln(_complement(abcd))
    if kind == "phi3b":
        (abcd,) = label
        return _pt(abcd) + _ln(abcd) + _pln(abcd)
    if kind == "tcu":
        return elementary_vector("tc")
    if kind == "line":
        (abcd,) = label
        return _ln(abcd)
    raise ValueError(f"unknown kind {kind!r}")


def block_valuation(b: Block) -> ValuationData:
    return b.valuation()


def _block_text(kind: str, label: tuple) -> str:
    fam = FAMILY[kind]
    var = kind[len(fam):]
    if fam == "alpha1":
        return f"alpha1{var}[{label[0]}]"
    if fam == "alpha2":
        if var == "a":
            return f"alpha2a[{label[0]}|{_complement(label[0])}]"
        return f"alpha2b[{label[0]}]"
    if fam == "chi1":
        return f"chi1{var}[{label[0]}|{label[1]}|{label[2]}]"
    if fam == "chi2":
        return f"chi2{var}[{label[0]}]"
    if fam == "phi1":
        return f"phi1{var}[{label[0]}|{label[1]}||{label[2]}|{label[3]}]"
    if fam == "phi2":
        return f"phi2{var}[{label[0]}|{label[1]}]"
    if fam == "phi3":
        return f"phi3{var}[{label[0]}]"
    if kind == "line":
        return f"line[{label[0]}]"
    return "tcu"


# ---------------------------------------------------------------------------
# picture classes


@dataclass(frozen=True)
class PictureElement:
    """Coordinate-independent class of a block, with its labelling."""

    family: str
    label: tuple

    def text(self) -> str:
        f, l = self.family, self.label
        if f == "alpha1":
            return f"alpha1[{l[0]}]"
        if f == "alpha2":
            return f"alpha2[{l[0]}|{_complement(l[0])}]"
        if f == "chi1":
            return f"chi1[{l[0]}|{l[1]}|{l[2]}]"
        if f == "chi2":
            return f"chi2[{l[0]}]"
        if f == "phi1":
            return f"phi1[{l[0][0]}|{l[0][1]}||{l[1][0]}|{l[1][1]}]"
        if f == "phi2":
            return f"phi2[{l[0]}|{l[1]}]"
        if f == "phi3":
            return f"phi3[{l[0]}|{_complement(l[0])}]"
        if f == "line":
            return f"line[{l[0]}|{_complement(l[0])}]"
        return "tcu"

    @property
    def hyperelliptic(self) -> bool:
        return self.family in ("phi1", "phi2", "phi3", "line", "tcu")

    def relabel(self, perm: dict[str, str]) -> "PictureElement":
        def m(s):
            return _canon_set(perm.get(c, c) for c in s)

        f, l = self.family, self.label
        if f in ("alpha1", "chi2"):
            return PictureElement(f, (m(l[0]),))
        if f in ("alpha2", "phi3", "line"):
            x = m(l[0])
            return PictureElement(f, (x if "A" in x else _complement(x),))
        if f == "chi1":
            return PictureElement(f, (m(l[0]),) + tuple(sorted((m(l[1]), m(l[2])))))
        if f == "phi1":
            sides = frozenset(
                frozenset((m(a), m(b))) for a, b in l
            )
            return PictureElement(f, _phi1_label(sides))
        if f == "phi2":
            return PictureElement(f, tuple(sorted((m(l[0]), m(l[1])))))
        return self

    def __repr__(self):
        return f"pic<{self.text()}>"


def _phi1_label(sides) -> tuple:
    """Canonical label for a phi1 class: two unordered sides, each an
    unordered pair of letter-pairs; sides ordered by the pair containing A."""
    s = [tuple(sorted(side)) for side in sides]
    s.sort(key=lambda side: min(side))
    return tuple(s)


def _picture_label(kind: str, label: tuple) -> tuple:
    fam = FAMILY[kind]
    if fam == "alpha1":
        return (label[0],)
    if fam == "alpha2":
        x = label[0] if "A" in label[0] else _complement(label[0])
        return (x,)
    if fam == "chi1":
        return (label[0],) + tuple(sorted(label[1:]))
    if fam == "chi2":
        return (label[0],)
    if fam == "phi1":
        ab, cd, ef, gh = label
        return _phi1_label({frozenset((ab, cd)), frozenset((ef, gh))})
    if fam == "phi2":
        return tuple(sorted(label))
    if fam == "phi3":
        x = label[0] if "A" in label[0] else _complement(label[0])
        return (x,)
    if kind == "line":
        x = label[0] if "A" in label[0] else _complement(label[0])
        return (x,)
    return ()


# ---------------------------------------------------------------------------
# associated subspaces and subsets


@lru_cache(maxsize=None)
def picture_subspace(elem: PictureElement) -> Subspace:
    """Subspace of a non-hyperelliptic-subset picture class."""
    f, l = elem.family, elem.label
    if f == "alpha1":
        return span(l[0])
    if f == "alpha2":
        return span(l[0])
    if f == "chi1":
        ab, t1, t2 = l
        return span(ab, ab[0] + t1)
    if f == "chi2":
        a, b, c = l[0]
        return span(a + b, a + c)
    if f == "phi1":
        (p1, p2), (q1, q2) = l
        return span(p1, p2, p1[0] + p2[0] + q1)
    if f == "phi2":
        t1, t2 = l
        de = _complement(t1 + t2)
        return span(t1[0] + t1[1], t1[0] + t1[2], de)
    if f == "phi3":
        a, b, c, d = l[0]
        return span(a + b, a + c, a + d)
    raise ValueError(f"{elem} has a subset, not a subspace")


@lru_cache(maxsize=None)
def hyperelliptic_subset(elem: PictureElement) -> frozenset[E3Element]:
    if elem.family == "tcu":
        out = {e3("")}
        for a, b in itertools.combinations(LETTERS, 2):
            out.add(e3(a + b))
        return frozenset(out)
    if elem.family == "line":
        t1 = elem.label[0]
        t2 = _complement(t1)
        out = {e3("")}
        for k1 in range(5):
            k2 = k1 - 2
            for kk in (k1 - 2, k1 + 2):
                if 0 <= kk <= 4:
                    for s in itertools.combinations(t1, k1):
                        for t in itertools.combinations(t2, kk):
                            out.add(e3("".join(s) + "".join(t)))
        return frozenset(out)
    raise ValueError(f"{elem} has a subspace, not a subset")


def block_subspace(b: Block):
    """Subspace (alpha/chi/phi) or explicit subset (tcu/line) of a block."""
    p = b.picture()
    if p.family in ("tcu", "line"):
        return hyperelliptic_subset(p)
    return picture_subspace(p)


# ---------------------------------------------------------------------------
# auxiliary blocks and compatibility


def auxiliary_blocks(b: Block) -> frozenset[Block]:
    """The auxiliary blocks attached to a phi-block."""
    fam = FAMILY[b.kind]
    if fam == "phi1":
        ab, cd, ef, gh = b.label
        return frozenset({
            block("alpha2a", ab + cd, auxiliary=True),
            block("line", ab + ef, auxiliary=True),
            block("line", ab + gh, auxiliary=True),
            block("line", cd + ef, auxiliary=True),
            block("line", cd + gh, auxiliary=True),
        })
    if fam == "phi2":
        t1, t2 = b.label
        d, e = _complement(t1 + t2)
        return frozenset({
            block("alpha1a", d + e, auxiliary=True),
            block("line", t1 + d, auxiliary=True),
            block("line", t1 + e, auxiliary=True),
            block("line", d + t2, auxiliary=True),
            block("line", e + t2, auxiliary=True),
        })
    if fam == "phi3":
        abcd = b.label[0]
        return frozenset({
            block("alpha2a", abcd, auxiliary=True),
            block("tcu", auxiliary=True),
            block("line", abcd, auxiliary=True),
            block("line", _complement(abcd), auxiliary=True),
        })
    raise NotPhi(f"{b} is not a phi-block")


@lru_cache(maxsize=None)
def _self_intersection(X: Subspace) -> Subspace:
    return X.intersection(orthogonal_complement(X))


@lru_cache(maxsize=None)
def _subspaces_compatible(X: Subspace, Y: Subspace) -> bool:
    if X == Y:
        return True
    Yp = orthogonal_complement(Y)
    if not (X <= Y or Y <= X or X <= Yp):
        return False
    if X <= _self_intersection(Y) or Y <= _self_intersection(X):
        return False
    return True


@lru_cache(maxsize=None)
def _subspace_elements(X: Subspace) -> frozenset[E3Element]:
    return X.elements()


def elements_compatible(p: PictureElement, q: PictureElement) -> bool:
    """Pairwise compatibility of picture classes (subspace conditions plus
    hyperelliptic containment)."""
    if (p.family, p.label) > (q.family, q.label):
        p, q = q, p
    return _elements_compatible(p, q)


@lru_cache(maxsize=None)
def _elements_compatible(p: PictureElement, q: PictureElement) -> bool:
    if p == q:
        return True
    ph, qh = p.family in ("line", "tcu"), q.family in ("line", "tcu")
    if ph and qh:
        return False
    if ph or qh:
        sub, hyp = (q, p) if ph else (p, q)
        H = hyperelliptic_subset(hyp)
        return all(x in H for x in _subspace_elements(picture_subspace(sub)))
    return _subspaces_compatible(picture_subspace(p), picture_subspace(q))


def pair_compatible(b1: Block, b2: Block) -> bool:
    """Compatibility of two labelled blocks.

    Auxiliary blocks are compatible with their parent phi-block by
    convention; blocks inducing the same picture are compatible.
    """
    p1, p2 = b1.picture(), b2.picture()
    if p1 == p2:
        return True
    for parent, child in ((b1, b2), (b2, b1)):
        if FAMILY[parent.kind].startswith("phi"):
            aux_pics = {x.picture() for x in auxiliary_blocks(parent)}
            if (child.picture() in aux_pics):
                return True
    return elements_compatible(p1, p2)


def picture_compatible(elems) -> bool:
    elems = list(elems)
    return all(
        elements_compatible(elems[i], elems[j])
        for i in range(len(elems))
        for j in range(i + 1, len(elems))
    )


# ---------------------------------------------------------------------------
# the candidate list


@lru_cache(maxsize=None)
def enumerate_labelled_blocks() -> tuple[Block, ...]:
    """All distinct labelled alpha/chi/phi/line valuation vectors.

    The composition reaching 4949 distinct vectors is: every labelling of the
    alpha (161), chi (1288) and phi (3430) kinds, plus the 70 line vectors;
    the tcu vector is excluded (it is carried by the dagger coordinate and
    handled separately).
    """
    out: list[Block] = []
    pairs = ["".join(c) for c in itertools.combinations(LETTERS, 2)]
    quads = list(QUADRUPLES)
    triples = ["".join(c) for c in itertools.combinations(LETTERS, 3)]

    for ab in pairs:
        out.append(block("alpha1a", ab))
        out.append(block("alpha1b", ab))
    for q in quads:
        if "A" in q:
            out.append(block("alpha2a", q))
        out.append(block("alpha2b", q))

    for ab in pairs:
        rest = _complement(ab)
        seen = set()
        for t1 in itertools.combinations(rest, 3):
            t1 = "".join(t1)
            t2 = "".join(c for c in rest if c not in t1)
            out.append(block("chi1c", ab, t1, t2))
            key = frozenset((t1, t2))
            if key not in seen:
                seen.add(key)
                out.append(block("chi1a", ab, t1, t2))
                out.append(block("chi1b", ab, t1, t2))
    for t in triples:
        out.append(block("chi2a", t))
        out.append(block("chi2b", t))
        out.append(block("chi2c", t))

    for ab in pairs:
        rest = _complement(ab)
        for cd in itertools.combinations(rest, 2):
            cd = "".join(cd)
            four = _complement(ab + cd)
            e = four[0]
            for f in four[1:]:
                ef = e + f
                gh = "".join(c for c in four if c not in ef)
                out.append(block("phi1a", ab, cd, ef, gh))
                if ab < cd:
                    out.append(block("phi1b", ab, cd, ef, gh))
    for t1 in triples:
        for t2 in itertools.combinations(_complement(t1), 3):
            t2 = "".join(t2)
            out.append(block("phi2b", t1, t2))
            out.append(block("phi2c", t1, t2))
            if t1 < t2:
                out.append(block("phi2a", t1, t2))
    for q in quads:
        out.append(block("phi3a", q))
        out.append(block("phi3b", q))

    for q in quads:
        out.append(block("line", q))

    return tuple(out)
