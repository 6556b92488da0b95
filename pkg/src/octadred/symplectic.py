"""The 6-dimensional symplectic F2-space of even letter-subsets mod complement.

Elements are even-cardinality subsets of {A,...,H} modulo I ~ complement(I),
with symmetric-difference addition and pairing <I,J> = |I & J| mod 2.  The
space carries commuting actions of S8 (letter permutation) and of the full
symplectic group Sp(6,2), the latter generated by S8 together with the
involutions attached to partitions of the letters into two 4-sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

LETTERS = "ABCDEFGH"
FULL = 0xFF

__all__ = [
    "LETTERS", "E3Element", "Subspace", "SpElement", "InvalidElement",
    "InvalidPartition", "e3", "zero", "pairing", "span", "orthogonal_complement",
    "is_merotropic", "s8_element", "s8_apply", "cremona_element",
    "sp_group_generators", "group_closure", "all_partitions",
    "merotropic_pairs", "merotropic_classes",
]


class InvalidElement(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _canon_mask(mask: int) -> int:
    """Representative of {I, complement}: |I| <= 4, and A in I when |I| = 4."""
    pc = _popcount(mask)
    if pc % 2:
        raise InvalidElement(f"odd-cardinality subset {mask:#x}")
    if pc > 4 or (pc == 4 and not mask & 1):
        mask ^= FULL
    return mask


def _mask_of(letters: str) -> int:
    mask = 0
    for ch in letters:
        i = LETTERS.find(ch.upper())
        if i < 0:
            raise InvalidElement(f"unknown letter {ch!r}")
        if mask >> i & 1:
            raise InvalidElement(f"repeated letter {ch!r} in {letters!r}")
        mask |= 1 << i
    return mask


@dataclass(frozen=True, order=True)
class E3Element:
    """An even subset of {A..H} mod complement, stored canonically."""

    mask: int

    def __post_init__(self):
        if self.mask != _canon_mask(self.mask):
            raise InvalidElement(f"non-canonical mask {self.mask:#x}")

    def __add__(self, other: "E3Element") -> "E3Element":
        return E3Element(_canon_mask(self.mask ^ other.mask))

    def __bool__(self) -> bool:
        return self.mask != 0

    @property
    def letters(self) -> str:
        return "".join(ch for i, ch in enumerate(LETTERS) if self.mask >> i & 1)

    def __repr__(self):
        return f"e3({self.letters!r})" if self.mask else "e3('')"


def e3(letters: str) -> E3Element:
    """Element from a letter string, e.g. e3("AB"); "" is the zero vector."""
    return E3Element(_canon_mask(_mask_of(letters)))


zero = e3("")


def pairing(u: E3Element, v: E3Element) -> int:
    return _popcount(u.mask & v.mask) & 1


# Fixed ordered basis of the space; any symplectic-compatible choice works,
# and the whole package (including all serialized matrices) uses this one.
BASIS = tuple(e3(s) for s in ("AB", "AC", "AD", "AE", "AF", "AG"))
DIM = 6

_COORDS: dict[int, int] = {}
for _c in range(1 << DIM):
    _m = 0
    for _i in range(DIM):
        if _c >> _i & 1:
            _m ^= BASIS[_i].mask
    _COORDS[_canon_mask(_m)] = _c

_MASKS = {c: m for m, c in _COORDS.items()}

# Gram matrix rows of the pairing in coordinates: row i as a 6-bit int.
_GRAM = tuple(
    sum(pairing(BASIS[i], BASIS[j]) << j for j in range(DIM)) for i in range(DIM)
)


def coords(x: E3Element) -> int:
    return _COORDS[x.mask]


def from_coords(c: int) -> E3Element:
    return E3Element(_MASKS[c])


def _pair_coords(a: int, b: int) -> int:
    acc = 0
    for i in range(DIM):
        if a >> i & 1:
            acc ^= _GRAM[i] & b
    return _popcount(acc) & 1


def _rref(rows) -> tuple[int, ...]:
    """Reduced echelon form of 6-bit row vectors; unique per span."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    # back-substitute to full reduction
    for i in range(len(basis)):
        for j in range(len(basis)):
            if i != j and basis[j] ^ basis[i] < basis[j]:
                basis[j] ^= basis[i]
    return tuple(sorted(basis, reverse=True))


@dataclass(frozen=True)
class Subspace:
    """Subspace of the 6-dim space, as reduced-echelon coordinate rows.

    Comparison operators mean containment, not a total order.
    """

    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __contains__(self, x: E3Element) -> bool:
        c = coords(x)
        for b in self.rows:
            c = min(c, c ^ b)
        return c == 0

    def basis(self) -> tuple[E3Element, ...]:
        return tuple(from_coords(r) for r in self.rows)

    def elements(self) -> frozenset[E3Element]:
        out = set()
        for sel in range(1 << self.dim):
            c = 0
            for i in range(self.dim):
                if sel >> i & 1:
                    c ^= self.rows[i]
            out.add(from_coords(c))
        return frozenset(out)

    def __le__(self, other: "Subspace") -> bool:
        for r in self.rows:
            for b in other.rows:
                r = min(r, r ^ b)
            if r:
                return False
        return True

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def intersection(self, other: "Subspace") -> "Subspace":
        return Subspace(_rref([c for c in _subspace_coords(self) if _in_rows(c, other.rows)]))

    def __repr__(self):
        return "span(%s)" % ", ".join(repr(b.letters) for b in self.basis())


def _in_rows(c: int, rows) -> bool:
    for b in rows:
        c = min(c, c ^ b)
    return c == 0


def _subspace_coords(s: Subspace):
    for sel in range(1 << s.dim):
        c = 0
        for i in range(s.dim):
            if sel >> i & 1:
                c ^= s.rows[i]
        yield c


def span(*gens: E3Element | str) -> Subspace:
    elems = [e3(g) if isinstance(g, str) else g for g in gens]
    return Subspace(_rref([coords(x) for x in elems]))


E3_FULL = Subspace(_rref([1 << i for i in range(DIM)]))
ZERO_SPACE = Subspace(())


@lru_cache(maxsize=None)
def orthogonal_complement(s: Subspace) -> Subspace:
    rows = []
    for r in s.rows:
        g = 0
        for i in range(DIM):
            if r >> i & 1:
                g ^= _GRAM[i]
        rows.append(g)
    # nullspace of the matrix with the given rows
    pivots = {r.bit_length() - 1: r for r in _rref(rows)}
    free = [i for i in range(DIM) if i not in pivots]
    null = []
    for f in free:
        v = 1 << f
        for p in sorted(pivots, reverse=True):
            if _popcount(pivots[p] & v) & 1:
                v ^= 1 << p
        null.append(v)
    return Subspace(_rref(null))


def is_merotropic(s: Subspace) -> bool:
    """Not isotropic of dimension > 1."""
    if s.dim <= 1:
        return True
    bas = s.basis()
    return any(
        pairing(bas[i], bas[j])
        for i in range(len(bas))
        for j in range(i + 1, len(bas))
    )


# ---------------------------------------------------------------------------
# group elements


@dataclass(frozen=True)
class SpElement:
    """Linear map preserving the pairing; columns in the fixed basis."""

    cols: tuple[int, ...]

    def apply_coords(self, c: int) -> int:
        out = 0
        for i in range(DIM):
            if c >> i & 1:
                out ^= self.cols[i]
        return out

    def __call__(self, x):
        if isinstance(x, E3Element):
            return from_coords(self.apply_coords(coords(x)))
        if isinstance(x, Subspace):
            return Subspace(_rref([self.apply_coords(r) for r in x.rows]))
        raise TypeError(f"cannot apply SpElement to {type(x)!r}")

    def __mul__(self, other: "SpElement") -> "SpElement":
        return SpElement(tuple(self.apply_coords(c) for c in other.cols))

    def is_symplectic(self) -> bool:
        for i in range(DIM):
            for j in range(DIM):
                if _pair_coords(self.cols[i], self.cols[j]) != _pair_coords(1 << i, 1 << j):
                    return False
        return True

    def inverse(self) -> "SpElement":
        # Gauss-Jordan on (M | I) with columns as rows of the transpose
        m = list(self.cols)
        inv = [1 << i for i in range(DIM)]
        # treat cols as a column matrix: solve M X = I columnwise
        out = []
        for i in range(DIM):
            out.append(_solve_cols(m, 1 << i))
        return SpElement(tuple(out))


def _solve_cols(cols, target):
    """Solve sum of chosen cols = target; return chooser bitmask."""
    rows = list(cols)
    sel = [1 << i for i in range(DIM)]
    t = target
    chosen = 0
    piv = []
    rows2 = rows[:]
    sel2 = sel[:]
    for bit in range(DIM - 1, -1, -1):
        pi = next((k for k in range(len(rows2)) if rows2[k] >> bit & 1 and rows2[k].bit_length() - 1 == bit), None)
        if pi is None:
            continue
        piv.append((bit, rows2[pi], sel2[pi]))
        for k in range(len(rows2)):
            if k != pi and rows2[k] >> bit & 1:
                rows2[k] ^= rows2[pi]
                sel2[k] ^= sel2[pi]
    # reduce target
    for bit, r, s in piv:
        if t >> bit & 1:
            t ^= r
            chosen ^= s
    if t:
        raise ValueError("singular matrix")
    return chosen


IDENTITY = SpElement(tuple(1 << i for i in range(DIM)))


def s8_element(perm: dict[str, str] | str) -> SpElement:
    """Symplectic element of a letter permutation.

    Accepts a mapping {old: new} or a string of 8 letters giving the images
    of A..H in order.
    """
    if isinstance(perm, str):
        perm = dict(zip(LETTERS, perm.upper()))
    img = {LETTERS.index(k.upper()): LETTERS.index(v.upper()) for k, v in perm.items()}
    for i in range(8):
        img.setdefault(i, i)
    if sorted(img.values()) != list(range(8)):
        raise InvalidElement(f"not a permutation: {perm!r}")
    cols = []
    for b in BASIS:
        m = 0
        for i in range(8):
            if b.mask >> i & 1:
                m |= 1 << img[i]
        cols.append(coords(E3Element(_canon_mask(m))))
    g = SpElement(tuple(cols))
    assert g.is_symplectic()
    return g


def s8_apply(perm, x):
    """Letterwise relabelling of an element or subspace."""
    return s8_element(perm)(x)


def _partition_key(part) -> tuple[str, str]:
    """Normalize a partition spec to (side containing A, other side), sorted."""
    if isinstance(part, str):
        halves = part.replace(" ", "").split("|")
        if len(halves) != 2:
            raise InvalidPartition(f"expected 'ABCD|EFGH', got {part!r}")
        sides = [frozenset(h.upper()) for h in halves]
    else:
        sides = [frozenset(s) for s in part]
    if len(sides) != 2 or sides[0] | sides[1] != set(LETTERS) or len(sides[0]) != 4 or sides[0] & sides[1]:
        raise InvalidPartition(f"not a 4|4 partition of A..H: {part!r}")
    if "A" not in sides[0]:
        sides.reverse()
    return "".join(sorted(sides[0])), "".join(sorted(sides[1]))


def all_partitions() -> list[tuple[str, str]]:
    """The 35 partitions of {A..H} into two 4-sets, A-side first."""
    out = []
    for rest in itertools.combinations(LETTERS[1:], 3):
        side = "A" + "".join(rest)
        other = "".join(c for c in LETTERS if c not in side)
        out.append((side, other))
    return out


@lru_cache(maxsize=None)
def cremona_element(part) -> SpElement:
    """Involution attached to a 4|4 letter partition.

    With (i,j,k,l) the alphabetical A-side and (p,q,r,s) the other side, the
    map swaps kr <-> ijlr in the symplectic basis {ij, pq, kr, il, ps, ijlr}
    and fixes the other four basis vectors.
    """
    i, j, k, l = _partition_key(part)[0]
    p, q, r, s = _partition_key(part)[1]
    b = [e3(i + j), e3(p + q), e3(k + r), e3(i + l), e3(p + s), e3(i + j + l + r)]
    cm = [coords(x) for x in b]
    # columns of the basis-change matrix C: e_i -> b_i
    perm_cols = [cm[0], cm[1], cm[5], cm[3], cm[4], cm[2]]  # swap slots 3 and 6
    c_mat = SpElement(tuple(cm))
    m_b = SpElement(tuple(perm_cols))  # C * M_B  (image of b_i directly)
    g = m_b * c_mat.inverse()
    assert g.is_symplectic(), part
    assert (g * g).cols == IDENTITY.cols, part
    return g


def sp_group_generators() -> tuple[SpElement, ...]:
    """Adjacent letter transpositions plus one Cremona involution."""
    gens = []
    for i in range(7):
        q = list(LETTERS)
        q[i], q[i + 1] = q[i + 1], q[i]
        gens.append(s8_element("".join(q)))
    gens.append(cremona_element("ABCD|EFGH"))
    return tuple(gens)


def group_closure(gens) -> set[tuple[int, ...]]:
    """All group elements (as column tuples) generated by gens, via BFS."""
    gens = [g if isinstance(g, SpElement) else SpElement(g) for g in gens]
    seen = {IDENTITY.cols}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = g * h
                if prod.cols not in seen:
                    seen.add(prod.cols)
                    nxt.append(prod)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# merotropic classification


@lru_cache(maxsize=None)
def merotropic_pairs() -> tuple[tuple[Subspace, Subspace], ...]:
    """All 1029 pairs (X, X-perp), dim X <= dim X-perp, X merotropic, 1 <= dim X <= 3."""
    seen = set()
    out = []
    # BFS over subspaces by dimension
    layer = {ZERO_SPACE}
    for _ in range(3):
        nxt = set()
        for s in layer:
            for c in range(1, 1 << DIM):
                x = from_coords(c)
                if x in s:
                    continue
                nxt.add(Subspace(_rref(list(s.rows) + [c])))
        layer = nxt
        for s in layer:
            if is_merotropic(s) and s.rows not in seen:
                comp = orthogonal_complement(s)
                if s.dim == 3 and not is_merotropic(comp):
                    continue
                seen.add(s.rows)
                if s.dim == 3:
                    seen.add(comp.rows)
                out.append((s, comp))
    return tuple(sorted(out, key=lambda p: (p[0].dim, p[0].rows)))


def merotropic_classes():
    """Orbit representatives of merotropic subspaces up to S8 and complement."""
    gens = [s8_element("".join(q)) for q in
            (list(LETTERS[:i]) + [LETTERS[i + 1], LETTERS[i]] + list(LETTERS[i + 2:])
             for i in range(7))]
    pool = {ZERO_SPACE.rows} | {p[0].rows for p in merotropic_pairs()}
    classes = []
    remaining = set(pool)
    while remaining:
        start = Subspace(min(remaining))
        orbit = {start.rows}
        frontier = [start]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    for t in (g(s), orthogonal_complement(g(s))):
                        tt = t if t.dim <= 3 else orthogonal_complement(t)
                        if tt.dim == 3 or tt.rows in pool or tt.dim == 0:
                            if tt.rows not in orbit and tt.rows in remaining:
                                orbit.add(tt.rows)
                                nxt.append(tt)
            frontier = nxt
        classes.append(start)
        remaining -= orbit
    return classes
