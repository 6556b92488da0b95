"""Exact-arithmetic octads over Q and their p-adic valuation data.

All coordinates are rationals and every computation is exact; the base
prime is odd.  Configurations over proper extension fields are not
representable and must be rejected by callers, never approximated.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from octadred.blocks import QUADRUPLES, QUAD_INDEX, ValuationData, elementary_vector
from octadred.symplectic import LETTERS

__all__ = [
    "Octad", "DegenerateOctad", "NotGeneral", "NonGenericCremona",
    "InvalidRescale", "UnsupportedResidueChar", "val_p", "eighth_point",
    "pgl_rescale", "valuation_normal_form", "lattice_rank_check",
    "cayley_instances",
]


class DegenerateOctad(ValueError):
    pass


class NotGeneral(ValueError):
    pass


class NonGenericCremona(ValueError):
    pass


class InvalidRescale(ValueError):
    pass


class UnsupportedResidueChar(ValueError):
    pass


def val_p(x: Fraction | int, p: int) -> int:
    """Exact p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("valuation of zero")
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


Point = tuple[Fraction, Fraction, Fraction, Fraction]


def _det4(cols) -> Fraction:
    a = [list(c) for c in zip(*cols)]  # rows
    det = Fraction(1)
    n = 4
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        inv = 1 / a[i][i]
        for r in range(i + 1, n):
            if a[r][i]:
                f = a[r][i] * inv
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    return det


@dataclass(frozen=True)
class PGLTransform:
    """Invertible 4x4 rational matrix acting on column vectors."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __call__(self, pt: Point) -> Point:
        return tuple(sum(r[j] * pt[j] for j in range(4)) for r in self.rows)

    def det(self) -> Fraction:
        return _det4(tuple(zip(*self.rows)))


@dataclass(frozen=True)
class Octad:
    """Eight labelled points of P^3 with exact rational coordinates."""

    prime: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if self.prime == 2:
            raise UnsupportedResidueChar("residue characteristic 2 is not supported")
        if self.prime < 3 or not _is_prime(self.prime):
            raise UnsupportedResidueChar(f"{self.prime} is not an odd prime")
        if len(self.points) != 8 or any(len(c) != 4 for c in self.points):
            raise DegenerateOctad("an octad needs 8 points with 4 coordinates each")
        if any(not any(c) for c in self.points):
            raise DegenerateOctad("zero column")

    @staticmethod
    def make(prime: int, columns) -> "Octad":
        pts = tuple(tuple(Fraction(x) for x in col) for col in columns)
        return Octad(prime, pts)

    # -- normalization ----------------------------------------------------

    def normalize_points(self) -> "Octad":
        """Scale each column so its minimum coordinate valuation is 0."""
        cols = []
        for c in self.points:
            m = min(val_p(x, self.prime) for x in c if x)
            s = Fraction(self.prime) ** (-m)
            cols.append(tuple(x * s for x in c))
        return Octad(self.prime, tuple(cols))

    # -- Pluecker data -----------------------------------------------------

    def plucker(self, letters: str) -> Fraction:
        """Signed Pluecker coordinate for the letters in the given order."""
        idx = [LETTERS.index(c) for c in letters]
        sign = 1
        order = list(idx)
        for i in range(len(order)):
            for j in range(i + 1, len(order)):
                if order[i] > order[j]:
                    sign = -sign
        return sign * self._sorted_det("".join(sorted(letters)))

    @lru_cache(maxsize=None)
    def _sorted_det(self, quad: str) -> Fraction:
        cols = [self.points[LETTERS.index(c)] for c in quad]
        return _det4(cols)

    def plucker_valuations(self) -> dict[str, int]:
        """Valuations of the 70 Pluecker coordinates of the normalized octad."""
        o = self.normalize_points()
        vals = {}
        for q in QUADRUPLES:
            d = o._sorted_det(q)
            if d == 0:
                raise DegenerateOctad(f"quadruple {q} exactly coplanar")
            vals[q] = val_p(d, self.prime)
        return vals

    def valuation_data(self, dagger=None) -> ValuationData:
        vals = self.plucker_valuations()
        if dagger is None:
            from octadred.tcindex import twisted_cubic_index
            dagger = twisted_cubic_index(self)
        return ValuationData.from_dict(vals, Fraction(dagger))

    # -- Cayley relations --------------------------------------------------

    def is_cayley(self) -> bool:
        dets = {}
        for q in QUADRUPLES:
            d = self._sorted_det(q)
            if d == 0:
                return False
            dets[q] = d

        def p(s):
            sign = 1
            t = list(s)
            for i in range(4):
                for j in range(i + 1, 4):
                    if t[i] > t[j]:
                        sign = -sign
            return sign * dets["".join(sorted(s))]

        for left, right in cayley_instances():
            lhs = Fraction(1)
            rhs = Fraction(1)
            for q in left:
                lhs *= p(q)
            for q in right:
                rhs *= p(q)
            if lhs != rhs:
                return False
        return True

    # -- coordinate changes -------------------------------------------------

    def apply(self, t: PGLTransform) -> "Octad":
        return Octad(self.prime, tuple(t(c) for c in self.points)).normalize_points()

    def standardize(self, five) -> tuple["Octad", PGLTransform]:
        """Send the chosen 5 points to the standard simplex + unit point."""
        idx = [i if isinstance(i, int) else LETTERS.index(i) for i in five]
        if len(idx) != 5 or len(set(idx)) != 5:
            raise NotGeneral("need 5 distinct points")
        base = [self.points[i] for i in idx[:4]]
        if _det4(base) == 0:
            raise NotGeneral("first four points are coplanar")
        lam = _solve4(base, self.points[idx[4]])
        if any(x == 0 for x in lam):
            raise NotGeneral("fifth point lies on a face of the coordinate simplex")
        scaled = [tuple(x * l for x in c) for c, l in zip(base, lam)]
        t = PGLTransform(_invert4(scaled))
        return self.apply(t), t

    def permuted(self, perm: dict[str, str] | str) -> "Octad":
        """Relabel points: the point at letter L moves to label perm[L]."""
        if isinstance(perm, str):
            perm = dict(zip(LETTERS, perm.upper()))
        cols = [None] * 8
        for i, c in enumerate(LETTERS):
            cols[LETTERS.index(perm.get(c, c))] = self.points[i]
        return Octad(self.prime, tuple(cols))

    def cremona_apply(self, partition) -> "Octad":
        """Coordinate Cremona action attached to a 4|4 letter partition.

        Standardizes the side containing A to the coordinate simplex with the
        alphabetically-first point of the other side as unit point, then
        inverts every coordinate of the other side's four columns.
        """
        from octadred.symplectic import _partition_key
        side_a, side_b = _partition_key(partition)
        five = list(side_a) + [side_b[0]]
        o, _ = self.standardize(five)
        cols = list(o.points)
        for c in side_b:
            i = LETTERS.index(c)
            if any(x == 0 for x in cols[i]):
                raise NonGenericCremona(f"zero coordinate in column {c}")
            cols[i] = tuple(1 / x for x in cols[i])
        return Octad(self.prime, tuple(cols)).normalize_points()


def _solve4(cols, target) -> tuple[Fraction, ...]:
    """Solve sum_i x_i * cols[i] = target for 4 columns of length 4."""
    a = [[cols[j][r] for j in range(4)] + [target[r]] for r in range(4)]
    n = 4
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            raise NotGeneral("singular system")
        a[i], a[piv] = a[piv], a[i]
        inv = 1 / a[i][i]
        a[i] = [x * inv for x in a[i]]
        for r in range(n):
            if r != i and a[r][i]:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return tuple(a[r][4] for r in range(4))


def _invert4(cols) -> tuple[tuple[Fraction, ...], ...]:
    """Rows of the inverse of the matrix whose columns are given."""
    a = [[cols[j][r] for j in range(4)] + [Fraction(i == r) for i in range(4)]
         for r in range(4)]
    for i in range(4):
        piv = next((r for r in range(i, 4) if a[r][i]), None)
        if piv is None:
            raise NotGeneral("singular matrix")
        a[i], a[piv] = a[piv], a[i]
        inv = 1 / a[i][i]
        a[i] = [x * inv for x in a[i]]
        for r in range(4):
            if r != i and a[r][i]:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return tuple(tuple(row[4:]) for row in a)


# ---------------------------------------------------------------------------
# the 630 Cayley relations


@lru_cache(maxsize=None)
def cayley_instances() -> tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]:
    """Distinct permuted instances of the base relation

        p_ABCD p_ABEF p_CEGH p_DFGH = p_EFGH p_CDGH p_ABDF p_ABCE,

    returned with letters inside each quadruple in substitution order so sign
    conventions survive.  There are 630 of them.
    """
    base_left = ("ABCD", "ABEF", "CEGH", "DFGH")
    base_right = ("EFGH", "CDGH", "ABDF", "ABCE")
    seen = {}
    for perm in itertools.permutations(LETTERS):
        sub = dict(zip(LETTERS, perm))
        left = tuple("".join(sub[c] for c in q) for q in base_left)
        right = tuple("".join(sub[c] for c in q) for q in base_right)
        sig = _instance_signature(left, right)
        if sig not in seen:
            seen[sig] = (left, right)
    return tuple(seen.values())


def _sign_and_sort(q: str) -> tuple[int, str]:
    sign = 1
    t = list(q)
    for i in range(4):
        for j in range(i + 1, 4):
            if t[i] > t[j]:
                sign = -sign
    return sign, "".join(sorted(t))


def _instance_signature(left, right):
    ls = 1
    lq = []
    for q in left:
        s, qq = _sign_and_sort(q)
        ls *= s
        lq.append(qq)
    rs = 1
    rq = []
    for q in right:
        s, qq = _sign_and_sort(q)
        rs *= s
        rq.append(qq)
    sides = sorted([tuple(sorted(lq)), tuple(sorted(rq))])
    return (tuple(sides), ls * rs)


# ---------------------------------------------------------------------------
# the eighth base point of the net of quadrics through seven points


def _monomials(nvars: int, maxdeg: int):
    out = []
    for d in range(maxdeg + 1):
        for exps in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in exps:
                e[i] += 1
            out.append(tuple(e))
    return out


def _eval_mono(pt, e):
    r = Fraction(1)
    for x, k in zip(pt, e):
        r *= x ** k
    return r


def _nullspace_frac(rows, ncols):
    pivots = {}
    red = []
    for row in rows:
        row = list(row)
        for c, prow in pivots.items():
            if row[c]:
                f = row[c]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((c for c in range(ncols) if row[c]), None)
        if lead is not None:
            inv = 1 / row[lead]
            row = [x * inv for x in row]
            for c, prow in list(pivots.items()):
                if prow[lead]:
                    f = prow[lead]
                    pivots[c] = [x - f * y for x, y in zip(prow, row)]
            pivots[lead] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for c, prow in pivots.items():
            v[c] = -prow[f]
        basis.append(v)
    return basis


def eighth_point(prime: int, seven, rng: random.Random | None = None) -> Point:
    """The eighth base point of the net of quadrics through seven points.

    Seven points in general position lie on a unique regular octad satisfying
    the Cayley relations; this returns the missing point, exactly.  Uses the
    trace of multiplication operators on the 8-dimensional coordinate ring of
    the three-quadric intersection.
    """
    rng = rng or random.Random(7)
    seven = [tuple(Fraction(x) for x in pt) for pt in seven]
    for attempt in range(40):
        # random affine chart
        rows = [[Fraction(rng.randint(-5, 5)) for _ in range(4)] for _ in range(4)]
        if _det4(tuple(zip(*rows))) == 0:
            continue
        t = PGLTransform(tuple(tuple(r) for r in rows))
        pts = [t(p) for p in seven]
        if any(p[3] == 0 for p in pts):
            continue
        aff = [tuple(x / p[3] for x in p[:3]) for p in pts]
        monos2 = _monomials(3, 2)
        rows2 = [[_eval_mono(a, e) for e in monos2] for a in aff]
        quads = _nullspace_frac(rows2, len(monos2))
        if len(quads) != 3:
            continue
        res = _eighth_from_quadrics(aff, quads, monos2)
        if res is None:
            continue
        x8 = res + (Fraction(1),)
        back = PGLTransform(_invert4(tuple(zip(*rows))))
        cand = back(x8)
        if all(x == 0 for x in cand):
            continue
        return cand
    raise NotGeneral("could not find the eighth point; points may be degenerate")


def _eighth_from_quadrics(aff, quads, monos2):
    monos5 = _monomials(3, 5)
    mono_ix = {e: i for i, e in enumerate(monos5)}
    n5 = len(monos5)
    monos3 = _monomials(3, 3)

    # span of the ideal in degree <= 5: products (monomial deg<=3) * quadric
    rows = []
    for q in quads:
        for m in monos3:
            row = [Fraction(0)] * n5
            for coef, e in zip(q, monos2):
                if coef:
                    ee = tuple(a + b for a, b in zip(e, m))
                    row[mono_ix[ee]] += coef
            rows.append(row)

    # echelon with pivots on the highest-degree monomials first
    order = sorted(range(n5), key=lambda i: (sum(monos5[i]), monos5[i]), reverse=True)
    pivots = {}
    for row in rows:
        row = list(row)
        for c, prow in pivots.items():
            if row[c]:
                f = row[c]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((c for c in order if row[c]), None)
        if lead is not None:
            inv = 1 / row[lead]
            row = [x * inv for x in row]
            for c in list(pivots):
                if pivots[c][lead]:
                    f = pivots[c][lead]
                    pivots[c] = [x - f * y for x, y in zip(pivots[c], row)]
            pivots[lead] = row

    standard = [i for i in range(n5) if i not in pivots and sum(monos5[i]) <= 4]
    if len(standard) != 8:
        return None
    std_ix = {m: k for k, m in enumerate(standard)}

    def normal_form(col_index):
        """Normal form of a monomial as a vector on the standard monomials."""
        if col_index in pivots:
            prow = pivots[col_index]
            v = [Fraction(0)] * len(standard)
            for c in range(n5):
                if c != col_index and prow[c]:
                    if c not in std_ix:
                        # reduce recursively: row should already be reduced
                        return None
                    v[std_ix[c]] -= prow[c]
            return v
        if col_index in std_ix:
            v = [Fraction(0)] * len(standard)
            v[std_ix[col_index]] = Fraction(1)
            return v
        return None

    traces = []
    for var in range(3):
        tr = Fraction(0)
        ok = True
        for k, mi in enumerate(standard):
            e = list(monos5[mi])
            e[var] += 1
            v = normal_form(mono_ix[tuple(e)])
            if v is None:
                ok = False
                break
            tr += v[k]
        if not ok:
            return None
        traces.append(tr)

    res = tuple(traces[v] - sum(a[v] for a in aff) for v in range(3))
    # confirm the point is on all three quadrics
    for q in quads:
        if sum(c * _eval_mono(res, e) for c, e in zip(q, monos2)):
            return None
    return res


# ---------------------------------------------------------------------------
# PGL action on valuation data


def pgl_rescale(v: ValuationData, S: str) -> ValuationData:
    """Valuation data after pushing the points of S off a common reduction
    point with the diagonal rescaling; dagger is unchanged."""
    S = "".join(sorted(set(S)))
    if len(S) < 2:
        raise InvalidRescale("need at least two colliding points")
    shifted = v - elementary_vector("pt", S)
    if any(x < 0 for x in shifted.plucker):
        raise InvalidRescale("valuation data does not dominate the collision vector")
    T = "".join(c for c in LETTERS if c not in S)
    return shifted + elementary_vector("pln", T)


_W8 = tuple(
    elementary_vector("pln", "".join(c for c in LETTERS if c != i)) for i in LETTERS
)
_FIVE_STD = ("ABCD", "ABCE", "ABDE", "ACDE", "BCDE")
_MIN_QUADS = {x: tuple("".join(sorted("".join(t) + x))
                       for t in itertools.combinations("ABCD", 3))
              for x in "FGH"}


def valuation_normal_form(v: ValuationData) -> ValuationData:
    """The unique representative of v + W8 with the five standard quadruples
    at 0 and the F/G/H coordinate minima at 0."""
    # value of w = sum c_i * pln(all-but-i) at quadruple S is sum_{i not in S} c_i
    import fractions

    def w8_value(c, quad):
        return sum(ci for i, ci in zip(LETTERS, c) if i not in quad)

    # 5 linear equations on c
    rows = []
    rhs = []
    for q in _FIVE_STD:
        rows.append([Fraction(0 if i in q else 1) for i in LETTERS])
        rhs.append(-v[q])
    # particular solution + nullspace
    aug = [row + [b] for row, b in zip(rows, rhs)]
    pivots = {}
    for row in aug:
        row = list(row)
        for c, prow in pivots.items():
            if row[c]:
                f = row[c]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((c for c in range(8) if row[c]), None)
        if lead is None:
            if row[8]:
                raise ArithmeticError("inconsistent normal-form system")
            continue
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        for c in list(pivots):
            if pivots[c][lead]:
                f = pivots[c][lead]
                pivots[c] = [x - f * y for x, y in zip(pivots[c], row)]
        pivots[lead] = row
    part = [Fraction(0)] * 8
    for c, prow in pivots.items():
        part[c] = prow[8]
    free = [c for c in range(8) if c not in pivots]
    null = []
    for f in free:
        vec = [Fraction(0)] * 8
        vec[f] = Fraction(1)
        for c, prow in pivots.items():
            vec[c] = -prow[f]
        null.append(vec)
    assert len(null) == 3

    vt = v
    for ci, w in zip(part, _W8):
        if ci:
            vt = vt + ci * w

    # on each F/G/H quadruple family, null vectors take a constant value
    mat = []
    for x in "FGH":
        row = []
        for n in null:
            vals = {w8_value(n, q) for q in _MIN_QUADS[x]}
            assert len(vals) == 1, "normal-form nullspace is not F/G/H-constant"
            row.append(vals.pop())
        mat.append(row)
    target = [-min(vt[q] for q in _MIN_QUADS[x]) for x in "FGH"]
    coeffs = _solve3(mat, target)
    for t, n in zip(coeffs, null):
        if t:
            for ci, w in zip(n, _W8):
                if ci:
                    vt = vt + (t * ci) * w

    for q in _FIVE_STD:
        assert vt[q] == 0
    for x in "FGH":
        assert min(vt[q] for q in _MIN_QUADS[x]) == 0
    return vt


def _solve3(mat, rhs):
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(mat, rhs)]
    n = 3
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            raise ArithmeticError("singular normal-form system")
        a[i], a[piv] = a[piv], a[i]
        inv = 1 / a[i][i]
        a[i] = [x * inv for x in a[i]]
        for r in range(n):
            if r != i and a[r][i]:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return [a[r][3] for r in range(n)]


# ---------------------------------------------------------------------------
# rank of the collision/coplanarity lattices


def _rank_frac(vectors) -> int:
    pivots = {}
    rank = 0
    for vec in vectors:
        row = list(vec)
        for c, prow in pivots.items():
            if row[c]:
                f = row[c]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((c for c in range(len(row)) if row[c]), None)
        if lead is not None:
            inv = 1 / row[lead]
            pivots[lead] = [x * inv for x in row]
            rank += 1
    return rank


def lattice_rank_check() -> dict[str, int]:
    pt_vecs = [elementary_vector("pt", a + b).plucker
               for a, b in itertools.combinations(LETTERS, 2)]
    pln_vecs = []
    for q in QUADRUPLES:
        if "A" in q:
            comp = "".join(c for c in LETTERS if c not in q)
            pln_vecs.append((elementary_vector("pln", q)
                             + elementary_vector("pln", comp)).plucker)
    return {
        "pt": _rank_frac(pt_vecs),
        "pln": _rank_frac(pln_vecs),
        "sum": _rank_frac(pln_vecs + pt_vecs),
    }
