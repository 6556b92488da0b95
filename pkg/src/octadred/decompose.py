"""Decomposition of valuation data into compatible building blocks.

The solver filters the 4949-vector candidate list by support, enumerates
maximal compatible cliques at picture-class level and solves an exact
nonnegative rational system per clique.  When a clique contains phi-classes
the system can be underdetermined (a phi vector equals the sum of its
auxiliary vectors); the reported decomposition maximizes the non-auxiliary
multiplicities, which is the geometric depth reading, and auxiliary blocks
require their parent phi-block to be present.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from octadred.blocks import (
    Block, PictureElement, ValuationData, auxiliary_blocks, block,
    elements_compatible, enumerate_labelled_blocks,
)

__all__ = [
    "Decomposition", "OctadPicture", "NoDecomposition",
    "AmbiguousDecomposition", "decompose", "octad_picture",
    "picture_from_elements", "verify_unique_round_trips",
]


class NoDecomposition(ValueError):
    def __init__(self, msg, residual: ValuationData | None = None):
        super().__init__(msg)
        self.residual = residual


class AmbiguousDecomposition(RuntimeError):
    pass


@dataclass(frozen=True)
class Decomposition:
    terms: tuple[tuple[Block, Fraction], ...]
    auxiliaries: tuple[tuple[Block, Fraction], ...]
    residual: ValuationData

    def total(self) -> ValuationData:
        acc = ValuationData.zero()
        for b, m in self.terms:
            acc = acc + m * b.valuation()
        for b, m in self.auxiliaries:
            acc = acc + m * b.valuation()
        return acc

    def picture(self) -> "OctadPicture":
        return picture_from_elements(b.picture() for b, _ in self.terms)

    def class_multiplicities(self) -> dict[PictureElement, Fraction]:
        """Total multiplicity per picture class (lettered variants of one
        class may share the load; only the sum is canonical)."""
        out: dict[PictureElement, Fraction] = {}
        for b, m in self.terms:
            out[b.picture()] = out.get(b.picture(), Fraction(0)) + m
        return out


@dataclass(frozen=True)
class OctadPicture:
    """Multiset-free overlay of the picture classes of a decomposition."""

    elements: frozenset[PictureElement]

    @property
    def hyperelliptic(self) -> bool:
        return any(e.hyperelliptic for e in self.elements)

    @property
    def exceptional(self) -> bool:
        return (len(self.elements) == 7
                and all(e.family in ("alpha1", "alpha2") for e in self.elements))

    def relabel(self, perm) -> "OctadPicture":
        if isinstance(perm, str):
            perm = dict(zip("ABCDEFGH", perm.upper()))
        return OctadPicture(frozenset(e.relabel(perm) for e in self.elements))

    def text(self) -> str:
        return " + ".join(sorted(e.text() for e in self.elements)) or "(trivial)"

    def __repr__(self):
        return f"picture[{self.text()}]"


def picture_from_elements(elems) -> OctadPicture:
    return OctadPicture(frozenset(elems))


# ---------------------------------------------------------------------------
# candidate organization


@lru_cache(maxsize=None)
def _by_class() -> dict[PictureElement, tuple[Block, ...]]:
    out: dict[PictureElement, list[Block]] = {}
    for b in enumerate_labelled_blocks():
        out.setdefault(b.picture(), []).append(b)
    out[block("tcu").picture()] = (block("tcu"),)
    return {k: tuple(v) for k, v in out.items()}


@lru_cache(maxsize=None)
def _support(b: Block) -> frozenset[int]:
    return b.valuation().support()


@lru_cache(maxsize=None)
def _support_mask(b: Block) -> int:
    m = 0
    for i in b.valuation().support():
        m |= 1 << i
    return m


@lru_cache(maxsize=None)
def _class_table():
    """Global picture-class index with bitmask compatibility adjacency."""
    classes = sorted(_by_class(), key=lambda e: e.text())
    index = {e: i for i, e in enumerate(classes)}
    adj = [0] * len(classes)
    for i, e in enumerate(classes):
        for j in range(i + 1, len(classes)):
            if elements_compatible(e, classes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return classes, index, adj


def _aux_variants(parent: Block) -> list[Block]:
    """All lettered variants of the auxiliary classes of a phi block."""
    out = []
    for a in auxiliary_blocks(parent):
        if a.kind == "tcu":
            out.append(a)
            continue
        for v in _by_class()[a.picture()]:
            out.append(Block(v.kind, v.label, auxiliary=True))
    return out


# ---------------------------------------------------------------------------
# exact rational simplex (small systems)


def _simplex_solve(cols, target, prefer):
    """Solve sum m_i cols[i] = target, m >= 0, maximizing sum of preferred
    coordinates (then minimizing the others); exact rational arithmetic.

    Returns the multiplier list or None when infeasible.
    """
    m = len(target)
    n = len(cols)
    # Phase I tableau: [A | I | b] with artificial basis
    rows = [[cols[j][i] for j in range(n)] + [Fraction(k == i) for k in range(m)]
            + [target[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    def pivot(rows, basis, obj):
        while True:
            # reduced costs under current basis
            red = list(obj)
            for r, bi in zip(rows, basis):
                if obj[bi]:
                    coef = obj[bi]
                    for j in range(len(red)):
                        red[j] -= coef * r[j]
            enter = next((j for j in range(n + m) if red[j] < 0), None)
            if enter is None:
                val = sum(obj[bi] * r[-1] for r, bi in zip(rows, basis))
                return val
            best = None
            for i, r in enumerate(rows):
                if r[enter] > 0:
                    ratio = r[-1] / r[enter]
                    if best is None or ratio < best[0] or (
                            ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return None  # unbounded (cannot happen here)
            _, i = best
            piv = rows[i][enter]
            rows[i] = [x / piv for x in rows[i]]
            for k in range(m):
                if k != i and rows[k][enter]:
                    f = rows[k][enter]
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
            basis[i] = enter

    val = pivot(rows, basis, cost)
    if val is None or val != 0:
        return None
    # drive artificial variables out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            enter = next((j for j in range(n) if rows[i][j] != 0), None)
            if enter is None:
                continue
            piv = rows[i][enter]
            rows[i] = [x / piv for x in rows[i]]
            for k in range(m):
                if k != i and rows[k][enter]:
                    f = rows[k][enter]
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
            basis[i] = enter
    # Phase II: maximize preferred multiplicities == minimize -pref
    obj = [Fraction(-1) if prefer[j] else Fraction(1) for j in range(n)] + \
          [Fraction(10 ** 9)] * m  # forbid artificial variables
    pivot(rows, basis, obj)
    sol = [Fraction(0)] * n
    for r, bi in zip(rows, basis):
        if bi < n:
            sol[bi] = r[-1]
        elif r[-1] != 0:
            return None
    return sol


def _plain_solve(cols, target):
    """Unique solve when the columns are linearly independent; None if the
    system is inconsistent or underdetermined."""
    m = len(target)
    n = len(cols)
    aug = [[cols[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, m) if aug[k][c]), None)
        if piv is None:
            return None  # dependent columns
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for k in range(m):
            if k != r and aug[k][c]:
                f = aug[k][c]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[r])]
        piv_cols.append(c)
        r += 1
    for k in range(r, m):
        if aug[k][n]:
            return None  # inconsistent
    return [aug[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# main solver


def _maximal_cliques(nodes, compatible=None):
    """Bron-Kerbosch with pivoting, on the global class adjacency bitmasks."""
    classes, index, adj = _class_table()
    node_mask = 0
    for e in nodes:
        node_mask |= 1 << index[e]
    out = []

    def bits(m):
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def extend(r, p, x):
        if not p and not x:
            out.append(frozenset(classes[i] for i in bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: bin(adj[u] & p).count("1"))
        cand = p & ~adj[pivot]
        for u in bits(cand):
            ub = 1 << u
            extend(r | ub, p & adj[u], x & adj[u])
            p &= ~ub
            x |= ub

    masked_adj = [a & node_mask for a in adj]
    adj, full_adj = masked_adj, adj
    extend(0, node_mask, 0)
    return out


def decompose(v: ValuationData, mode: str = "exact") -> Decomposition:
    """Unique compatible block decomposition of valuation data.

    mode "exact" requires equality on the nose; mode "quotient-W8" first
    replaces v by its coset normal form (the five standard quadruples and
    the coordinate minima pinned to zero), which is where uniqueness lives.
    """
    if mode == "quotient-W8":
        from octadred.octad import valuation_normal_form
        v = valuation_normal_form(v)
    elif mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if any(x < 0 for x in v.plucker) or v.dagger < 0:
        raise NoDecomposition("negative valuation data", v)

    if not any(v.plucker):
        return _finish(v, [], [])

    supp = v.support()
    cands = [b for b in enumerate_labelled_blocks() if _support(b) <= supp]
    classes = sorted({b.picture() for b in cands}, key=lambda e: e.text())
    if not classes:
        raise NoDecomposition("no candidate blocks fit the support", v)
    rows = sorted(supp)

    # fast path: a nonnegative least-squares fit over all candidates often
    # lands directly on the (unique) compatible class set
    guess = _nnls_guess(classes, v, rows)
    if guess is not None:
        sol = _solve_clique(sorted(guess, key=lambda e: e.text()), v)
        if sol is not None:
            return _finish(v, *sol)

    # conflict-driven search: solve the nonnegative system over all columns,
    # branch on incompatible pairs in the positive support
    sol = _conflict_search(classes, v, rows)
    if sol is not None:
        return _finish(v, *sol)

    cliques = _maximal_cliques(classes, elements_compatible)

    # a clique can only explain v when the supports of its admissible
    # variants (plus auxiliaries of its phi members) cover supp(v)
    cover = {}
    for e in classes:
        cov = frozenset()
        for b in _by_class()[e]:
            if _support(b) <= supp:
                cov |= _support(b)
        if e.family.startswith("phi"):
            for a in _aux_variants(_by_class()[e][0]):
                if _support(a) <= supp:
                    cov |= _support(a)
        cover[e] = cov
    cliques = [q for q in cliques
               if frozenset().union(*(cover[e] for e in q)) >= supp]
    cliques.sort(key=lambda q: (len(q), sorted(e.text() for e in q)))

    # by the uniqueness theorem, the first compatible exact solution is the
    # decomposition; a float prescreen skips hopeless cliques cheaply
    for q in cliques:
        if not _float_feasible(q, v, rows):
            continue
        sol = _solve_clique(q, v)
        if sol is not None:
            return _finish(v, *sol)
    raise NoDecomposition("no compatible decomposition", v)


_FLOAT_COLS: dict[Block, "object"] = {}


def _float_col(b: Block):
    import numpy as np

    arr = _FLOAT_COLS.get(b)
    if arr is None:
        arr = np.array([float(x) for x in b.valuation().plucker])
        _FLOAT_COLS[b] = arr
    return arr


def _admissible(e: PictureElement, supp) -> list[Block]:
    cols = [b for b in _by_class()[e] if _support(b) <= supp]
    if e.family.startswith("phi"):
        cols += [a for a in _aux_variants(_by_class()[e][0])
                 if _support(a) <= supp]
    return cols


def _float_feasible(classes, v, rows) -> bool:
    """Cheap least-squares residual test; never rejects a true solution of a
    small-integer system, and every acceptance is confirmed exactly."""
    import numpy as np

    cols = []
    for e in classes:
        cols.extend(_admissible(e, v.support()))
    if not cols:
        return False
    a = np.stack([_float_col(b)[rows] for b in cols], axis=1)
    t = np.array([float(v.plucker[i]) for i in rows])
    sol, *_ = np.linalg.lstsq(a, t, rcond=None)
    return bool(np.linalg.norm(a @ sol - t) < 1e-6)


def _nnls_guess(classes, v, rows):
    """Nonnegative least squares over every admissible column at once; when
    the positive support is pairwise compatible this is the decomposition's
    class set, confirmed exactly afterwards."""
    import numpy as np
    from scipy.optimize import nnls

    cols = []
    for e in classes:
        cols.extend(_admissible(e, v.support()))
    if not cols:
        return None
    a = np.stack([_float_col(b)[rows] for b in cols], axis=1)
    t = np.array([float(v.plucker[i]) for i in rows])
    try:
        sol, res = nnls(a, t)
    except Exception:
        return None
    if res > 1e-8:
        return None
    used = {cols[j].picture() for j in range(len(cols)) if sol[j] > 1e-9
            and not cols[j].auxiliary}
    parents = {cols[j] for j in range(len(cols)) if sol[j] > 1e-9 and cols[j].auxiliary}
    for a_blk in parents:
        # aux classes must belong to some used phi class
        ok = any(e.family.startswith("phi")
                 and a_blk.picture() in {x.picture() for x in
                                         auxiliary_blocks(_by_class()[e][0])}
                 for e in used)
        if not ok:
            return None
    if not used:
        return None
    elems = sorted(used, key=lambda e: e.text())
    if all(elements_compatible(elems[i], elems[j])
           for i in range(len(elems)) for j in range(i + 1, len(elems))):
        return frozenset(elems)
    return None


def _conflict_search(classes, v, rows, restarts: int = 10):
    """Float LPs with randomized costs; vertices of the solution polytope on
    the true face are compatible, so a few restarts normally land on one.
    Remaining conflicts are branched on with bounded depth."""
    import random as _random

    import numpy as np
    from scipy.optimize import linprog

    columns = []
    owners = []
    for e in classes:
        for b in _admissible(e, v.support()):
            columns.append(b)
            owners.append(e)
    if not columns:
        return None
    a = np.stack([_float_col(b)[rows] for b in columns], axis=1)
    t = np.array([float(v.plucker[i]) for i in rows])
    aux_pen = np.array([1.0 if b.auxiliary else 0.0 for b in columns])
    rnd = _random.Random(2029)

    def attempt(cost, allowed_mask):
        bounds = [(0, None) if allowed_mask[j] else (0, 0)
                  for j in range(len(columns))]
        res = linprog(cost, A_eq=a, b_eq=t, bounds=bounds, method="highs")
        if not res.success:
            return None, False
        used = sorted({owners[j] for j in range(len(columns))
                       if res.x[j] > 1e-9 and not columns[j].auxiliary},
                      key=lambda e: e.text())
        for i in range(len(used)):
            for j in range(i + 1, len(used)):
                if not elements_compatible(used[i], used[j]):
                    return (used[i], used[j]), True
        sol = _solve_clique(used, v)
        return sol, False

    allowed = [True] * len(columns)
    seen_conflicts = []
    for k in range(restarts):
        cost = aux_pen + np.array([rnd.random() for _ in columns]) * (0.5 if k else 0.0)
        out, is_conflict = attempt(cost, allowed)
        if out is not None and not is_conflict:
            return out
        if out is None and not is_conflict:
            if k == 0:
                return None  # genuinely infeasible
            continue
        if is_conflict and out not in seen_conflicts:
            seen_conflicts.append(out)
    # bounded conflict branching on the recorded incompatible pairs
    def branch(mask, conflicts, depth):
        if depth > 10:
            return None
        out, is_conflict = attempt(aux_pen, mask)
        if out is not None and not is_conflict:
            return out
        if not is_conflict:
            return None
        e1, e2 = out
        for drop in (e1, e2):
            m2 = [mask[j] and owners[j] != drop for j in range(len(columns))]
            sol = branch(m2, conflicts, depth + 1)
            if sol is not None:
                return sol
        return None

    return branch(allowed, seen_conflicts, 0)


def _dedup_rows(vecs, target):
    seen = {}
    for i in range(len(target)):
        key = tuple(vec[i] for vec in vecs) + (target[i],)
        if key not in seen:
            seen[key] = i
    keep = sorted(seen.values())
    return [[vec[i] for i in keep] for vec in vecs], [target[i] for i in keep]


def _solve_clique(classes, v):
    cols_blocks: list[Block] = []
    for e in classes:
        cols_blocks.extend(b for b in _by_class()[e] if _support(b) <= v.support())
    if not cols_blocks:
        return None
    aux_pool: dict[Block, None] = {}
    for e in classes:
        if e.family.startswith("phi"):
            for a in _aux_variants(_by_class()[e][0]):
                if a.valuation().support() <= v.support():
                    aux_pool.setdefault(a)
    aux_blocks = [a for a in aux_pool if a.kind != "tcu"]

    all_cols = cols_blocks + aux_blocks
    rows = sorted(v.support())
    vecs = [[b.valuation().plucker[i] for i in rows] for b in all_cols]
    target = [v.plucker[i] for i in rows]
    vecs, target = _dedup_rows(vecs, target)

    sol = _plain_solve(vecs, target)
    if sol is None:
        prefer = [True] * len(cols_blocks) + [False] * len(aux_blocks)
        sol = _simplex_solve(vecs, target, prefer)
    if sol is None or any(x < 0 for x in sol):
        return None
    terms = [(b, m) for b, m in zip(cols_blocks, sol[:len(cols_blocks)]) if m]
    auxs = [(b, m) for b, m in zip(aux_blocks, sol[len(cols_blocks):]) if m]
    # auxiliary blocks need their parent phi-block present
    if auxs:
        parents = set()
        for b, _ in terms:
            if b.kind.startswith("phi"):
                parents.update(a.picture() for a in auxiliary_blocks(b))
        if not all(a.picture() in parents for a, _ in auxs):
            return None
    return terms, auxs


def _finish(v, terms, auxs) -> Decomposition:
    residual = v
    for b, m in list(terms) + list(auxs):
        residual = residual - m * b.valuation()
    # residual must be zero on the quadruple part; dagger handled now
    if any(residual.plucker):
        raise NoDecomposition("nonzero residual", residual)

    dagger = v.dagger
    if dagger:
        term_pics = [b.picture() for b, _ in terms]
        tcu = block("tcu")
        phi_present = any(e.family.startswith("phi") for e in term_pics)
        if phi_present:
            auxs = list(auxs) + [(block("tcu", auxiliary=True), dagger)]
        else:
            if not all(elements_compatible(tcu.picture(), e) for e in term_pics):
                raise NoDecomposition(
                    "twisted-cubic index incompatible with the quadruple part",
                    residual)
            terms = list(terms) + [(tcu, dagger)]

    return Decomposition(tuple(terms), tuple(auxs), ValuationData.zero())


# ---------------------------------------------------------------------------
# octad pipeline


def octad_picture(o, dagger=None) -> OctadPicture:
    """Picture of an octad: decompose its valuation data (exact, then coset
    normal form on failure), suppress auxiliaries."""
    from octadred.octad import Octad

    vals = o.plucker_valuations()
    if dagger is None:
        from octadred.tcindex import twisted_cubic_index
        dagger = twisted_cubic_index(o)
    v = ValuationData.from_dict(vals, Fraction(dagger))
    try:
        dec = decompose(v, "exact")
    except NoDecomposition:
        dec = decompose(v, "quotient-W8")
    return dec.picture()


def verify_unique_round_trips(n: int, rng, max_blocks: int = 4) -> int:
    """Sample random compatible block multisets with random positive rational
    multiplicities and check the decomposer recovers them exactly.  Returns
    the number of successful round trips (== n unless something is wrong)."""
    pool = enumerate_labelled_blocks()
    ok = 0
    for _ in range(n):
        chosen: list[Block] = []
        attempts = 0
        want = rng.randint(1, max_blocks)
        while len(chosen) < want and attempts < 50:
            attempts += 1
            b = pool[rng.randrange(len(pool))]
            if b.picture().family in ("line", "tcu") and chosen:
                continue
            if all(elements_compatible(b.picture(), c.picture()) for c in chosen) \
                    and all(b.picture() != c.picture() for c in chosen):
                chosen.append(b)
        if not chosen:
            continue
        mults = [Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in chosen]
        v = ValuationData.zero()
        for b, m in zip(chosen, mults):
            v = v + m * b.valuation()
        dec = decompose(v)
        got = dec.class_multiplicities()
        exp: dict = {}
        for b, m in zip(chosen, mults):
            exp[b.picture()] = exp.get(b.picture(), Fraction(0)) + m
        if got == exp:
            ok += 1
        else:
            raise AmbiguousDecomposition(
                f"round trip failed: {sorted(map(str, exp.items()))} -> "
                f"{sorted(map(str, got.items()))}")
    return ok
