"""Finite posets built from cover relations, with lattice analytics.

FinitePoset stores an element list and the Hasse diagram; the full order
relation, meet/join tables and the various lattice-theoretic predicates are
derived lazily (numpy boolean matrices carry the bulk work, so exhaustive
pairwise checks stay fast even on lattices with several hundred elements).
Instances are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .painted import binary_painted_trees, enum_painted_trees
from .shades import enum_lighted_shades, unary_lighted_shades
from .shadow import fiber_min, shadow, shadow_fibers

SIZE_GUARD = 8


def _guard(m, n, bound=SIZE_GUARD):
    if m + n > bound:
        raise ValueError(
            f"m + n = {m + n} exceeds the safety bound {bound}; "
            "object counts grow superexponentially"
        )


class FinitePoset:
    """A finite poset given by an element list and its cover relations.

    covers is a list of (lo, hi) index pairs with lo covered by hi.  The
    cover digraph must be acyclic and transitively irredundant.
    """

    def __init__(self, elements, covers, _leq=None):
        self.elements = list(elements)
        self.covers = sorted(set(covers))
        self.n = len(self.elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != self.n:
            raise ValueError("elements must be distinct")
        if _leq is not None:
            self._leq_cache = _leq

    @classmethod
    def from_leq(cls, elements, leq) -> "FinitePoset":
        """Build from a full order relation; covers by transitive reduction."""
        leq = np.asarray(leq, dtype=bool)
        n = len(elements)
        lt = leq & ~np.eye(n, dtype=bool)
        if (lt & lt.T).any():
            raise ValueError("relation is not antisymmetric")
        redundant = lt @ lt  # boolean matmul: any two-step path
        covers_mat = lt & ~redundant
        covers = [(int(i), int(j)) for i, j in zip(*np.nonzero(covers_mat))]
        return cls(elements, covers, _leq=leq)

    def index(self, key) -> int:
        return self._index[key]

    @cached_property
    def leq(self) -> np.ndarray:
        """Boolean matrix, leq[i, j] iff element i is below element j."""
        if hasattr(self, "_leq_cache"):
            return self._leq_cache
        mat = np.eye(self.n, dtype=bool)
        for i in self.topological_order[::-1]:
            for lo, hi in self._covers_up[i]:
                mat[i] |= mat[hi]
        if (mat & mat.T & ~np.eye(self.n, dtype=bool)).any():
            raise ValueError("cover digraph contains a cycle")
        return mat

    @cached_property
    def _covers_up(self):
        out = [[] for _ in range(self.n)]
        for lo, hi in self.covers:
            out[lo].append((lo, hi))
        return out

    @cached_property
    def topological_order(self) -> list[int]:
        """Indices sorted bottom-up (every element after all it covers... i.e.
        after everything below it)."""
        indeg = [0] * self.n
        succ = [[] for _ in range(self.n)]
        for lo, hi in self.covers:
            indeg[hi] += 1
            succ[lo].append(hi)
        stack = sorted(i for i in range(self.n) if indeg[i] == 0)
        order = []
        while stack:
            v = stack.pop()
            order.append(v)
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        if len(order) != self.n:
            raise ValueError("cover digraph contains a cycle")
        return order

    @cached_property
    def topo_rank(self) -> np.ndarray:
        r = np.empty(self.n, dtype=np.int64)
        for pos, i in enumerate(self.topological_order):
            r[i] = pos
        return r

    # -- extrema ---------------------------------------------------------------

    @cached_property
    def minimal_elements(self) -> list[int]:
        has_lower = set(hi for _, hi in self.covers)
        return [i for i in range(self.n) if i not in has_lower]

    @cached_property
    def maximal_elements(self) -> list[int]:
        has_upper = set(lo for lo, _ in self.covers)
        return [i for i in range(self.n) if i not in has_upper]

    @cached_property
    def bottom(self):
        mins = self.minimal_elements
        return mins[0] if len(mins) == 1 else None

    @cached_property
    def top(self):
        maxs = self.maximal_elements
        return maxs[0] if len(maxs) == 1 else None

    @cached_property
    def is_bounded(self) -> bool:
        return self.n > 0 and self.bottom is not None and self.top is not None

    # -- meet / join -------------------------------------------------------------

    @cached_property
    def meet_table(self) -> np.ndarray:
        """meet_table[a, b] = index of the meet, or -1 if it does not exist."""
        return self._bound_table(self.leq)

    @cached_property
    def join_table(self) -> np.ndarray:
        return self._bound_table(self.leq.T)

    def _bound_table(self, leq) -> np.ndarray:
        n = self.n
        rank = self.topo_rank if leq is self.leq else -self.topo_rank
        table = np.full((n, n), -1, dtype=np.int64)
        ranks_col = rank[:, None]
        for a in range(n):
            common = leq[:, a:a + 1] & leq
            masked = np.where(common, ranks_col, np.int64(-(1 << 60)))
            cand = np.argmax(masked, axis=0)
            exists = common.any(axis=0)
            dominated = ~(common & ~leq[:, cand]).any(axis=0)
            ok = exists & dominated
            table[a] = np.where(ok, cand, -1)
        return table

    def meet(self, a, b):
        """Greatest lower bound of two element keys, or None."""
        idx = self.meet_table[self.index(a), self.index(b)]
        return self.elements[idx] if idx >= 0 else None

    def join(self, a, b):
        idx = self.join_table[self.index(a), self.index(b)]
        return self.elements[idx] if idx >= 0 else None

    @cached_property
    def is_lattice(self) -> bool:
        return (
            self.is_bounded
            and (self.meet_table >= 0).all()
            and (self.join_table >= 0).all()
        )

    # -- analytics ------------------------------------------------------------------

    @cached_property
    def height(self) -> int:
        """Number of covers in a longest chain."""
        depth = [0] * self.n
        for i in self.topological_order:
            for lo, hi in self._covers_up[i]:
                depth[hi] = max(depth[hi], depth[i] + 1)
        return max(depth, default=0)

    @cached_property
    def is_graded(self) -> bool:
        return self.rank_vector is not None

    @cached_property
    def rank_vector(self):
        """Cover-consistent rank function, or None if the poset is not graded."""
        rank = [None] * self.n
        for i in self.minimal_elements:
            rank[i] = 0
        for i in self.topological_order:
            for lo, hi in self._covers_up[i]:
                if rank[hi] is None:
                    rank[hi] = rank[i] + 1
                elif rank[hi] != rank[i] + 1:
                    return None
        return rank

    @cached_property
    def join_irreducibles(self) -> list[int]:
        lower = [0] * self.n
        for _, hi in self.covers:
            lower[hi] += 1
        return [i for i in range(self.n) if lower[i] == 1]

    @cached_property
    def meet_irreducibles(self) -> list[int]:
        upper = [0] * self.n
        for lo, _ in self.covers:
            upper[lo] += 1
        return [i for i in range(self.n) if upper[i] == 1]

    @cached_property
    def is_extremal(self) -> bool:
        """Extremal: as many join- and meet-irreducibles as the height."""
        h = self.height
        return len(self.join_irreducibles) == h and len(self.meet_irreducibles) == h

    def semidistributive_counterexample(self, side: str):
        """A triple (a, b, c) violating meet (side='meet') or join SD, or None."""
        if side == "meet":
            prim, other = self.meet_table, self.join_table
        elif side == "join":
            prim, other = self.join_table, self.meet_table
        else:
            raise ValueError("side must be 'meet' or 'join'")
        n = self.n
        for a in range(n):
            row = prim[a]
            mixed = prim[a][other]
            eq = row[:, None] == row[None, :]
            viol = eq & (mixed != row[:, None])
            if viol.any():
                b, c = map(int, np.argwhere(viol)[0])
                return (self.elements[a], self.elements[b], self.elements[c])
        return None

    @cached_property
    def is_meet_semidistributive(self) -> bool:
        return self.is_lattice and self.semidistributive_counterexample("meet") is None

    @cached_property
    def is_join_semidistributive(self) -> bool:
        return self.is_lattice and self.semidistributive_counterexample("join") is None

    def zeta_matrix(self):
        """Integer zeta matrix in a fixed linear extension order (sympy)."""
        from sympy import ImmutableMatrix

        order = self.topological_order
        n = self.n
        return ImmutableMatrix(
            n, n, lambda a, b: 1 if self.leq[order[a], order[b]] else 0
        )

    def coxeter_polynomial(self):
        """Characteristic polynomial of -Z^{-1} Z^T over the integers."""
        from sympy import Poly, Symbol

        z = self.zeta_matrix()
        cox = -(z.inv()) * z.T
        x = Symbol("x")
        return Poly(cox.charpoly(x).as_expr(), x)

    def mobius_matrix(self):
        """Integer Möbius function as a sympy matrix (linear extension order)."""
        return self.zeta_matrix().inv()

    # -- export --------------------------------------------------------------------

    def to_dot(self, label=str, name="poset") -> str:
        """Hasse diagram in DOT format, cover edges drawn bottom to top."""
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, e in enumerate(self.elements):
            text = label(e).replace('"', '\\"')
            lines.append(f'  n{i} [label="{text}"];')
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_cyclotomic_product(poly) -> bool:
    """Exact test: is the integer polynomial a product of cyclotomics?"""
    from sympy import Poly, cyclotomic_poly

    p = Poly(poly)
    x = p.gen
    if p.degree() == 0:
        return p.as_expr() == 1
    if p.TC() == 0:
        return False
    deg = p.degree()
    d = 1
    while p.degree() > 0:
        phi = Poly(cyclotomic_poly(d, x), x)
        while p.degree() >= phi.degree():
            q, r = divmod(p, phi)
            if r.is_zero:
                p = q
            else:
                break
        d += 1
        if d > 4 * deg * deg + 2:
            return False
    return p.as_expr() == 1


@dataclass
class MorphismCheckReport:
    is_meet_morphism: bool
    is_join_morphism: bool
    meet_counterexample: tuple | None = None
    join_counterexample: tuple | None = None


def check_meet_morphism(f, src: FinitePoset, dst: FinitePoset) -> MorphismCheckReport:
    """Exhaustively check f(x op y) = f(x) op f(y) for both lattice operations.

    f maps source element keys to destination element keys; it must be total
    and surjective.
    """
    if set(f.keys()) != set(src.elements):
        raise ValueError("f must be total on the source")
    if set(f.values()) != set(dst.elements):
        raise ValueError("f must be surjective onto the destination")
    fi = np.array([dst.index(f[e]) for e in src.elements], dtype=np.int64)
    report = {}
    example = {}
    for side in ("meet", "join"):
        src_t = src.meet_table if side == "meet" else src.join_table
        dst_t = dst.meet_table if side == "meet" else dst.join_table
        mapped = fi[src_t]
        expected = dst_t[fi[:, None], fi[None, :]]
        viol = mapped != expected
        report[side] = not viol.any()
        example[side] = None
        if viol.any():
            a, b = map(int, np.argwhere(viol)[0])
            example[side] = (src.elements[a], src.elements[b])
    return MorphismCheckReport(
        report["meet"], report["join"], example["meet"], example["join"]
    )


# -- posets of painted trees and lighted shades ------------------------------------


@lru_cache(maxsize=None)
def build_rotation_poset(kind: str, m: int, n: int, bound: int = SIZE_GUARD) -> FinitePoset:
    """Rotation poset on rank-0 objects; covers are the right rotations."""
    _guard(m, n, bound)
    if kind == "painted":
        objs = binary_painted_trees(m, n)
    elif kind == "shade":
        objs = unary_lighted_shades(m, n)
    else:
        raise ValueError("kind must be 'painted' or 'shade'")
    index = {o: i for i, o in enumerate(objs)}
    covers = []
    for i, o in enumerate(objs):
        for succ in o.rotation_successors():
            covers.append((i, index[succ]))
    poset = FinitePoset(objs, covers)
    if poset.bottom is None or poset.top is None:
        raise AssertionError("rotation digraph must have a unique source and sink")
    return poset


@lru_cache(maxsize=None)
def build_refinement_poset(kind: str, m: int, n: int, bound: int = SIZE_GUARD) -> FinitePoset:
    """Refinement poset on all objects, ordered by preposet containment.

    Larger preposet = smaller element; rank-0 objects are the maximal
    elements and the unique coarsest object is the minimum.
    """
    _guard(m, n, bound)
    if kind == "painted":
        objs = enum_painted_trees(m, n)
    elif kind == "shade":
        objs = enum_lighted_shades(m, n)
    else:
        raise ValueError("kind must be 'painted' or 'shade'")
    n_obj = len(objs)
    rows = [o.preposet.rows for o in objs]
    leq = np.zeros((n_obj, n_obj), dtype=bool)
    for a in range(n_obj):
        ra = rows[a]
        for b in range(n_obj):
            rb = rows[b]
            leq[a, b] = all(y & ~x == 0 for x, y in zip(ra, rb))
    return FinitePoset.from_leq(objs, leq)


def word_subposet(m: int, n: int) -> FinitePoset:
    """The poset of constrained words, ordered componentwise."""
    from .cubic import enum_words

    words = enum_words(m, n)
    n_w = len(words)
    leq = np.zeros((n_w, n_w), dtype=bool)
    for a, w in enumerate(words):
        for b, v in enumerate(words):
            leq[a, b] = all(x <= y for x, y in zip(w, v))
    return FinitePoset.from_leq(words, leq)


def lattice_analytics(p: FinitePoset) -> dict:
    """Lattice-theoretic profile of a bounded poset.

    Returns the lattice flag, both semidistributivity flags, extremality and
    the Coxeter polynomial together with its cyclotomic-product flag.  All of
    it is exact; the Coxeter polynomial is the characteristic polynomial of
    the transformation -Z^{-1} Z^T of the zeta matrix.
    """
    if not p.is_bounded:
        raise ValueError("analytics need a bounded poset")
    cox = p.coxeter_polynomial()
    return {
        "size": p.n,
        "height": p.height,
        "join_irreducibles": len(p.join_irreducibles),
        "meet_irreducibles": len(p.meet_irreducibles),
        "is_lattice": bool(p.is_lattice),
        "is_meet_semidistributive": bool(p.is_meet_semidistributive),
        "is_join_semidistributive": bool(p.is_join_semidistributive),
        "is_extremal": bool(p.is_extremal),
        "coxeter_polynomial": str(cox.as_expr()),
        "coxeter_cyclotomic": is_cyclotomic_product(cox),
    }


def analytics_csv(rows: list[dict]) -> str:
    """Analytics dicts as CSV, one row per poset."""
    if not rows:
        return ""
    keys = list(rows[0].keys())
    lines = [",".join(keys)]
    for row in rows:
        lines.append(",".join(str(row.get(k, "")) for k in keys))
    return "\n".join(lines) + "\n"


@dataclass
class CongruenceReport:
    unique_minima: bool
    minima_match_fiber_min: bool
    proj_down_order_preserving: bool
    proj_up_order_preserving: bool
    proj_up_counterexample: tuple | None


def word_fiber_comparison(m: int, n: int) -> dict:
    """Compare the word poset with the ordered-lights subposet of the
    rotation lattice.

    The unary shades whose cut labels increase from the bottom up are in
    bijection with the words; the induced rotation subposet is compared with
    the componentwise order through that bijection.  Returns which of the two
    alignments (order preserving or order reversing) holds.
    """
    from .cubic import shade_to_word, word_to_shade

    words = word_subposet(m, n)
    rot = build_rotation_poset("shade", m, n)
    identity = tuple(range(1, m + 1))
    shade_of = {w: word_to_shade(_HW(m, n, identity, w)) for w in words.elements}
    idx = {w: rot.index(shade_of[w]) for w in words.elements}
    same = reverse = True
    for a in words.elements:
        for b in words.elements:
            word_le = words.leq[words.index(a), words.index(b)]
            rot_le = rot.leq[idx[a], idx[b]]
            rot_ge = rot.leq[idx[b], idx[a]]
            if bool(word_le) != bool(rot_le):
                same = False
            if bool(word_le) != bool(rot_ge):
                reverse = False
    return {
        "m": m,
        "n": n,
        "num_words": words.n,
        "is_lattice": bool(words.is_lattice),
        "order_preserving": same,
        "order_reversing": reverse,
    }


def _HW(m, n, perm, word):
    from .cubic import HochschildWord

    return HochschildWord(m, n, perm, word)


def _inversions(perm):
    pos = {v: i for i, v in enumerate(perm)}
    return frozenset(
        (a, b)
        for a in perm
        for b in perm
        if a < b and pos[a] > pos[b]
    )


def _weak_order_paths(src, dst):
    """Swap-letter sequences of saturated weak-order chains from src to dst.

    Each step swaps adjacent positions i, i + 1 (recorded as the 1-based
    letter i) and must create an inversion while staying below dst.
    """
    inv_dst = _inversions(dst)
    if not _inversions(src) <= inv_dst:
        return
    if src == dst:
        yield ()
        return
    m = len(src)
    for i in range(m - 1):
        swapped = src[:i] + (src[i + 1], src[i]) + src[i + 2:]
        if len(_inversions(swapped)) == len(_inversions(src)) + 1:
            if _inversions(swapped) <= inv_dst:
                for rest in _weak_order_paths(swapped, dst):
                    yield (i + 1,) + rest


def word_order_conjecture_probe(m: int, n: int) -> dict:
    """Probe the conjectured description of the transported word order.

    The candidate condition for x below y: the cut orders are comparable in
    the weak order, the words are comparable componentwise, and some reduced
    expression of the connecting permutation admits a chain of intermediate
    words each missing the letter of its step.  The true order comes from the
    rotation lattice; the probe tallies how the candidate matches it under
    both placements of the avoid-the-letter constraint (on the word after or
    before each step).  Purely exploratory: nothing in the library depends
    on this description.
    """
    from .cubic import shade_to_word

    rot = build_rotation_poset("shade", m, n)
    encoded = [shade_to_word(ls) for ls in rot.elements]

    def candidate(x, y, constrain_after):
        if not _inversions(x.perm) <= _inversions(y.perm):
            return False
        if any(a < b for a, b in zip(x.word, y.word)):
            return False  # letters decrease going up
        for letters in _weak_order_paths(x.perm, y.perm):
            if not letters:
                return True
            reachable = {x.word}
            for letter in letters:
                if constrain_after:
                    reachable = {
                        h
                        for h in _words_between(y.word, reachable, m, n)
                        if letter not in h
                    }
                else:
                    reachable = _words_between(
                        y.word,
                        {r for r in reachable if letter not in r},
                        m,
                        n,
                    )
                if not reachable:
                    break
            if y.word in reachable:
                return True
        return False

    totals = {"after": 0, "before": 0}
    pairs = 0
    for a, xa in enumerate(encoded):
        for b, xb in enumerate(encoded):
            truth = bool(rot.leq[a, b])
            pairs += 1
            for key, flag in (("after", True), ("before", False)):
                if candidate(xa, xb, flag) == truth:
                    totals[key] += 1
    return {
        "m": m,
        "n": n,
        "pairs": pairs,
        "agree_constraint_after_step": totals["after"],
        "agree_constraint_before_step": totals["before"],
    }


def _words_between(floor, ceilings, m, n):
    """All valid words below some ceiling and above the floor, componentwise."""
    from .cubic import enum_words

    out = set()
    for w in enum_words(m, n):
        if all(f <= c for f, c in zip(floor, w)):
            if any(all(x <= y for x, y in zip(w, r)) for r in ceilings):
                out.add(w)
    return out


def check_congruence_projection(m: int, n: int) -> CongruenceReport:
    """Verify the shadow congruence on the painted rotation lattice.

    Checks that every shadow fiber has a unique minimum equal to fiber_min,
    that projecting down is order preserving along every rotation edge, and
    whether projecting up to fiber maxima preserves order.
    """
    poset = build_rotation_poset("painted", m, n)
    fibers = shadow_fibers(m, n)
    unique = True
    match = True
    down = {}
    up = {}
    for ls, pts in fibers.items():
        idxs = [poset.index(p) for p in pts]
        minima = [
            i for i in idxs if not any(poset.leq[j, i] for j in idxs if j != i)
        ]
        maxima = [
            i for i in idxs if not any(poset.leq[i, j] for j in idxs if j != i)
        ]
        if len(minima) != 1 or len(maxima) != 1:
            unique = False
            continue
        if poset.elements[minima[0]] != fiber_min(ls):
            match = False
        for i in idxs:
            down[i] = minima[0]
            up[i] = maxima[0]
    down_ok = all(poset.leq[down[lo], down[hi]] for lo, hi in poset.covers)
    up_bad = None
    for lo, hi in poset.covers:
        if not poset.leq[up[lo], up[hi]]:
            up_bad = (poset.elements[lo], poset.elements[hi])
            break
    return CongruenceReport(unique, match, down_ok, up_bad is None, up_bad)
