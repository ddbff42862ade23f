"""Cubic coordinates: Lehmer codes, bracket vectors, constrained words.

Unary shades biject with pairs (permutation, constrained word); painted trees
get cubic vectors by counting preposet non-inversions.  Both vector families
drop the constantly-zero first coordinate, decrease in exactly one coordinate
along every rotation cover, and tile the boundary of their bounding box by
the subcubes spanned by the faces of the corresponding polytope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .painted import PaintedTree
from .shades import LightedShade


# -- classical codes -----------------------------------------------------------


def lehmer_code(perm) -> tuple[int, ...]:
    """Full Lehmer code: entry j counts smaller values appearing before j."""
    pos = {v: i for i, v in enumerate(perm)}
    return tuple(
        sum(1 for i in range(1, j) if pos[i] < pos[j])
        for j in range(1, len(perm) + 1)
    )


def bracket_vector(tree_or_pt) -> tuple[int, ...]:
    """Full bracket vector of a binary tree: left-subtree leaf counts minus 1."""
    if isinstance(tree_or_pt, PaintedTree):
        if tree_or_pt.m != 0 or not tree_or_pt.is_binary:
            raise ValueError("bracket vectors come from binary unpainted trees")
        pt = tree_or_pt
    else:
        pt = PaintedTree(0, _count_nodes(tree_or_pt), tree_or_pt, [], [])
    out = [0] * pt.n
    for v, node, _, child_ids in pt._nodes:
        label = pt.labels[v][0]
        left, cid = node[0], child_ids[0]
        out[label - 1] = (1 if left is None else pt.leaf_count[cid]) - 1
    return tuple(out)


def _count_nodes(tree):
    if tree is None:
        return 0
    return (len(tree) - 1) + sum(_count_nodes(c) for c in tree)


# -- constrained words ------------------------------------------------------------


def word_violation(m: int, n: int, word) -> str | None:
    """The violated word clause, or None when the word is valid."""
    if len(word) != n:
        return f"length {len(word)} differs from n = {n}"
    if any(not 0 <= w <= m + 1 for w in word):
        return f"letters must lie in 0..{m + 1}"
    if n and word[0] == m + 1:
        return f"first letter must differ from {m + 1}"
    for i, w in enumerate(word):
        if 1 <= w <= m:
            if any(word[j] < w for j in range(i)):
                return f"letter {w} at position {i + 1} follows a smaller letter"
    return None


def enum_words(m: int, n: int) -> list[tuple[int, ...]]:
    """All constrained words of length n over 0..m+1, lexicographically."""
    return sorted(
        w
        for w in product(range(m + 2), repeat=n)
        if word_violation(m, n, w) is None
    )


@dataclass(frozen=True)
class HochschildWord:
    """A permutation (cut labels, bottom cut first) with a constrained word."""

    m: int
    n: int
    perm: tuple[int, ...]
    word: tuple[int, ...]

    def validate(self):
        if sorted(self.perm) != list(range(1, self.m + 1)):
            raise ValueError("perm must be a permutation of 1..m")
        reason = word_violation(self.m, self.n, self.word)
        if reason is not None:
            raise ValueError(f"invalid word: {reason}")


def shade_to_word(ls: LightedShade) -> HochschildWord:
    """Encode a unary shade: each value s becomes the number of cuts below it
    followed by s - 1 filler letters m + 1."""
    if not ls.is_unary:
        raise ValueError("the word encoding is defined for unary shades")
    m, n = ls.m, ls.n
    perm = tuple(min(ls.entries[p][1]) for p in reversed(ls.cut_positions))
    word = [m + 1] * n
    for pos, s, ps in ls.singletons:
        word[ps - m - s] = ls.cuts_below_position(pos)
    return HochschildWord(m, n, perm, tuple(word))


def word_to_shade(hw: HochschildWord) -> LightedShade:
    """Decode: place a tuple (s) for each maximal block i (m+1)^{s-1}, above
    exactly i of the cuts' positions counted from the bottom."""
    hw.validate()
    m, n = hw.m, hw.n
    filler = m + 1
    blocks = []
    i = 0
    while i < len(hw.word):
        s = 1
        while i + s < len(hw.word) and hw.word[i + s] == filler:
            s += 1
        blocks.append((hw.word[i], s))
        i += s
    top_down_labels = list(reversed(hw.perm))
    entries = []
    bi = 0
    for cut_number in range(m + 1):
        cuts_below = m - cut_number
        while bi < len(blocks) and blocks[bi][0] == cuts_below:
            entries.append(((blocks[bi][1],), frozenset()))
            bi += 1
        if cut_number < m:
            entries.append(((), frozenset({top_down_labels[cut_number]})))
    if bi != len(blocks):
        raise ValueError("word letters do not decrease with the cut structure")
    ls = LightedShade(m, n, entries)
    ls.validate()
    return ls


# -- cubic vectors -----------------------------------------------------------------


def cubic_vector_painted(pt: PaintedTree) -> tuple[int, ...]:
    """Below-relation counts of a binary painted tree, first coordinate dropped.

    Entry j counts the elements i < j lying strictly below j: cuts stacked
    below a cut, cuts crossing below a node, nodes hanging below a cut, and
    tree descendants.  The relation is used as drawn, without closing it
    transitively through the cuts: the closure version fails to move by one
    coordinate along sweeps once m >= 1 and n >= 2, while this one specializes
    to the Lehmer code at n = 0 and to the bracket vector at m = 0.
    """
    if not pt.is_binary:
        raise ValueError("cubic vectors come from binary painted trees")
    m, d = pt.m, pt.m + pt.n
    cut_of_label = {}
    for idx, part in enumerate(pt.parts):
        for p in part:
            cut_of_label[p] = idx

    def below(i, j) -> bool:
        if i <= m and j <= m:
            return cut_of_label[i] < cut_of_label[j]
        if i <= m < j:
            return pt.cut_below_node(cut_of_label[i], pt.node_of_label[j - m])
        if j <= m < i:
            return pt.node_below_cut(pt.node_of_label[i - m], cut_of_label[j])
        vi, vj = pt.node_of_label[i - m], pt.node_of_label[j - m]
        return vi in pt.descendants[vj]

    full = [sum(1 for i in range(1, j) if below(i, j)) for j in range(1, d + 1)]
    return tuple(full[1:])


def cubic_vector_shade(ls: LightedShade) -> tuple[int, ...]:
    """Lehmer code of the cut order concatenated with the word, first
    coordinate dropped."""
    hw = shade_to_word(ls)
    full = lehmer_code(hw.perm) + hw.word
    return tuple(full[1:])


# -- cubic realization checks ---------------------------------------------------------


@dataclass
class CubicReport:
    kind: str
    m: int
    n: int
    checks: dict = field(default_factory=dict)
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _cube_of(points):
    lo = tuple(min(p[i] for p in points) for i in range(len(points[0])))
    hi = tuple(max(p[i] for p in points) for i in range(len(points[0])))
    return (lo, hi)


def _cube_dim(cube):
    lo, hi = cube
    return sum(1 for a, b in zip(lo, hi) if a < b)


def _cube_contains(outer, inner) -> bool:
    return all(
        a <= c and d <= b
        for a, b, c, d in zip(outer[0], outer[1], inner[0], inner[1])
    )


def _cube_intersection(c1, c2):
    lo = tuple(max(a, c) for a, c in zip(c1[0], c2[0]))
    hi = tuple(min(b, d) for b, d in zip(c1[1], c2[1]))
    if any(a > b for a, b in zip(lo, hi)):
        return None
    return (lo, hi)


def verify_cubic_realization(kind: str, m: int, n: int, subdivision: bool = True) -> CubicReport:
    """Check the cubic realization and the induced cubic subdivision.

    (a) every rotation cover decreases exactly one cubic coordinate;
    (b) all images lie on the boundary of the bounding box;
    (c) each polytope face spans a subcube of the right dimension, the proper
        subcubes cover the boundary, intersect in common subcubes, and their
        containment order mirrors the refinement order (skipped when
        ``subdivision`` is false, which avoids building the refinement poset).
    """
    from .posets import build_refinement_poset, build_rotation_poset

    rot = build_rotation_poset(kind, m, n)
    gamma_fn = cubic_vector_painted if kind == "painted" else cubic_vector_shade
    gamma = {o: gamma_fn(o) for o in rot.elements}
    report = CubicReport(kind, m, n)
    checks = report.checks

    def fail(name, message):
        checks[name] = False
        if report.counterexample is None:
            report.counterexample = f"{name}: {message}"

    checks["injective"] = len(set(gamma.values())) == len(gamma)

    checks["single_coordinate_decrease"] = True
    for lo, hi in rot.covers:
        a, b = gamma[rot.elements[lo]], gamma[rot.elements[hi]]
        diffs = [(i, x - y) for i, (x, y) in enumerate(zip(a, b)) if x != y]
        if len(diffs) != 1 or diffs[0][1] <= 0:
            fail(
                "single_coordinate_decrease",
                f"{rot.elements[lo]} -> {rot.elements[hi]}: {a} vs {b}",
            )

    box = _cube_of(list(gamma.values()))
    top, bottom = rot.elements[rot.top], rot.elements[rot.bottom]
    checks["box_spanned_by_extremes"] = box == (gamma[top], gamma[bottom])

    checks["images_on_boundary"] = True
    for o, g in gamma.items():
        if not _on_boundary(g, box):
            fail("images_on_boundary", f"{o}: {g}")

    if not subdivision:
        return report

    ref = build_refinement_poset(kind, m, n)
    cubes = {}
    checks["faces_span_subcubes"] = True
    for o in ref.elements:
        members = [v for v in rot.elements if o.preposet.contains(v.preposet)]
        idxs = [rot.index(v) for v in members]
        mins = [i for i in idxs if not any(rot.leq[j, i] for j in idxs if j != i)]
        maxs = [i for i in idxs if not any(rot.leq[i, j] for j in idxs if j != i)]
        if len(mins) != 1 or len(maxs) != 1:
            fail("faces_span_subcubes", f"{o}: no unique extremes")
            continue
        cube = (gamma[rot.elements[maxs[0]]], gamma[rot.elements[mins[0]]])
        if any(a > b for a, b in zip(cube[0], cube[1])):
            fail("faces_span_subcubes", f"{o}: degenerate span")
            continue
        if _cube_dim(cube) != o.rank:
            fail("faces_span_subcubes", f"{o}: dim {_cube_dim(cube)} != rank {o.rank}")
        for v in members:
            if not _cube_contains(cube, (gamma[v], gamma[v])):
                fail("faces_span_subcubes", f"{o}: vertex {v} outside its cube")
        cubes[o] = cube

    whole = min(ref.elements, key=lambda o: -o.rank)
    proper = {o: c for o, c in cubes.items() if o is not whole}
    checks["subcubes_on_boundary"] = True
    for o, c in proper.items():
        if not _cube_on_boundary(c, box):
            fail("subcubes_on_boundary", f"{o}: {c}")

    checks["boundary_covered"] = True
    for cell in _boundary_cells(box):
        if not any(_cube_contains(c, cell) for c in proper.values()):
            fail("boundary_covered", f"cell {cell}")
            break

    checks["intersections_in_collection"] = True
    cube_set = set(proper.values())
    items = list(proper.items())
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            c1, c2 = items[a][1], items[b][1]
            inter = _cube_intersection(c1, c2)
            if inter is None:
                continue
            if inter not in cube_set:
                fail(
                    "intersections_in_collection",
                    f"{items[a][0]} and {items[b][0]} meet in {inter}",
                )
            elif inter != c1 and inter != c2 and _cube_dim(inter) >= min(
                _cube_dim(c1), _cube_dim(c2)
            ):
                fail("intersections_in_collection", f"dimension at {inter}")

    checks["containment_mirrors_refinement"] = True
    objs = list(cubes)
    for o1 in objs:
        for o2 in objs:
            refines = ref.leq[ref.index(o1), ref.index(o2)]
            contains = _cube_contains(cubes[o1], cubes[o2])
            if bool(refines) != bool(contains):
                fail("containment_mirrors_refinement", f"{o1} vs {o2}")
    return report


def _on_boundary(point, box) -> bool:
    lo, hi = box
    if not point:
        return True
    return any(p == a or p == b for p, a, b in zip(point, lo, hi))


def _cube_on_boundary(cube, box) -> bool:
    (clo, chi), (blo, bhi) = cube, box
    if not clo:
        return True
    return any(
        a == b and (a == p or a == q)
        for a, b, p, q in zip(clo, chi, blo, bhi)
    )


def _boundary_cells(box):
    """Unit cells of the boundary of an integer box, as degenerate-free cubes."""
    lo, hi = box
    d = len(lo)
    for i in range(d):
        for side in (lo[i], hi[i]):
            ranges = []
            for j in range(d):
                if j == i:
                    ranges.append([(side, side)])
                else:
                    if lo[j] == hi[j]:
                        ranges.append([(lo[j], hi[j])])
                    else:
                        ranges.append(
                            [(a, a + 1) for a in range(lo[j], hi[j])]
                        )
            for combo in product(*ranges):
                yield (tuple(c[0] for c in combo), tuple(c[1] for c in combo))
