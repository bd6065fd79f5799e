"""Gosset polytope wall systems and the finite mod-3 tessellation.

For n = 2, 3, 4 the fundamental polytope P of O+(Z^{n,1}) has walls mirrored
by norm-1 roots: the coordinate roots e_i together with e_0 - e_j - e_k.
Distinct walls pair to 0 (orthogonal) or -1 (parallel, meeting at the ideal
boundary), so P is right angled.  The finite stabilizer of P, generated by
the long simple reflections, permutes the walls; its orbit structure and the
words expressing wall reflections in terms of simple reflections are
verified here rather than assumed.

Reducing mod 3 and factoring out -I gives a finite quotient in which the
images of P tile: tiles are cosets of the stabilizer image, and crossing
wall i maps the tile of g to the tile of g * t_i where t_i is the wall
reflection.  The resulting tile graphs have 12, 60 and 432 tiles for
n = 2, 3, 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .lattice import (
    LatticeVector,
    Root,
    basis_vector,
    chamber_vertices,
    inner,
    root,
    simple_roots,
)
from .isometry import (
    DEFAULT_ELEMENT_BUDGET,
    CosetSpace,
    GroupClosure,
    LatticeIsometry,
    ModularMatrix,
    closure,
    coset_space,
    finite_group_elements,
    long_simple_reflections,
    projective_normal_form,
    reduce_mod,
    reflection_matrix,
)

TESSELLATION_DIMENSIONS = (2, 3, 4)


@dataclass(frozen=True)
class GossetWallSystem:
    """Labeled norm-1 wall roots of the fundamental polytope."""

    n: int
    labels: tuple[str, ...]
    roots: tuple[Root, ...]

    def root_of(self, label: str) -> Root:
        return self.roots[self.labels.index(label)]

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Pairings (beta_a, beta_b) in label order; diagonal is 1."""
        return tuple(tuple(inner(a, b) for b in self.roots) for a in self.roots)


def gosset_walls(n: int) -> GossetWallSystem:
    """Wall system of the Gosset polytope, n in {2, 3, 4}.

    Labels: coordinate walls are named by their index ("1", ..., "n"); the
    walls e_0 - e_j - e_k are named "jk".  For n = 2 the single wall of that
    shape is called "3", matching its position in the path diagram 1 - 3 - 2.
    """
    if n not in TESSELLATION_DIMENSIONS:
        raise ValueError(f"wall systems exist for n in {TESSELLATION_DIMENSIONS}, got {n}")
    e = [basis_vector(i, n) for i in range(n + 1)]
    if n == 2:
        labels = ("1", "2", "3")
        roots = (e[1], e[2], e[0] - e[1] - e[2])
    elif n == 3:
        labels = ("1", "2", "3", "4", "5", "6")
        roots = (e[1], e[2], e[3], e[0] - e[1] - e[2], e[0] - e[2] - e[3], e[0] - e[1] - e[3])
    else:
        singles = [str(i) for i in range(1, 5)]
        pairs = ["".join(map(str, jk)) for jk in combinations(range(1, 5), 2)]
        labels = tuple(singles + pairs)
        roots = tuple(
            [e[i] for i in range(1, 5)]
            + [e[0] - e[j] - e[k] for j, k in combinations(range(1, 5), 2)]
        )
    return GossetWallSystem(n, labels, tuple(root(r) for r in roots))


@dataclass(frozen=True)
class WallPairClassification:
    """Unordered distinct wall pairs split by their pairing value."""

    orthogonal: tuple[tuple[str, str], ...]  # pairing 0, mirrors cross at right angle
    parallel: tuple[tuple[str, str], ...]  # pairing -1, mirrors meet at infinity


def wall_pair_classification(walls: GossetWallSystem) -> WallPairClassification:
    """Classify wall pairs; any pairing outside {0, -1} is an error."""
    orth: list[tuple[str, str]] = []
    par: list[tuple[str, str]] = []
    for (la, ra), (lb, rb) in combinations(zip(walls.labels, walls.roots), 2):
        val = inner(ra, rb)
        if val == 0:
            orth.append((la, lb))
        elif val == -1:
            par.append((la, lb))
        else:
            raise ValueError(f"walls {la}, {lb} pair to {val}, polytope not right angled")
    return WallPairClassification(tuple(orth), tuple(par))


def generator_words(n: int) -> dict[str, tuple[int, ...]]:
    """Words in the simple reflections s_0..s_n whose products mirror the walls.

    Known in closed form for n = 2 and 3.  For n = 4 the wall reflections
    are exactly the stabilizer conjugates of s_4; see conjugate_wall_set().
    """
    if n == 2:
        return {"1": (1, 2, 1), "2": (2,), "3": (0,)}
    if n == 3:
        return {
            "1": (1, 2, 3, 2, 1),
            "2": (2, 3, 2),
            "3": (3,),
            "4": (0, 3, 0),
            "5": (0, 1, 2, 3, 2, 1, 0),
            "6": (0, 2, 3, 2, 0),
        }
    raise ValueError(f"closed-form wall words are known for n in (2, 3), got {n}")


@lru_cache(maxsize=None)
def simple_reflection_matrices(n: int) -> tuple[LatticeIsometry, ...]:
    return tuple(reflection_matrix(a) for a in simple_roots(n))


def wall_reflection_matrices(n: int) -> dict[str, LatticeIsometry]:
    walls = gosset_walls(n)
    return {lab: reflection_matrix(r) for lab, r in zip(walls.labels, walls.roots)}


def conjugate_wall_set(n: int = 4) -> set[LatticeIsometry]:
    """All stabilizer conjugates w s_n w^{-1}; for n = 4 these are the 10 walls."""
    s = simple_reflection_matrices(n)
    short = s[n]
    out = set()
    for w in finite_group_elements(long_simple_reflections(n)):
        out.add(w @ short @ w.inverse())
    return out


def verify_generator_words(n: int) -> bool:
    """Check that the claimed words (or conjugates, n = 4) hit the wall mirrors."""
    s = simple_reflection_matrices(n)
    walls = wall_reflection_matrices(n)
    if n in (2, 3):
        for lab, word in generator_words(n).items():
            prod = LatticeIsometry.identity(n + 1)
            for i in word:
                prod = prod @ s[i]
            if prod != walls[lab]:
                return False
        return True
    if n == 4:
        return conjugate_wall_set(4) == set(walls.values())
    raise ValueError(f"generator words are defined for n in (2, 3, 4), got {n}")


def stabilizer_orbit(n: int, v: LatticeVector) -> frozenset[LatticeVector]:
    """Orbit of a vector under the finite stabilizer of the polytope."""
    return frozenset(g.apply(v) for g in finite_group_elements(long_simple_reflections(n)))


@dataclass(frozen=True)
class VertexOrbits:
    """Stabilizer orbits of the first two chamber vertices, plus the fixed center."""

    n: int
    apex_orbit: frozenset[LatticeVector]  # orbit of v_0
    ideal_orbit: frozenset[LatticeVector]  # orbit of v_1, the ideal vertex
    center_fixed: bool  # whether v_n is fixed by the whole stabilizer


def vertex_orbits(n: int) -> VertexOrbits:
    verts = chamber_vertices(n)
    center = verts[n]
    fixed = all(
        g.apply(center) == center for g in long_simple_reflections(n)
    )
    return VertexOrbits(n, stabilizer_orbit(n, verts[0]), stabilizer_orbit(n, verts[1]), fixed)


@lru_cache(maxsize=None)
def reflection_image_mod3(n: int, projective: bool = True) -> GroupClosure:
    """Mod-3 closure of all n+1 simple reflections, optionally mod {I, -I}."""
    gens = [reduce_mod(m, 3) for m in simple_reflection_matrices(n)]
    return closure(gens, projective=projective)


def stabilizer_generators_mod3(n: int) -> tuple[ModularMatrix, ...]:
    return tuple(reduce_mod(m, 3) for m in long_simple_reflections(n))


def wall_reflections_mod3(n: int, projective: bool = True) -> dict[str, ModularMatrix]:
    out = {}
    for lab, mat in wall_reflection_matrices(n).items():
        red = reduce_mod(mat, 3)
        out[lab] = projective_normal_form(red) if projective else red
    return out


@dataclass(frozen=True)
class TileGraph:
    """Tiles of the mod-3 quotient tessellation with labeled wall crossings.

    edges holds one triple (tile, wall label, neighbor tile) per tile and
    wall; the underlying unordered pair multiset is symmetric, which is
    asserted at build time together with representative independence of each
    tile's neighbor multiset.
    """

    n: int
    wall_labels: tuple[str, ...]
    tile_count: int
    edges: tuple[tuple[int, str, int], ...]

    def neighbors(self, tile: int) -> list[tuple[str, int]]:
        return [(lab, b) for a, lab, b in self.edges if a == tile]

    def neighbor_sets(self) -> list[frozenset[int]]:
        sets: list[set[int]] = [set() for _ in range(self.tile_count)]
        for a, _, b in self.edges:
            sets[a].add(b)
        return [frozenset(s) for s in sets]

    def self_loop_count(self) -> int:
        return sum(1 for a, _, b in self.edges if a == b)

    def is_connected(self) -> bool:
        if self.tile_count == 0:
            return True
        adj = self.neighbor_sets()
        seen = {0}
        stack = [0]
        while stack:
            for b in adj[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == self.tile_count

    def to_dot(self) -> str:
        """Deterministic DOT text: tiles in id order, one line per crossing pair.

        A crossing between distinct tiles is written once with the wall
        labels seen from each side as "a_label|b_label".
        """
        lines = [f"graph tiles_n{self.n} {{"]
        for t in range(self.tile_count):
            lines.append(f"  {t};")
        outgoing: dict[tuple[int, int], list[str]] = {}
        for a, lab, b in self.edges:
            outgoing.setdefault((a, b), []).append(lab)
        for (a, b), labs in sorted(outgoing.items()):
            if a > b:
                continue
            if a == b:
                for lab in sorted(labs):
                    lines.append(f'  {a} -- {a} [label="{lab}"];')
                continue
            back = sorted(outgoing.get((b, a), []))
            for lab, rev in zip(sorted(labs), back):
                lines.append(f'  {a} -- {b} [label="{lab}|{rev}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _assert_stabilizer_permutes_walls(
    n: int, tiles: Sequence[ModularMatrix]
) -> None:
    """Conjugation by stabilizer generators must permute the wall reflections.

    This is what makes a tile's neighbor multiset independent of the choice
    of coset representative.
    """
    wall_set = {projective_normal_form(t) for t in tiles}
    for h in stabilizer_generators_mod3(n):
        conjugated = {projective_normal_form(h @ t @ h) for t in tiles}
        if conjugated != wall_set:
            raise AssertionError("stabilizer fails to permute the walls mod 3")


def build_tessellation(n: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> TileGraph:
    """Tile graph of the mod-3 quotient: cosets of the stabilizer image.

    Tiles are left cosets of the stabilizer image inside the projective
    mod-3 closure; crossing wall i from the tile of g lands in the tile of
    g t_i.  Build fails if the stabilizer image does not inject (which would
    collapse cosets) or if any well-definedness assertion trips.
    """
    if n not in TESSELLATION_DIMENSIONS:
        raise ValueError(f"tessellations are built for n in {TESSELLATION_DIMENSIONS}, got {n}")
    group = reflection_image_mod3(n, projective=True)
    stab_gens = [projective_normal_form(g) for g in stabilizer_generators_mod3(n)]
    space = coset_space(group, stab_gens, budget=budget)
    expected_stab = len(finite_group_elements(long_simple_reflections(n), budget=budget))
    if space.subgroup.order != expected_stab:
        raise AssertionError("stabilizer image collapsed in the projective quotient")

    walls = wall_reflections_mod3(n, projective=True)
    _assert_stabilizer_permutes_walls(n, list(walls.values()))

    labels = gosset_walls(n).labels
    edges = []
    for tile in range(space.count):
        rep = space.representative(tile)
        for lab in labels:
            edges.append((tile, lab, space.coset_index(rep @ walls[lab])))

    graph = TileGraph(n, labels, space.count, tuple(edges))
    _assert_pair_symmetric(graph)
    _assert_representative_independent(graph, space, walls)
    return graph


def _assert_pair_symmetric(graph: TileGraph) -> None:
    from collections import Counter

    forward = Counter((a, b) for a, _, b in graph.edges if a != b)
    for (a, b), k in forward.items():
        if forward.get((b, a), 0) != k:
            raise AssertionError("tile adjacency is not symmetric")


def _assert_representative_independent(
    graph: TileGraph, space: CosetSpace, walls: dict[str, ModularMatrix]
) -> None:
    """Recompute each tile's neighbor multiset from a second representative."""
    from collections import Counter

    stored = [Counter() for _ in range(graph.tile_count)]
    for a, _, b in graph.edges:
        stored[a][b] += 1
    shift = space.subgroup.generators[0]
    for tile in range(graph.tile_count):
        alt = space.representative(tile) @ shift
        got = Counter(space.coset_index(alt @ t) for t in walls.values())
        if got != stored[tile]:
            raise AssertionError("tile neighbors depend on the coset representative")
