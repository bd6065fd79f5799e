"""Isometries of Z^{n,1} and their congruence quotients.

An isometry is an integer matrix M with M^T J M = J for the Gram matrix
J = diag(-1, 1, ..., 1); we work in the forward subgroup, characterized by
entry (0,0) >= 1, which preserves the positive light cone.  Reductions mod m
land in finite matrix groups over Z/m.

Groups are enumerated by exhaustive breadth-first closure under generator
multiplication, with elements deduplicated by their row-major byte encoding.
The closure engine stores elements as int8 arrays and multiplies batches in
int64, which keeps the largest case in scope (the finite stabilizer for
n = 7, order 2903040) inside a few hundred MB.  Everything downstream
(projectivization, coset spaces, the trivial-intersection checks against
congruence subgroups) is built on that engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .lattice import LatticeVector, Root, basis_vector, norm, reflect

DEFAULT_ELEMENT_BUDGET = 10_000_000

Rows = tuple[tuple[int, ...], ...]


class ClosureBudgetExceeded(RuntimeError):
    """Raised when a closure outgrows its element budget."""


def lorentz_gram(d: int) -> Rows:
    """Gram matrix diag(-1, 1, ..., 1) of Z^{d-1,1} as integer rows."""
    return tuple(
        tuple((-1 if r == 0 else 1) if r == c else 0 for c in range(d)) for r in range(d)
    )


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    d = len(m)
    sign = 1
    prev = 1
    for k in range(d - 1):
        if m[k][k] == 0:
            for i in range(k + 1, d):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class LatticeIsometry:
    """Integer matrix acting on column vectors of Z^{n,1}.

    The trusted constructors are lattice_isometry() and reflection_matrix(),
    which validate the defining conditions; products of isometries are again
    isometries, so composition skips revalidation.
    """

    entries: Rows

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "LatticeIsometry") -> "LatticeIsometry":
        a, b = self.entries, other.entries
        d = len(a)
        cols = list(zip(*b))
        return LatticeIsometry(
            tuple(tuple(sum(ar[k] * bc[k] for k in range(d)) for bc in cols) for ar in a)
        )

    def apply(self, v: LatticeVector) -> LatticeVector:
        if len(v.coords) != self.dimension:
            raise ValueError("dimension mismatch")
        return LatticeVector(
            tuple(sum(row[k] * v.coords[k] for k in range(len(row))) for row in self.entries)
        )

    def det(self) -> int:
        return det_int(self.entries)

    def inverse(self) -> "LatticeIsometry":
        """Inverse via the form: M^T J M = J gives M^{-1} = J M^T J."""
        d = self.dimension
        sign = [-1] + [1] * (d - 1)
        return LatticeIsometry(
            tuple(
                tuple(sign[r] * self.entries[c][r] * sign[c] for c in range(d))
                for r in range(d)
            )
        )

    @staticmethod
    def identity(d: int) -> "LatticeIsometry":
        return LatticeIsometry(tuple(tuple(int(r == c) for c in range(d)) for r in range(d)))


def preserves_form(rows: Rows) -> bool:
    """Does M^T J M = J hold for the Lorentzian Gram matrix?"""
    d = len(rows)
    j = lorentz_gram(d)
    for a in range(d):
        for b in range(d):
            s = 0
            for r in range(d):
                s += rows[r][a] * j[r][r] * rows[r][b]
            if s != j[a][b]:
                return False
    return True


def lattice_isometry(rows: Sequence[Sequence[int]]) -> LatticeIsometry:
    """Validated constructor: form-preserving, forward (entry (0,0) >= 1)."""
    entries = tuple(tuple(int(x) for x in r) for r in rows)
    d = len(entries)
    if any(len(r) != d for r in entries):
        raise ValueError("matrix must be square")
    if not preserves_form(entries):
        raise ValueError("matrix does not preserve the Lorentzian form")
    if entries[0][0] < 1:
        raise ValueError("matrix reverses the light cone (entry (0,0) < 1)")
    return LatticeIsometry(entries)


def reflection_matrix(alpha: Root, n: int | None = None) -> LatticeIsometry:
    """Matrix of the reflection in a root of norm 1 or 2, columns = images of e_i."""
    if n is not None and alpha.n != n:
        raise ValueError("dimension mismatch")
    d = alpha.n + 1
    cols = [reflect(alpha, basis_vector(i, alpha.n)).coords for i in range(d)]
    rows = tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))
    return lattice_isometry(rows)


@dataclass(frozen=True)
class ModularMatrix:
    """Square matrix over Z/m, entries normalized to 0 <= x < m."""

    entries: Rows
    modulus: int

    def __post_init__(self) -> None:
        m = self.modulus
        if m < 2:
            raise ValueError("modulus must be at least 2")
        if any(not 0 <= x < m for row in self.entries for x in row):
            raise ValueError("entries must be reduced mod m")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "ModularMatrix") -> "ModularMatrix":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        a, b = self.entries, other.entries
        d = len(a)
        m = self.modulus
        cols = list(zip(*b))
        return ModularMatrix(
            tuple(
                tuple(sum(ar[k] * bc[k] for k in range(d)) % m for bc in cols) for ar in a
            ),
            m,
        )

    def neg(self) -> "ModularMatrix":
        return ModularMatrix(
            tuple(tuple((-x) % self.modulus for x in row) for row in self.entries),
            self.modulus,
        )

    @staticmethod
    def identity(d: int, m: int) -> "ModularMatrix":
        return ModularMatrix(tuple(tuple(int(r == c) for c in range(d)) for r in range(d)), m)


def reduce_mod(mat: LatticeIsometry, m: int) -> ModularMatrix:
    """Entrywise reduction of an integer isometry mod m."""
    return ModularMatrix(tuple(tuple(x % m for x in row) for row in mat.entries), m)


def projective_normal_form(mat: ModularMatrix) -> ModularMatrix:
    """Canonical representative of {M, -M}: the lexicographically smaller one."""
    neg = mat.neg()
    return mat if mat.entries <= neg.entries else neg


def _invertible_mod(rows: Rows, m: int) -> bool:
    from math import gcd

    return gcd(det_int(rows) % m, m) == 1


def _projective_canonical_batch(flat: np.ndarray, m: int) -> np.ndarray:
    """Rowwise lexicographic min of x and (-x) mod m over flattened matrices."""
    alt = (-flat) % m
    differs = flat != alt
    first = differs.argmax(axis=1)
    rows = np.arange(len(flat))
    take_alt = alt[rows, first] < flat[rows, first]
    return np.where(take_alt[:, None], alt, flat)


class _RawClosure:
    """Breadth-first closure of integer or mod-m matrices under right multiplication.

    Elements are discovered in deterministic order (level by level, generators
    in the given order) and stored as int8 blocks keyed by row-major bytes.
    """

    def __init__(
        self,
        gen_rows: Sequence[Rows],
        modulus: int | None,
        projective: bool,
        budget: int,
    ) -> None:
        if not gen_rows:
            raise ValueError("need at least one generator")
        if projective and modulus is None:
            raise ValueError("projective closure requires a modulus")
        d = len(gen_rows[0])
        if any(len(g) != d or any(len(r) != d for r in g) for g in gen_rows):
            raise ValueError("generators must be square matrices of equal size")
        self.dimension = d
        self.modulus = modulus
        self.projective = projective

        gens = np.array(gen_rows, dtype=np.int64)
        if modulus is not None:
            gens %= modulus
        ident = np.eye(d, dtype=np.int64)[None]
        if projective:
            assert modulus is not None
            ident = _projective_canonical_batch(ident.reshape(1, -1), modulus).reshape(1, d, d)

        index: dict[bytes, int] = {}
        blocks: list[np.ndarray] = []

        def absorb(cands: np.ndarray) -> np.ndarray:
            """Record unseen matrices, return them as an int8 block."""
            if self.modulus is None and cands.size and abs(int(np.abs(cands).max())) > 127:
                raise OverflowError("matrix entries exceed int8 storage")
            small = cands.astype(np.int8)
            flat = small.reshape(len(small), -1)
            fresh = []
            for i in range(len(flat)):
                key = flat[i].tobytes()
                if key not in index:
                    if len(index) >= budget:
                        raise ClosureBudgetExceeded(
                            f"closure exceeded element budget {budget}"
                        )
                    index[key] = len(index)
                    fresh.append(small[i])
            if not fresh:
                return np.empty((0, d, d), dtype=np.int8)
            block = np.stack(fresh)
            blocks.append(block)
            return block

        frontier = absorb(ident)
        chunk = 1 << 17
        while len(frontier):
            level: list[np.ndarray] = []
            for lo in range(0, len(frontier), chunk):
                f64 = frontier[lo : lo + chunk].astype(np.int64)
                for g in gens:
                    prods = f64 @ g
                    if modulus is not None:
                        prods %= modulus
                        if projective:
                            prods = _projective_canonical_batch(
                                prods.reshape(len(prods), -1), modulus
                            ).reshape(-1, d, d)
                    got = absorb(prods)
                    if len(got):
                        level.append(got)
            frontier = np.concatenate(level) if level else np.empty((0, d, d), np.int8)

        self.index = index
        self._blocks = blocks
        self._mats: np.ndarray | None = None

    @property
    def order(self) -> int:
        return len(self.index)

    @property
    def mats(self) -> np.ndarray:
        if self._mats is None:
            self._mats = np.concatenate(self._blocks)
            self._blocks = [self._mats]
        return self._mats

    def blocks(self) -> Iterator[np.ndarray]:
        return iter(self._blocks)

    def key_of(self, rows: Rows) -> bytes:
        return np.array(rows, dtype=np.int8).tobytes()

    def rows_at(self, i: int) -> Rows:
        return tuple(tuple(int(x) for x in row) for row in self.mats[i])


class GroupClosure:
    """Finite matrix group over Z/m obtained by exhaustive closure.

    With projective=True elements are classes {M, -M}, each stored by its
    canonical representative; that is the right model for quotients like
    PGO where -I must be factored out.
    """

    def __init__(
        self,
        generators: Sequence[ModularMatrix],
        projective: bool = False,
        budget: int = DEFAULT_ELEMENT_BUDGET,
    ) -> None:
        if not generators:
            raise ValueError("need at least one generator")
        m = generators[0].modulus
        if any(g.modulus != m for g in generators):
            raise ValueError("generators must share a modulus")
        for g in generators:
            if not _invertible_mod(g.entries, m):
                raise ValueError("generators must be invertible mod m")
        self.generators = tuple(
            projective_normal_form(g) if projective else g for g in generators
        )
        self.modulus = m
        self.projective = projective
        self._core = _RawClosure(
            [g.entries for g in self.generators], m, projective, budget
        )
        self._element_set: frozenset[ModularMatrix] | None = None

    @property
    def order(self) -> int:
        return self._core.order

    @property
    def dimension(self) -> int:
        return self._core.dimension

    def _normalize(self, mat: ModularMatrix) -> ModularMatrix:
        if mat.modulus != self.modulus:
            raise ValueError("modulus mismatch")
        return projective_normal_form(mat) if self.projective else mat

    def __contains__(self, mat: ModularMatrix) -> bool:
        return self._core.key_of(self._normalize(mat).entries) in self._core.index

    def index_of(self, mat: ModularMatrix) -> int:
        key = self._core.key_of(self._normalize(mat).entries)
        try:
            return self._core.index[key]
        except KeyError:
            raise KeyError("matrix not in closure") from None

    def element_at(self, i: int) -> ModularMatrix:
        return ModularMatrix(self._core.rows_at(i), self.modulus)

    @property
    def elements(self) -> frozenset[ModularMatrix]:
        if self._element_set is None:
            self._element_set = frozenset(
                self.element_at(i) for i in range(self.order)
            )
        return self._element_set

    @property
    def contains_minus_identity(self) -> bool:
        if self.projective:
            return False
        return ModularMatrix.identity(self.dimension, self.modulus).neg() in self


def closure(
    generators: Sequence[ModularMatrix],
    projective: bool = False,
    budget: int = DEFAULT_ELEMENT_BUDGET,
) -> GroupClosure:
    """Exhaustive BFS closure of invertible matrices over Z/m."""
    return GroupClosure(generators, projective=projective, budget=budget)


def projective_order(group: GroupClosure) -> int:
    """Order of the image modulo {I, -I}; reported, never assumed."""
    if group.projective:
        return group.order
    return group.order // 2 if group.contains_minus_identity else group.order


def finite_group_elements(
    generators: Sequence[LatticeIsometry],
    budget: int = DEFAULT_ELEMENT_BUDGET,
) -> list[LatticeIsometry]:
    """All elements of the group generated by integer isometries.

    Exhaustive closure guarded by an element budget: a wrong generator set
    (infinite group) fails fast instead of silently grinding.
    """
    core = _RawClosure([g.entries for g in generators], None, False, budget)
    return [LatticeIsometry(core.rows_at(i)) for i in range(core.order)]


@dataclass(frozen=True)
class CongruenceIntersection:
    """Outcome of intersecting a finite isometry group with congruence kernels."""

    n: int
    order: int
    congruent_mod2: int
    congruent_mod3: int

    @property
    def trivial(self) -> bool:
        return self.congruent_mod2 == 1 and self.congruent_mod3 == 1


def long_simple_reflections(n: int) -> list[LatticeIsometry]:
    """Reflections in the norm-2 simple roots: generators of the finite stabilizer."""
    from .lattice import simple_roots

    return [reflection_matrix(a) for a in simple_roots(n) if norm(a) == 2]


def congruence_intersection_check(
    n: int, budget: int = DEFAULT_ELEMENT_BUDGET
) -> CongruenceIntersection:
    """Enumerate the finite stabilizer over Z and count elements = I mod 2 and mod 3.

    The group is trivial-intersection with both congruence kernels exactly
    when each count is 1.  n = 7 enumerates 2903040 matrices; keep it behind
    an opt-in switch in callers.
    """
    if not 2 <= n <= 7:
        raise ValueError(f"n must be between 2 and 7, got {n}")
    gens = long_simple_reflections(n)
    core = _RawClosure([g.entries for g in gens], None, False, budget)
    d = n + 1
    ident = np.eye(d, dtype=np.int8)
    fixed2 = 0
    fixed3 = 0
    for block in core.blocks():
        fixed2 += int((block % 2 == ident % 2).all(axis=(1, 2)).sum())
        fixed3 += int((block % 3 == ident % 3).all(axis=(1, 2)).sum())
    return CongruenceIntersection(n, core.order, fixed2, fixed3)


class CosetSpace:
    """Left cosets gH of a subgroup H inside a GroupClosure G.

    Coset ids follow the BFS discovery order of G; each coset's
    representative is its first-discovered element.  The Lagrange identity
    count * |H| = |G| is asserted on construction.
    """

    def __init__(
        self,
        group: GroupClosure,
        subgroup_generators: Sequence[ModularMatrix],
        budget: int = DEFAULT_ELEMENT_BUDGET,
    ) -> None:
        sub = GroupClosure(
            subgroup_generators, projective=group.projective, budget=budget
        )
        if sub.modulus != group.modulus:
            raise ValueError("modulus mismatch")
        core = group._core
        for key in sub._core.index:
            if key not in core.index:
                raise ValueError("subgroup generators produce elements outside the group")
        self.group = group
        self.subgroup = sub
        m = group.modulus
        d = group.dimension
        hmats = sub._core.mats.astype(np.int64)
        assignment = np.full(group.order, -1, dtype=np.int32)
        reps: list[int] = []
        gmats = core.mats
        for idx in range(group.order):
            if assignment[idx] != -1:
                continue
            cid = len(reps)
            reps.append(idx)
            prods = (gmats[idx].astype(np.int64) @ hmats) % m
            if group.projective:
                prods = _projective_canonical_batch(
                    prods.reshape(len(prods), -1), m
                ).reshape(-1, d, d)
            flat = prods.astype(np.int8).reshape(len(prods), -1)
            for i in range(len(flat)):
                j = core.index[flat[i].tobytes()]
                if assignment[j] not in (-1, cid):
                    raise AssertionError("cosets failed to partition the group")
                assignment[j] = cid
        if len(reps) * sub.order != group.order:
            raise AssertionError("Lagrange identity violated by coset partition")
        self.count = len(reps)
        self._assignment = assignment
        self._rep_indices = reps

    def coset_index(self, mat: ModularMatrix) -> int:
        return int(self._assignment[self.group.index_of(mat)])

    def representative(self, coset_id: int) -> ModularMatrix:
        return self.group.element_at(self._rep_indices[coset_id])


def coset_space(
    group: GroupClosure,
    subgroup_generators: Sequence[ModularMatrix],
    budget: int = DEFAULT_ELEMENT_BUDGET,
) -> CosetSpace:
    """Partition a closed matrix group into left cosets of a subgroup."""
    return CosetSpace(group, subgroup_generators, budget=budget)
