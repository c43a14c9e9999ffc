"""Auxiliary combinatorial ingredients for the recursive constructions:
triple systems, group divisible designs with block size three, and symmetric
quasigroups whose holes are the pairs {2i, 2i+1}.

Everything is deterministic: direct algebraic constructions where they exist,
otherwise a seeded Stinson-style hill climb with a fixed internal seed.  Every
builder self-checks before returning, so a returned object is always valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from random import Random

_CLIMB_SEED = 7
_MAX_RESTARTS = 60


def idempotent_symmetric_quasigroup(n: int):
    """Odd n: symmetric latin table with f(i,i) = i (multiply by (n+1)/2)."""
    if n % 2 == 0 or n < 1:
        raise ValueError("order must be odd")
    h = (n + 1) // 2
    return tuple(tuple(((i + j) * h) % n for j in range(n)) for i in range(n))


def half_idempotent_quasigroup(t: int):
    """Order 2t: symmetric latin table with f(i,i) = i for i < t, else i - t."""
    if t < 1:
        raise ValueError("t must be positive")
    n = 2 * t

    def h(s):
        return s // 2 if s % 2 == 0 else s // 2 + t

    return tuple(tuple(h((i + j) % n) for j in range(n)) for i in range(n))


def steiner_triple_system(n: int) -> tuple:
    """Triples on {0..n-1} covering every pair exactly once (n = 1, 3 mod 6)."""
    triples = []
    if n == 1:
        return ()
    if n % 6 == 3:
        m = n // 3
        f = idempotent_symmetric_quasigroup(m)

        def pt(x, a):
            return a * m + x

        triples += [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(m)]
        for a in range(3):
            for x, y in combinations(range(m), 2):
                triples.append(tuple(sorted((pt(x, a), pt(y, a), pt(f[x][y], (a + 1) % 3)))))
    elif n % 6 == 1:
        t = (n - 1) // 6
        m = 2 * t
        f = half_idempotent_quasigroup(t)
        inf = n - 1

        def pt(x, a):
            return a * m + x

        triples += [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
        for a in range(3):
            for x in range(t, m):
                triples.append(tuple(sorted((inf, pt(x, a), pt(x - t, (a + 1) % 3)))))
            for x, y in combinations(range(m), 2):
                triples.append(tuple(sorted((pt(x, a), pt(y, a), pt(f[x][y], (a + 1) % 3)))))
    else:
        raise ValueError(f"no triple system of order {n}")
    assert len(triples) == n * (n - 1) // 6
    return tuple(sorted(triples))


@dataclass(frozen=True)
class GroupDivisibleDesign:
    """Block-three design: points 0..n-1 split into consecutive groups; the
    triples cover every cross-group pair exactly once."""
    group_sizes: tuple
    triples: tuple

    @property
    def points(self) -> int:
        return sum(self.group_sizes)

    def groups(self):
        out, start = [], 0
        for s in self.group_sizes:
            out.append(tuple(range(start, start + s)))
            start += s
        return tuple(out)


def _group_index(sizes):
    out = []
    for i, s in enumerate(sizes):
        out.extend([i] * s)
    return out


def _check_gdd(gdd: GroupDivisibleDesign):
    gidx = _group_index(gdd.group_sizes)
    need = {(x, y) for x, y in combinations(range(gdd.points), 2) if gidx[x] != gidx[y]}
    for t in gdd.triples:
        for p in combinations(t, 2):
            if p not in need:
                raise AssertionError(f"pair {p} duplicated or inside a group")
            need.discard(p)
    if need:
        raise AssertionError(f"{len(need)} cross pairs uncovered")


def _gdd_from_point_deletion(u: int) -> GroupDivisibleDesign:
    # delete one point of a triple system of order 2u+1; its triples become
    # the u groups of size 2
    sts = steiner_triple_system(2 * u + 1)
    gone = 2 * u
    pairs = sorted(tuple(x for x in t if x != gone) for t in sts if gone in t)
    relabel = {}
    for i, (p, q) in enumerate(pairs):
        relabel[p], relabel[q] = 2 * i, 2 * i + 1
    triples = sorted(tuple(sorted(relabel[x] for x in t)) for t in sts if gone not in t)
    return GroupDivisibleDesign((2,) * u, tuple(triples))


def _gdd_triple_groups(u: int) -> GroupDivisibleDesign:
    # groups {3i, 3i+1, 3i+2}; levels rotate via an idempotent quasigroup
    f = idempotent_symmetric_quasigroup(u)
    triples = []
    for a in range(3):
        for i, j in combinations(range(u), 2):
            triples.append(tuple(sorted((3 * i + a, 3 * j + a, 3 * f[i][j] + (a + 1) % 3))))
    return GroupDivisibleDesign((3,) * u, tuple(sorted(triples)))


def _gdd_hill_climb(sizes, seed: int) -> GroupDivisibleDesign:
    # Stinson-style: pick a live point and two of its uncovered partners.
    # At most one existing triple is evicted per move, so coverage never
    # drops; cross-degrees stay even, so a live point has >= 2 partners.
    n = sum(sizes)
    gidx = _group_index(sizes)
    total = sum(len([y for y in range(n) if gidx[x] != gidx[y]]) for x in range(n)) // 2

    def key(a, b):
        return (a, b) if a < b else (b, a)

    for attempt in range(_MAX_RESTARTS):
        rng = Random(seed + attempt)
        cover: dict = {}
        live = [set(y for y in range(n) if gidx[y] != gidx[x]) for x in range(n)]
        covered = 0
        steps = 300 * n * n
        while covered < total and steps > 0:
            steps -= 1
            x = rng.randrange(n)
            if not live[x]:
                continue
            y, z = rng.sample(sorted(live[x]), 2)
            if gidx[y] == gidx[z]:
                continue
            old = cover.get(key(y, z))
            if old is not None:
                for q in combinations(old, 2):
                    del cover[q]
                    a, b = q
                    live[a].add(b)
                    live[b].add(a)
                covered -= 3
            t = tuple(sorted((x, y, z)))
            for a, b in combinations(t, 2):
                cover[(a, b)] = t
                live[a].discard(b)
                live[b].discard(a)
            covered += 3
        if covered == total:
            return GroupDivisibleDesign(tuple(sizes), tuple(sorted(set(cover.values()))))
    raise RuntimeError(f"no block-three design of type {sizes} found")


def _gdd_admissible(sizes) -> bool:
    n = sum(sizes)
    if any((n - g) % 2 for g in sizes):
        return False  # each point's cross pairs split into pairs of a triple
    cross = (n * n - sum(g * g for g in sizes)) // 2
    if cross % 3:
        return False
    if len(sizes) == 3 and len(set(sizes)) > 1:
        # with three groups every triple is a transversal, so the three
        # cross-pair counts must all be equal, forcing equal group sizes
        return False
    return True


@lru_cache(maxsize=None)
def build_gdd(group_sizes: tuple) -> GroupDivisibleDesign:
    """Group divisible design with block size 3 and the given group sizes,
    laid out on consecutive point ranges in the given order."""
    sizes = tuple(group_sizes)
    if len(sizes) < 3:
        raise ValueError("need at least three groups")
    if not _gdd_admissible(sizes):
        raise ValueError(f"no block-three design of type {sizes}")
    if all(s == 2 for s in sizes) and len(sizes) % 3 in (0, 1):
        gdd = _gdd_from_point_deletion(len(sizes))
    elif all(s == 3 for s in sizes) and len(sizes) % 2 == 1:
        gdd = _gdd_triple_groups(len(sizes))
    else:
        gdd = _gdd_hill_climb(sizes, _CLIMB_SEED)
    _check_gdd(gdd)
    return gdd


@dataclass(frozen=True)
class QuasigroupWithHoles:
    """Symmetric quasigroup on {0..2k-1} with holes {2i, 2i+1}: products are
    defined across holes, avoid both operands' holes, and every row hits every
    symbol outside its own hole exactly once."""
    k: int
    table: tuple

    def mul(self, x: int, y: int) -> int:
        if x // 2 == y // 2:
            raise ValueError(f"{x} and {y} share a hole")
        return self.table[x][y]

    @staticmethod
    def hole_of(x: int) -> tuple:
        return (x - x % 2, x - x % 2 + 1)


def _qh_from_hole_level(k: int):
    # value 2f(i,j) + (parity of x+y) splits each hole-level product into the
    # two symbols of the target hole, one per parity, keeping rows latin
    f = idempotent_symmetric_quasigroup(k)
    n = 2 * k
    return tuple(tuple(None if x // 2 == y // 2 else 2 * f[x // 2][y // 2] + ((x ^ y) & 1)
                       for y in range(n)) for x in range(n))


def _qh_from_gdd(k: int):
    # x*y = third point of the unique triple through {x, y}
    gdd = build_gdd((2,) * k)
    third: dict = {}
    for a, b, c in gdd.triples:
        third[(a, b)] = c
        third[(a, c)] = b
        third[(b, c)] = a
    n = 2 * k
    return tuple(tuple(None if x // 2 == y // 2 else third[(min(x, y), max(x, y))]
                       for y in range(n)) for x in range(n))


def _qh_hill_climb(k: int, seed: int):
    # climb on missing (row, value) slots: place value z in row x at a column
    # where the cell is empty, evicting at most the one cell of the column's
    # row that already holds z, so progress is never undone wholesale
    n = 2 * k

    for attempt in range(_MAX_RESTARTS):
        rng = Random(seed + attempt)
        rowval = [dict() for _ in range(n)]  # value -> column holding it
        cell = [[None] * n for _ in range(n)]
        missing = [(x, z) for x in range(n) for z in range(n) if x // 2 != z // 2]
        pos = {s: i for i, s in enumerate(missing)}

        def mark_missing(s):
            if s not in pos:
                pos[s] = len(missing)
                missing.append(s)

        def mark_filled(s):
            i = pos.pop(s)
            last = missing.pop()
            if i < len(missing):
                missing[i] = last
                pos[last] = i

        def unset(x, y):
            z = cell[x][y]
            cell[x][y] = cell[y][x] = None
            del rowval[x][z]
            del rowval[y][z]
            mark_missing((x, z))
            mark_missing((y, z))

        steps = 400 * n * n
        while missing and steps > 0:
            steps -= 1
            x, z = missing[rng.randrange(len(missing))]
            cols = [y for y in range(n) if y // 2 not in (x // 2, z // 2)]
            empty = [y for y in cols if cell[x][y] is None]
            if empty:
                prefer = [y for y in empty if z not in rowval[y]]
                pool = prefer or empty
                y = pool[rng.randrange(len(pool))]
            else:
                y = cols[rng.randrange(len(cols))]
                unset(x, y)
            holder = rowval[y].get(z)
            if holder is not None:
                unset(y, holder)
            cell[x][y] = cell[y][x] = z
            rowval[x][z] = y
            rowval[y][z] = x
            mark_filled((x, z))
            mark_filled((y, z))
        if not missing:
            return tuple(tuple(row) for row in cell)
    raise RuntimeError(f"no quasigroup with {k} holes found")


def _check_qh(q: QuasigroupWithHoles):
    n = 2 * q.k
    for x in range(n):
        seen = []
        for y in range(n):
            z = q.table[x][y]
            if x // 2 == y // 2:
                if z is not None:
                    raise AssertionError("hole cell is filled")
                continue
            if z != q.table[y][x]:
                raise AssertionError("table is not symmetric")
            if z // 2 in (x // 2, y // 2):
                raise AssertionError("product lands in an operand's hole")
            seen.append(z)
        if sorted(seen) != [z for z in range(n) if z // 2 != x // 2]:
            raise AssertionError(f"row {x} is not a bijection outside its hole")


@lru_cache(maxsize=None)
def build_quasigroup_with_holes(k: int) -> QuasigroupWithHoles:
    """Symmetric quasigroup of order 2k with holes {2i, 2i+1}; k >= 3."""
    if k < 3:
        raise ValueError("need at least three holes")
    if k % 2 == 1:
        table = _qh_from_hole_level(k)
    elif k % 3 in (0, 1):
        table = _qh_from_gdd(k)
    else:
        table = _qh_hill_climb(k, _CLIMB_SEED)
    q = QuasigroupWithHoles(k, table)
    _check_qh(q)
    return q
