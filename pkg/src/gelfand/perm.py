"""Permutations of {1..n} in window (one-line) notation.

A permutation ``p`` is a tuple with ``p[i-1]`` the image of ``i``; positions
and values are 1-based throughout.  Everything here is a pure function on
immutable tuples, so results may be shared freely across threads.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .errors import CapacityError

Window = tuple[int, ...]
Partition = tuple[int, ...]

# Largest n for which square roots are counted by exhausting S_n.
SQUARE_ROOTS_CAP = 9


def identity(n: int) -> Window:
    return tuple(range(1, n + 1))


def is_window(p: Sequence[int]) -> bool:
    """True when p is a bijection of {1..len(p)}."""
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p: Window, r: Window) -> Window:
    """Product acting as compose(p, r)(i) = p(r(i)).

    >>> compose((2, 3, 1), (2, 3, 1))
    (3, 1, 2)
    """
    if len(p) != len(r):
        raise ValueError(f"size mismatch: {len(p)} vs {len(r)}")
    return tuple(p[x - 1] for x in r)


def inverse(p: Window) -> Window:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x - 1] = i + 1
    return tuple(inv)


def conjugate(p: Window, w: Window) -> Window:
    """p w p^-1."""
    return compose(compose(p, w), inverse(p))


def generator(n: int, i: int) -> Window:
    """The adjacent transposition s_i = (i, i+1), for 1 <= i <= n-1."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def transposition(n: int, a: int, b: int) -> Window:
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def inversion_set(p: Window) -> set[tuple[int, int]]:
    """All pairs (i, j) with i < j whose order p reverses.

    >>> sorted(inversion_set((3, 1, 2)))
    [(1, 2), (1, 3)]
    """
    n = len(p)
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p[i - 1] > p[j - 1]
    }


def length(p: Window) -> int:
    """Coxeter length, computed as the inversion count."""
    return len(inversion_set(p))


def descent_set(p: Window) -> set[int]:
    """Generator indices i with p(i) > p(i+1)."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def descent_number(p: Window) -> int:
    return len(descent_set(p))


def support(p: Window) -> set[int]:
    """Positions moved by p."""
    return {i for i in range(1, len(p) + 1) if p[i - 1] != i}


def cycles(p: Window) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its least element, ordered by that element."""
    seen = [False] * len(p)
    out = []
    for i in range(1, len(p) + 1):
        if seen[i - 1]:
            continue
        cyc = []
        j = i
        while not seen[j - 1]:
            seen[j - 1] = True
            cyc.append(j)
            j = p[j - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Window) -> Partition:
    """Multiset of cycle lengths as a partition.

    >>> cycle_type((2, 3, 1, 4))
    (3, 1)
    """
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def cycle_notation(p: Window) -> str:
    """Cycle string omitting fixed points; "e" for the identity."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "e"


def multiplicities(ct: Partition) -> dict[int, int]:
    """Cycle-type multiplicity vector: part length -> number of occurrences."""
    out: dict[int, int] = {}
    for part in ct:
        out[part] = out.get(part, 0) + 1
    return out


def is_involution(p: Window) -> bool:
    return all(p[x - 1] == i + 1 for i, x in enumerate(p))


def involution_pairs(p: Window) -> tuple[tuple[int, int], ...]:
    """The 2-cycles of an involution as (a, b) pairs with a < b, sorted."""
    return tuple((i, p[i - 1]) for i in range(1, len(p) + 1) if p[i - 1] > i)


def fixed_points(p: Window) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(p) + 1) if p[i - 1] == i)


def enumerate_involutions(n: int) -> tuple[Window, ...]:
    """All involutions of S_n in lexicographic window order.

    >>> enumerate_involutions(2)
    ((1, 2), (2, 1))
    >>> len(enumerate_involutions(4))
    10
    """
    if n < 1:
        raise ValueError("n must be positive")
    out: list[Window] = []
    image = [0] * n

    def build(avail: tuple[int, ...]) -> None:
        if not avail:
            out.append(tuple(image))
            return
        a = avail[0]
        rest = avail[1:]
        image[a - 1] = a
        build(rest)
        for k, b in enumerate(rest):
            image[a - 1], image[b - 1] = b, a
            build(rest[:k] + rest[k + 1 :])

    build(tuple(range(1, n + 1)))
    return tuple(sorted(out))


def square_roots_count(p: Window) -> int:
    """Number of u with u*u = p, found by exhausting S_n.

    Deliberately brute force so it can serve as an oracle for closed-form
    counts; refuses n beyond SQUARE_ROOTS_CAP.
    """
    n = len(p)
    if n > SQUARE_ROOTS_CAP:
        raise CapacityError(
            f"square root enumeration capped at n={SQUARE_ROOTS_CAP}, got {n}"
        )
    return sum(
        1 for u in itertools.permutations(range(1, n + 1)) if compose(u, u) == p
    )


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 1 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in descending lexicographic order, (n) first."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_mu_unimodal(p: Window, mu: Partition) -> bool:
    """True when every mu-block of the window strictly rises then strictly falls.

    >>> is_mu_unimodal((1, 3, 2), (3,))
    True
    >>> is_mu_unimodal((2, 1, 3), (3,))
    False
    """
    if sum(mu) != len(p):
        raise ValueError("mu must be a partition of len(p)")
    pos = 0
    for part in mu:
        block = p[pos : pos + part]
        k = 1
        while k < part and block[k] > block[k - 1]:
            k += 1
        while k < part and block[k] < block[k - 1]:
            k += 1
        if k < part:
            return False
        pos += part
    return True


def conjugacy_class_reps(n: int) -> list[tuple[Partition, Window]]:
    """One representative per cycle type, built from consecutive-block cycles.

    >>> dict(conjugacy_class_reps(3))[(3,)]
    (2, 3, 1)
    """
    out = []
    for ct in partitions(n):
        image = list(range(1, n + 1))
        start = 1
        for part in ct:
            for j in range(start, start + part - 1):
                image[j - 1] = j + 1
            image[start + part - 2] = start
            start += part
        out.append((ct, tuple(image)))
    return out


def bfs_word_lengths(n: int) -> dict[Window, int]:
    """Minimal generator word length of every element, by BFS on the Cayley graph.

    Oracle for ``length`` and the descent criterion; exponential in n.
    """
    gens = [generator(n, i) for i in range(1, n)]
    dist = {identity(n): 0}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in dist:
                    dist[q] = dist[p] + 1
                    nxt.append(q)
        frontier = nxt
    return dist


def random_window(n: int, rng: random.Random) -> Window:
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return tuple(vals)
