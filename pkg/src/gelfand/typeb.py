"""Signed-conjugation model for the hyperoctahedral group B_n.

Elements are signed windows: tuples of nonzero integers whose absolute
values form a permutation of {1..n}.  The generator s_0 negates position 1;
s_1..s_{n-1} are the adjacent transpositions.  The sign rule for s_0 uses
the signed descent set (w(1) < 0), while the rule for s_i uses the descents
of the underlying unsigned permutation.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from . import perm
from .errors import CapacityError
from .model_sn import ModelBasis, SignedPermMatrix
from .perm import Window
from .report import Check, Report

SignedWindow = tuple[int, ...]

TYPEB_VERIFY_CAP = 4
TYPEB_SLOW_CAP = 5


def b_identity(n: int) -> SignedWindow:
    return tuple(range(1, n + 1))


def is_signed_window(w) -> bool:
    return all(isinstance(x, int) and x != 0 for x in w) and sorted(
        abs(x) for x in w
    ) == list(range(1, len(w) + 1))


def b_compose(u: SignedWindow, v: SignedWindow) -> SignedWindow:
    """Product acting as b_compose(u, v)(i) = u(v(i)), with u(-j) = -u(j)."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def b_inverse(w: SignedWindow) -> SignedWindow:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        if x > 0:
            inv[x - 1] = i + 1
        else:
            inv[-x - 1] = -(i + 1)
    return tuple(inv)


def b_generator(n: int, i: int) -> SignedWindow:
    """s_0 negates position 1; s_i (i >= 1) swaps positions i and i+1."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def b_elements(n: int) -> Iterator[SignedWindow]:
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, p))


def signed_sort_key(w: SignedWindow) -> tuple[tuple[int, int], ...]:
    """Orders values 1 < -1 < 2 < -2 < ..., so the identity sorts first."""
    return tuple((abs(x), 0 if x > 0 else 1) for x in w)


def b_is_involution(w: SignedWindow) -> bool:
    return b_compose(w, w) == b_identity(len(w))


@lru_cache(maxsize=None)
def b_involutions(n: int) -> tuple[SignedWindow, ...]:
    """All involutions of B_n in canonical order.

    >>> b_involutions(1)
    ((1,), (-1,))
    """
    return tuple(
        sorted((w for w in b_elements(n) if b_is_involution(w)), key=signed_sort_key)
    )


@lru_cache(maxsize=None)
def b_model_basis(n: int) -> ModelBasis:
    invs = b_involutions(n)
    return ModelBasis(n=n, involutions=invs, index={w: i for i, w in enumerate(invs)})


def abs_window(w: SignedWindow) -> Window:
    return tuple(abs(x) for x in w)


def b_descent_set(w: SignedWindow) -> set[int]:
    """0 when the first value is negative, plus the window descents."""
    out = {i for i in range(1, len(w)) if w[i - 1] > w[i]}
    if w[0] < 0:
        out.add(0)
    return out


def b_bfs_word_lengths(n: int) -> dict[SignedWindow, int]:
    """Minimal generator word length per element, by BFS on the Cayley graph."""
    return {w: len(word) for w, word in b_shortest_words(n).items()}


@lru_cache(maxsize=None)
def b_shortest_words(n: int) -> dict[SignedWindow, tuple[int, ...]]:
    """A shortest generator word per element (lexicographically least one)."""
    gens = [b_generator(n, i) for i in range(n)]
    words: dict[SignedWindow, tuple[int, ...]] = {b_identity(n): ()}
    frontier = [b_identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for i, s in enumerate(gens):
                h = b_compose(g, s)
                if h not in words:
                    words[h] = words[g] + (i,)
                    nxt.append(h)
        frontier = nxt
    return words


def rho_b_generator(i: int, basis: ModelBasis) -> SignedPermMatrix:
    """Signed conjugation by a generator on the involution basis."""
    n = basis.n
    s = b_generator(n, i)
    rows = []
    signs = []
    for w in basis.involutions:
        sws = b_compose(s, b_compose(w, s))
        rows.append(basis.index[sws])
        if sws == w:
            if i == 0:
                descent = 0 in b_descent_set(w)
            else:
                descent = i in perm.descent_set(abs_window(w))
            signs.append(-1 if descent else 1)
        else:
            signs.append(1)
    return SignedPermMatrix(basis.dim, tuple(rows), tuple(signs))


def rho_b_of_element(g: SignedWindow, basis: ModelBasis) -> SignedPermMatrix:
    """Matrix of an arbitrary element, via a shortest generator word."""
    n = basis.n
    word = b_shortest_words(n)[g]
    out = SignedPermMatrix.identity(basis.dim)
    for i in word:
        out = out @ rho_b_generator(i, basis)
    return out


def b_square_roots_count(g: SignedWindow) -> int:
    """Number of u in B_n with u*u = g, by exhaustion; capped at n=5."""
    n = len(g)
    if n > TYPEB_SLOW_CAP:
        raise CapacityError(f"square root enumeration capped at n={TYPEB_SLOW_CAP}")
    return sum(1 for u in b_elements(n) if b_compose(u, u) == g)


def b_conjugacy_class_reps(n: int) -> tuple[SignedWindow, ...]:
    """Canonical (sort-key minimal) representative per conjugacy class."""
    elements = list(b_elements(n))
    seen: set[SignedWindow] = set()
    reps = []
    for g in sorted(elements, key=signed_sort_key):
        if g in seen:
            continue
        orbit = {b_compose(h, b_compose(g, b_inverse(h))) for h in elements}
        seen.update(orbit)
        reps.append(g)
    return tuple(reps)


def pairs_of_partitions_count(n: int) -> int:
    """Number of pairs of partitions with total size n (the B_n class count)."""
    p = [len(list(perm.partitions(k))) for k in range(n + 1)]
    return sum(p[k] * p[n - k] for k in range(n + 1))


def verify_b_model(n: int, *, cap: int = TYPEB_VERIFY_CAP) -> Report:
    """Check the type-B relations and the square-root trace identity."""
    if not 1 <= n <= cap:
        raise CapacityError(f"verify_b_model needs 1 <= n <= {cap}, got {n}")
    basis = b_model_basis(n)
    checks: list[Check] = []
    gens = {i: rho_b_generator(i, basis) for i in range(n)}
    ident = SignedPermMatrix.identity(basis.dim)

    squares = [i for i, m in gens.items() if m @ m != ident]
    checks.append(
        Check(
            "generator squares are the identity",
            not squares,
            "" if not squares else f"fails at i={squares[0]}",
        )
    )

    if n >= 2:
        m01 = gens[0] @ gens[1]
        checks.append(
            Check(
                "s0 s1 has order four",
                m01 @ m01 @ m01 @ m01 == ident,
                "",
            )
        )

    braid_bad = [
        i
        for i in range(1, n - 1)
        if gens[i] @ gens[i + 1] @ gens[i] != gens[i + 1] @ gens[i] @ gens[i + 1]
    ]
    checks.append(
        Check(
            "braid relation for adjacent transpositions",
            not braid_bad,
            "" if not braid_bad else f"fails at i={braid_bad[0]}",
        )
    )

    comm_bad = [
        (i, j)
        for i in gens
        for j in gens
        if j > i + 1 and gens[i] @ gens[j] != gens[j] @ gens[i]
    ]
    checks.append(
        Check(
            "distant generators commute",
            not comm_bad,
            "" if not comm_bad else f"fails at {comm_bad[0]}",
        )
    )

    elements = (
        sorted(b_elements(n), key=signed_sort_key)
        if n <= 3
        else list(b_conjugacy_class_reps(n))
    )
    fs_bad = None
    for g in elements:
        tr = rho_b_of_element(g, basis).trace()
        roots = b_square_roots_count(g)
        if tr != roots:
            fs_bad = (g, tr, roots)
            break
    checks.append(
        Check(
            "trace counts square roots",
            fs_bad is None,
            f"{len(elements)} {'elements' if n <= 3 else 'class representatives'}"
            if fs_bad is None
            else f"g={fs_bad[0]}: trace={fs_bad[1]} roots={fs_bad[2]}",
        )
    )

    dim = basis.dim
    roots_of_id = b_square_roots_count(b_identity(n))
    tr_id = rho_b_of_element(b_identity(n), basis).trace()
    checks.append(
        Check(
            "dimension equals the square-root count of the identity",
            dim == roots_of_id == tr_id,
            f"dim={dim}, roots={roots_of_id}, trace={tr_id}",
        )
    )

    class_count = pairs_of_partitions_count(n)
    found_classes = len(b_conjugacy_class_reps(n))
    checks.append(
        Check(
            "class count equals the pairs-of-partitions count",
            found_classes == class_count,
            f"{found_classes} classes, {class_count} partition pairs",
        )
    )

    return Report("typeb", n, tuple(checks))
