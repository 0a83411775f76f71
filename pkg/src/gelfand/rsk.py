"""Row insertion, standard tableaux, and classical character oracles.

Tableaux are tuples of strictly increasing row tuples.  The irreducible
Hecke character is assembled from mu-unimodal permutations with a fixed
insertion tableau; the Murnaghan-Nakayama recursion provides an independent
integer oracle for its q=1 specialization.
"""

from __future__ import annotations

import bisect
import itertools
from functools import lru_cache

from . import perm
from .model_hecke import mu_descent_number
from .perm import Partition, Window
from .qpoly import ZERO, QPoly, minus_q_power
from .report import Check, Report

Tableau = tuple[tuple[int, ...], ...]

FIXEDPOINT_REPORT_CAP = 8


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    """Rows and columns strictly increase and the entries are exactly 1..n."""
    entries = [x for row in t for x in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for row in t:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for r in range(1, len(t)):
        if len(t[r]) > len(t[r - 1]):
            return False
        if any(t[r][c] <= t[r - 1][c] for c in range(len(t[r]))):
            return False
    return True


def rs_insert(p: Window) -> tuple[Tableau, Tableau]:
    """Row insertion; returns the insertion and recording tableaux.

    >>> rs_insert((2, 1))
    (((1,), (2,)), ((1,), (2,)))
    """
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        r = 0
        while True:
            if r == len(prows):
                prows.append([x])
                qrows.append([step])
                break
            row = prows[r]
            k = bisect.bisect_left(row, x)
            if k == len(row):
                row.append(x)
                qrows[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return tuple(map(tuple, prows)), tuple(map(tuple, qrows))


def enumerate_syt(sh: Partition) -> list[Tableau]:
    """All standard tableaux of the shape, in placement order."""
    n = sum(sh)
    rows: list[list[int]] = [[] for _ in sh]
    out: list[Tableau] = []

    def place(v: int) -> None:
        if v > n:
            out.append(tuple(map(tuple, rows)))
            return
        for r, row in enumerate(rows):
            if len(row) < sh[r] and (r == 0 or len(rows[r - 1]) > len(row)):
                row.append(v)
                place(v + 1)
                row.pop()

    place(1)
    return out


def tableau_descent_set(q: Tableau) -> set[int]:
    """Indices i with i+1 strictly below i in the tableau."""
    row_of = {x: r for r, row in enumerate(q) for x in row}
    n = len(row_of)
    return {i for i in range(1, n) if row_of[i + 1] > row_of[i]}


def conjugate_partition(sh: Partition) -> Partition:
    if not sh:
        return ()
    return tuple(sum(1 for part in sh if part > c) for c in range(sh[0]))


def odd_columns(sh: Partition) -> int:
    """Number of columns of odd height.

    >>> odd_columns((3, 1))
    2
    """
    return sum(1 for h in conjugate_partition(sh) if h % 2)


def superstandard_tableau(sh: Partition) -> Tableau:
    """Rows filled consecutively left to right, top to bottom."""
    rows = []
    v = 1
    for part in sh:
        rows.append(tuple(range(v, v + part)))
        v += part
    return tuple(rows)


@lru_cache(maxsize=None)
def _insertion_table(n: int) -> tuple[tuple[Window, Tableau], ...]:
    return tuple(
        (w, rs_insert(w)[0]) for w in itertools.permutations(range(1, n + 1))
    )


def irreducible_hecke_character(
    lam: Partition, mu: Partition, insertion_tableau: Tableau | None = None
) -> QPoly:
    """Signed sum of (-q)^(block descents) over mu-unimodal permutations
    whose insertion tableau is the chosen one of shape lam.

    The value does not depend on the choice of tableau.
    """
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError("lam and mu must partition the same n")
    p0 = insertion_tableau if insertion_tableau is not None else superstandard_tableau(lam)
    total = ZERO
    for w, ptab in _insertion_table(n):
        if ptab == p0 and perm.is_mu_unimodal(w, mu):
            total = total + minus_q_power(mu_descent_number(w, mu))
    return total


def _beta_to_partition(beta: tuple[int, ...]) -> Partition:
    m = len(beta)
    parts = tuple(beta[i] - (m - 1 - i) for i in range(m))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character value, by border-strip removal.

    >>> mn_character((2, 1), (3,))
    -1
    """
    if not mu:
        if lam:
            raise ValueError("size mismatch between lam and mu")
        return 1
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must partition the same n")
    k, rest = mu[0], mu[1:]
    m = len(lam)
    beta = tuple(lam[i] + (m - 1 - i) for i in range(m))
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b >= k and (b - k) not in beta_set:
            height = sum(1 for c in beta if b - k < c < b)
            new_beta = tuple(sorted((c for c in beta if c != b), reverse=True))
            new_beta = tuple(sorted(new_beta + (b - k,), reverse=True))
            total += (-1) ** height * mn_character(_beta_to_partition(new_beta), rest)
    return total


def character_dimension(lam: Partition) -> int:
    return len(enumerate_syt(lam))


def involution_fixedpoint_vs_oddcolumns(n: int) -> Report:
    """Involutions with f fixed points are counted by tableaux with f odd columns."""
    if n > FIXEDPOINT_REPORT_CAP:
        from .errors import CapacityError

        raise CapacityError(f"report capped at n={FIXEDPOINT_REPORT_CAP}, got {n}")
    inv_counts: dict[int, int] = {}
    for w in perm.enumerate_involutions(n):
        f = len(perm.fixed_points(w))
        inv_counts[f] = inv_counts.get(f, 0) + 1
    syt_counts: dict[int, int] = {}
    for lam in perm.partitions(n):
        syt_counts[odd_columns(lam)] = syt_counts.get(odd_columns(lam), 0) + len(
            enumerate_syt(lam)
        )
    checks = []
    for f in sorted(set(inv_counts) | set(syt_counts)):
        a = inv_counts.get(f, 0)
        b = syt_counts.get(f, 0)
        checks.append(
            Check(
                f"{f} fixed points vs {f} odd columns",
                a == b,
                f"{a} involutions, {b} tableaux",
            )
        )
    return Report("fixedpoints-vs-oddcolumns", n, tuple(checks))


def verify_rsk(n: int) -> Report:
    """Insertion properties, the tableau-count identities, and the character
    cross-checks (the latter only at small n, where sweeps over S_n are cheap)."""
    checks: list[Check] = []

    if n <= 6:
        seen: dict[tuple[Tableau, Tableau], Window] = {}
        bad: str | None = None
        for w in itertools.permutations(range(1, n + 1)):
            p, q = rs_insert(w)
            if shape(p) != shape(q) or not is_standard(p) or not is_standard(q):
                bad = f"malformed output at w={w}"
                break
            if (p, q) in seen:
                bad = f"collision between w={seen[(p, q)]} and w={w}"
                break
            seen[(p, q)] = w
            pi, qi = rs_insert(perm.inverse(w))
            if (pi, qi) != (q, p):
                bad = f"inverse symmetry fails at w={w}"
                break
            if (perm.is_involution(w)) != (p == q):
                bad = f"involution criterion fails at w={w}"
                break
            if perm.descent_set(w) != tableau_descent_set(q):
                bad = f"descent compatibility fails at w={w}"
                break
        checks.append(
            Check(
                "insertion is injective with symmetric, descent-compatible output",
                bad is None,
                f"all {len(seen)} permutations" if bad is None else bad,
            )
        )

    total_syt = sum(len(enumerate_syt(lam)) for lam in perm.partitions(n))
    n_inv = len(perm.enumerate_involutions(n))
    checks.append(
        Check(
            "tableau count equals involution count",
            total_syt == n_inv,
            f"{total_syt} tableaux, {n_inv} involutions",
        )
    )

    sub = involution_fixedpoint_vs_oddcolumns(n)
    checks.append(
        Check(
            "fixed-point counts match odd-column counts",
            sub.passed,
            "; ".join(f"{c.name}: {c.detail}" for c in sub.checks if not c.passed)
            or f"{len(sub.checks)} values of k",
        )
    )

    if n <= 5:
        from .model_hecke import hecke_model_character
        from .model_sn import model_basis

        basis = model_basis(n)
        lams = list(perm.partitions(n))
        bad = None
        for mu in lams:
            total = ZERO
            for lam in lams:
                total = total + irreducible_hecke_character(lam, mu)
            if total != hecke_model_character(mu, basis):
                bad = f"mu={mu}"
                break
        checks.append(
            Check(
                "irreducible characters sum to the model trace",
                bad is None,
                bad or f"{len(lams)} types checked",
            )
        )

        bad = None
        for lam in lams:
            tabs = enumerate_syt(lam)
            for mu in lams:
                vals = {
                    irreducible_hecke_character(lam, mu, t) for t in tabs
                }
                if len(vals) != 1:
                    bad = f"lam={lam}, mu={mu}"
                    break
            if bad:
                break
        checks.append(
            Check(
                "character value independent of the chosen tableau",
                bad is None,
                bad or "",
            )
        )

        bad = None
        for lam in lams:
            for mu in lams:
                if irreducible_hecke_character(lam, mu).evaluate(1) != mn_character(
                    lam, mu
                ):
                    bad = f"lam={lam}, mu={mu}"
                    break
            if bad:
                break
        checks.append(
            Check(
                "q=1 values match the border-strip recursion",
                bad is None,
                bad or "",
            )
        )

        bad = None
        for mu, rep in perm.conjugacy_class_reps(n):
            total = sum(mn_character(lam, mu) for lam in lams)
            if total != perm.square_roots_count(rep):
                bad = f"mu={mu}"
                break
        checks.append(
            Check(
                "summed irreducible characters count square roots",
                bad is None,
                bad or "",
            )
        )

    return Report("rsk", n, tuple(checks))
