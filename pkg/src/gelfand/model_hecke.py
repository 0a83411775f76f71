"""q-deformation of the signed-conjugation model, acting on involutions.

The generator T_i acts on C_w through four cases: -q C_w or C_w when s_i
fixes w by conjugation (descent or not), and (1-q) C_w + q C_{s w s} or
C_{s w s} when conjugation moves w up or down in the involutive weak order.
That order is graded by the involutive length, computed here both by a
closed formula and by a BFS oracle over the conjugation graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Mapping

from . import perm
from .errors import CapacityError, InternalConsistencyError
from .model_sn import ModelBasis, model_basis, rho_generator_matrix
from .perm import Partition, Window
from .qpoly import ONE, Q, ZERO, PolyMatrix, QPoly, minus_q_power
from .report import Check, Report

HECKE_VERIFY_CAP = 6
ORACLE_CAP = 8

CaseTag = Literal["fixed_descent", "fixed_nondescent", "up", "down"]


def minimal_involution(n: int, k: int) -> Window:
    """s_1 s_3 ... s_{2k-1}: the base point of the involutions with k 2-cycles."""
    w = list(range(1, n + 1))
    for i in range(k):
        w[2 * i], w[2 * i + 1] = w[2 * i + 1], w[2 * i]
    return tuple(w)


def involutive_length(w: Window) -> int:
    """Closed formula: excess support sum plus half the excess inversions.

    >>> involutive_length((2, 1, 4, 3))
    0
    >>> involutive_length((4, 3, 2, 1))
    2
    """
    pairs = perm.involution_pairs(w)
    k = len(pairs)
    supp = sorted(perm.support(w))
    base = sum(supp) - k * (2 * k + 1)
    rank = {t: j for j, t in enumerate(supp)}
    restricted = sum(
        1
        for x in range(2 * k)
        for y in range(x + 1, 2 * k)
        if rank[w[supp[x] - 1]] > rank[w[supp[y] - 1]]
    )
    half, rem = divmod(restricted - k, 2)
    if rem:
        raise InternalConsistencyError(f"odd inversion excess for {w}")
    return base + half


@lru_cache(maxsize=None)
def _conjugation_distances(n: int, k: int) -> dict[Window, int]:
    """BFS distances from the minimal involution in the conjugation graph.

    The distance to w equals the minimum length of a conjugator carrying the
    base point to w: a reduced word for any conjugator walks the graph one
    generator at a time, and any walk yields a conjugator of its length.
    """
    gens = [perm.generator(n, i) for i in range(1, n)]
    start = minimal_involution(n, k)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for s in gens:
                u = perm.compose(s, perm.compose(v, s))
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def involutive_length_oracle(w: Window) -> int:
    """Shortest-conjugator length of an involution, by BFS; capped at n=8."""
    n = len(w)
    if n > ORACLE_CAP:
        raise CapacityError(f"involutive length oracle capped at n={ORACLE_CAP}")
    if not perm.is_involution(w):
        raise ValueError(f"{w} is not an involution")
    return _conjugation_distances(n, len(perm.involution_pairs(w)))[w]


@dataclass(frozen=True)
class InvolutiveOrderData:
    """Grading and covers of the involutive weak order on I_n."""

    n: int
    lengths: Mapping[Window, int]
    cover_edges: tuple[tuple[Window, int, Window], ...]


@lru_cache(maxsize=None)
def involutive_order(n: int) -> InvolutiveOrderData:
    basis = model_basis(n)
    lengths = {w: involutive_length(w) for w in basis.involutions}
    edges = []
    for w in basis.involutions:
        for i in range(1, n):
            s = perm.generator(n, i)
            v = perm.compose(s, perm.compose(w, s))
            if v != w and lengths[v] == lengths[w] + 1:
                edges.append((w, i, v))
    return InvolutiveOrderData(n, lengths, tuple(edges))


def order_relation(w: Window, i: int) -> CaseTag:
    """Which of the four action cases applies to (s_i, w)."""
    s = perm.generator(len(w), i)
    v = perm.compose(s, perm.compose(w, s))
    if v == w:
        return "fixed_descent" if i in perm.descent_set(w) else "fixed_nondescent"
    delta = involutive_length(v) - involutive_length(w)
    if delta == 1:
        return "up"
    if delta == -1:
        return "down"
    raise InternalConsistencyError(
        f"conjugation by s_{i} changes the involutive length of {w} by {delta}"
    )


def rho_q_generator(i: int, basis: ModelBasis) -> PolyMatrix:
    """Matrix of T_i: at most two nonzero entries per column."""
    n = basis.n
    s = perm.generator(n, i)
    entries: dict[tuple[int, int], QPoly] = {}
    for c, w in enumerate(basis.involutions):
        tag = order_relation(w, i)
        if tag == "fixed_descent":
            entries[(c, c)] = -Q
        elif tag == "fixed_nondescent":
            entries[(c, c)] = ONE
        else:
            r = basis.index[perm.compose(s, perm.compose(w, s))]
            if tag == "up":
                entries[(c, c)] = ONE - Q
                entries[(r, c)] = Q
            else:
                entries[(r, c)] = ONE
    return PolyMatrix(basis.dim, entries)


def rho_q_of_word(word: list[int] | tuple[int, ...], basis: ModelBasis) -> PolyMatrix:
    """Ordered product of generator matrices; the empty word is the identity."""
    out = PolyMatrix.identity(basis.dim)
    for i in word:
        out = out @ rho_q_generator(i, basis)
    return out


def t_mu_word(mu: Partition) -> list[int]:
    """Indices 1..n-1 with the partial sums of mu left out.

    >>> t_mu_word((2, 1))
    [1]
    """
    n = sum(mu)
    cuts = set()
    acc = 0
    for part in mu[:-1]:
        acc += part
        cuts.add(acc)
    return [i for i in range(1, n) if i not in cuts]


def mu_descent_number(w: Window, mu: Partition) -> int:
    """Descents of w that are not block boundaries of mu."""
    cuts = set()
    acc = 0
    for part in mu[:-1]:
        acc += part
        cuts.add(acc)
    return len(perm.descent_set(w) - cuts)


def hecke_model_character(mu: Partition, basis: ModelBasis) -> QPoly:
    """Trace of the model at the subproduct element of type mu."""
    return rho_q_of_word(t_mu_word(mu), basis).trace()


def mu_unimodal_character(mu: Partition) -> QPoly:
    """Signed generating function over mu-unimodal involutions.

    >>> mu_unimodal_character((3,))
    QPoly('1 - q + q^2')
    """
    n = sum(mu)
    total = ZERO
    for w in perm.enumerate_involutions(n):
        if perm.is_mu_unimodal(w, mu):
            total = total + minus_q_power(mu_descent_number(w, mu))
    return total


def _orbit_interval_witness(n: int) -> str | None:
    """Shape check for every <s_i, s_{i+1}> orbit inside the weak order.

    Size-1 orbits are doubly fixed without descents, size-3 orbits are chains
    of consecutive lengths, size-6 orbits form the hexagonal interval with a
    unique minimum and maximum.
    """
    from .model_sn import orbit_under_pair

    lengths = involutive_order(n).lengths
    for i in range(1, n - 1):
        done = set()
        for w in model_basis(n).involutions:
            orbit = orbit_under_pair(i, w)
            if orbit in done:
                continue
            done.add(orbit)
            levels = sorted(lengths[v] for v in orbit)
            if len(orbit) == 1:
                if order_relation(w, i) != "fixed_nondescent" or order_relation(
                    w, i + 1
                ) != "fixed_nondescent":
                    return f"size-1 orbit with a descent: i={i}, w={w}"
            elif len(orbit) == 3:
                lo = levels[0]
                if levels != [lo, lo + 1, lo + 2]:
                    return f"size-3 orbit not a chain: i={i}, levels={levels}"
            elif len(orbit) == 6:
                lo = levels[0]
                if levels != [lo, lo + 1, lo + 1, lo + 2, lo + 2, lo + 3]:
                    return f"size-6 orbit not hexagonal: i={i}, levels={levels}"
                bottom = [v for v in orbit if lengths[v] == lo][0]
                si = perm.generator(n, i)
                sj = perm.generator(n, i + 1)
                a = perm.compose(si, perm.compose(bottom, si))
                b = perm.compose(sj, perm.compose(bottom, sj))
                ab = perm.compose(sj, perm.compose(a, sj))
                ba = perm.compose(si, perm.compose(b, si))
                top = perm.compose(si, perm.compose(ab, si))
                if (
                    len({bottom, a, b, ab, ba, top}) != 6
                    or [lengths[v] for v in (a, b)] != [lo + 1, lo + 1]
                    or [lengths[v] for v in (ab, ba)] != [lo + 2, lo + 2]
                    or lengths[top] != lo + 3
                    or top != perm.compose(sj, perm.compose(ba, sj))
                ):
                    return f"size-6 orbit lacks the hexagon structure: i={i}, w={bottom}"
            else:
                return f"orbit of size {len(orbit)} at i={i}, w={w}"
    return None


def verify_hecke_model(n: int, *, cap: int = HECKE_VERIFY_CAP) -> Report:
    """Check the defining relations, the grading, and the trace identity."""
    if not 2 <= n <= cap:
        raise CapacityError(f"verify_hecke_model needs 2 <= n <= {cap}, got {n}")
    basis = model_basis(n)
    checks: list[Check] = []

    bad_len = [
        w
        for w in basis.involutions
        if involutive_length(w) != involutive_length_oracle(w)
    ]
    checks.append(
        Check(
            "involutive length formula matches the BFS oracle",
            not bad_len,
            f"{basis.dim} involutions" if not bad_len else f"fails at w={bad_len[0]}",
        )
    )

    case_bad = None
    tags: dict[str, int] = {}
    try:
        for w in basis.involutions:
            for i in range(1, n):
                tag = order_relation(w, i)
                tags[tag] = tags.get(tag, 0) + 1
    except InternalConsistencyError as exc:
        case_bad = str(exc)
    checks.append(
        Check(
            "every (generator, involution) pair falls in one of the four cases",
            case_bad is None,
            f"case counts {dict(sorted(tags.items()))}" if case_bad is None else case_bad,
        )
    )

    grading_bad = [
        w
        for w in basis.involutions
        if involutive_length(w) > 0
        and not any(order_relation(w, i) == "down" for i in range(1, n))
    ]
    checks.append(
        Check(
            "every non-minimal involution has a downward cover",
            not grading_bad,
            "" if not grading_bad else f"fails at w={grading_bad[0]}",
        )
    )

    interval_witness = _orbit_interval_witness(n)
    checks.append(
        Check(
            "orbit intervals are points, chains or hexagons",
            interval_witness is None,
            interval_witness or "",
        )
    )

    gens = {i: rho_q_generator(i, basis) for i in range(1, n)}
    ident = PolyMatrix.identity(basis.dim)

    quad_bad = [
        i
        for i, m in gens.items()
        if m @ m != m.scale(ONE - Q).add(ident.scale(Q))
    ]
    checks.append(
        Check(
            "quadratic relation (T + q)(T - 1) = 0 per generator",
            not quad_bad,
            "" if not quad_bad else f"fails at i={quad_bad[0]}",
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

    braid_bad = [
        i
        for i in range(1, n - 1)
        if gens[i] @ gens[i + 1] @ gens[i] != gens[i + 1] @ gens[i] @ gens[i + 1]
    ]
    checks.append(
        Check(
            "braid relation for adjacent generators",
            not braid_bad,
            "" if not braid_bad else f"fails at i={braid_bad[0]}",
        )
    )

    q1_bad = [
        i
        for i, m in gens.items()
        if m.specialize(1) != rho_generator_matrix(i, basis).entry_dict()
    ]
    checks.append(
        Check(
            "q=1 specialization equals the group model generators",
            not q1_bad,
            "" if not q1_bad else f"fails at i={q1_bad[0]}",
        )
    )

    trace_bad = None
    mus = list(perm.partitions(n))
    for mu in mus:
        lhs = hecke_model_character(mu, basis)
        rhs = mu_unimodal_character(mu)
        if lhs != rhs:
            trace_bad = (mu, lhs, rhs)
            break
    checks.append(
        Check(
            "trace equals the signed unimodal-involution sum for every type",
            trace_bad is None,
            f"{len(mus)} types checked"
            if trace_bad is None
            else f"mu={trace_bad[0]}: trace={trace_bad[1]} sum={trace_bad[2]}",
        )
    )

    return Report("hecke", n, tuple(checks))


def poset_dot(n: int) -> str:
    """DOT rendering of the involutive weak order, clustered by cycle type."""
    basis = model_basis(n)
    data = involutive_order(n)
    by_type: dict[int, list[int]] = {}
    for idx, w in enumerate(basis.involutions):
        by_type.setdefault(len(perm.involution_pairs(w)), []).append(idx)
    lines = ["digraph involutive_weak_order {", "  rankdir=BT;", "  node [shape=box];"]
    for k in sorted(by_type):
        fixed = n - 2 * k
        label = f"cycle type 2^{k} 1^{fixed}"
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="{label}";')
        for idx in by_type[k]:
            w = basis.involutions[idx]
            lines.append(
                f'    v{idx} [label="{perm.cycle_notation(w)}\\nlen={data.lengths[w]}"];'
            )
        lines.append("  }")
    edges = sorted(
        (basis.index[w], i, basis.index[v]) for (w, i, v) in data.cover_edges
    )
    for src, i, dst in edges:
        lines.append(f'  v{src} -> v{dst} [label="s{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
