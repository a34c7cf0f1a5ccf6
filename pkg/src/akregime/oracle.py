"""Naive brute-force verifiers, independent of the fast modules.

Everything here is recomputed from the definitions: residues, normal and
good nodes, Kleshchev recursion (no memoization), the q = 1 criterion,
content multisets, and the parameter-relation scans.  None of it calls into
the kernel, simples or blocks, so agreement between this module and the
fast path is a genuine two-route check.  Only the multipartition
enumeration is shared plumbing (it has its own generating-function
cross-check in the test suite).

The six content lemmas that pin down the exceptional block are exposed
under descriptive names:

    no-extra-relations          only the witness pair is q-power related
    contents-disjoint           component contents never meet
    content-determines-part     a component is recovered from its content
    outside-content-transfers   contents away from the witness pair match
    row-column-gap              u_i q^(a1) misses short family candidates
    witness-content-transfers   contents at the witness component match
"""

from dataclasses import dataclass
from itertools import product

from . import structure
from .combinatorics import Multipartition, enumerate_multipartitions
from .params import ParamScheme

SEMISIMPLE = "semisimple"
ALMOST_SEMISIMPLE = "almost_semisimple"
OTHER = "other"


# ---------------------------------------------------------------------------
# First-principles helpers (deliberate duplicates of the fast-path logic).

def _residue(scheme: ParamScheme, k: int, row: int, col: int) -> tuple[int, int]:
    exp = scheme.shifts[k - 1] + col - row
    if scheme.e > 0:
        exp = exp % scheme.e
    return (scheme.classes[k - 1], exp)


def _removables(mp):
    out = []
    for k, part in enumerate(mp, start=1):
        for r in range(1, len(part) + 1):
            here = part[r - 1]
            next_row = part[r] if r < len(part) else 0
            if here > next_row:
                out.append((k, r, here))
    return out


def _addables(mp):
    out = []
    for k, part in enumerate(mp, start=1):
        for r in range(1, len(part) + 2):
            here = part[r - 1] if r <= len(part) else 0
            prev_row = part[r - 2] if r >= 2 else None
            if prev_row is None or prev_row > here:
                out.append((k, r, here + 1))
    return out


def _is_below(y, x) -> bool:
    """Node y below node x: later component, or same component lower row."""
    return (y[0], y[1]) > (x[0], x[1])


def _strictly_between(y, x, xp) -> bool:
    return _is_below(y, x) and _is_below(xp, y)


def oracle_good_node(scheme: ParamScheme, mp: Multipartition, residue):
    """Good node of the residue, from the definition, or None."""
    rem = [x for x in _removables(mp) if _residue(scheme, *x) == residue]
    add = [x for x in _addables(mp) if _residue(scheme, *x) == residue]
    rem.sort(key=lambda x: (x[0], x[1]))
    for x in rem:
        normal = True
        for xp in add:
            if not _is_below(xp, x):
                continue
            n_rem = sum(1 for y in rem if _strictly_between(y, x, xp))
            n_add = sum(1 for y in add if _strictly_between(y, x, xp))
            if n_rem <= n_add:
                normal = False
                break
        if normal:
            return x
    return None


def _without(mp, node):
    k, r, _ = node
    part = mp[k - 1]
    shrunk = part[r - 1] - 1
    rows = part[: r - 1] + ((shrunk,) if shrunk else ()) + part[r:]
    return mp[: k - 1] + (rows,) + mp[k:]


def oracle_kleshchev(scheme: ParamScheme, mp: Multipartition) -> bool:
    """Plain recursive Kleshchev evaluation, no memoization.  e != 1."""
    if all(not part for part in mp):
        return True
    seen = set()
    for x in _removables(mp):
        res = _residue(scheme, *x)
        if res in seen:
            continue
        seen.add(res)
        good = oracle_good_node(scheme, mp, res)
        if good is not None and oracle_kleshchev(scheme, _without(mp, good)):
            return True
    return False


def _q1_nonzero(scheme: ParamScheme, mp: Multipartition) -> bool:
    for s in range(scheme.m):
        for t in range(s + 1, scheme.m):
            if scheme.classes[s] == scheme.classes[t] and mp[s]:
                return False
    return True


def oracle_simple_count(scheme: ParamScheme, n: int) -> int:
    mps = enumerate_multipartitions(scheme.m, n)
    if scheme.e == 1:
        return sum(1 for mp in mps if _q1_nonzero(scheme, mp))
    return sum(1 for mp in mps if oracle_kleshchev(scheme, mp))


def oracle_kind(scheme: ParamScheme, n: int) -> str:
    total = len(enumerate_multipartitions(scheme.m, n))
    count = oracle_simple_count(scheme, n)
    if count == total:
        return SEMISIMPLE
    if count == total - 1:
        return ALMOST_SEMISIMPLE
    return OTHER


def _relations_window(scheme: ParamScheme, bound: int):
    """All (i, j, c) with i < j, |c| < bound and u_j = q^c u_i."""
    out = []
    for i in range(1, scheme.m + 1):
        for j in range(i + 1, scheme.m + 1):
            if scheme.classes[i - 1] != scheme.classes[j - 1]:
                continue
            diff = scheme.shifts[j - 1] - scheme.shifts[i - 1]
            for c in range(-bound + 1, bound):
                if (scheme.e == 0 and c == diff) or (
                    scheme.e > 0 and (c - diff) % scheme.e == 0
                ):
                    out.append((i, j, c))
    return out


# ---------------------------------------------------------------------------
# Content lemma suite.

@dataclass(frozen=True)
class LemmaReport:
    name: str
    passed: bool
    counterexample: str | None = None


def _part_content(scheme, k, part):
    return tuple(
        sorted(
            _residue(scheme, k, r, c)
            for r in range(1, len(part) + 1)
            for c in range(1, part[r - 1] + 1)
        )
    )


def _full_content(scheme, mp):
    entries = []
    for k, part in enumerate(mp, start=1):
        entries.extend(_part_content(scheme, k, part))
    return tuple(sorted(entries))


def _witness_pair(scheme: ParamScheme, n: int) -> tuple[int, int]:
    """First pair (i, j), i != j, with u_j = q^(n-1) u_i."""
    for i in range(1, scheme.m + 1):
        for j in range(1, scheme.m + 1):
            if i == j or scheme.classes[i - 1] != scheme.classes[j - 1]:
                continue
            diff = scheme.shifts[j - 1] - scheme.shifts[i - 1]
            if (scheme.e == 0 and diff == n - 1) or (
                scheme.e > 0 and (diff - (n - 1)) % scheme.e == 0
            ):
                return (i, j)
    raise ValueError("no witness relation u_j = q^(n-1) u_i in the scheme")


def verify_lemmas(scheme: ParamScheme, n: int) -> dict[str, LemmaReport]:
    """Exhaustively instantiate the six content lemmas over all
    multipartitions (and pairs) of n.  Reports carry a counterexample on
    failure; hypotheses assume the almost-semisimple standing assumption."""
    i, j = _witness_pair(scheme, n)
    mps = enumerate_multipartitions(scheme.m, n)
    reports: dict[str, LemmaReport] = {}

    def record(name, counterexample=None):
        reports[name] = LemmaReport(name, counterexample is None, counterexample)

    # no-extra-relations: k outside the witness pair is never q-power related.
    relations = _relations_window(scheme, n)
    oriented = relations + [(b, a, -c) for a, b, c in relations]
    bad = next(((k, ell, c) for k, ell, c in oriented if k not in (i, j)), None)
    record("no-extra-relations", None if bad is None else f"u_{bad[0]} = q^{bad[2]} u_{bad[1]}")

    # contents-disjoint: component contents of one multipartition never meet.
    bad = None
    for alpha in mps:
        contents = [set(_part_content(scheme, k, part)) for k, part in enumerate(alpha, 1)]
        for r in range(scheme.m):
            for s in range(r + 1, scheme.m):
                common = contents[r] & contents[s]
                if common:
                    bad = f"alpha={alpha} components {r + 1},{s + 1} share {sorted(common)[0]}"
                    break
            if bad:
                break
        if bad:
            break
    record("contents-disjoint", bad)

    # content-determines-part: within one component slot, content is injective.
    parts_seen = sorted({part for mp in mps for part in mp})
    bad = None
    for k in range(1, scheme.m + 1):
        for a in range(len(parts_seen)):
            for b in range(a + 1, len(parts_seen)):
                if _part_content(scheme, k, parts_seen[a]) == _part_content(
                    scheme, k, parts_seen[b]
                ):
                    bad = f"component {k}: {parts_seen[a]} vs {parts_seen[b]}"
                    break
            if bad:
                break
        if bad:
            break
    record("content-determines-part", bad)

    # Group by full content once, for the two transfer lemmas.
    groups: dict[tuple, list[Multipartition]] = {}
    for mp in mps:
        groups.setdefault(_full_content(scheme, mp), []).append(mp)
    pairs = [
        (alpha, beta)
        for group in groups.values()
        for alpha in group
        for beta in group
        if alpha != beta
    ]

    # outside-content-transfers (components k outside the witness pair).
    bad = None
    for alpha, beta in pairs:
        for k in range(1, scheme.m + 1):
            if k in (i, j):
                continue
            beta_content = set(_part_content(scheme, k, beta[k - 1]))
            for x in _part_content(scheme, k, alpha[k - 1]):
                if x not in beta_content:
                    bad = f"alpha={alpha} beta={beta} k={k} x={x}"
                    break
            if bad:
                break
        if bad:
            break
    record("outside-content-transfers", bad)

    # row-column-gap: if a1 + a2 < n then u_i q^(a1) misses cont(alpha).
    bad = None
    for alpha in mps:
        a1 = alpha[i - 1][0] if alpha[i - 1] else 0
        a2 = len(alpha[j - 1])
        if a1 + a2 >= n:
            continue
        exp = scheme.shifts[i - 1] + a1
        if scheme.e > 0:
            exp %= scheme.e
        if (scheme.classes[i - 1], exp) in set(_full_content(scheme, alpha)):
            bad = f"alpha={alpha} a1={a1} a2={a2}"
            break
    record("row-column-gap", bad)

    # witness-content-transfers: contents at component i match across a block.
    bad = None
    for alpha, beta in pairs:
        a1 = alpha[i - 1][0] if alpha[i - 1] else 0
        a2 = len(alpha[j - 1])
        if a1 + a2 >= n:
            continue
        beta_content = set(_part_content(scheme, i, beta[i - 1]))
        for x in _part_content(scheme, i, alpha[i - 1]):
            if x not in beta_content:
                bad = f"alpha={alpha} beta={beta} x={x}"
                break
        if bad:
            break
    record("witness-content-transfers", bad)

    return reports


# ---------------------------------------------------------------------------
# Sweep grid and the regime locus.

@dataclass(frozen=True)
class SweepGrid:
    m_values: tuple[int, ...] = (1, 2, 3)
    n_values: tuple[int, ...] = (2, 3, 4)
    e_values: tuple[int, ...] | None = None  # None: 0..2n+1 per n
    class_patterns: tuple[str, ...] = ("all-same", "all-distinct", "one-merged-pair")


@dataclass(frozen=True)
class GridPointResult:
    m: int
    n: int
    scheme: ParamScheme
    fast_kind: str
    oracle_kind: str
    agree: bool
    predicted_regime: bool
    predicted_match: bool


def _class_tuples(m: int, patterns) -> list[tuple[int, ...]]:
    out = []
    if "all-same" in patterns:
        out.append((0,) * m)
    if "all-distinct" in patterns:
        out.append(tuple(range(m)))
    if "one-merged-pair" in patterns and m >= 2:
        for a in range(m):
            for b in range(a + 1, m):
                labels: list[int] = []
                mapping: dict[int, int] = {}
                for idx in range(m):
                    key = a if idx == b else idx
                    if key not in mapping:
                        mapping[key] = len(mapping)
                    labels.append(mapping[key])
                out.append(tuple(labels))
    seen = set()
    unique = []
    for labels in out:
        if labels not in seen:
            seen.add(labels)
            unique.append(labels)
    return unique


def _canonical_shift(shifts: tuple[int, ...], e: int) -> tuple[int, ...]:
    if e == 0:
        low = min(shifts)
        return tuple(s - low for s in shifts)
    return min(tuple((s + c) % e for s in shifts) for c in range(e))


def _shift_tuples(m: int, n: int, e: int) -> list[tuple[int, ...]]:
    bound = e if e >= 1 else 2 * n
    seen = set()
    out = []
    for shifts in product(range(bound), repeat=m):
        canonical = _canonical_shift(shifts, e)
        if canonical not in seen:
            seen.add(canonical)
            out.append(canonical)
    return out


def grid_points(grid: SweepGrid):
    """Deterministic stream of (m, n, ParamScheme) over the grid, with
    shift tuples deduplicated by global translation."""
    for m in grid.m_values:
        for n in grid.n_values:
            e_values = grid.e_values if grid.e_values is not None else range(2 * n + 2)
            for e in e_values:
                for classes in _class_tuples(m, grid.class_patterns):
                    for shifts in _shift_tuples(m, n, e):
                        yield m, n, ParamScheme(m=m, e=e, classes=classes, shifts=shifts)


def _predicted_regime(scheme: ParamScheme, n: int) -> bool:
    """The parameter-side characterization of the regime: for m >= 2 a
    unique relation u_j = q^(+-(n-1)) u_i with q != 1, [n]_q! != 0, order
    infinite or >= 2n-1 and the u_i pairwise distinct; for m = 1, order n
    or n - 1 (the row of n boxes is then the unique non-restricted
    partition)."""
    if scheme.m == 1:
        return scheme.e == n or (scheme.e == n - 1 and scheme.e >= 2)
    rels = _relations_window(scheme, n)
    if len(rels) != 1 or abs(rels[0][2]) != n - 1:
        return False
    if scheme.e == 1:
        return False
    if not (scheme.e == 0 or scheme.e > n):
        return False
    if not (scheme.e == 0 or scheme.e >= 2 * n - 1):
        return False
    return all(c != 0 for _, _, c in rels)


def regime_locus(grid: SweepGrid) -> list[GridPointResult]:
    """Evaluate every grid point with both routes.

    fast_kind comes from structure.classify_regime, oracle_kind from the
    naive recursion; predicted_regime is the parameter-side condition set.
    Disagreements are recorded, never suppressed.
    """
    rows = []
    for m, n, scheme in grid_points(grid):
        fast_kind = structure.classify_regime(scheme, n).kind
        naive_kind = oracle_kind(scheme, n)
        predicted = _predicted_regime(scheme, n)
        rows.append(
            GridPointResult(
                m=m,
                n=n,
                scheme=scheme,
                fast_kind=fast_kind,
                oracle_kind=naive_kind,
                agree=fast_kind == naive_kind,
                predicted_regime=predicted,
                predicted_match=(fast_kind == ALMOST_SEMISIMPLE) == predicted,
            )
        )
    return rows


def locus_summary(rows) -> dict[str, int]:
    return {
        "points": len(rows),
        "regime_points": sum(1 for r in rows if r.fast_kind == ALMOST_SEMISIMPLE),
        "disagreements": sum(1 for r in rows if not r.agree),
        "prediction_mismatches": sum(1 for r in rows if not r.predicted_match),
    }
