"""Almost-semisimple regime detection and block-level structural data.

A parameter point is almost semisimple when the Hecke algebra has exactly
|Irrep(W)| - 1 simple modules.  In that regime the non-semisimple block is
completely rigid: its decomposition matrix is unit-bidiagonal, the Cartan
matrix is tridiagonal (2,1), and the KZ dimensions are binomial
coefficients.  classify_regime verifies the parameter-side facts that the
regime forces (a unique relation u_j = q^(+-(n-1)) u_i, the order bound,
and the row or column multipartition as the unique non-Kleshchev label)
and treats any violation as an internal inconsistency, never as data.

The matrices are block-level data under the declared a-ordering of the
lambda family; no claim is made about which individual Specht module maps
to which standard module.
"""

from dataclasses import dataclass
from math import comb, factorial

from .blocks import lambda_family
from .combinatorics import (
    Multipartition,
    dim_irrep,
    enumerate_multipartitions,
    multipartition_count,
    partitions,
)
from .params import KappaInput, ParamScheme, derive_r, relation_exponents
from .simples import ariki_semisimple, min_order_check, simple_count

SEMISIMPLE = "semisimple"
ALMOST_SEMISIMPLE = "almost_semisimple"
OTHER = "other"

Matrix = tuple[tuple[int, ...], ...]


class InconsistentRegimeError(RuntimeError):
    """simple_count = N - 1 but the forced parameter facts fail:
    "inconsistent-regime" (signals an implementation bug, not bad input)."""


@dataclass(frozen=True)
class RegimeReport:
    m: int
    n: int
    kind: str
    simple_count: int
    irrep_count: int
    witness: tuple[int, int, int] | None = None
    non_kleshchev: Multipartition | None = None
    r: int | None = None
    dim_L_chi: int | None = None


@dataclass(frozen=True)
class BlockStructure:
    n: int
    specht_order: tuple[Multipartition, ...] | None
    simple_order: tuple[Multipartition, ...] | None
    decomposition: Matrix
    cartan: Matrix
    hom_dims: Matrix
    kz_dims: tuple[int, ...]
    pkz_multiplicities: tuple[int, ...]
    exterior_dims: tuple[int, ...]


def _strip_multipartition(m: int, part: tuple[int, ...], component: int) -> Multipartition:
    parts: list[tuple[int, ...]] = [()] * m
    parts[component - 1] = part
    return tuple(parts)


def non_kleshchev_label(m: int, n: int, witness: tuple[int, int, int]) -> Multipartition:
    """The unique non-Kleshchev multipartition forced by the normalized
    witness (i, j, c), i < j, u_j = q^c u_i, |c| = n - 1.

    For c >= 0 it is the row of n boxes in component i (the addable partner
    of its last node sits in component j, below it); for c < 0 it is the
    column of n boxes in component i.
    """
    i, _, c = witness
    shape = (n,) if c >= 0 else (1,) * n
    return _strip_multipartition(m, shape, i)


def _locate_witness(scheme: ParamScheme, n: int) -> list[tuple[int, int, int]]:
    """All normalized witnesses (i, j, c): i < j, u_j = q^c u_i, |c| = n-1."""
    found = []
    for i in range(1, scheme.m + 1):
        for j in range(i + 1, scheme.m + 1):
            for c in sorted(relation_exponents(scheme, j, i, n)):
                if abs(c) == n - 1:
                    found.append((i, j, c))
    return found


def family_orientation(witness: tuple[int, int, int]) -> tuple[int, int]:
    """The (i, j) ordering with u_j = q^(n-1) u_i, as lambda_family expects:
    rows grow in component i, columns in component j."""
    i, j, c = witness
    return (i, j) if c >= 0 else (j, i)


def _verify_regime_facts(
    scheme: ParamScheme, n: int, non_simple: tuple[Multipartition, ...]
) -> tuple[int, int, int]:
    """Check the facts forced by simple_count = N - 1 for m >= 2 and return
    the unique normalized witness."""
    problems = []
    relations = [
        (i, j, c)
        for i in range(1, scheme.m + 1)
        for j in range(i + 1, scheme.m + 1)
        for c in sorted(relation_exponents(scheme, i, j, n))
    ]
    if len(relations) != 1 or abs(relations[0][2]) != n - 1:
        problems.append(f"relations {relations} not a unique +-(n-1) relation")
    if scheme.e == 1 and n > 1:
        problems.append("q = 1")
    if not (scheme.e == 0 or scheme.e == 1 or scheme.e > n):
        problems.append("[n]_q! = 0")
    if n > 1 and not min_order_check(scheme, n):
        problems.append(f"order {scheme.e} below 2n-1")
    if n > 1 and any(
        0 in relation_exponents(scheme, i, j, n)
        for i in range(1, scheme.m + 1)
        for j in range(i + 1, scheme.m + 1)
    ):
        problems.append("parameters u_i not pairwise distinct")

    witnesses = _locate_witness(scheme, n)
    if len(witnesses) != 1:
        problems.append(f"witnesses {witnesses}, expected exactly one")
    if problems:
        raise InconsistentRegimeError("inconsistent-regime: " + "; ".join(problems))

    witness = witnesses[0]
    expected_label = non_kleshchev_label(scheme.m, n, witness)
    if non_simple != (expected_label,):
        raise InconsistentRegimeError(
            f"inconsistent-regime: non-simple labels {non_simple} != ({expected_label},)"
        )
    return witness


def classify_regime(
    scheme: ParamScheme, n: int, kappa: KappaInput | None = None
) -> RegimeReport:
    """Classify a parameter point as semisimple / almost_semisimple / other.

    In the almost-semisimple case the unique witness relation and the unique
    non-Kleshchev label are located and the facts the regime forces are
    verified as internal assertions.  When kappa data is supplied, r and
    dim L(chi) = r^n are attached.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = multipartition_count(scheme.m, n)
    count, non_simple = simple_count(scheme, n)
    if count == total:
        return RegimeReport(scheme.m, n, SEMISIMPLE, count, total)
    if count != total - 1:
        return RegimeReport(scheme.m, n, OTHER, count, total)

    if scheme.m == 1:
        # Exactly the row (n) has a part gap >= n - 1, so the restricted
        # count is p(n) - 1 at order n and also at order n - 1 (when q != 1).
        if not (scheme.e == n or (scheme.e == n - 1 and scheme.e >= 2)):
            raise InconsistentRegimeError(
                f"inconsistent-regime: m=1 count N-1 with order {scheme.e}"
            )
        if scheme.e != 1:
            _, restricted_count = m1_regime(scheme.e, n)
            if restricted_count != count:
                raise InconsistentRegimeError(
                    "inconsistent-regime: m=1 restricted count disagrees"
                )
        witness = None
        expected_label = _strip_multipartition(1, (n,), 1)
        if non_simple != (expected_label,):
            raise InconsistentRegimeError(
                f"inconsistent-regime: m=1 non-simple labels {non_simple}"
            )
    else:
        witness = _verify_regime_facts(scheme, n, non_simple)

    r = dim_l = None
    if kappa is not None and (scheme.m > 1 or scheme.e == n):
        # For m = 1 the r = numerator(kappa00) reading needs order exactly n;
        # at the order-(n-1) regime points no r is derivable.
        r = derive_r(kappa, witness[:2] if witness else (1, 1))
        assert r > 0 and (scheme.m == 1 or r % scheme.m != 0)
        dim_l = r**n
    return RegimeReport(
        scheme.m, n, ALMOST_SEMISIMPLE, count, total,
        witness=witness, non_kleshchev=non_simple[0], r=r, dim_L_chi=dim_l,
    )


def _tridiagonal(size: int) -> Matrix:
    return tuple(
        tuple(2 if a == b else (1 if abs(a - b) == 1 else 0) for b in range(size))
        for a in range(size)
    )


def kz_dimensions(n: int) -> tuple[int, ...]:
    """dim KZ(L_i) for i = 1..n, as alternating sums over the resolution by
    standard modules of dimensions C(n, j); equals C(n-1, i-1)."""
    dims = tuple(
        sum((-1) ** (j - i) * comb(n, j) for j in range(i, n + 1))
        for i in range(1, n + 1)
    )
    assert dims == tuple(comb(n - 1, i - 1) for i in range(1, n + 1))
    return dims


def block_structure(report: RegimeReport, scheme: ParamScheme, n: int) -> BlockStructure:
    """Block-level matrices of the unique non-semisimple block.

    Rows of the decomposition matrix follow specht_order, which is the
    lambda family arranged so the non-Kleshchev member comes last; columns
    follow its n Kleshchev members.  For m = 1 no lambda family exists and
    the label orders are None; the matrices are the same
    parameter-independent data.
    """
    if report.kind != ALMOST_SEMISIMPLE:
        raise ValueError("block structure exists only in the almost-semisimple regime")
    specht_order = simple_order = None
    if scheme.m >= 2:
        family = lambda_family(scheme, n, family_orientation(report.witness))
        specht_order = family if report.witness[2] >= 0 else tuple(reversed(family))
        simple_order = specht_order[:n]
    decomposition = tuple(
        tuple(1 if b in (a, a - 1) else 0 for b in range(n)) for a in range(n + 1)
    )
    cartan = tuple(
        tuple(
            sum(decomposition[x][a] * decomposition[x][b] for x in range(n + 1))
            for b in range(n)
        )
        for a in range(n)
    )
    hom_dims = _tridiagonal(n)
    assert cartan == hom_dims
    kz = kz_dimensions(n)
    return BlockStructure(
        n=n,
        specht_order=specht_order,
        simple_order=simple_order,
        decomposition=decomposition,
        cartan=cartan,
        hom_dims=hom_dims,
        kz_dims=kz,
        pkz_multiplicities=kz,
        exterior_dims=tuple(comb(n, i) for i in range(n + 1)),
    )


def ext1_dimensions(n: int) -> Matrix:
    """Recorded dimensions of first extensions between the block simples:
    1 between neighbours, 0 otherwise (the quiver adjacency).  Metadata
    only; nothing here computes extension groups."""
    return tuple(
        tuple(1 if abs(a - b) == 1 else 0 for b in range(n)) for a in range(n)
    )


def _is_hook(p: tuple[int, ...]) -> bool:
    return bool(p) and all(part == 1 for part in p[1:])


def hecke_dimension_audit(
    report: RegimeReport, scheme: ParamScheme, n: int
) -> tuple[int, int]:
    """Reassemble dim H = m^n * n! from the block picture.

    Singleton blocks contribute (dim tau)^2; the exceptional block
    contributes through the projective Hom table weighted by the P_KZ
    multiplicities.  For m = 1 the exceptional block consists of the hook
    partitions and the Hom factor has size n - 1.
    """
    if report.kind != ALMOST_SEMISIMPLE:
        raise ValueError("the audit applies to the almost-semisimple regime")
    expected = scheme.m**n * factorial(n)
    if scheme.m >= 2:
        family = set(lambda_family(scheme, n, family_orientation(report.witness)))
        outside = (
            mp for mp in enumerate_multipartitions(scheme.m, n) if mp not in family
        )
        weights = [comb(n - 1, a) for a in range(n)]
        hom = _tridiagonal(n)
    else:
        outside = ((p,) for p in partitions(n) if not _is_hook(p))
        weights = [comb(n - 2, a) for a in range(n - 1)]
        hom = _tridiagonal(n - 1)
    total = sum(dim_irrep(mp) ** 2 for mp in outside)
    size = len(weights)
    total += sum(
        weights[a] * weights[b] * hom[a][b] for a in range(size) for b in range(size)
    )
    return total, expected


def m1_regime(e: int, n: int) -> tuple[bool, int]:
    """m = 1 branch: simple modules are indexed by e-restricted partitions
    (all partitions when e = 0); the almost-semisimple regime is count =
    p(n) - 1, which happens at e = n and, for n >= 3, also at e = n - 1
    (only the single row has a part gap that large)."""
    if e == 0:
        count = len(partitions(n))
    else:
        count = sum(1 for p in partitions(n) if _e_restricted(p, e))
    return count == len(partitions(n)) - 1, count


def _e_restricted(p: tuple[int, ...], e: int) -> bool:
    return all(
        p[i] - (p[i + 1] if i + 1 < len(p) else 0) < e for i in range(len(p))
    )


def semisimple_equivalence(scheme: ParamScheme, n: int) -> bool:
    """Cross-check: the semisimplicity criterion agrees with counting."""
    count, _ = simple_count(scheme, n)
    return ariki_semisimple(scheme, n) == (count == multipartition_count(scheme.m, n))
