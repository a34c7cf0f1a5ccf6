"""The basic algebra of the unique non-semisimple block.

B(n) is the path algebra of the quiver with vertices 1..n, arrows f_{i,i+1}
and f_{i,i-1} between neighbours and a loop xi_i at each vertex, modulo the
relations

    xi * f = f * xi = 0,      f_{i-1,i} f_{i,i-1} = f_{i+1,i} f_{i,i+1} = xi_i,

with all other arrow compositions zero.  After the normalization that makes
every structure constant 0 or 1 the multiplication table is a fixed integer
table depending on n alone, which is what parameter independence means
here: regime instances with equal n produce literally identical tables.

Composition convention: a * b applies b first, so a * b != 0 needs
target(b) = source(a); f_{i,j} points from vertex i to vertex j.
"""

from dataclasses import dataclass

Combination = tuple[tuple[int, int], ...]  # ((basis index, coefficient), ...)


class SizeMismatchError(ValueError):
    """Instances with different block sizes cannot be compared: "size-mismatch"."""


@dataclass(frozen=True)
class BasicAlgebra:
    n: int
    basis: tuple[str, ...]
    source: tuple[int, ...]
    target: tuple[int, ...]
    grading: tuple[int, ...]
    mult: dict[tuple[int, int], Combination]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def product(self, a: int, b: int) -> Combination:
        return self.mult[(a, b)]

    def table_text(self) -> str:
        """Deterministic export: basis labels, then the nonzero triples."""
        lines = ["basis=" + ",".join(self.basis)]
        dim = len(self.basis)
        for a in range(dim):
            for b in range(dim):
                for idx, coeff in self.mult[(a, b)]:
                    term = self.basis[idx] if coeff == 1 else f"{coeff}*{self.basis[idx]}"
                    lines.append(f"{self.basis[a]},{self.basis[b]},{term}")
        return "\n".join(lines)


def build_bn(n: int) -> BasicAlgebra:
    """The normalized basic algebra on n vertices, dimension 4n - 2.

    Basis order: e_1..e_n, xi_1..xi_n, f_{1,2}..f_{n-1,n}, f_{2,1}..f_{n,n-1}.
    For n = 1 there are no arrows and the algebra is the dual numbers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    basis: list[str] = []
    source: list[int] = []
    target: list[int] = []
    grading: list[int] = []

    def put(label, src, tgt, degree):
        basis.append(label)
        source.append(src)
        target.append(tgt)
        grading.append(degree)
        return len(basis) - 1

    e = [put(f"e_{i}", i, i, 0) for i in range(1, n + 1)]
    xi = [put(f"xi_{i}", i, i, 2) for i in range(1, n + 1)]
    f_up = {i: put(f"f_{i}_{i + 1}", i, i + 1, 1) for i in range(1, n)}
    f_down = {i: put(f"f_{i}_{i - 1}", i, i - 1, 1) for i in range(2, n + 1)}

    dim = len(basis)
    mult: dict[tuple[int, int], Combination] = {}
    for a in range(dim):
        for b in range(dim):
            mult[(a, b)] = _basis_product(a, b, e, xi, f_up, f_down, source, target)
    return BasicAlgebra(
        n=n,
        basis=tuple(basis),
        source=tuple(source),
        target=tuple(target),
        grading=tuple(grading),
        mult=mult,
    )


def _basis_product(a, b, e, xi, f_up, f_down, source, target) -> Combination:
    # a * b applies b first: composable iff target(b) == source(a).
    if target[b] != source[a]:
        return ()
    if a in e:
        return ((b, 1),)
    if b in e:
        return ((a, 1),)
    # xi is the socle map: any composition with another radical element dies.
    if a in xi or b in xi:
        return ()
    # Both are arrows.  The only surviving length-2 paths are the
    # round trips i -> i+-1 -> i, each equal to xi_i.
    vertex = source[b]
    if source[a] == target[b] and target[a] == vertex:
        return ((xi[vertex - 1], 1),)
    # A path i -> i+-1 -> i+-2 lands in a zero Hom space.
    return ()


def multiply(algebra: BasicAlgebra, left: Combination, right: Combination) -> Combination:
    """Product of two integer combinations of basis elements."""
    acc: dict[int, int] = {}
    for a, ca in left:
        for b, cb in right:
            for idx, coeff in algebra.mult[(a, b)]:
                acc[idx] = acc.get(idx, 0) + ca * cb * coeff
    return tuple(sorted((idx, coeff) for idx, coeff in acc.items() if coeff))


def associativity_violations(algebra: BasicAlgebra) -> list[tuple[int, int, int]]:
    """All basis triples with (a*b)*c != a*(b*c); empty means associative."""
    dim = algebra.dimension
    bad = []
    for a in range(dim):
        for b in range(dim):
            ab = algebra.mult[(a, b)]
            for c in range(dim):
                left = multiply(algebra, ab, ((c, 1),))
                right = multiply(algebra, ((a, 1),), algebra.mult[(b, c)])
                if left != right:
                    bad.append((a, b, c))
    return bad


def regular_representation(algebra: BasicAlgebra) -> list[list[list[int]]]:
    """Left-multiplication matrices, one per basis element.

    mat[a][i][j] is the coefficient of basis i in a * basis j.
    """
    dim = algebra.dimension
    mats = []
    for a in range(dim):
        mat = [[0] * dim for _ in range(dim)]
        for j in range(dim):
            for idx, coeff in algebra.mult[(a, j)]:
                mat[idx][j] += coeff
        mats.append(mat)
    return mats


def regular_representation_consistent(algebra: BasicAlgebra) -> bool:
    """Certify associativity independently: left multiplication must be an
    algebra homomorphism, mat(a) @ mat(b) == mat(a * b) for all pairs."""
    dim = algebra.dimension
    mats = regular_representation(algebra)
    # Each column of mat(b) has at most one entry, so compose sparsely.
    cols = [
        [next(((i, m[i][j]) for i in range(dim) if m[i][j]), None) for j in range(dim)]
        for m in mats
    ]
    for a in range(dim):
        for b in range(dim):
            product = [[0] * dim for _ in range(dim)]
            for j in range(dim):
                hit = cols[b][j]
                if hit is None:
                    continue
                k, coeff = hit
                for i in range(dim):
                    product[i][j] = coeff * mats[a][i][k]
            expected = [[0] * dim for _ in range(dim)]
            for idx, coeff in algebra.mult[(a, b)]:
                row = mats[idx]
                for i in range(dim):
                    for j in range(dim):
                        expected[i][j] += coeff * row[i][j]
            if product != expected:
                return False
    return True


def verify_parameter_independence(instance_a, instance_b) -> bool:
    """True iff two almost-semisimple instances induce literally identical
    basic-algebra tables (same n, same structure constants, same block-level
    matrices).  Raises on different block sizes."""
    if instance_a.n != instance_b.n:
        raise SizeMismatchError("size-mismatch")
    same_block_data = (
        instance_a.decomposition == instance_b.decomposition
        and instance_a.cartan == instance_b.cartan
        and instance_a.hom_dims == instance_b.hom_dims
        and instance_a.kz_dims == instance_b.kz_dims
        and instance_a.pkz_multiplicities == instance_b.pkz_multiplicities
        and instance_a.exterior_dims == instance_b.exterior_dims
    )
    table_a = build_bn(instance_a.n).table_text()
    table_b = build_bn(instance_b.n).table_text()
    return same_block_data and table_a == table_b
