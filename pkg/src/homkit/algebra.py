"""Structure-constant model of Hom-algebras and the algebra-level checkers.

An algebra is given by one or two multiplication tables (structure
tensors) together with a twisting endomorphism alpha.  Checks are
exhaustive over basis tuples, which is sufficient by multilinearity, and
they are modular: an algebra may fail one axiom and still be fed to any
construction or solver that does not require it.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Iterable, Mapping, Sequence

from .errors import KindMismatchError, PreconditionError, ShapeError
from .linalg import Matrix, Vector, in_span
from .reporting import CheckReport, CheckResult, Witness, concat, scan_identity

ASSOCIATIVE = "associative"
LEIBNIZ = "leibniz"
POISSON = "poisson"
KINDS = (ASSOCIATIVE, LEIBNIZ, POISSON)

# Which multiplication tables each kind carries.
TENSORS_BY_KIND = {
    ASSOCIATIVE: ("dot",),
    LEIBNIZ: ("bracket",),
    POISSON: ("dot", "bracket"),
}


class StructureTensor:
    """Bilinear product on a dim-dimensional space, stored as the grid of
    basis products ``table[i][j] = mu(e_i, e_j)``."""

    __slots__ = ("dim", "table")

    def __init__(self, dim: int, table: Iterable[Iterable[Vector]]):
        grid = tuple(tuple(row) for row in table)
        if len(grid) != dim or any(len(row) != dim for row in grid):
            raise ShapeError("structure tensor table must be dim x dim")
        for row in grid:
            for v in row:
                if v.dim != dim:
                    raise ShapeError("structure tensor values must have the algebra dim")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "table", grid)

    def __setattr__(self, name, value):
        raise AttributeError("StructureTensor is immutable")

    @classmethod
    def zero(cls, dim: int) -> "StructureTensor":
        z = Vector.zero(dim)
        return cls(dim, [[z] * dim for _ in range(dim)])

    @classmethod
    def from_products(cls, dim: int,
                      products: Mapping[tuple[int, int], Sequence]) -> "StructureTensor":
        """Build from the nonzero basis products; unlisted entries are zero."""
        table = [[Vector.zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), value in products.items():
            v = value if isinstance(value, Vector) else Vector(value)
            if v.dim != dim:
                raise ShapeError("product value has wrong dimension")
            table[i][j] = v
        return cls(dim, table)

    @classmethod
    def from_function(cls, dim: int,
                      fn: Callable[[int, int], Vector]) -> "StructureTensor":
        return cls(dim, [[fn(i, j) for j in range(dim)] for i in range(dim)])

    def basis_product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def product(self, x: Vector, y: Vector) -> Vector:
        """Bilinear extension of the table to arbitrary vectors."""
        if x.dim != self.dim or y.dim != self.dim:
            raise ShapeError("operand dimension does not match the tensor")
        out = Vector.zero(self.dim)
        for i, xi in enumerate(x.entries):
            if xi == 0:
                continue
            for j, yj in enumerate(y.entries):
                if yj == 0:
                    continue
                out = out + self.table[i][j].scale(xi * yj)
        return out

    def coefficient(self, i: int, j: int, k: int):
        """Structure constant: coefficient of ``e_k`` in ``mu(e_i, e_j)``."""
        return self.table[i][j][k]

    def __eq__(self, other) -> bool:
        return (isinstance(other, StructureTensor)
                and self.dim == other.dim and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.dim, self.table))

    def __repr__(self) -> str:
        return f"StructureTensor(dim={self.dim})"


def eval_product(t: StructureTensor, x: Vector, y: Vector) -> Vector:
    """Evaluate the bilinear product encoded by ``t`` on two vectors."""
    return t.product(x, y)


class HomAlgebra:
    """Finite-dimensional algebra with a twist map.

    ``kind`` decides which tables are present: associative algebras carry
    ``dot``, Leibniz algebras carry ``bracket``, Poisson algebras carry
    both over one shared twist.
    """

    __slots__ = ("dim", "kind", "dot", "bracket", "alpha")

    def __init__(self, dim: int, kind: str, alpha: Matrix,
                 dot: StructureTensor | None = None,
                 bracket: StructureTensor | None = None):
        if kind not in KINDS:
            raise KindMismatchError(f"unknown kind {kind!r}")
        needed = TENSORS_BY_KIND[kind]
        present = {"dot": dot, "bracket": bracket}
        for name in ("dot", "bracket"):
            if (name in needed) != (present[name] is not None):
                raise KindMismatchError(
                    f"kind {kind!r} requires exactly the tensors {needed}")
        if alpha.rows != dim or alpha.cols != dim:
            raise ShapeError("alpha must be a square matrix of the algebra dim")
        for t in (dot, bracket):
            if t is not None and t.dim != dim:
                raise ShapeError("structure tensor dim differs from algebra dim")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "dot", dot)
        object.__setattr__(self, "bracket", bracket)

    def __setattr__(self, name, value):
        raise AttributeError("HomAlgebra is immutable")

    def tensors(self) -> dict[str, StructureTensor]:
        out = {}
        if self.dot is not None:
            out["dot"] = self.dot
        if self.bracket is not None:
            out["bracket"] = self.bracket
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomAlgebra) and self.dim == other.dim
                and self.kind == other.kind and self.alpha == other.alpha
                and self.dot == other.dot and self.bracket == other.bracket)

    def __hash__(self) -> int:
        return hash((self.dim, self.kind, self.alpha, self.dot, self.bracket))

    def __repr__(self) -> str:
        return f"HomAlgebra(dim={self.dim}, kind={self.kind!r})"


def _pairs(dim: int):
    return iproduct(range(dim), repeat=2)


def _triples(dim: int):
    return iproduct(range(dim), repeat=3)


def check_multiplicative(alg: HomAlgebra) -> CheckReport:
    """Is alpha an endomorphism for every product?

    Verifies ``alpha(mu(e_i, e_j)) = mu(alpha e_i, alpha e_j)`` on all
    basis pairs, separately for each table.
    """
    alpha = alg.alpha
    checks = []
    for name, t in alg.tensors().items():
        checks.append(scan_identity(
            f"multiplicative:{name}", _pairs(alg.dim),
            lambda i, j, t=t: alpha.apply(t.basis_product(i, j))
            - t.product(alpha.col(i), alpha.col(j))))
    return CheckReport(tuple(checks))


def check_hom_associative(t: StructureTensor, alpha: Matrix) -> CheckReport:
    """Twisted associator test: ``mu(mu(x,y), alpha z) = mu(alpha x, mu(y,z))``
    on all basis triples."""
    if alpha.rows != t.dim or alpha.cols != t.dim:
        raise ShapeError("twist map size differs from tensor dim")
    result = scan_identity(
        "hom_associative", _triples(t.dim),
        lambda i, j, k: t.product(t.basis_product(i, j), alpha.col(k))
        - t.product(alpha.col(i), t.basis_product(j, k)))
    return CheckReport((result,))


def check_hom_leibniz(t: StructureTensor, alpha: Matrix) -> CheckReport:
    """Right Leibniz test: ``[[x,y], alpha z] = [alpha x, [y,z]] + [[x,z], alpha y]``
    on all basis triples."""
    if alpha.rows != t.dim or alpha.cols != t.dim:
        raise ShapeError("twist map size differs from tensor dim")
    result = scan_identity(
        "hom_leibniz", _triples(t.dim),
        lambda i, j, k: t.product(t.basis_product(i, j), alpha.col(k))
        - t.product(alpha.col(i), t.basis_product(j, k))
        - t.product(t.basis_product(i, k), alpha.col(j)))
    return CheckReport((result,))


def check_poisson_compat(alg: HomAlgebra) -> CheckReport:
    """Compatibility of the two products:
    ``[x.y, alpha z] = (alpha x).[y,z] + [x,z].(alpha y)`` on basis triples."""
    if alg.kind != POISSON:
        raise KindMismatchError("poisson compatibility needs a poisson algebra")
    dot, br, alpha = alg.dot, alg.bracket, alg.alpha
    result = scan_identity(
        "poisson_compatibility", _triples(alg.dim),
        lambda i, j, k: br.product(dot.basis_product(i, j), alpha.col(k))
        - dot.product(alpha.col(i), br.basis_product(j, k))
        - dot.product(br.basis_product(i, k), alpha.col(j)))
    return CheckReport((result,))


def check_algebra(alg: HomAlgebra) -> CheckReport:
    """All checks that apply to the algebra's kind, in a fixed order."""
    reports = [check_multiplicative(alg)]
    if alg.dot is not None:
        reports.append(check_hom_associative(alg.dot, alg.alpha))
    if alg.bracket is not None:
        reports.append(check_hom_leibniz(alg.bracket, alg.alpha))
    if alg.kind == POISSON:
        reports.append(check_poisson_compat(alg))
    return concat(*reports)


def check_morphism(f: Matrix, src: HomAlgebra, dst: HomAlgebra) -> CheckReport:
    """Is ``f`` a morphism of Hom-algebras?

    Verifies ``f . alpha_src = alpha_dst . f`` and, for each table,
    ``f(mu_src(e_i, e_j)) = mu_dst(f e_i, f e_j)``.
    """
    if src.kind != dst.kind:
        raise KindMismatchError("morphism endpoints must have the same kind")
    if f.cols != src.dim or f.rows != dst.dim:
        raise ShapeError("morphism matrix shape must be dst.dim x src.dim")
    checks = [scan_identity(
        "intertwines_twist", ((j,) for j in range(src.dim)),
        lambda j: f.apply(src.alpha.col(j)) - dst.alpha.apply(f.col(j)))]
    src_tensors = src.tensors()
    dst_tensors = dst.tensors()
    for name in src_tensors:
        ts, td = src_tensors[name], dst_tensors[name]
        checks.append(scan_identity(
            f"preserves:{name}", _pairs(src.dim),
            lambda i, j, ts=ts, td=td: f.apply(ts.basis_product(i, j))
            - td.product(f.col(i), f.col(j))))
    return CheckReport(tuple(checks))


def is_self_morphism(beta: Matrix, alg: HomAlgebra) -> bool:
    """True iff beta is a morphism from the algebra to itself (this already
    forces beta to commute with the twist)."""
    return check_morphism(beta, alg, alg).passed


def check_ideal(basis: Sequence[Vector], alg: HomAlgebra) -> CheckReport:
    """Two-sided ideal test for the span of the given vectors.

    Verifies twist stability and two-sided absorption for every table via
    exact membership solves.  The witness residual is the offending value.
    """
    vecs = list(basis)
    for v in vecs:
        if v.dim != alg.dim:
            raise ShapeError("ideal basis vectors must live in the algebra")

    def member(v: Vector) -> bool:
        return in_span(vecs, v)

    checks = []

    def scan_membership(name, indices, value):
        for idx in indices:
            v = value(*idx)
            if not member(v):
                return CheckResult(name, False, Witness(tuple(idx), v))
        return CheckResult(name, True)

    checks.append(scan_membership(
        "twist_stable", ((b,) for b in range(len(vecs))),
        lambda b: alg.alpha.apply(vecs[b])))
    for name, t in alg.tensors().items():
        checks.append(scan_membership(
            f"closed_right:{name}",
            iproduct(range(len(vecs)), range(alg.dim)),
            lambda b, a, t=t: t.product(vecs[b], Vector.unit(alg.dim, a))))
        checks.append(scan_membership(
            f"closed_left:{name}",
            iproduct(range(len(vecs)), range(alg.dim)),
            lambda b, a, t=t: t.product(Vector.unit(alg.dim, a), vecs[b])))
    return CheckReport(tuple(checks))


def yau_twist(alg: HomAlgebra, beta: Matrix, checked: bool = True) -> HomAlgebra:
    """Twist every product by a self-morphism:
    ``mu_new(x, y) = mu(beta x, beta y)`` with new twist ``beta . alpha``.

    ``beta`` must be a self-morphism of the algebra (hence commuting with
    the twist); this is verified unless ``checked`` is False.
    """
    if beta.rows != alg.dim or beta.cols != alg.dim:
        raise ShapeError("twisting map must be square of the algebra dim")
    if checked:
        report = check_morphism(beta, alg, alg)
        if not report.passed:
            raise PreconditionError(
                "twisting map is not a self-morphism: "
                + "; ".join(c.render() for c in report.failures()))

    def twisted(t: StructureTensor) -> StructureTensor:
        return StructureTensor.from_function(
            alg.dim, lambda i, j: t.product(beta.col(i), beta.col(j)))

    return HomAlgebra(
        alg.dim, alg.kind, beta @ alg.alpha,
        dot=twisted(alg.dot) if alg.dot is not None else None,
        bracket=twisted(alg.bracket) if alg.bracket is not None else None)
