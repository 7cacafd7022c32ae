"""Representations of Hom-algebras: axioms, constructions, semidirect products.

A representation acts on a carrier space V through families of matrices,
one per basis element of the base algebra.  Associative-kind data is the
pair of action families (lambda_l, lambda_r) for the dot product;
Leibniz-kind data is (rho_l, rho_r) for the bracket; Poisson-kind data
carries all four over one carrier twist phi.

All axiom checks are operator identities evaluated on every basis pair of
the base algebra and every carrier basis vector, which is exhaustive by
multilinearity.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Sequence

from .algebra import (
    ASSOCIATIVE, LEIBNIZ, POISSON, HomAlgebra, StructureTensor,
    check_ideal, check_morphism,
)
from .errors import KindMismatchError, PreconditionError, ShapeError
from .linalg import Matrix, Vector, solve_linear
from .reporting import CheckReport, scan_operator_identity


class ActionTensor:
    """Linear family of carrier endomorphisms indexed by base basis
    elements; extends linearly to ``at(x) = sum_i x_i mats[i]``."""

    __slots__ = ("base_dim", "carrier_dim", "mats")

    def __init__(self, base_dim: int, carrier_dim: int, mats: Sequence[Matrix]):
        mats = tuple(mats)
        if len(mats) != base_dim:
            raise ShapeError("need one matrix per base basis element")
        for m in mats:
            if m.rows != carrier_dim or m.cols != carrier_dim:
                raise ShapeError("action matrices must be carrier_dim square")
        object.__setattr__(self, "base_dim", base_dim)
        object.__setattr__(self, "carrier_dim", carrier_dim)
        object.__setattr__(self, "mats", mats)

    def __setattr__(self, name, value):
        raise AttributeError("ActionTensor is immutable")

    @classmethod
    def zero(cls, base_dim: int, carrier_dim: int) -> "ActionTensor":
        z = Matrix.zero(carrier_dim, carrier_dim)
        return cls(base_dim, carrier_dim, [z] * base_dim)

    def at(self, x: Vector) -> Matrix:
        if x.dim != self.base_dim:
            raise ShapeError("action argument must have the base dimension")
        out = Matrix.zero(self.carrier_dim, self.carrier_dim)
        for i, xi in enumerate(x.entries):
            if xi != 0:
                out = out + self.mats[i].scale(xi)
        return out

    def precompose(self, beta: Matrix) -> "ActionTensor":
        """New family x -> at(beta x)."""
        if beta.rows != self.base_dim or beta.cols != self.base_dim:
            raise ShapeError("precompose map must be square of the base dim")
        return ActionTensor(self.base_dim, self.carrier_dim,
                            [self.at(beta.col(i)) for i in range(self.base_dim)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, ActionTensor)
                and self.base_dim == other.base_dim
                and self.carrier_dim == other.carrier_dim
                and self.mats == other.mats)

    def __hash__(self) -> int:
        return hash((self.base_dim, self.carrier_dim, self.mats))


class Representation:
    """Carrier space with twist phi and the action families of its kind."""

    __slots__ = ("kind", "base_dim", "carrier_dim", "phi",
                 "lambda_l", "lambda_r", "rho_l", "rho_r")

    def __init__(self, kind: str, base_dim: int, carrier_dim: int, phi: Matrix,
                 lambda_l: ActionTensor | None = None,
                 lambda_r: ActionTensor | None = None,
                 rho_l: ActionTensor | None = None,
                 rho_r: ActionTensor | None = None):
        if kind not in (ASSOCIATIVE, LEIBNIZ, POISSON):
            raise KindMismatchError(f"unknown kind {kind!r}")
        needs_lambda = kind in (ASSOCIATIVE, POISSON)
        needs_rho = kind in (LEIBNIZ, POISSON)
        given = {"lambda_l": lambda_l, "lambda_r": lambda_r,
                 "rho_l": rho_l, "rho_r": rho_r}
        for name, needed in (("lambda_l", needs_lambda), ("lambda_r", needs_lambda),
                        ("rho_l", needs_rho), ("rho_r", needs_rho)):
            if (given[name] is not None) != needed:
                raise KindMismatchError(
                    f"kind {kind!r} requires exactly its own action families"
                    f" (unexpected state for {name})")
        if phi.rows != carrier_dim or phi.cols != carrier_dim:
            raise ShapeError("phi must be carrier_dim square")
        for t in given.values():
            if t is None:
                continue
            if t.base_dim != base_dim or t.carrier_dim != carrier_dim:
                raise ShapeError("action family shape disagrees with the representation")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "base_dim", base_dim)
        object.__setattr__(self, "carrier_dim", carrier_dim)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "lambda_l", lambda_l)
        object.__setattr__(self, "lambda_r", lambda_r)
        object.__setattr__(self, "rho_l", rho_l)
        object.__setattr__(self, "rho_r", rho_r)

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def actions(self) -> dict[str, ActionTensor]:
        out = {}
        for name in ("lambda_l", "lambda_r", "rho_l", "rho_r"):
            t = getattr(self, name)
            if t is not None:
                out[name] = t
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Representation)
                and self.kind == other.kind
                and self.base_dim == other.base_dim
                and self.carrier_dim == other.carrier_dim
                and self.phi == other.phi
                and self.lambda_l == other.lambda_l
                and self.lambda_r == other.lambda_r
                and self.rho_l == other.rho_l
                and self.rho_r == other.rho_r)

    def __hash__(self) -> int:
        return hash((self.kind, self.base_dim, self.carrier_dim, self.phi,
                     self.lambda_l, self.lambda_r, self.rho_l, self.rho_r))

    def __repr__(self) -> str:
        return (f"Representation(kind={self.kind!r}, base_dim={self.base_dim}, "
                f"carrier_dim={self.carrier_dim})")


def _require_match(rep: Representation, alg: HomAlgebra) -> None:
    if rep.kind != alg.kind:
        raise KindMismatchError(
            f"representation kind {rep.kind!r} differs from algebra kind {alg.kind!r}")
    if rep.base_dim != alg.dim:
        raise ShapeError("representation base dim differs from algebra dim")


def check_representation(rep: Representation, alg: HomAlgebra) -> CheckReport:
    """Verify every axiom of the representation kind as operator identities.

    For the Leibniz part, the commutation axiom is taken as the two
    conditions ``phi rho^l(x) = rho^l(alpha x) phi`` and
    ``phi rho^r(x) = rho^r(alpha x) phi``, and the redundant consequence
    ``rho^r([x,y]) phi + rho^r([y,x]) phi = 0`` is reported as an extra
    consistency check.
    """
    _require_match(rep, alg)
    alpha, phi = alg.alpha, rep.phi
    n = alg.dim
    checks = []

    if rep.kind in (ASSOCIATIVE, POISSON):
        dot, ll, lr = alg.dot, rep.lambda_l, rep.lambda_r
        checks.append(scan_operator_identity(
            "phi_commutes_left_mult", ((i,) for i in range(n)),
            lambda i: phi @ ll.mats[i] - ll.at(alpha.col(i)) @ phi))
        checks.append(scan_operator_identity(
            "phi_commutes_right_mult", ((i,) for i in range(n)),
            lambda i: phi @ lr.mats[i] - lr.at(alpha.col(i)) @ phi))
        checks.append(scan_operator_identity(
            "left_mult_composition", iproduct(range(n), repeat=2),
            lambda i, j: ll.at(dot.basis_product(i, j)) @ phi
            - ll.at(alpha.col(i)) @ ll.mats[j]))
        checks.append(scan_operator_identity(
            "right_mult_composition", iproduct(range(n), repeat=2),
            lambda i, j: lr.at(dot.basis_product(i, j)) @ phi
            - lr.at(alpha.col(j)) @ lr.mats[i]))
        checks.append(scan_operator_identity(
            "left_right_mult_commute", iproduct(range(n), repeat=2),
            lambda i, j: ll.at(alpha.col(i)) @ lr.mats[j]
            - lr.at(alpha.col(j)) @ ll.mats[i]))

    if rep.kind in (LEIBNIZ, POISSON):
        br, rl, rr = alg.bracket, rep.rho_l, rep.rho_r
        checks.append(scan_operator_identity(
            "phi_commutes_left_bracket", ((i,) for i in range(n)),
            lambda i: phi @ rl.mats[i] - rl.at(alpha.col(i)) @ phi))
        checks.append(scan_operator_identity(
            "phi_commutes_right_bracket", ((i,) for i in range(n)),
            lambda i: phi @ rr.mats[i] - rr.at(alpha.col(i)) @ phi))
        checks.append(scan_operator_identity(
            "left_bracket_composition", iproduct(range(n), repeat=2),
            lambda i, j: rl.at(br.basis_product(i, j)) @ phi
            - rl.at(alpha.col(i)) @ rl.mats[j]
            - rr.at(alpha.col(j)) @ rl.mats[i]))
        checks.append(scan_operator_identity(
            "mixed_bracket_exchange", iproduct(range(n), repeat=2),
            lambda i, j: rr.at(alpha.col(j)) @ rl.mats[i]
            - rl.at(alpha.col(i)) @ rr.mats[j]
            - rl.at(br.basis_product(i, j)) @ phi))
        checks.append(scan_operator_identity(
            "right_bracket_composition", iproduct(range(n), repeat=2),
            lambda i, j: rr.at(alpha.col(j)) @ rr.mats[i]
            - rr.at(br.basis_product(i, j)) @ phi
            - rr.at(alpha.col(i)) @ rr.mats[j]))
        checks.append(scan_operator_identity(
            "right_bracket_antisymmetry", iproduct(range(n), repeat=2),
            lambda i, j: rr.at(br.basis_product(i, j)) @ phi
            + rr.at(br.basis_product(j, i)) @ phi))

    if rep.kind == POISSON:
        dot, br = alg.dot, alg.bracket
        ll, lr, rl, rr = rep.lambda_l, rep.lambda_r, rep.rho_l, rep.rho_r
        checks.append(scan_operator_identity(
            "bracket_acts_on_left_mult", iproduct(range(n), repeat=2),
            lambda i, j: rr.at(alpha.col(j)) @ ll.mats[i]
            - ll.at(alpha.col(i)) @ rr.mats[j]
            - ll.at(br.basis_product(i, j)) @ phi))
        checks.append(scan_operator_identity(
            "bracket_acts_on_right_mult", iproduct(range(n), repeat=2),
            lambda i, j: rr.at(alpha.col(j)) @ lr.mats[i]
            - lr.at(br.basis_product(i, j)) @ phi
            - lr.at(alpha.col(i)) @ rr.mats[j]))
        checks.append(scan_operator_identity(
            "left_bracket_of_product", iproduct(range(n), repeat=2),
            lambda i, j: rl.at(dot.basis_product(i, j)) @ phi
            - ll.at(alpha.col(i)) @ rl.mats[j]
            - lr.at(alpha.col(j)) @ rl.mats[i]))

    return CheckReport(tuple(checks))


def _mult_tensors(t: StructureTensor, left: bool) -> list[Matrix]:
    """Multiplication operator matrices: column j of the i-th matrix is
    ``mu(e_i, e_j)`` (left) or ``mu(e_j, e_i)`` (right)."""
    dim = t.dim
    mats = []
    for i in range(dim):
        cols = [t.basis_product(i, j) if left else t.basis_product(j, i)
                for j in range(dim)]
        mats.append(Matrix.from_cols(cols))
    return mats


def regular_representation(alg: HomAlgebra) -> Representation:
    """The algebra acting on itself: left/right multiplication by each
    table, carrier twist alpha."""
    n = alg.dim
    kw = {}
    if alg.dot is not None:
        kw["lambda_l"] = ActionTensor(n, n, _mult_tensors(alg.dot, True))
        kw["lambda_r"] = ActionTensor(n, n, _mult_tensors(alg.dot, False))
    if alg.bracket is not None:
        kw["rho_l"] = ActionTensor(n, n, _mult_tensors(alg.bracket, True))
        kw["rho_r"] = ActionTensor(n, n, _mult_tensors(alg.bracket, False))
    return Representation(alg.kind, n, n, alg.alpha, **kw)


def pullback_representation(f: Matrix, src: HomAlgebra, dst: HomAlgebra,
                            checked: bool = True) -> Representation:
    """Representation of ``src`` on ``dst``'s space along a morphism f:
    actions ``x . v = mu_dst(f x, v)`` etc., carrier twist ``dst.alpha``."""
    if checked:
        report = check_morphism(f, src, dst)
        if not report.passed:
            raise PreconditionError(
                "pullback needs a morphism: "
                + "; ".join(c.render() for c in report.failures()))
    n, m = src.dim, dst.dim

    def family(t: StructureTensor, left: bool) -> ActionTensor:
        mats = []
        for i in range(n):
            fx = f.col(i)
            cols = [t.product(fx, Vector.unit(m, j)) if left
                    else t.product(Vector.unit(m, j), fx) for j in range(m)]
            mats.append(Matrix.from_cols(cols))
        return ActionTensor(n, m, mats)

    kw = {}
    if src.dot is not None:
        kw["lambda_l"] = family(dst.dot, True)
        kw["lambda_r"] = family(dst.dot, False)
    if src.bracket is not None:
        kw["rho_l"] = family(dst.bracket, True)
        kw["rho_r"] = family(dst.bracket, False)
    return Representation(src.kind, n, m, dst.alpha, **kw)


def twist_representation(rep: Representation, beta: Matrix, alg: HomAlgebra,
                         checked: bool = True) -> Representation:
    """Precompose every action family with a self-morphism beta of the base
    algebra: new action ``x -> lambda(beta x)``; phi unchanged."""
    _require_match(rep, alg)
    if checked:
        report = check_morphism(beta, alg, alg)
        if not report.passed:
            raise PreconditionError(
                "twisting map is not a self-morphism: "
                + "; ".join(c.render() for c in report.failures()))
    kw = {name: t.precompose(beta) for name, t in rep.actions().items()}
    return Representation(rep.kind, rep.base_dim, rep.carrier_dim, rep.phi, **kw)


def power_twist_representation(rep: Representation, alg: HomAlgebra,
                               n: int) -> Representation:
    """Precompose every action with the n-th power of the algebra twist."""
    out = rep
    for _ in range(n):
        out = twist_representation(out, alg.alpha, alg)
    return out


def ideal_representation(basis: Sequence[Vector], alg: HomAlgebra,
                         checked: bool = True) -> Representation:
    """Representation on a two-sided ideal, in the coordinates of the given
    basis; actions are the restricted multiplications."""
    vecs = list(basis)
    if checked:
        report = check_ideal(vecs, alg)
        if not report.passed:
            raise PreconditionError(
                "not a two-sided ideal: "
                + "; ".join(c.render() for c in report.failures()))
    k = len(vecs)
    span = Matrix.from_cols(vecs) if vecs else Matrix.zero(alg.dim, 0)

    def coords(v: Vector) -> Vector:
        sol = solve_linear(span, v)
        if sol is None or sol.kernel:
            raise PreconditionError(
                "ideal basis must be independent and closed (membership solve failed)")
        return sol.particular

    phi = Matrix.from_cols([coords(alg.alpha.apply(b)) for b in vecs]) if k \
        else Matrix.zero(0, 0)

    def family(t: StructureTensor, left: bool) -> ActionTensor:
        mats = []
        for a in range(alg.dim):
            ea = Vector.unit(alg.dim, a)
            cols = [coords(t.product(ea, b) if left else t.product(b, ea))
                    for b in vecs]
            mats.append(Matrix.from_cols(cols) if k else Matrix.zero(0, 0))
        return ActionTensor(alg.dim, k, mats)

    kw = {}
    if alg.dot is not None:
        kw["lambda_l"] = family(alg.dot, True)
        kw["lambda_r"] = family(alg.dot, False)
    if alg.bracket is not None:
        kw["rho_l"] = family(alg.bracket, True)
        kw["rho_r"] = family(alg.bracket, False)
    return Representation(alg.kind, alg.dim, k, phi, **kw)


def semidirect_product(alg: HomAlgebra, rep: Representation) -> HomAlgebra:
    """Algebra on A + V: products act on the V component through the action
    families, twist is alpha (+) phi.  Basis order: A basis first, then V."""
    _require_match(rep, alg)
    n, m = alg.dim, rep.carrier_dim
    total = n + m

    def embed_a(v: Vector) -> Vector:
        return Vector(tuple(v.entries) + (0,) * m)

    def embed_v(v: Vector) -> Vector:
        return Vector((0,) * n + tuple(v.entries))

    def build(t: StructureTensor, left: ActionTensor,
              right: ActionTensor) -> StructureTensor:
        def fn(i: int, j: int) -> Vector:
            if i < n and j < n:
                return embed_a(t.basis_product(i, j))
            if i < n:  # A times V: left action
                return embed_v(left.mats[i].col(j - n))
            if j < n:  # V times A: right action
                return embed_v(right.mats[j].col(i - n))
            return Vector.zero(total)
        return StructureTensor.from_function(total, fn)

    dot = bracket = None
    if alg.dot is not None:
        dot = build(alg.dot, rep.lambda_l, rep.lambda_r)
    if alg.bracket is not None:
        bracket = build(alg.bracket, rep.rho_l, rep.rho_r)
    alpha = Matrix.block_diag(alg.alpha, rep.phi)
    return HomAlgebra(total, alg.kind, alpha, dot=dot, bracket=bracket)
