"""Matched pairs of Hom-algebras and the bicrossed sum on A1 + A2.

A matched pair is two algebras of the same kind acting on each other; the
cross-compatibility conditions below are exactly what makes the bicrossed
product on the direct sum an algebra of the same kind again (given that
both cross actions are representations and both constituents pass their
own checks).

For the associative kind two published variants of the condition set are
in circulation, differing in one term; the default "corrected" set is the
one derived by expanding the twisted associator of the bicrossed product,
and it is the set under which the sum theorem holds.  The "printed"
variant is kept behind a switch for comparison.
"""

from __future__ import annotations

from itertools import product as iproduct

from .algebra import (
    ASSOCIATIVE, LEIBNIZ, POISSON, HomAlgebra, StructureTensor, check_algebra,
)
from .errors import KindMismatchError, PreconditionError, ShapeError
from .linalg import Matrix, Vector
from .representation import Representation, check_representation
from .reporting import CheckReport, concat, scan_identity


class MatchedPair:
    """Two same-kind algebras with cross actions on each other.

    ``actions_1_on_2`` is a representation of ``a1`` on ``a2``'s space and
    must carry ``a2.alpha`` as its twist (and symmetrically), because the
    bicrossed sum twists by alpha1 (+) alpha2.
    """

    __slots__ = ("a1", "a2", "actions_1_on_2", "actions_2_on_1")

    def __init__(self, a1: HomAlgebra, a2: HomAlgebra,
                 actions_1_on_2: Representation, actions_2_on_1: Representation):
        if a1.kind != a2.kind:
            raise KindMismatchError("matched pair needs algebras of one kind")
        for rep, base, carrier in ((actions_1_on_2, a1, a2),
                                   (actions_2_on_1, a2, a1)):
            if rep.kind != base.kind:
                raise KindMismatchError("cross action kind differs from the algebras")
            if rep.base_dim != base.dim or rep.carrier_dim != carrier.dim:
                raise ShapeError("cross action dimensions are inconsistent")
            if rep.phi != carrier.alpha:
                raise ShapeError(
                    "cross action twist must equal the carrier algebra's twist")
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "actions_1_on_2", actions_1_on_2)
        object.__setattr__(self, "actions_2_on_1", actions_2_on_1)

    def __setattr__(self, name, value):
        raise AttributeError("MatchedPair is immutable")


def _cross_conditions_associative(mp: MatchedPair, printed: bool) -> list:
    """Six conditions coupling the dot products with the lambda actions.

    Each lambda below is the linear extension of the action family; x, y
    range over a basis of A1 and u, v over a basis of A2.
    """
    a1, a2 = mp.a1, mp.a2
    n1, n2 = a1.dim, a2.dim
    dot1, dot2 = a1.dot, a2.dot
    al1, al2 = a1.alpha, a2.alpha
    l1l, l1r = mp.actions_1_on_2.lambda_l, mp.actions_1_on_2.lambda_r
    l2l, l2r = mp.actions_2_on_1.lambda_l, mp.actions_2_on_1.lambda_r

    def e1(i):
        return Vector.unit(n1, i)

    def f2(i):
        return Vector.unit(n2, i)

    checks = []
    # lambda1_l(alpha1 x)(u * v) = lambda1_l(lambda2_r(u) x)(alpha2 v)
    #                              + (lambda1_l(x) u) * (alpha2 v)
    checks.append(scan_identity(
        "cross:assoc:1", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: l1l.at(al1.col(x)).apply(dot2.basis_product(u, v))
        - l1l.at(l2r.mats[u].col(x)).apply(al2.col(v))
        - dot2.product(l1l.mats[x].col(u), al2.col(v))))
    # lambda1_r(alpha1 x)(u * v) = lambda1_r(lambda2_l(v) x)(alpha2 u)
    #                              + (alpha2 u) * (lambda1_r(x) v)
    checks.append(scan_identity(
        "cross:assoc:2", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: l1r.at(al1.col(x)).apply(dot2.basis_product(u, v))
        - l1r.at(l2l.mats[v].col(x)).apply(al2.col(u))
        - dot2.product(al2.col(u), l1r.mats[x].col(v))))

    # lambda2_l(alpha2 u)(x * y) = lambda2_l(lambda1_r(x) u)(alpha1 y) + T3
    # where T3 is (lambda2_l(u) x) * (alpha1 y) in the corrected set and
    # (lambda2_l(alpha2 u) x) * (alpha1 y) in the printed one.
    if printed:
        def third(u, x):
            return l2l.at(al2.col(u)).apply(e1(x))
    else:
        def third(u, x):
            return l2l.mats[u].col(x)
    checks.append(scan_identity(
        "cross:assoc:3", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: l2l.at(al2.col(u)).apply(dot1.basis_product(x, y))
        - l2l.at(l1r.mats[x].col(u)).apply(al1.col(y))
        - dot1.product(third(u, x), al1.col(y))))
    # lambda2_r(alpha2 u)(x * y) = lambda2_r(lambda1_l(y) u)(alpha1 x)
    #                              + (alpha1 x) * (lambda2_r(u) y)
    checks.append(scan_identity(
        "cross:assoc:4", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: l2r.at(al2.col(u)).apply(dot1.basis_product(x, y))
        - l2r.at(l1l.mats[y].col(u)).apply(al1.col(x))
        - dot1.product(al1.col(x), l2r.mats[u].col(y))))
    # lambda1_l(lambda2_l(u) x)(alpha2 v) + (lambda1_r(x) u) * (alpha2 v)
    #   - lambda1_r(lambda2_r(v) x)(alpha2 u) - (alpha2 u) * (lambda1_l(x) v) = 0
    checks.append(scan_identity(
        "cross:assoc:5", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: l1l.at(l2l.mats[u].col(x)).apply(al2.col(v))
        + dot2.product(l1r.mats[x].col(u), al2.col(v))
        - l1r.at(l2r.mats[v].col(x)).apply(al2.col(u))
        - dot2.product(al2.col(u), l1l.mats[x].col(v))))
    # lambda2_l(lambda1_l(x) u)(alpha1 y) + (lambda2_r(u) x) * (alpha1 y)
    #   - lambda2_r(lambda1_r(y) u)(alpha1 x) - (alpha1 x) * (lambda2_l(u) y) = 0
    checks.append(scan_identity(
        "cross:assoc:6", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: l2l.at(l1l.mats[x].col(u)).apply(al1.col(y))
        + dot1.product(l2r.mats[u].col(x), al1.col(y))
        - l2r.at(l1r.mats[y].col(u)).apply(al1.col(x))
        - dot1.product(al1.col(x), l2l.mats[u].col(y))))
    return checks


def _cross_conditions_leibniz(mp: MatchedPair) -> list:
    """Six conditions coupling the brackets with the rho actions."""
    a1, a2 = mp.a1, mp.a2
    n1, n2 = a1.dim, a2.dim
    br1, br2 = a1.bracket, a2.bracket
    al1, al2 = a1.alpha, a2.alpha
    r1l, r1r = mp.actions_1_on_2.rho_l, mp.actions_1_on_2.rho_r
    r2l, r2r = mp.actions_2_on_1.rho_l, mp.actions_2_on_1.rho_r

    checks = []
    checks.append(scan_identity(
        "cross:leibniz:1", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: r1r.at(al1.col(x)).apply(br2.basis_product(u, v))
        - br2.product(al2.col(u), r1r.mats[x].col(v))
        - br2.product(r1r.mats[x].col(u), al2.col(v))
        - r1r.at(r2l.mats[v].col(x)).apply(al2.col(u))
        - r1l.at(r2l.mats[u].col(x)).apply(al2.col(v))))
    checks.append(scan_identity(
        "cross:leibniz:2", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: r1l.at(al1.col(x)).apply(br2.basis_product(u, v))
        - br2.product(r1l.mats[x].col(u), al2.col(v))
        + br2.product(r1l.mats[x].col(v), al2.col(u))
        - r1l.at(r2r.mats[u].col(x)).apply(al2.col(v))
        + r1l.at(r2r.mats[v].col(x)).apply(al2.col(u))))
    checks.append(scan_identity(
        "cross:leibniz:3", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: r1r.at(al1.col(x)).apply(br2.basis_product(u, v))
        - br2.product(r1r.mats[x].col(u), al2.col(v))
        + br2.product(al2.col(u), r1l.mats[x].col(v))
        - r1l.at(r2l.mats[u].col(x)).apply(al2.col(v))
        + r1r.at(r2r.mats[v].col(x)).apply(al2.col(u))))
    checks.append(scan_identity(
        "cross:leibniz:4", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: r2r.at(al2.col(u)).apply(br1.basis_product(x, y))
        - br1.product(al1.col(x), r2r.mats[u].col(y))
        - br1.product(r2r.mats[u].col(x), al1.col(y))
        - r2r.at(r1l.mats[y].col(u)).apply(al1.col(x))
        - r2l.at(r1l.mats[x].col(u)).apply(al1.col(y))))
    checks.append(scan_identity(
        "cross:leibniz:5", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: r2l.at(al2.col(u)).apply(br1.basis_product(x, y))
        - br1.product(r2l.mats[u].col(x), al1.col(y))
        + br1.product(r2l.mats[u].col(y), al1.col(x))
        - r2l.at(r1r.mats[x].col(u)).apply(al1.col(y))
        + r2l.at(r1r.mats[y].col(u)).apply(al1.col(x))))
    checks.append(scan_identity(
        "cross:leibniz:6", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: r2r.at(al2.col(u)).apply(br1.basis_product(x, y))
        - br1.product(r2r.mats[u].col(x), al1.col(y))
        + br1.product(al1.col(x), r2l.mats[u].col(y))
        - r2l.at(r1l.mats[x].col(u)).apply(al1.col(y))
        + r2r.at(r1r.mats[y].col(u)).apply(al1.col(x))))
    return checks


def _cross_conditions_poisson(mp: MatchedPair) -> list:
    """Six mixed conditions coupling dot products with bracket actions."""
    a1, a2 = mp.a1, mp.a2
    n1, n2 = a1.dim, a2.dim
    dot1, dot2 = a1.dot, a2.dot
    br1, br2 = a1.bracket, a2.bracket
    al1, al2 = a1.alpha, a2.alpha
    r12, r21 = mp.actions_1_on_2, mp.actions_2_on_1
    l1l, l1r, r1l, r1r = r12.lambda_l, r12.lambda_r, r12.rho_l, r12.rho_r
    l2l, l2r, r2l, r2r = r21.lambda_l, r21.lambda_r, r21.rho_l, r21.rho_r

    checks = []
    checks.append(scan_identity(
        "cross:poisson:1", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: l2l.at(al2.col(u)).apply(br1.basis_product(x, y))
        + dot1.product(r2l.mats[u].col(y), al1.col(x))
        + l2l.at(r1r.mats[y].col(u)).apply(al1.col(x))
        - br1.product(l2l.mats[u].col(x), al1.col(y))
        - r2l.at(l1r.mats[x].col(u)).apply(al1.col(y))))
    checks.append(scan_identity(
        "cross:poisson:2", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: l2r.at(al2.col(u)).apply(br1.basis_product(x, y))
        + dot1.product(al1.col(x), r2l.mats[u].col(y))
        + l2r.at(r1r.mats[y].col(u)).apply(al1.col(x))
        - br1.product(l2r.mats[u].col(x), al1.col(y))
        - r2l.at(l1l.mats[x].col(u)).apply(al1.col(y))))
    checks.append(scan_identity(
        "cross:poisson:3", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: l1l.at(al1.col(x)).apply(br2.basis_product(u, v))
        + dot2.product(r1l.mats[x].col(v), al2.col(u))
        + l1l.at(r2r.mats[v].col(x)).apply(al2.col(u))
        - br2.product(l1l.mats[x].col(u), al2.col(v))
        - r1l.at(l2r.mats[u].col(x)).apply(al2.col(v))))
    checks.append(scan_identity(
        "cross:poisson:4", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: l1r.at(al1.col(x)).apply(br2.basis_product(u, v))
        + dot2.product(al2.col(u), r1l.mats[x].col(v))
        + l1r.at(r2r.mats[v].col(x)).apply(al2.col(u))
        - br2.product(l1r.mats[x].col(u), al2.col(v))
        - r1l.at(l2l.mats[u].col(x)).apply(al2.col(v))))
    checks.append(scan_identity(
        "cross:poisson:5", iproduct(range(n2), range(n1), range(n1)),
        lambda u, x, y: r2r.at(al2.col(u)).apply(dot1.basis_product(x, y))
        - dot1.product(al1.col(x), r2r.mats[u].col(y))
        - l2r.at(r1l.mats[y].col(u)).apply(al1.col(x))
        - dot1.product(r2r.mats[u].col(x), al1.col(y))
        - l2l.at(r1l.mats[x].col(u)).apply(al1.col(y))))
    checks.append(scan_identity(
        "cross:poisson:6", iproduct(range(n1), range(n2), range(n2)),
        lambda x, u, v: r1r.at(al1.col(x)).apply(dot2.basis_product(u, v))
        - dot2.product(al2.col(u), r1r.mats[x].col(v))
        - l1r.at(r2l.mats[v].col(x)).apply(al2.col(u))
        - dot2.product(r1r.mats[x].col(u), al2.col(v))
        - l1l.at(r2l.mats[u].col(x)).apply(al2.col(v))))
    return checks


def check_matched_pair(mp: MatchedPair,
                       associative_conditions: str = "corrected") -> CheckReport:
    """Verify everything the bicrossed sum theorem needs.

    Both cross actions must pass their representation axioms (raised as a
    precondition failure otherwise).  The report then contains each
    constituent algebra's own checks followed by the kind's
    cross-compatibility conditions on all basis tuples; a passing report
    guarantees that :func:`matched_sum` passes the kind's algebra checks.
    """
    if associative_conditions not in ("corrected", "printed"):
        raise ValueError("associative_conditions must be 'corrected' or 'printed'")
    for rep, base, label in ((mp.actions_1_on_2, mp.a1, "actions_1_on_2"),
                             (mp.actions_2_on_1, mp.a2, "actions_2_on_1")):
        rep_report = check_representation(rep, base)
        if not rep_report.passed:
            raise PreconditionError(
                f"{label} is not a representation: "
                + "; ".join(c.render() for c in rep_report.failures()))
    reports = [check_algebra(mp.a1).prefixed("algebra1:"),
               check_algebra(mp.a2).prefixed("algebra2:")]
    checks = []
    if mp.a1.kind in (ASSOCIATIVE, POISSON):
        checks.extend(_cross_conditions_associative(
            mp, printed=associative_conditions == "printed"))
    if mp.a1.kind in (LEIBNIZ, POISSON):
        checks.extend(_cross_conditions_leibniz(mp))
    if mp.a1.kind == POISSON:
        checks.extend(_cross_conditions_poisson(mp))
    reports.append(CheckReport(tuple(checks)))
    return concat(*reports)


def matched_sum(mp: MatchedPair) -> HomAlgebra:
    """Bicrossed product on A1 + A2.

    The construction is total; whether the result satisfies the kind's
    axioms is decided by the checkers.  Basis order: A1 basis, then A2.
    """
    a1, a2 = mp.a1, mp.a2
    n1, n2 = a1.dim, a2.dim
    total = n1 + n2

    def embed1(v: Vector) -> Vector:
        return Vector(tuple(v.entries) + (0,) * n2)

    def embed2(v: Vector) -> Vector:
        return Vector((0,) * n1 + tuple(v.entries))

    def build(t1: StructureTensor, t2: StructureTensor,
              act12_l, act12_r, act21_l, act21_r) -> StructureTensor:
        def fn(i: int, j: int) -> Vector:
            if i < n1 and j < n1:
                return embed1(t1.basis_product(i, j))
            if i >= n1 and j >= n1:
                return embed2(t2.basis_product(i - n1, j - n1))
            if i < n1:  # x in A1, v in A2: lambda2_r(v) x + lambda1_l(x) v
                x, v = i, j - n1
                return embed1(act21_r.mats[v].col(x)) + embed2(act12_l.mats[x].col(v))
            # u in A2, y in A1: lambda2_l(u) y + lambda1_r(y) u
            u, y = i - n1, j
            return embed1(act21_l.mats[u].col(y)) + embed2(act12_r.mats[y].col(u))
        return StructureTensor.from_function(total, fn)

    dot = bracket = None
    if a1.dot is not None:
        dot = build(a1.dot, a2.dot,
                    mp.actions_1_on_2.lambda_l, mp.actions_1_on_2.lambda_r,
                    mp.actions_2_on_1.lambda_l, mp.actions_2_on_1.lambda_r)
    if a1.bracket is not None:
        bracket = build(a1.bracket, a2.bracket,
                        mp.actions_1_on_2.rho_l, mp.actions_1_on_2.rho_r,
                        mp.actions_2_on_1.rho_l, mp.actions_2_on_1.rho_r)
    alpha = Matrix.block_diag(a1.alpha, a2.alpha)
    return HomAlgebra(total, a1.kind, alpha, dot=dot, bracket=bracket)
