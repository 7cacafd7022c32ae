"""Shared generators: small verified algebras, their self-morphisms, valid
representations, and operator contexts known to pass the relative
Rota-Baxter check.  Everything is seeded and deterministic."""

import random
from fractions import Fraction

from homkit.algebra import (
    ASSOCIATIVE, LEIBNIZ, POISSON, HomAlgebra, StructureTensor,
    check_algebra, check_morphism, yau_twist,
)
from homkit.fixtures import TWIST, leibniz_rbo, two_dim_leibniz
from homkit.linalg import Matrix
from homkit.operators import OperatorContext, projection_context
from homkit.representation import (
    ActionTensor, Representation, check_representation,
    pullback_representation, regular_representation, twist_representation,
)


def dual_numbers() -> HomAlgebra:
    """K[x]/(x^2) with identity twist."""
    dot = StructureTensor.from_products(2, {
        (0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]})
    return HomAlgebra(2, ASSOCIATIVE, Matrix.identity(2), dot=dot)


def truncated_polynomials() -> HomAlgebra:
    """K[x]/(x^3) with identity twist."""
    dot = StructureTensor.from_products(3, {
        (0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (1, 0): [0, 1, 0],
        (0, 2): [0, 0, 1], (2, 0): [0, 0, 1], (1, 1): [0, 0, 1]})
    return HomAlgebra(3, ASSOCIATIVE, Matrix.identity(3), dot=dot)


def nonabelian_lie2() -> HomAlgebra:
    """[e1,e2] = e1 = -[e2,e1] with identity twist (a right Leibniz algebra)."""
    bracket = StructureTensor.from_products(2, {(0, 1): [1, 0], (1, 0): [-1, 0]})
    return HomAlgebra(2, LEIBNIZ, Matrix.identity(2), bracket=bracket)


def heisenberg3() -> HomAlgebra:
    """[e1,e2] = e3 = -[e2,e1] with identity twist."""
    bracket = StructureTensor.from_products(3, {
        (0, 1): [0, 0, 1], (1, 0): [0, 0, -1]})
    return HomAlgebra(3, LEIBNIZ, Matrix.identity(3), bracket=bracket)


def poisson_from_bracket() -> HomAlgebra:
    """Zero dot over the nonabelian bracket; compatibility is automatic."""
    l = nonabelian_lie2()
    return HomAlgebra(2, POISSON, l.alpha, dot=StructureTensor.zero(2),
                      bracket=l.bracket)


def poisson_from_dot() -> HomAlgebra:
    """Dual numbers with zero bracket."""
    a = dual_numbers()
    return HomAlgebra(2, POISSON, a.alpha, dot=a.dot,
                      bracket=StructureTensor.zero(2))


def self_morphisms(alg: HomAlgebra) -> list[Matrix]:
    """Verified self-morphisms of the algebra (always includes identity
    and zero)."""
    candidates = [Matrix.identity(alg.dim), Matrix.zero(alg.dim, alg.dim)]
    if alg.dim == 2:
        candidates += [TWIST,
                       Matrix([[1, 0], [0, 0]]),
                       Matrix([[1, 1], [0, 0]]),
                       Matrix([[0, 0], [0, 1]]),
                       Matrix([[1, 0], [0, -1]])]
    if alg.dim == 3:
        candidates += [Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).scale(1),
                       Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])]
    return [m for m in candidates if check_morphism(m, alg, alg).passed]


def verified_algebra_pool() -> list[HomAlgebra]:
    """Small algebras of every kind passing all their checks, including
    twisted (genuinely Hom) ones."""
    base = [two_dim_leibniz(), nonabelian_lie2(), heisenberg3(),
            dual_numbers(), truncated_polynomials(),
            poisson_from_bracket(), poisson_from_dot()]
    pool = list(base)
    for alg in base:
        for beta in self_morphisms(alg):
            twisted = yau_twist(alg, beta)
            if twisted not in pool:
                pool.append(twisted)
    for alg in pool:
        assert check_algebra(alg).passed
    return pool


def valid_representations(rng: random.Random, alg: HomAlgebra,
                          max_carrier: int = 3) -> list[Representation]:
    """Representations of a verified algebra that pass the axioms, built
    from constructions that are valid by theorem."""
    reps = [regular_representation(alg)]
    for beta in self_morphisms(alg):
        reps.append(pullback_representation(beta, alg, alg))
        reps.append(twist_representation(regular_representation(alg), beta, alg))
    m = rng.randint(0, max_carrier)
    phi = Matrix([[Fraction(rng.randint(-2, 2)) for _ in range(m)]
                  for _ in range(m)])
    kw = {}
    if alg.dot is not None:
        kw["lambda_l"] = ActionTensor.zero(alg.dim, m)
        kw["lambda_r"] = ActionTensor.zero(alg.dim, m)
    if alg.bracket is not None:
        kw["rho_l"] = ActionTensor.zero(alg.dim, m)
        kw["rho_r"] = ActionTensor.zero(alg.dim, m)
    reps.append(Representation(alg.kind, alg.dim, m, phi, **kw))
    out = []
    for rep in reps:
        assert check_representation(rep, alg).passed
        if rep not in out:
            out.append(rep)
    return out


def theorem_suite_contexts(rng: random.Random, count: int) -> list[OperatorContext]:
    """Contexts passing the relative Rota-Baxter check, drawn from the
    worked one-parameter family, projection contexts over verified
    algebra/representation pairs, and twisted variants."""
    contexts = []
    l = two_dim_leibniz()
    reg = regular_representation(l)
    for k in (1, -1, 2, Fraction(-1, 2), 3, Fraction(1, 3), -2, 5,
              Fraction(2, 7), 0):
        contexts.append(OperatorContext(l, reg, leibniz_rbo(k)))
    pool = verified_algebra_pool()
    small = [alg for alg in pool if alg.dim <= 3]
    while len(contexts) < count:
        alg = rng.choice(small)
        rep = rng.choice(valid_representations(rng, alg))
        contexts.append(projection_context(alg, rep))
    return contexts[:count]


def random_operator(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix([[Fraction(rng.randint(-2, 2), rng.choice([1, 1, 2]))
                    for _ in range(cols)] for _ in range(rows)])


def corrupt_one_entry(rng: random.Random, rep: Representation) -> Representation:
    """Copy with a single action-tensor entry shifted by a nonzero delta."""
    names = sorted(rep.actions())
    name = rng.choice(names)
    tensor = rep.actions()[name]
    mats = list(tensor.mats)
    i = rng.randrange(tensor.base_dim)
    r = rng.randrange(tensor.carrier_dim)
    c = rng.randrange(tensor.carrier_dim)
    entries = [list(row) for row in mats[i].entries]
    entries[r][c] += rng.choice([1, -1, 2, Fraction(1, 2)])
    mats[i] = Matrix(entries)
    kw = {n: t for n, t in rep.actions().items()}
    kw[name] = ActionTensor(tensor.base_dim, tensor.carrier_dim, mats)
    return Representation(rep.kind, rep.base_dim, rep.carrier_dim, rep.phi, **kw)
