"""Random associative algebras by rejection sampling (test-only)."""
import random

from hochschild.algebra import Algebra, check_associativity
from hochschild.linalg import Matrix, rank
from hochschild.scalar import Scalar, ZERO

VALUES = (-2, -1, 1, 2)


def random_constants(rng, n, p_zero=0.75):
    return tuple(
        tuple(
            tuple(ZERO if rng.random() < p_zero else Scalar(rng.choice(VALUES)) for _ in range(n))
            for _ in range(n)
        )
        for _ in range(n)
    )


def random_associative_algebra(rng, n, name=None, max_tries=100_000):
    for _ in range(max_tries):
        c = random_constants(rng, n)
        if not any(x for r in c for t in r for x in t):
            continue
        A = Algebra(name or f"random{n}", n, c)
        if check_associativity(A).ok:
            return A
    raise RuntimeError("no associative algebra found")


def random_corpus(count=100, seed=20240601, dims=(1, 2, 3, 2, 3, 3)):
    rng = random.Random(seed)
    return [random_associative_algebra(rng, dims[k % len(dims)], name=f"random#{k}") for k in range(count)]


def random_invertible(rng, n, lo=-2, hi=2):
    while True:
        P = Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if rank(P) == n:
            return P
