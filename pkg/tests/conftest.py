"""Shared builders for randomized instances, all seeded explicitly."""

import random

import pytest

from hilbfold.exact import ExactMatrix, GaussRational, rank
from hilbfold.foldring import FoldRingCtx, normalize_punctual


def rng_for(name: str) -> random.Random:
    return random.Random(f"hilbfold:{name}")


def random_gauss(rng, nonzero=False):
    while True:
        g = GaussRational(rng.randint(-5, 5), rng.randint(-2, 2),
                          rng.randint(1, 3))
        if g or not nonzero:
            return g


def generic_full_rank(rng, rows, cols, rational_only=True):
    """Full-rank matrix without zero columns, entries small integers."""
    while True:
        entries = [[GaussRational(rng.randint(-4, 4),
                                  0 if rational_only else rng.randint(-2, 2))
                    for _ in range(cols)] for _ in range(rows)]
        m = ExactMatrix(entries)
        if rank(m) != rows:
            continue
        if any(all(not m[i, j] for i in range(rows)) for j in range(cols)):
            continue
        return m


def ideal_from_matrix(ctx: FoldRingCtx, u, matrix: ExactMatrix):
    """normalize_punctual applied to the rows of matrix * (x^u)."""
    gens = []
    for r in range(matrix.rows):
        f = None
        for a in range(ctx.n):
            if matrix[r, a]:
                t = ctx.axis_monomial(a, u[a], matrix[r, a])
                f = t if f is None else f + t
        gens.append(f)
    return normalize_punctual(ctx, gens)


def random_degree_vector(rng, n, total):
    u = [1] * n
    for _ in range(total - n):
        u[rng.randrange(n)] += 1
    return tuple(u)


@pytest.fixture
def rng(request):
    return rng_for(request.node.name)
