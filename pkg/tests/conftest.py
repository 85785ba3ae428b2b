"""Shared test helpers: seeded random matrices and base changes."""
from __future__ import annotations

import random
from functools import lru_cache

from spinvariants._intmat import (IntMatrix, as_int_matrix, identity_int,
                                  matmul_int, transpose_int)
from spinvariants.surface_action import (HomologyAction, Pairing,
                                         random_symplectic, standard_pairing)


def random_unimodular(n: int, rng: random.Random,
                      steps: int = 12) -> tuple[IntMatrix, IntMatrix]:
    """A random determinant-one integer matrix together with its inverse,
    built as a product of elementary column operations with the inverse
    tracked alongside."""
    u = [list(r) for r in identity_int(n)]
    uinv = [list(r) for r in identity_int(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for r in range(n):
            u[r][j] += c * u[r][i]
        for col in range(n):
            uinv[i][col] -= c * uinv[j][col]
    return as_int_matrix(u), as_int_matrix(uinv)


def conjugated_pair(action: HomologyAction, pairing: Pairing,
                    rng: random.Random) -> tuple[HomologyAction, Pairing]:
    """Transport (A, P) along a random integral base change U: the matrix
    becomes U^-1 A U and the form U^T P U.  Mod-2 symplecticity of the
    pair is preserved, so the result is a valid solver/oracle input."""
    n = 2 * action.genus
    u, uinv = random_unimodular(n, rng)
    new_a = matmul_int(matmul_int(uinv, action.matrix), u)
    new_p = matmul_int(matmul_int(transpose_int(u), pairing.form), u)
    return HomologyAction(action.genus, new_a), Pairing(action.genus, new_p)


@lru_cache(maxsize=1)
def oracle_corpus() -> tuple[tuple[HomologyAction, Pairing], ...]:
    """200 seeded symplectic actions at genus 1..3, half against the
    standard pairing and half transported along a random base change.
    Shared by the oracle-equivalence, counting-law, and involution tests."""
    cases = []
    for g, count in {1: 67, 2: 67, 3: 66}.items():
        for k in range(count):
            seed = 1000 * g + k
            action = random_symplectic(g, seed=seed, steps=14 + (k % 7))
            pairing = standard_pairing(g)
            if k % 2:
                action, pairing = conjugated_pair(action, pairing,
                                                  random.Random(seed + 5))
            cases.append((action, pairing))
    return tuple(cases)


def minus_identity(g: int) -> HomologyAction:
    return HomologyAction(g, tuple(tuple(-1 if i == j else 0
                                         for j in range(2 * g))
                                   for i in range(2 * g)))
