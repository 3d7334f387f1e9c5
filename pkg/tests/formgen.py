"""Random generators and transport helpers shared by the form tests."""
from random import Random

from genuslab.z2forms import (
    IntegralLattice,
    Z2BilinearSpace,
    Z2QuadraticForm,
    Z4QuadraticForm,
    mask_to_vec,
)


def random_alternating_space(rng: Random, dim: int) -> Z2BilinearSpace:
    """Nonsingular alternating gram of even dim, by rejection."""
    assert dim % 2 == 0
    while True:
        rows = [0] * dim
        for i in range(dim):
            for j in range(i + 1, dim):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        space = Z2BilinearSpace(dim, tuple(rows))
        if space.nonsingular:
            return space


def random_quadratic_form(rng: Random, dim: int) -> Z2QuadraticForm:
    space = random_alternating_space(rng, dim)
    values = tuple(rng.randrange(2) for _ in range(dim))
    return Z2QuadraticForm(space, values)


def random_symmetric_space(rng: Random, dim: int, nonsingular=True) -> Z2BilinearSpace:
    while True:
        rows = [0] * dim
        for i in range(dim):
            for j in range(i, dim):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        space = Z2BilinearSpace(dim, tuple(rows))
        if not nonsingular or space.nonsingular:
            return space


def random_z4_form(rng: Random, dim: int, nonsingular=True) -> Z4QuadraticForm:
    space = random_symmetric_space(rng, dim, nonsingular)
    diag = space.diag_mask
    values = tuple(((diag >> i) & 1) + 2 * rng.randrange(2) for i in range(dim))
    return Z4QuadraticForm(space, values)


def random_invertible_masks(rng: Random, dim: int) -> list[int]:
    """Rows of a random invertible GF(2) matrix: shuffled identity + row ops."""
    rows = [1 << i for i in range(dim)]
    rng.shuffle(rows)
    for _ in range(dim * 3):
        i, j = rng.randrange(dim), rng.randrange(dim)
        if i != j:
            rows[i] ^= rows[j]
    return rows


def transport_form(form: Z2QuadraticForm, basis_masks: list[int]) -> Z2QuadraticForm:
    """The same quadratic form written in a new basis."""
    dim = form.space.dim
    rows = []
    for i in range(dim):
        row = 0
        for j in range(dim):
            row |= form.space.pairing_mask(basis_masks[i], basis_masks[j]) << j
        rows.append(row)
    values = tuple(form.value_mask(m) for m in basis_masks)
    return Z2QuadraticForm(Z2BilinearSpace(dim, tuple(rows)), values)


def random_unimodular_conjugate(rng: Random, lat: IntegralLattice, ops: int = 6) -> IntegralLattice:
    """U G U^T for a random integer matrix U of determinant +-1."""
    n = lat.dim
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-1, 1))
        for k in range(n):
            u[i][k] += c * u[j][k]
    g = lat.gram
    ug = [[sum(u[i][k] * g[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ugu = [[sum(ug[i][k] * u[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    return IntegralLattice(n, tuple(tuple(r) for r in ugu))


def brute_force_vectors(dim: int):
    return [mask_to_vec(m, dim) for m in range(1 << dim)]
