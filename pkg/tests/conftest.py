import random

import pytest

from shadowbounds.codes import BinaryCode


def random_orthogonal(m, rng, steps=12):
    """Random m x m GF(2) orthogonal matrix (rows as int bitmasks), m even.

    Generated by permutations and J - I on random coordinate blocks of even
    size; (J - I)^2 = I when the block size is even.
    """
    rows = [1 << (m - 1 - i) for i in range(m)]
    for _ in range(steps):
        perm = list(range(m))
        rng.shuffle(perm)
        rows = [rows[p] for p in perm]
        size = rng.choice([b for b in range(2, m + 1, 2)])
        block = rng.sample(range(m), size)
        total = 0
        for i in block:
            total ^= rows[i]
        # row_i <- sum of the other rows in the block
        for i in block:
            rows[i] ^= total
    return rows


def self_dual_from_orthogonal(rows, m):
    return BinaryCode.from_rows(2 * m, [((1 << (m - 1 - i)) << m) | r for i, r in enumerate(rows)])


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
