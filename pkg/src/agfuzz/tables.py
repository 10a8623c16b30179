"""Small named tables used as fixtures and in the demos."""

from .cayley import validate_table


def subtraction_table(n):
    """``i * j = (j - i) mod n``.  An AG-group with left identity 0 that is
    non-commutative for n > 2; at n = 4 it is the usual order-4 AG-group
    example (row 1 reads 3 0 1 2)."""
    return validate_table([[(j - i) % n for j in range(n)] for i in range(n)])


def cyclic_table(n):
    return validate_table([[(i + j) % n for j in range(n)] for i in range(n)])


def klein_four_table():
    """``<a, b : a^2 = b^2 = (ab)^2 = e>`` with e=0, a=1, b=2, ab=3."""
    return validate_table([[i ^ j for j in range(4)] for i in range(4)])


def left_projection_table(n):
    """``a * b = a``; fails the left invertive law for n >= 2."""
    return validate_table([[i] * n for i in range(n)])


ORDER4_ROWS = [
    [0, 1, 2, 3],
    [3, 0, 1, 2],
    [2, 3, 0, 1],
    [1, 2, 3, 0],
]

# element names for the Klein four fixtures
E, A, B, AB = 0, 1, 2, 3
