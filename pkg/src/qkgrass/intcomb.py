"""Exact integer arithmetic helpers.

Binomial coefficients are treated as integer-valued polynomials in their
upper argument, so negative upper arguments are allowed.  Everything here
is arbitrary precision; no floats.
"""


def binomial(x: int, k: int) -> int:
    """Polynomial binomial coefficient C(x, k).

    Returns 0 for k < 0.  For k >= 0 this is x(x-1)...(x-k+1)/k!, which is
    an integer for every integer x, including negative x where it satisfies
    C(-x, k) = (-1)^k C(x+k-1, k).
    """
    if k < 0:
        return 0
    out = 1
    for i in range(1, k + 1):
        # out * (x - i + 1) is always an exact multiple of i
        out = out * (x - i + 1) // i
    return out


def kittens_identity_residual(n: int, m: int, k: int) -> int:
    """Residual of the inclusion-exclusion identity
    C(n, k) = sum_j (-1)^j C(n+m-j, k-j) C(m, j).

    The identity holds for all integers n, m with k >= 0, so this always
    returns 0; it exists as a self-test of the polynomial extension.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    total = sum(
        (-1) ** j * binomial(n + m - j, k - j) * binomial(m, j)
        for j in range(k + 1)
    )
    return binomial(n, k) - total
