"""Joint counting of compositions by total and by number of parts.

c(n, m) is the number of compositions of n using exactly m parts, all
drawn from the part set.  The table is a dense DP triangle: prepending
a part p to a composition of n - p with m - 1 parts gives

    c(n, m) = sum over p in A, p <= n, of c(n - p, m - 1)

seeded by c(0, 0) = 1.  Summing a row over m recovers the plain count,
and column m matches the coefficients of the m-th power of the part
series; both cross-checks are exercised by the test suite and the
second one is exposed here as row_check_against_slices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .genfun import length_slice_series


@dataclass(frozen=True)
class BivariateTable:
    """(limit+1) x (limit+1) triangle of exact counts.

    entries[n][m] = compositions of n with exactly m parts.  Entries
    with m > n are stored but always zero (each part is at least 1).
    """

    limit: int
    entries: tuple

    def count(self, n, m):
        """c(n, m); zero outside the tabulated range is an error for n
        but fine for m (no composition has that many parts)."""
        if not (0 <= n <= self.limit):
            raise ValueError(f"n must be in 0..{self.limit}")
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m > self.limit:
            return 0
        return self.entries[n][m]

    def row(self, n):
        """All counts for total n, indexed by number of parts."""
        if not (0 <= n <= self.limit):
            raise ValueError(f"n must be in 0..{self.limit}")
        return self.entries[n]

    def marginal(self, n):
        """Total composition count of n, summed over all lengths."""
        return sum(self.row(n))


def bivariate_table(A, limit):
    """DP fill of the joint table for part set A up to the given total."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    members = A.members_upto(limit)
    rows = [[0] * (limit + 1) for _ in range(limit + 1)]
    rows[0][0] = 1
    for n in range(1, limit + 1):
        row = rows[n]
        for p in members:
            if p > n:
                break
            prev = rows[n - p]
            # parts are >= 1, so a composition of n-p has at most n-p parts
            for m in range(1, n - p + 2):
                if prev[m - 1]:
                    row[m] += prev[m - 1]
    return BivariateTable(limit, tuple(tuple(r) for r in rows))


def row_check_against_slices(A, n):
    """True iff row n of the DP table matches the series slices.

    The slice route is independent of the DP: the number of m-part
    compositions of n is the x^n coefficient of the m-th power of the
    part series, computed by polynomial convolution.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = bivariate_table(A, n)
    row = table.row(n)
    for m in range(n + 1):
        if row[m] != length_slice_series(A, m, n)[n]:
            return False
    return True


def odd_parts_by_length(n, m):
    """Closed form for the odd-part table: compositions of n into
    exactly m odd parts number binomial((n+m)/2 - 1, m - 1) when n and
    m have the same parity, and zero otherwise.  (Subtract 1 from each
    part and halve: the m odd parts become m nonnegative evens summing
    to n - m, i.e. a weak composition of (n-m)/2 into m parts.)
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if n == 0 or m == 0:
        return 1 if n == m else 0
    if (n - m) % 2 or m > n:
        return 0
    return comb((n + m) // 2 - 1, m - 1)
