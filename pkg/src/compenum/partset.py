"""Eventually periodic subsets of the positive integers.

A PartSet stores a period (modulus), the residue classes that belong to
the set beyond finitely many exceptions, and the exceptional values that
are added or removed against that pattern.  These are exactly the part
sets whose indicator series sum_{a in A} x^a is a rational function,
which is what keeps every generating function downstream a ratio of
integer polynomials with a finite recurrence.

Construction canonicalizes: exceptions that merely restate the periodic
pattern are dropped, so two PartSets with identical membership compare
equal field by field.  Values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import IntPolynomial


class SetSpecError(ValueError):
    """Malformed set expression; ``position`` is the offset of the problem."""

    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


@dataclass(frozen=True)
class PartSet:
    modulus: int
    residues: frozenset = frozenset()
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    def __post_init__(self):
        k = self.modulus
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise ValueError("modulus must be a positive integer")
        residues = frozenset(self.residues)
        added = frozenset(self.added)
        removed = frozenset(self.removed)
        if not all(isinstance(r, int) and 0 <= r < k for r in residues):
            raise ValueError("residues must lie in 0..modulus-1")
        for exc in (added, removed):
            if not all(isinstance(v, int) and v >= 1 for v in exc):
                raise ValueError("exception values must be positive integers")
        if added & removed:
            raise ValueError("added and removed exceptions overlap")
        # canonical form: keep only exceptions that contradict the pattern
        added = frozenset(v for v in added if v % k not in residues)
        removed = frozenset(v for v in removed if v % k in residues)
        object.__setattr__(self, "residues", residues)
        object.__setattr__(self, "added", added)
        object.__setattr__(self, "removed", removed)

    def __str__(self):
        # compact display form; multi-residue sets are not valid setspec
        # input, so this is for humans and reports, not round-tripping
        if self.modulus == 1 and not self.residues:
            return "set:" + ",".join(str(v) for v in sorted(self.added))
        if self.modulus == 1:
            base = "all"
        else:
            base = f"mod:{self.modulus}:" + ",".join(
                str(r) for r in sorted(self.residues)
            )
        if self.added:
            base += " +" + ",".join(str(v) for v in sorted(self.added))
        if self.removed:
            base += " -" + ",".join(str(v) for v in sorted(self.removed))
        return base

    # -- membership ----------------------------------------------------

    def __contains__(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError("part values are positive integers")
        if v in self.added:
            return True
        if v in self.removed:
            return False
        return v % self.modulus in self.residues

    def members_upto(self, n):
        """Sorted members <= n, walking residue classes rather than scanning."""
        out = set()
        k = self.modulus
        for r in self.residues:
            first = r if r >= 1 else k
            out.update(range(first, n + 1, k))
        out -= self.removed
        out.update(v for v in self.added if v <= n)
        return sorted(out)

    def is_empty_upto(self, n):
        return not self.members_upto(n)

    # -- algebra -------------------------------------------------------

    def complement(self):
        """Z>0 minus this set.  An exact involution: residues flip within
        0..k-1 and the two exception lists swap roles."""
        return PartSet(
            self.modulus,
            frozenset(range(self.modulus)) - self.residues,
            added=self.removed,
            removed=self.added,
        )

    def series_form(self):
        """(P, Q, k) with  sum_{a in A} x^a = P(x) + Q(x)/(1 - x^k).

        Each allowed residue r contributes one representative monomial
        x^{r0} to Q, with r0 = r for r >= 1 and r0 = k for the class of
        multiples of k (so that class shows up as x^k, the shape the
        avoid-multiples denominators are usually written in).  The
        finite exceptions enter P with sign.  P(0) = Q(0) = 0 and
        deg Q <= k.
        """
        k = self.modulus
        q = [0] * (k + 1)
        for r in self.residues:
            q[r if r >= 1 else k] = 1
        top = max(self.added | self.removed, default=0)
        p = [0] * (top + 1)
        for v in self.added:
            p[v] += 1
        for v in self.removed:
            p[v] -= 1
        return IntPolynomial(p), IntPolynomial(q), k

    # -- constructors ----------------------------------------------------

    @classmethod
    def everything(cls):
        return cls(1, frozenset({0}))

    @classmethod
    def finite(cls, values):
        return cls(1, frozenset(), added=frozenset(values))

    @classmethod
    def from_threshold(cls, t):
        """{t, t+1, t+2, ...} for t >= 1."""
        if t < 1:
            raise ValueError("threshold must be >= 1")
        return cls(1, frozenset({0}), removed=frozenset(range(1, t)))

    @classmethod
    def arithmetic_progression(cls, first, step):
        """{first + j*step : j >= 0} for any first, step >= 1.

        Unlike the ``ap:`` spec syntax this allows first > step; members
        of the residue class below ``first`` are carried as removed
        exceptions.
        """
        if first < 1 or step < 1:
            raise ValueError("first and step must be >= 1")
        r = first % step
        low = r if r >= 1 else step
        return cls(step, frozenset({r}), removed=frozenset(range(low, first, step)))


# -- the set-expression grammar ----------------------------------------
#
#   setspec := "all" | "ge:" INT | "set:" [INT ("," INT)*]
#            | "mod:" INT ":" INT ("," INT)* | "ap:" INT ":" INT
#            | "not:" setspec
#
# ASCII only, no whitespace.  INT is a run of decimal digits; 0 is legal
# only where a residue is expected.


def parse_setspec(text):
    """Parse a set expression into a PartSet.

    ``ap:m:k`` is {m + jk : j >= 0} and requires 1 <= m <= k;
    ``mod:k:r1,r2`` is every positive integer congruent to a listed
    residue; ``ge:t`` is {t, t+1, ...}; ``set:`` lists a finite set
    (possibly empty); ``not:`` complements within Z>0; ``all`` is Z>0.
    Raises SetSpecError with the offending position on malformed input.
    """
    if not isinstance(text, str):
        raise SetSpecError("set expression must be a string", 0)
    result, end = _parse_spec(text, 0)
    if end != len(text):
        raise SetSpecError("trailing input after set expression", end)
    return result


def _parse_spec(text, pos):
    rest = text[pos:]
    if rest == "all":
        return PartSet.everything(), len(text)
    if rest.startswith("not:"):
        inner, end = _parse_spec(text, pos + 4)
        return inner.complement(), end
    if rest.startswith("ge:"):
        t, end = _parse_int(text, pos + 3)
        if t < 1:
            raise SetSpecError("ge threshold must be >= 1", pos + 3)
        return PartSet.from_threshold(t), end
    if rest.startswith("set:"):
        values, end = _parse_int_list(text, pos + 4, allow_empty=True)
        for v, vpos in values:
            if v < 1:
                raise SetSpecError("set elements must be >= 1", vpos)
        return PartSet.finite(v for v, _ in values), end
    if rest.startswith("mod:"):
        k, after = _parse_int(text, pos + 4)
        if k < 1:
            raise SetSpecError("modulus must be >= 1", pos + 4)
        after = _expect_colon(text, after)
        residues, end = _parse_int_list(text, after, allow_empty=False)
        for r, rpos in residues:
            if r >= k:
                raise SetSpecError("residue must be smaller than the modulus", rpos)
        return PartSet(k, frozenset(r for r, _ in residues)), end
    if rest.startswith("ap:"):
        m, after = _parse_int(text, pos + 3)
        if m < 1:
            raise SetSpecError("ap start must be >= 1", pos + 3)
        after = _expect_colon(text, after)
        k, end = _parse_int(text, after)
        if k < 1:
            raise SetSpecError("ap step must be >= 1", after)
        if m > k:
            raise SetSpecError("ap start must not exceed the step", pos + 3)
        return PartSet(k, frozenset({m % k})), end
    raise SetSpecError("expected one of all, ge:, set:, mod:, ap:, not:", pos)


def _parse_int(text, pos):
    end = pos
    while end < len(text) and "0" <= text[end] <= "9":
        end += 1
    if end == pos:
        raise SetSpecError("expected an integer", pos)
    return int(text[pos:end]), end


def _expect_colon(text, pos):
    if pos >= len(text) or text[pos] != ":":
        raise SetSpecError("expected ':'", pos)
    return pos + 1


def _parse_int_list(text, pos, allow_empty):
    if pos == len(text):
        if allow_empty:
            return [], pos
        raise SetSpecError("expected an integer", pos)
    values = []
    v, end = _parse_int(text, pos)
    values.append((v, pos))
    while end < len(text):
        if text[end] != ",":
            raise SetSpecError("expected ','", end)
        item = end + 1
        v, end = _parse_int(text, item)
        values.append((v, item))
    return values, end
