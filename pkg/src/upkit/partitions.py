"""Integer partitions and their classification for split classical types.

A partition here is a finite multiset of positive integers, stored weakly
decreasing.  Throughout the package a partition ``lam`` of ``N`` labels a
unipotent class in the complex dual group: ``SO_N`` for ``s = +1`` (``N``
odd, dual letter B) and ``Sp_N`` for ``s = -1`` (``N`` even, dual letter C).
A part has *good parity* when it is odd (``s = +1``) or even (``s = -1``);
bad-parity parts must occur with even multiplicity for ``lam`` to label a
class at all.

The module provides the raw multiset calculus (union, difference,
intervals, transpose, dominance), the :class:`GroupType` bookkeeping, and
:func:`classify` / :func:`enumerate_classes`, which produce
:class:`ClassPartition` objects carrying the derived data every other
module consumes:

* ``gp``  -- the good-parity part of ``lam`` (full multiplicity),
* ``bp``  -- half of the bad-parity part (which pairs up),
* ``S``   -- the support of ``gp``, ascending,
* ``S0``  -- the support of the multiplicity-free part of ``lam``,
  ascending; always a subset of ``S``.
"""

import functools
import itertools

from .errors import BoundExceeded, NotContained, ParityViolation, WrongTotal

__all__ = [
    "Partition",
    "GroupType",
    "ClassPartition",
    "union",
    "difference",
    "dominates",
    "partitions_of",
    "classify",
    "enumerate_classes",
]


class Partition:
    """An immutable partition: a weakly decreasing tuple of positive integers.

    Accepts any iterable of nonnegative integers; zeros are dropped, the
    rest is sorted.  Supports ``len`` (number of parts), iteration,
    indexing (0-based), equality and hashing.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        cleaned = sorted((int(p) for p in parts), reverse=True)
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        if cleaned and cleaned[-1] < 0:
            raise ValueError("partition parts must be nonnegative integers")
        object.__setattr__(self, "parts", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_text(cls, text):
        """Parse ``"5,3,1"`` or exponent notation ``"7^4,5^3"``; "" is empty.

        Exponents distribute over single parts only: ``7^4`` contributes
        four parts equal to 7.  Whitespace around tokens is ignored.
        """
        text = text.strip()
        if not text or text in ("-", "0", "()"):
            return cls()
        parts = []
        for token in text.split(","):
            token = token.strip()
            if "^" in token:
                base, _, exp = token.partition("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(token))
        return cls(parts)

    def to_text(self):
        """Inverse of :meth:`from_text`, using exponents for repeats."""
        if not self.parts:
            return ""
        chunks = []
        for value, grp in itertools.groupby(self.parts):
            count = len(list(grp))
            chunks.append(f"{value}^{count}" if count > 1 else str(value))
        return ",".join(chunks)

    @property
    def size(self):
        """The sum of the parts, |lam|."""
        return sum(self.parts)

    def mult(self, c):
        """Multiplicity m(c, lam) of the value ``c``."""
        return self.parts.count(c)

    @property
    def supp(self):
        """Distinct part values, ascending."""
        return tuple(sorted(set(self.parts)))

    def interval(self, a, b):
        """The sub-multiset of parts c with a <= c <= b (lam_{a<->b})."""
        return Partition(p for p in self.parts if a <= p <= b)

    def mf(self):
        """The multiplicity-free part: values of odd multiplicity, once each."""
        return Partition(v for v in self.supp if self.mult(v) % 2 == 1)

    def transpose(self):
        """The conjugate partition."""
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        )

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def union(*lams):
    """Multiset union (multiplicities add)."""
    merged = []
    for lam in lams:
        merged.extend(lam.parts if isinstance(lam, Partition) else lam)
    return Partition(merged)


def difference(lam, mu):
    """Multiset difference lam minus mu.

    Raises :class:`NotContained` unless every part of ``mu`` occurs in
    ``lam`` with at least its multiplicity, so that
    ``union(difference(lam, mu), mu) == lam`` always holds on success.
    """
    remaining = list(lam.parts if isinstance(lam, Partition) else lam)
    for p in mu.parts if isinstance(mu, Partition) else mu:
        try:
            remaining.remove(p)
        except ValueError:
            raise NotContained(f"part {p} of {mu!r} not available in {lam!r}")
    return Partition(remaining)


def dominates(lam, mu):
    """True iff |lam| == |mu| and lam >= mu in the dominance order."""
    a = lam.parts if isinstance(lam, Partition) else tuple(lam)
    b = mu.parts if isinstance(mu, Partition) else tuple(mu)
    if sum(a) != sum(b):
        return False
    ta = tb = 0
    for x, y in itertools.zip_longest(a, b, fillvalue=0):
        ta += x
        tb += y
        if ta < tb:
            return False
    return True


class GroupType:
    """The sign s and integer N fixing the dual group.

    ``s = +1``: dual group SO_N, N odd, dual letter B; the p-adic group is
    split Sp_{N-1}.  ``s = -1``: dual group Sp_N, N even, dual letter C;
    the p-adic group is split SO_{N+1}.  The common rank is
    ``n = (N - s) // 2``.
    """

    __slots__ = ("s", "N")

    def __init__(self, s, N):
        if s not in (1, -1):
            raise ValueError("s must be +1 or -1")
        if N < 0 or N % 2 != (1 if s == 1 else 0):
            raise ValueError(f"N={N} has the wrong parity for s={s:+d}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "N", N)

    def __setattr__(self, name, value):
        raise AttributeError("GroupType is immutable")

    @classmethod
    def from_letter(cls, letter, N):
        """Group type from the dual letter: B means s=+1, C means s=-1."""
        if letter.upper() == "B":
            return cls(1, N)
        if letter.upper() == "C":
            return cls(-1, N)
        raise ValueError(f"unknown dual letter {letter!r}")

    @property
    def letter(self):
        return "B" if self.s == 1 else "C"

    @property
    def n(self):
        """Rank of the p-adic group (and of its Weyl group W_n)."""
        return (self.N - self.s) // 2

    def good_parity(self, c):
        """True iff the value c has good parity for this type."""
        return c % 2 == (1 if self.s == 1 else 0)

    def __eq__(self, other):
        if isinstance(other, GroupType):
            return (self.s, self.N) == (other.s, other.N)
        return NotImplemented

    def __hash__(self):
        return hash((self.s, self.N))

    def __repr__(self):
        return f"GroupType(s={self.s:+d}, N={self.N})"


class ClassPartition:
    """A partition together with its group type and derived parity data.

    Construct through :func:`classify`, which validates; the constructor
    itself trusts its input.  ``lam = gp + bp + bp`` as multisets, with
    ``gp`` all good-parity parts and ``bp`` half of the bad-parity parts.
    """

    __slots__ = ("lam", "gt", "gp", "bp", "S", "S0")

    def __init__(self, lam, gt):
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "gt", gt)
        good = Partition(p for p in lam if gt.good_parity(p))
        bad = [p for p in lam if not gt.good_parity(p)]
        half = Partition(v for v in sorted(set(bad)) for _ in range(bad.count(v) // 2))
        object.__setattr__(self, "gp", good)
        object.__setattr__(self, "bp", half)
        object.__setattr__(self, "S", good.supp)
        object.__setattr__(self, "S0", lam.mf().supp)

    def __setattr__(self, name, value):
        raise AttributeError("ClassPartition is immutable")

    def __eq__(self, other):
        if isinstance(other, ClassPartition):
            return self.lam == other.lam and self.gt == other.gt
        return NotImplemented

    def __hash__(self):
        return hash((self.lam, self.gt))

    def __repr__(self):
        return f"ClassPartition({self.lam!r}, {self.gt!r})"


def classify(lam, gt):
    """Validate lam as a unipotent class partition for gt.

    Raises :class:`WrongTotal` if |lam| != N and :class:`ParityViolation`
    if a bad-parity value occurs an odd number of times.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if lam.size != gt.N:
        raise WrongTotal(f"|{lam!r}| = {lam.size}, expected N = {gt.N}")
    for v in lam.supp:
        if not gt.good_parity(v) and lam.mult(v) % 2 == 1:
            raise ParityViolation(
                f"bad-parity part {v} has odd multiplicity in {lam!r}"
            )
    return ClassPartition(lam, gt)


def partitions_of(n, max_part=None):
    """Yield all partitions of n in reverse-lexicographic order.

    Reverse-lex means the all-in-one-part partition (n) comes first and
    (1, ..., 1) last, matching the listing order of enumerate_classes.
    """
    if n == 0:
        yield Partition()
        return
    if max_part is None or max_part > n:
        max_part = n

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for first in range(min(cap, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    for parts in rec(n, max_part, []):
        yield Partition(parts)


DEFAULT_ENUMERATION_BOUND = 60


def enumerate_classes(gt, bound=DEFAULT_ENUMERATION_BOUND):
    """All unipotent class partitions for gt, in reverse-lex order.

    Raises :class:`BoundExceeded` when N exceeds ``bound`` (the partition
    count grows superpolynomially; the default bound of 60 keeps runtimes
    sane while covering everything the verification suites need).
    """
    if gt.N > bound:
        raise BoundExceeded(f"N = {gt.N} exceeds enumeration bound {bound}")
    result = []
    for lam in partitions_of(gt.N):
        try:
            result.append(classify(lam, gt))
        except ParityViolation:
            continue
    return result


@functools.lru_cache(maxsize=None)
def _class_count(s, N):
    return len(enumerate_classes(GroupType(s, N)))
