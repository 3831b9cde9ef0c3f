"""Component groups of unipotent classes and the canonical quotient.

For a class partition ``lam`` the component group of the centralizer is an
elementary abelian 2-group modelled on subsets of ``S(lam)``.  This module
realizes three nested structures:

* ``P(lam)``   -- all subsets of S(lam), with the pairing (-1)^|A  cap  B|;
* ``P(lam)_0`` -- subsets meeting S_0(lam) evenly; this is the character
  group Ahat(O)_0 that indexes packet members uniformly in both types;
* ``Pdagger(lam)_0`` -- the block-constant members of P(lam)_0, which
  realize the character group of Lusztig's canonical quotient A+(O).

"Block-constant" refers to the canonical partition of S(lam) into
*classes* computed by :func:`block_structure`: scanning S(lam) in
increasing order, the elements of S_0(lam) are joined in consecutive
pairs, each pair span absorbing any non-multiplicity-free values lying
between its endpoints.  For ``s = +1`` the number of S_0-elements is odd
and the last one opens a class running to the top of S(lam) whose value
range is additionally ceiled at lam_1; for ``s = -1`` and an odd count,
the first S_0-element closes a class that starts at the bottom of S(lam)
and whose range is grounded at 1.  Everything else is a singleton class.

Each class theta spans the value range [theta_lo, theta_hi] (with the
grounding/ceiling extensions) and cuts the *block* lam(theta) out of lam:
all parts lying in that range.  Bad-parity values caught inside a block
form the obstruction set I(lam); ``lam`` is special exactly when I(lam)
is empty.  Admissible classes determine the move set J(lam); both sets
drive the special-piece combinatorics in :mod:`upkit.pieces`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import NotCanonical, NotInJ, NotInPiece
from .partitions import ClassPartition, Partition, classify, difference, union

__all__ = [
    "CharFn",
    "BlockStructure",
    "block_structure",
    "char_group",
    "full_group",
    "canonical_subgroup",
    "t_character",
    "is_primitive",
    "iota_embed",
    "char_group_order",
]


@dataclass(frozen=True)
class CharFn:
    """A character of the component group: a subset of S(lam).

    ``subset`` collects the values where the character is -1.  The text
    form is a string of signs aligned with S(lam) in increasing order,
    e.g. ``(--+)`` for the subset {1, 3} inside S = (1, 3, 5).
    """

    base: ClassPartition
    subset: frozenset[int]

    def __post_init__(self) -> None:
        if not self.subset <= set(self.base.S):
            extra = sorted(set(self.subset) - set(self.base.S))
            raise ValueError(f"values {extra} not in S(lam) = {self.base.S}")
        object.__setattr__(self, "subset", frozenset(self.subset))

    @classmethod
    def from_text(cls, cp: ClassPartition, text: str) -> "CharFn":
        """Parse a sign string ``(--+)`` or an explicit set ``{1,3}``."""
        body = text.strip().strip("()")
        if body and all(ch in "+-−" for ch in body):
            signs = body.replace("−", "-")
            if len(signs) != len(cp.S):
                raise ValueError(
                    f"sign string length {len(signs)} != |S(lam)| = {len(cp.S)}"
                )
            return cls(cp, frozenset(v for v, ch in zip(cp.S, signs) if ch == "-"))
        body = body.strip("{}")
        values = frozenset(int(tok) for tok in body.split(",") if tok.strip())
        return cls(cp, values)

    def to_text(self) -> str:
        return "(" + "".join("-" if v in self.subset else "+" for v in self.base.S) + ")"

    def indicator(self, c: int) -> int:
        """eps(c) as an element of {0, 1}; values outside S count as 0."""
        return 1 if c in self.subset else 0

    def sign(self, c: int) -> int:
        """(-1)^eps(c)."""
        return -1 if c in self.subset else 1

    def pair(self, other: "CharFn") -> int:
        """The component-group pairing (-1)^|A cap B|."""
        return -1 if len(self.subset & other.subset) % 2 else 1

    @property
    def in_P0(self) -> bool:
        return len(self.subset & set(self.base.S0)) % 2 == 0

    @property
    def in_Pprime(self) -> bool:
        return len(self.subset) % 2 == 0

    def __repr__(self) -> str:
        return f"CharFn({sorted(self.subset)} on {self.base.lam!r})"


@dataclass(frozen=True)
class BlockStructure:
    """The canonical class decomposition of S(lam) and its derived data.

    ``classes[i]`` lists the S-values of the i-th class, ascending;
    classes are disjoint, consecutive in sorted S(lam), and ordered.
    ``ranges[i]`` is the (lo, hi) value range after grounding/ceiling,
    ``blocks[i]`` the sub-multiset of lam it cuts out.  ``kinds[i]`` is
    one of "pair", "tail", "ground", "single".
    """

    cp: ClassPartition
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    ranges: tuple[tuple[int, int], ...]
    blocks: tuple[Partition, ...]
    admissible: tuple[bool, ...]
    I_set: frozenset[int]
    J_set: frozenset[int]

    @property
    def special(self) -> bool:
        return not self.I_set

    def theta_min(self, i: int) -> int:
        return self.classes[i][0]

    def theta_max(self, i: int) -> int:
        return self.classes[i][-1]

    def class_of(self, value: int) -> int:
        for i, theta in enumerate(self.classes):
            if value in theta:
                return i
        raise KeyError(f"{value} not in S(lam) = {self.cp.S}")

    def outside(self) -> Partition:
        """lam with all blocks removed: bad-parity values missed by every
        block, each with even multiplicity."""
        return difference(self.cp.lam, union(*self.blocks) if self.blocks else Partition())

    def sharp(self) -> Partition:
        """Half of :meth:`outside` (one copy of each pair)."""
        out = self.outside()
        return Partition(v for v in out.supp for _ in range(out.mult(v) // 2))


def _spans(cp: ClassPartition) -> list[tuple[int, int, str]]:
    """Index spans (p, q, kind) of the classes inside ascending S(lam)."""
    S = cp.S
    k = len(S)
    s0 = set(cp.S0)
    pos0 = [i for i, v in enumerate(S) if v in s0]
    r = len(pos0)
    spans: list[tuple[int, int, str]] = []
    if cp.gt.s == 1:
        # |lam| odd forces r odd (and >= 1 when lam is nonempty).
        for i in range(0, r - 1, 2):
            spans.append((pos0[i], pos0[i + 1], "pair"))
        if r:
            spans.append((pos0[r - 1], k - 1, "tail"))
    else:
        if r % 2 == 0:
            for i in range(0, r, 2):
                spans.append((pos0[i], pos0[i + 1], "pair"))
        else:
            spans.append((0, pos0[0], "ground"))
            for i in range(1, r - 1, 2):
                spans.append((pos0[i], pos0[i + 1], "pair"))
    covered = set()
    for p, q, _ in spans:
        covered.update(range(p, q + 1))
    spans.extend((i, i, "single") for i in range(k) if i not in covered)
    spans.sort()
    return spans


@functools.lru_cache(maxsize=None)
def block_structure(cp: ClassPartition) -> BlockStructure:
    """Compute the canonical classes, blocks, I(lam) and J(lam)."""
    S = cp.S
    lam = cp.lam
    spans = _spans(cp)
    classes = tuple(tuple(S[p : q + 1]) for p, q, _ in spans)
    kinds = tuple(kind for _, _, kind in spans)
    ranges = []
    for (p, q, kind) in spans:
        lo, hi = S[p], S[q]
        if kind == "ground":
            lo = 1
        elif kind == "tail":
            hi = lam[0]
        ranges.append((lo, hi))
    blocks = tuple(lam.interval(lo, hi) for lo, hi in ranges)

    bad = lambda v: not cp.gt.good_parity(v)  # noqa: E731
    I_set = frozenset(v for blk in blocks for v in blk.supp if bad(v))

    s0 = set(cp.S0)
    admissible = []
    for i, theta in enumerate(classes):
        tmin, tmax = theta[0], theta[-1]
        ok = any(other[-1] == tmin - 2 for other in classes)
        if not ok and tmin == 2:
            if tmin == tmax:
                ok = 2 not in s0
            else:
                ok = 2 in s0
        admissible.append(ok)
    J_set = frozenset(
        classes[i][0] - 1 for i in range(len(classes)) if admissible[i]
    )
    return BlockStructure(
        cp=cp,
        classes=classes,
        kinds=kinds,
        ranges=tuple(ranges),
        blocks=blocks,
        admissible=tuple(admissible),
        I_set=I_set,
        J_set=J_set,
    )


def _subsets_of_classes(bs: BlockStructure):
    for picks in itertools.product((False, True), repeat=len(bs.classes)):
        yield frozenset(
            v for theta, take in zip(bs.classes, picks) if take for v in theta
        )


@functools.lru_cache(maxsize=None)
def full_group(cp: ClassPartition) -> tuple[CharFn, ...]:
    """P(lam): every subset of S(lam), smallest-first."""
    S = cp.S
    subs = []
    for k in range(len(S) + 1):
        for combo in itertools.combinations(S, k):
            subs.append(CharFn(cp, frozenset(combo)))
    return tuple(subs)


@functools.lru_cache(maxsize=None)
def char_group(cp: ClassPartition) -> tuple[CharFn, ...]:
    """P(lam)_0: the subsets meeting S_0(lam) in an even number of values."""
    return tuple(fn for fn in full_group(cp) if fn.in_P0)


@functools.lru_cache(maxsize=None)
def canonical_subgroup(cp: ClassPartition) -> tuple[CharFn, ...]:
    """Pdagger(lam)_0: block-constant members of P(lam)_0.

    This is the character group of the canonical quotient A+(O_lam).
    """
    bs = block_structure(cp)
    subs = sorted(_subsets_of_classes(bs), key=lambda a: (len(a), sorted(a)))
    out = []
    for a in subs:
        fn = CharFn(cp, a)
        if fn.in_P0:
            out.append(fn)
    return tuple(out)


def char_group_order(cp: ClassPartition) -> int:
    """|P(lam)_0| without enumeration: 2^(|S|-1) when S_0 is nonempty."""
    k = len(cp.S)
    return 2 ** (k - 1) if cp.S0 else 2 ** k


def t_character(cp: ClassPartition, c: int):
    """The sign character t_c on P(lam), defined for c in J(lam).

    t_c(eps) = (-1)^|eps cap {c-1, c+1}| (the value 0 never contributes,
    so for c = 1 only the neighbour 2 is consulted).  Raises
    :class:`NotInJ` for c outside J(lam).
    """
    bs = block_structure(cp)
    if c not in bs.J_set:
        raise NotInJ(f"{c} not in J(lam) = {sorted(bs.J_set)}")
    neighbours = frozenset(v for v in (c - 1, c + 1) if v >= 1)

    def t_c(eps: CharFn) -> int:
        return -1 if len(eps.subset & neighbours) % 2 else 1

    return t_c


# --- raw multiset surgery shared with upkit.pieces ------------------------

def _t_down_raw(lam: Partition, J) -> Partition:
    """lam with, for each c in J, one part c-1 and one part c+1 replaced
    by (c, c); the phantom part c-1 = 0 is simply absent."""
    removed = [v for c in J for v in (c - 1, c + 1) if v >= 1]
    added = [v for c in J for v in (c, c)]
    return union(difference(lam, removed), added)


def _t_up_raw(lam: Partition, I) -> Partition:
    """Inverse surgery: for each c in I, replace (c, c) by (c-1, c+1)."""
    removed = [v for c in I for v in (c, c)]
    added = [v for c in I for v in (c - 1, c + 1) if v >= 1]
    return union(difference(lam, removed), added)


def _as_class(mu, gt) -> ClassPartition:
    if isinstance(mu, ClassPartition):
        if mu.gt != gt:
            raise NotInPiece(f"group types differ: {mu.gt!r} vs {gt!r}")
        return mu
    return classify(mu, gt)


def _piece_move_set(cp: ClassPartition, mu: ClassPartition) -> frozenset[int]:
    """The unique J subset of J(lam) with T_J(lam) = mu, or NotInPiece."""
    J = block_structure(cp).J_set - block_structure(mu).J_set
    if _t_down_raw(cp.lam, J) != mu.lam:
        raise NotInPiece(f"{mu.lam!r} is not in the piece cube of {cp.lam!r}")
    return J


def is_primitive(cp: ClassPartition, eps: CharFn, mu) -> bool:
    """Whether eps in Pdagger(lam)_0 survives into the packet labelled mu.

    mu must lie in the piece cube {T_J(lam) : J subset of J(lam)}; the
    test is t_c(eps) != 1 for every c in J(lam) minus J(mu).
    """
    mu = _as_class(mu, cp.gt)
    if eps.base != cp or eps not in canonical_subgroup(cp):
        raise NotCanonical(f"{eps!r} not in the canonical subgroup of {cp.lam!r}")
    J = _piece_move_set(cp, mu)
    return all(t_character(cp, c)(eps) != 1 for c in J)


def _iota_step(src: ClassPartition, dst: ClassPartition, c: int, eps: CharFn) -> CharFn:
    """Single-move embedding along mu = T_{c}(lam): the two dst-classes
    meeting c-1 and c+1 have merged in src; every dst-class reads its
    value off any of its members that survived into S(src)."""
    bs = block_structure(dst)
    s_src = set(src.S)
    merged = [v for v in (c - 1, c + 1) if v >= 1]
    survivors = sorted(
        v
        for i, theta in enumerate(bs.classes)
        if any(m in theta for m in merged)
        for v in theta
        if v in s_src
    )
    out = set()
    for theta in bs.classes:
        if any(m in theta for m in merged):
            witness = survivors[0]
        else:
            alive = [v for v in theta if v in s_src]
            witness = alive[0]
        if eps.indicator(witness):
            out.update(theta)
    return CharFn(dst, frozenset(out))


def iota_embed(src: ClassPartition, dst: ClassPartition, eps: CharFn) -> CharFn:
    """The canonical embedding of Pdagger(src)_0 into Pdagger(dst)_0.

    ``src`` must lie in the piece cube of ``dst``.  The embedding is
    assembled one move at a time; its image consists exactly of the
    characters killed by t_c for every move value c, and composing
    embeddings along a chain of moves is path-independent.
    """
    src = _as_class(src, dst.gt)
    if eps.base != src or eps not in canonical_subgroup(src):
        raise NotCanonical(f"{eps!r} not in the canonical subgroup of {src.lam!r}")
    J = _piece_move_set(dst, src)
    if not J:
        return CharFn(dst, eps.subset)
    c = min(J)
    mid = classify(_t_down_raw(dst.lam, {c}), dst.gt)
    lifted = iota_embed(src, mid, eps)
    return _iota_step(mid, dst, c, lifted)
