"""Signed permutations (elements of the hyperoctahedral group B_n).

An element pi of B_n is a bijection of [-n, n] \\ {0} with pi(-i) = -pi(i).
It is stored by its *window* (pi(1), ..., pi(n)); the values at negative
positions follow by antisymmetry and are never stored. The *full sequence*
is (pi(-n), ..., pi(-1), pi(1), ..., pi(n)).

Reflections come in two kinds and are named by an unordered value pair
{a, b} identified with {-a, -b}:

- long: swaps a and -a (the pair is {a, -a}),
- pair: swaps a with b and -a with -b simultaneously (|a| != |b|).

A pair reflection {a, b} with ab < 0 is *defined* for pi only when the
positions of a and b in pi have equal signs; see :func:`u_defined`.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable


class ParseError(ValueError):
    """Malformed textual input (window or descent-set syntax)."""


class UndefinedReflectionError(ValueError):
    """The reflection is undefined for this permutation and was refused."""


def _canon_pair(a: int, b: int) -> tuple[int, int]:
    """Canonical representative of the value pair {a, b} ~ {-a, -b}.

    Of the two representatives, keep the one whose smaller-magnitude
    element is positive, stored as a sorted tuple. For a long pair
    {a, -a} both representatives coincide.

    >>> _canon_pair(3, -4), _canon_pair(-3, 4), _canon_pair(4, -3)
    ((-4, 3), (-4, 3), (-4, 3))
    >>> _canon_pair(-1, -2), _canon_pair(2, -2)
    ((1, 2), (-2, 2))
    """
    if abs(a) > abs(b):
        a, b = b, a
    if a < 0:
        a, b = -a, -b
    return (a, b) if a < b else (b, a)


class ReflectionLabel:
    """Canonical name for the reflection swapping {a, b} and {-a, -b}.

    The stored pair is normalized by :func:`_canon_pair`, so equal
    reflections always compare and hash equal:

    >>> ReflectionLabel(3, -4) == ReflectionLabel(-3, 4)
    True
    >>> ReflectionLabel(-2, 2).kind
    'long'
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        if a == 0 or b == 0:
            raise ValueError("reflection values must be nonzero")
        if a == b:
            raise ValueError("reflection values must differ")
        self.a, self.b = _canon_pair(a, b)

    @property
    def kind(self) -> str:
        return "long" if self.a == -self.b else "pair"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReflectionLabel):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        if not isinstance(other, ReflectionLabel):
            return NotImplemented
        return (self.a, self.b) < (other.a, other.b)

    def __repr__(self) -> str:
        return f"ReflectionLabel({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


class SignedPermutation:
    """Element of B_n, stored by its window (pi(1), ..., pi(n)).

    Instances are immutable by convention, compare by window, and sort
    lexicographically by window.

    >>> p = SignedPermutation([2, -1])
    >>> str(p), p.n
    ('[2,-1]', 2)
    """

    __slots__ = ("window",)

    def __init__(self, window: Iterable[int]):
        w = tuple(window)
        for v in w:
            if not isinstance(v, int) or v == 0:
                raise ValueError(f"window entries must be nonzero integers, got {v!r}")
        mags = sorted(abs(v) for v in w)
        if len(set(mags)) != len(w):
            raise ValueError("window magnitudes must be distinct")
        if w and mags != list(range(1, len(w) + 1)):
            raise ValueError(f"window magnitudes must be 1..{len(w)}")
        self.window = w

    @classmethod
    def _unchecked(cls, window: tuple[int, ...]) -> "SignedPermutation":
        # for internal construction from windows already known to be valid
        p = cls.__new__(cls)
        p.window = window
        return p

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls._unchecked(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.window)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __lt__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.window < other.window

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    def __str__(self) -> str:
        return format_window(self)


def format_window(p: SignedPermutation) -> str:
    """Canonical bracket form of the window, e.g. ``[2,-1]``."""
    return "[" + ",".join(str(v) for v in p.window) + "]"



def parse_window(text: str) -> SignedPermutation:
    """Parse a window from text; rank is inferred from the entry count.

    Accepts comma or whitespace separation and optional surrounding
    brackets: ``[2,-1]``, ``2,-1`` and ``2 -1`` all parse to the same
    element.

    >>> parse_window("3 -1 -2").window
    (3, -1, -2)
    """
    s = text.strip()
    if s.startswith("[") != s.endswith("]"):
        raise ParseError(f"mismatched brackets in {text!r}")
    if s.startswith("["):
        s = s[1:-1].strip()
    tokens = [t for t in re.split(r"[,\s]+", s) if t]
    if not tokens:
        raise ParseError("empty input")
    values = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise ParseError(f"not an integer: {t!r}") from None
    n = len(values)
    seen: set[int] = set()
    for v in values:
        if v == 0:
            raise ParseError("zero entry")
        m = abs(v)
        if m in seen:
            raise ParseError(f"duplicate magnitude {m}")
        if m > n:
            raise ParseError(f"magnitude {m} out of range for rank {n}")
        seen.add(m)
    return SignedPermutation._unchecked(tuple(values))


def full_sequence(p: SignedPermutation) -> tuple[int, ...]:
    """Values (pi(-n), ..., pi(-1), pi(1), ..., pi(n)).

    >>> full_sequence(SignedPermutation([-2, 4, -3, 1]))
    (-1, 3, -4, 2, -2, 4, -3, 1)
    """
    return tuple(-v for v in reversed(p.window)) + p.window

def format_full_sequence(p: SignedPermutation) -> str:
    """All 2n values left to right, pi(-n) through pi(n).

    >>> format_full_sequence(SignedPermutation([2, -1]))
    '[1,-2,2,-1]'
    """
    return "[" + ",".join(str(v) for v in full_sequence(p)) + "]"


def negate(p: SignedPermutation) -> SignedPermutation:
    """Multiply every value by -1. An involution on B_n."""
    return SignedPermutation._unchecked(tuple(-v for v in p.window))


def inverse_position(p: SignedPermutation, v: int) -> int:
    """The unique position i with pi(i) == v.

    Satisfies ``inverse_position(p, -v) == -inverse_position(p, v)``.
    """
    if v == 0 or abs(v) > p.n:
        raise ValueError(f"value {v} not in range for rank {p.n}")
    for i, w in enumerate(p.window, 1):
        if w == v:
            return i
        if w == -v:
            return -i
    raise AssertionError("unreachable for a valid window")


def coxeter_length(p: SignedPermutation) -> int:
    """Coxeter length: minimal word length in the type-B generators.

    Computed by the closed form: window inversions plus the sum of
    magnitudes of negative window entries. The test suite pins this
    against the breadth-first word-length oracle on all of B_2 and B_3.

    >>> coxeter_length(SignedPermutation([-2, -1]))
    3
    """
    w = p.window
    n = len(w)
    inv = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                inv += 1
    return inv + sum(-v for v in w if v < 0)


def u_defined(a: int, b: int, p: SignedPermutation) -> bool:
    """Whether the reflection {a, b} is defined for p.

    A long pair (a == -b) is always defined; otherwise the pair is
    defined when ab > 0 or when the positions of a and b in p have the
    same sign.
    """
    if a == b or a == 0 or b == 0:
        raise ValueError(f"invalid reflection pair ({a}, {b})")
    if abs(a) > p.n or abs(b) > p.n:
        raise ValueError(f"pair ({a}, {b}) out of range for rank {p.n}")
    if abs(a) == abs(b):
        return True  # a == -b, long reflection
    if a * b > 0:
        return True
    return inverse_position(p, a) * inverse_position(p, b) > 0


def apply_u(label: ReflectionLabel, p: SignedPermutation) -> SignedPermutation:
    """Left-multiply p by the reflection: swap a <-> b and -a <-> -b.

    Refuses an undefined reflection so callers must filter through
    :func:`u_defined` first.
    """
    a, b = label.a, label.b
    if not u_defined(a, b, p):
        raise UndefinedReflectionError(f"reflection {label} is undefined for {p}")
    swap = {a: b, b: a, -a: -b, -b: -a}
    return SignedPermutation._unchecked(tuple(swap.get(v, v) for v in p.window))


def all_reflections(n: int) -> list[ReflectionLabel]:
    """All n^2 reflections of B_n, each canonical label exactly once.

    n long reflections plus n(n-1) pair reflections, sorted.

    >>> [str(t) for t in all_reflections(2)]
    ['-2,1', '-2,2', '-1,1', '1,2']
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    labels = [ReflectionLabel(k, -k) for k in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            labels.append(ReflectionLabel(i, j))
            labels.append(ReflectionLabel(i, -j))
    labels.sort()
    return labels


def generators(n: int) -> list[ReflectionLabel]:
    """The Coxeter generators: the long reflection {1, -1} and the
    adjacent swaps {i, i+1} for i < n."""
    return [ReflectionLabel(1, -1)] + [ReflectionLabel(i, i + 1) for i in range(1, n)]


def word_lengths_by_bfs(n: int) -> dict[SignedPermutation, int]:
    """Minimal generator-word length of every element of B_n, by breadth
    first search over the Cayley graph. Independent oracle for
    :func:`coxeter_length`; exponential in n, intended for small ranks.
    """
    gens = generators(n)
    start = SignedPermutation.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        d = dist[p]
        for g in gens:
            q = apply_u(g, p)
            if q not in dist:
                dist[q] = d + 1
                queue.append(q)
    return dist


