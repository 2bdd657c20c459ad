"""Cover relations and degrees in the strong Bruhat order on B_n.

pi covers sigma exactly when sigma = u pi for a defined reflection u and
there are full-sequence positions i < k with pi(i) > pi(k), {pi(i), pi(k)}
the value pair of u, and no position between i and k holding a value
strictly between pi(k) and pi(i). The down degree counts elements covered
by pi, the up degree counts elements covering pi, and the total degree is
their sum.
"""

from __future__ import annotations

from typing import Iterable

from .signed import (
    ParseError,
    ReflectionLabel,
    SignedPermutation,
    _canon_pair,
    all_reflections,
    apply_u,
    coxeter_length,
    u_defined,
)


class NotADescentSetError(ValueError):
    """The given label set is not the descent set of any element."""


def _window_degrees(window: tuple[int, ...]) -> tuple[int, int]:
    """(down, up) degree of the element with this window.

    One sweep over full-sequence position pairs. For a fixed left
    position, a right value gives an empty rectangle exactly when it
    improves the running closest-below / closest-above bound. Each
    reflection appears at two mirror position pairs (one pair when the
    positions are i, -i); keeping pairs with nonnegative position sum
    counts every reflection once.
    """
    n = len(window)
    if n == 0:
        return (0, 0)
    fs = [-v for v in reversed(window)]
    fs += window
    m = 2 * n
    down = up = 0
    for li in range(m - 1):
        vl = fs[li]
        pl = li - n if li < n else li - n + 1
        below = None
        above = None
        for ri in range(li + 1, m):
            vr = fs[ri]
            if vr < vl:
                if below is None or vr > below:
                    below = vr
                    pr = ri - n if ri < n else ri - n + 1
                    if pl + pr >= 0 and (vl == -vr or vl * vr > 0 or pl * pr > 0):
                        down += 1
            elif above is None or vr < above:
                above = vr
                pr = ri - n if ri < n else ri - n + 1
                if pl + pr >= 0 and (vl == -vr or vl * vr > 0 or pl * pr > 0):
                    up += 1
    return (down, up)


def _label_pairs(window: tuple[int, ...]) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    """(down, up) adjacency label pairs, canonicalized.

    Literal transcription of the cover conditions: scan all position
    pairs i < k of the full sequence; the mirror duplicate of each pair
    is merged by label canonicalization rather than by restricting the
    scan.
    """
    n = len(window)
    down: set[tuple[int, int]] = set()
    up: set[tuple[int, int]] = set()
    if n == 0:
        return down, up
    fs = [-v for v in reversed(window)]
    fs += window
    m = 2 * n
    for li in range(m - 1):
        vl = fs[li]
        pl = li - n if li < n else li - n + 1
        below = None
        above = None
        for ri in range(li + 1, m):
            vr = fs[ri]
            if vr < vl:
                if below is None or vr > below:
                    below = vr
                    pr = ri - n if ri < n else ri - n + 1
                    if vl == -vr or vl * vr > 0 or pl * pr > 0:
                        down.add(_canon_pair(vl, vr))
            elif above is None or vr < above:
                above = vr
                pr = ri - n if ri < n else ri - n + 1
                if vl == -vr or vl * vr > 0 or pl * pr > 0:
                    up.add(_canon_pair(vl, vr))
    return down, up


def covers_down(p: SignedPermutation) -> list[tuple[ReflectionLabel, SignedPermutation]]:
    """Elements covered by p, as (reflection, result) pairs sorted by label.

    >>> covers_down(SignedPermutation.identity(3))
    []
    """
    pairs, _ = _label_pairs(p.window)
    out = []
    for a, b in sorted(pairs):
        label = ReflectionLabel(a, b)
        out.append((label, apply_u(label, p)))
    return out


def descent_set(p: SignedPermutation) -> frozenset[ReflectionLabel]:
    """The strong descent set: reflections realizing down covers of p."""
    pairs, _ = _label_pairs(p.window)
    return frozenset(ReflectionLabel(a, b) for a, b in pairs)


def down_degree(p: SignedPermutation) -> int:
    """Number of elements covered by p. Equals ``len(covers_down(p))``."""
    return _window_degrees(p.window)[0]


def up_degree(p: SignedPermutation) -> int:
    """Number of elements covering p.

    Equals ``down_degree(negate(p))``: negation is left multiplication
    by the longest element, which flips the order. The test suite checks
    both routes.
    """
    return _window_degrees(p.window)[1]


def total_degree(p: SignedPermutation) -> int:
    """Valency of p in the Hasse diagram: down plus up degree."""
    d, u = _window_degrees(p.window)
    return d + u


def down_degree_oracle(p: SignedPermutation) -> int:
    """Down degree recomputed from first principles: count defined
    reflections u with length(u p) == length(p) - 1. Quadratically many
    length evaluations; used to pin the sweep implementations."""
    return len(descent_set_oracle(p))


def descent_set_oracle(p: SignedPermutation) -> frozenset[ReflectionLabel]:
    """Descent set via explicit length drops over all reflections."""
    target = coxeter_length(p) - 1
    out = []
    for label in all_reflections(p.n):
        if u_defined(label.a, label.b, p) and coxeter_length(apply_u(label, p)) == target:
            out.append(label)
    return frozenset(out)


def _reconstruct_window(pairs: set[tuple[int, int]], n: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    top = {t for t in pairs if max(abs(t[0]), abs(t[1])) == n}
    rest = pairs - top
    bar = _reconstruct_window(rest, n - 1)
    fsb = [-v for v in reversed(bar)]
    fsb += bar
    if (-n, n) in top:
        # n sits at position -1, so the window starts with -n
        fs = fsb[: n - 1] + [n, -n] + fsb[n - 1 :]
    elif not top:
        fs = [-n] + fsb + [n]
    else:
        # v = smallest a over labels {a, n}; n goes immediately left of v
        vs = [a if b == n else -b for a, b in top]
        v = min(vs)
        try:
            idx = fsb.index(v)
        except ValueError:
            raise NotADescentSetError("not a descent set") from None
        t = idx if idx <= n - 2 else idx + 1
        s = 2 * n - 1 - t
        fs = []
        it = iter(fsb)
        for q in range(2 * n):
            if q == t:
                fs.append(n)
            elif q == s:
                fs.append(-n)
            else:
                fs.append(next(it))
    return tuple(fs[n:])


def reconstruct_from_descents(
    d: Iterable[ReflectionLabel], n: int
) -> SignedPermutation:
    """The unique element of B_n whose descent set is d.

    Recursive placement: the labels not involving magnitude n determine
    the rank n-1 pattern; the labels involving n pin where n sits. The
    result is validated by recomputing its descent set, so an
    inconsistent input raises :class:`NotADescentSetError`.

    >>> labels = parse_descents("1,2;1,4;-2,2;2,3;-4,3")
    >>> reconstruct_from_descents(labels, 4)
    SignedPermutation([-2, 4, -3, 1])
    """
    labels = frozenset(d)
    pairs = {(lab.a, lab.b) for lab in labels}
    if any(max(abs(a), abs(b)) > n for a, b in pairs):
        raise NotADescentSetError(f"label magnitudes exceed rank {n}")
    window = _reconstruct_window(pairs, n)
    p = SignedPermutation(window)
    if descent_set(p) != labels:
        raise NotADescentSetError("not a descent set")
    return p


def descents_to_text(d: Iterable[ReflectionLabel]) -> str:
    """Semicolon-separated canonical pairs, e.g. ``-4,3;-2,2;1,2``."""
    return ";".join(str(lab) for lab in sorted(d))


def parse_descents(text: str) -> frozenset[ReflectionLabel]:
    """Parse the semicolon-separated pair format.

    Non-canonical pairs are normalized through the {a,b} ~ {-a,-b}
    identification, so ``"2,-2"`` and ``"-2,2"`` parse the same.
    """
    s = text.strip()
    if not s:
        return frozenset()
    labels = []
    for part in s.split(";"):
        part = part.strip()
        if not part:
            continue
        bits = part.split(",")
        if len(bits) != 2:
            raise ParseError(f"expected 'a,b' pair, got {part!r}")
        try:
            a, b = int(bits[0]), int(bits[1])
        except ValueError:
            raise ParseError(f"expected integers in pair {part!r}") from None
        try:
            labels.append(ReflectionLabel(a, b))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return frozenset(labels)
