"""Tamari lattices on plane binary trees, canopies and interval statistics.

Trees are nested pairs: a leaf is ``None`` and an internal node is
``(left, right)``.  The size of a tree is its number of internal nodes.
The text encoding writes a leaf as ``o`` and a node as ``(left right)``.

The lattice on trees of size n is generated by the rotation
``(A, (B, C)) -> ((A, B), C)`` applied at any node whose right child is
internal, oriented so that the right comb (no internal left children) is the
minimum and the left comb the maximum.  These rotations are exactly the
Hasse covers.

The canopy of a tree is the word of length n+1 over {L, R} reading its
leaves from left to right, labelling a leaf by the side it hangs from its
parent.  One rotation changes at most one canopy letter, and only from L to
R, so canopies are monotone along the order.  An interval with equal
canopies is called synchronous.

The left-border decomposition cuts a tree along its left spine into
indecomposable factors (trees whose root has a leaf as left child); the
sizes give a composition of n which coarsens weakly along the order.
"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import NamedTuple

from .polynomial import MultiPoly
from .poset import INTERVAL_VARS, FinitePoset

LEAF = None


def size(t):
    return 0 if t is None else 1 + size(t[0]) + size(t[1])


def encode(t):
    """Text form: ``o`` for a leaf, ``(left right)`` for a node."""
    return "o" if t is None else f"({encode(t[0])} {encode(t[1])})"


def decode(text):
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of tree text {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "o":
            return None
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r} in {text!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"missing ')' in {text!r}")
        pos += 1
        return (left, right)

    tree = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return tree


@lru_cache(maxsize=None)
def _all_trees(n):
    if n == 0:
        return (None,)
    out = []
    for i in range(n):
        for left in _all_trees(i):
            for right in _all_trees(n - 1 - i):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_trees(n):
    """All trees of size n, sorted by their text encoding."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"bad tree size {n!r}")
    return tuple(sorted(_all_trees(n), key=encode))


def right_comb(n):
    t = None
    for _ in range(n):
        t = (None, t)
    return t


def left_comb(n):
    t = None
    for _ in range(n):
        t = (t, None)
    return t


def reverse(t):
    """Left-right mirror; an anti-automorphism of the rotation order."""
    return None if t is None else (reverse(t[1]), reverse(t[0]))


def rotation_covers(t):
    """Trees one rotation above t, in traversal order."""
    if t is None:
        return []
    left, right = t
    out = []
    if right is not None:
        out.append(((left, right[0]), right[1]))
    for sub in rotation_covers(left):
        out.append((sub, right))
    for sub in rotation_covers(right):
        out.append((left, sub))
    return out


def canopy(t):
    """Leaf word over {L, R}, left to right; empty for the single leaf."""
    if t is None:
        return ""
    out = []

    def walk(node, side):
        if node is None:
            out.append(side)
        else:
            walk(node[0], "L")
            walk(node[1], "R")

    walk(t[0], "L")
    walk(t[1], "R")
    return "".join(out)


def is_indecomposable(t):
    """Whether the root's left child is a leaf (single left-border factor)."""
    if t is None:
        raise ValueError("the empty tree has no factors")
    return t[0] is None


def graft(a, b):
    """Replace the leftmost leaf of b by a."""
    if b is None:
        return a
    return (graft(a, b[0]), b[1])


def left_border_factors(t):
    """Indecomposable factors cut along the left spine, innermost first.

    Grafting the factors back left to right restores the tree; the last
    factor contains the original root.
    """
    if t is None:
        return []
    spine = []
    node = t
    while node is not None:
        spine.append(node)
        node = node[0]
    return [(None, v[1]) for v in reversed(spine)]


def composition(t):
    """Sizes of the left-border factors; a composition of size(t)."""
    return tuple(size(f) for f in left_border_factors(t))


def is_composition_coarser(alpha, beta):
    """Whether alpha is obtained from beta by merging adjacent parts."""
    if sum(alpha) != sum(beta):
        return False

    def prefix_sums(parts):
        acc, out = 0, set()
        for p in parts:
            acc += p
            out.add(acc)
        return out

    return prefix_sums(alpha) <= prefix_sums(beta)


class TamariLattice:
    """Rotation order on all trees of a fixed size, as a concrete poset.

    ``trees[i]`` is the tree at poset index ``i``; trees are indexed in
    encoding order.  ``canopies[i]`` caches the canopy word of ``trees[i]``.
    """

    __slots__ = ("n", "trees", "index", "poset", "canopies")

    def __init__(self, n, trees, index, poset, canopies):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "trees", trees)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "poset", poset)
        object.__setattr__(self, "canopies", canopies)

    def __setattr__(self, name, value):
        raise AttributeError("TamariLattice is immutable")

    def as_index(self, t):
        if isinstance(t, int):
            if not 0 <= t < len(self.trees):
                raise ValueError(f"tree index {t} out of range")
            return t
        if t not in self.index:
            raise ValueError(f"{encode(t)} is not a tree of size {self.n}")
        return self.index[t]

    def leq(self, s, t):
        return self.poset.leq(self.as_index(s), self.as_index(t))

    def minimum(self):
        return self.index[right_comb(self.n)]

    def maximum(self):
        return self.index[left_comb(self.n)]

    def __repr__(self):
        return f"TamariLattice(n={self.n}, trees={len(self.trees)})"


@lru_cache(maxsize=None)
def tamari_lattice(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"lattice size must be a positive integer, got {n!r}")
    trees = enumerate_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    covers = []
    for i, t in enumerate(trees):
        for s in rotation_covers(t):
            covers.append((i, index[s]))
    poset = FinitePoset(len(trees), covers)
    canopies = tuple(canopy(t) for t in trees)
    return TamariLattice(n, trees, index, poset, canopies)


def interval_canopy_word(lat, lo, hi):
    """Word over {LL, LR, RR} pairing the canopy letters of an interval.

    Letter i is the pair (canopy(lo)[i], canopy(hi)[i]); RL cannot occur
    since canopies only move from L to R upward.
    """
    lo = lat.as_index(lo)
    hi = lat.as_index(hi)
    if not lat.poset.leq(lo, hi):
        raise ValueError(f"({lo}, {hi}) is not an interval")
    return tuple(a + b for a, b in zip(lat.canopies[lo], lat.canopies[hi]))


def is_synchronous(lat, lo, hi):
    """Whether the interval endpoints have equal canopies."""
    lo = lat.as_index(lo)
    hi = lat.as_index(hi)
    if not lat.poset.leq(lo, hi):
        raise ValueError(f"({lo}, {hi}) is not an interval")
    return lat.canopies[lo] == lat.canopies[hi]


class IntervalStat(NamedTuple):
    """One interval of a Tamari lattice with all exported statistics.

    ``lo``/``hi`` are tree indices; ``dx, dy, dybar, dxbar`` the four cover
    counts; ``q`` the length of a longest saturated chain from lo to hi
    (``None`` when not computed); ``ll``/``rr`` count the LL/RR letters of
    the interval canopy word, each minus one; ``sync`` flags equal canopies.
    """

    n: int
    lo: int
    hi: int
    dx: int
    dy: int
    dybar: int
    dxbar: int
    q: 'int | None'
    ll: int
    rr: int
    sync: bool


CSV_HEADER = "n,lo,hi,dx,dy,dybar,dxbar,q,ll,rr,sync"


def _longest_chain_from(poset, lo):
    dist = [-1] * poset.m
    dist[lo] = 0
    for v in poset.topological_order():
        if dist[v] < 0:
            continue
        base = dist[v] + 1
        for w in poset.upper_covers(v):
            if dist[w] < base:
                dist[w] = base
    return dist


def _records_for_lo(lat, lo, with_q):
    poset = lat.poset
    n = lat.n
    dist = _longest_chain_from(poset, lo) if with_q else None
    word_lo = lat.canopies[lo]
    out = []
    for hi in poset.up_set(lo):
        dx, dy, dybar, dxbar = poset.interval_degrees((lo, hi))
        word_hi = lat.canopies[hi]
        ll = rr = 0
        for a, b in zip(word_lo, word_hi):
            if a == "L" and b == "L":
                ll += 1
            elif a == "R" and b == "R":
                rr += 1
        out.append(IntervalStat(
            n, lo, hi, dx, dy, dybar, dxbar,
            dist[hi] if with_q else None,
            ll - 1, rr - 1, word_lo == word_hi))
    return out


@lru_cache(maxsize=None)
def _interval_statistics_cached(n, with_q):
    lat = tamari_lattice(n)
    out = []
    for lo in range(len(lat.trees)):
        out.extend(_records_for_lo(lat, lo, with_q))
    return tuple(out)


def interval_statistics(n, with_q=None, threads=1):
    """Statistics of every interval of the size-n lattice, in (lo, hi) order.

    Degree statistics support n <= 9; the longest-chain statistic q is
    heavier and is restricted to n <= 7 (the default computes it exactly in
    that range).  ``threads`` splits the per-lo work across a thread pool;
    the output does not depend on it.
    """
    if not isinstance(n, int) or not 1 <= n <= 9:
        raise ValueError(f"interval statistics support 1 <= n <= 9, got {n!r}")
    if with_q is None:
        with_q = n <= 7
    if with_q and n > 7:
        raise ValueError(f"the chain statistic q is supported for n <= 7, got n={n}")
    if threads <= 1:
        return _interval_statistics_cached(n, with_q)
    lat = tamari_lattice(n)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = pool.map(lambda lo: _records_for_lo(lat, lo, with_q),
                          range(len(lat.trees)))
        out = []
        for chunk in chunks:
            out.extend(chunk)
        return tuple(out)


def stats_to_csv(records):
    lines = [CSV_HEADER]
    for r in records:
        q = "" if r.q is None else str(r.q)
        lines.append(f"{r.n},{r.lo},{r.hi},{r.dx},{r.dy},{r.dybar},{r.dxbar},"
                     f"{q},{r.ll},{r.rr},{int(r.sync)}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def interval_valence_polynomial(n):
    """The four-variable interval enumerator of the size-n lattice."""
    terms = {}
    for r in interval_statistics(n):
        key = (r.dx, r.dy, r.dybar, r.dxbar)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(INTERVAL_VARS, terms)


@lru_cache(maxsize=None)
def valence_polynomial(n):
    """The two-variable valence enumerator of the size-n lattice itself."""
    return tamari_lattice(n).poset.valence_polynomial()
