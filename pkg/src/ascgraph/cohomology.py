"""Graded bases of symmetric graph combinations, differential matrices, Betti numbers.

A basis vector is the symmetrization of an orbit representative divided
by the order of its stabilizer, so its coefficient on the representative
is 1.  A symmetric combination therefore has coordinate ``delta[rep]``
on each orbit.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .differential import coboundary
from .graphs import (GraphSum, AerialGraph, canonical_rep, cycle_graph, disjoint_union,
                     enumerate_graphs, is_admissible, relabel, perms_1based)
from .ratlinalg import SparseRationalMatrix, rank, solve

INCLUDE = "include"
EXCLUDE = "exclude"


def parse_mode(name):
    name = name.lower()
    aliases = {"include": INCLUDE, "includeisolated": INCLUDE,
               "exclude": EXCLUDE, "excludeisolated": EXCLUDE}
    if name not in aliases:
        raise ValueError(f"unknown isolated-vertex mode {name!r}")
    return aliases[name]


@lru_cache(maxsize=None)
def _rep(g):
    return canonical_rep(g)


def has_isolated(g):
    fin = g.in_degrees
    return any(not lst and not f for lst, f in zip(g.deb, fin))


@dataclass
class BasisSlice:
    n: int
    policy: object
    mode: str
    cap: int
    reps: list = field(default_factory=list)
    index: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.reps)

    def vector(self, c):
        """The basis combination of column ``c``."""
        rep = self.reps[c]
        acc = {}
        stab = 0
        for pi in perms_1based(self.n):
            h, s = relabel(rep, pi)
            if h == rep:
                stab += 1
            acc[h] = acc.get(h, 0) + s
        return GraphSum(self.n, [(h, Fraction(v, stab)) for h, v in acc.items() if v])

    def coordinates(self, delta, check=False):
        """Coordinates of a symmetric combination; raises on an unknown orbit."""
        if delta.n != self.n:
            raise ValueError("vertex count differs from the slice")
        x = [Fraction(0)] * len(self.reps)
        for g, c in delta.items():
            rep, _, vanish = _rep(g)
            if vanish:
                raise ValueError(f"term {g} lies in an orbit that symmetrizes to zero")
            col = self.index.get(rep)
            if col is None:
                raise KeyError(f"orbit of {g} missing from the n={self.n} slice")
            if g == rep:
                x[col] = c
        if check and self.combination(x) != delta:
            raise ValueError("combination is not symmetric")
        return x

    def combination(self, x):
        out = GraphSum.zero(self.n)
        for c, v in enumerate(x):
            if v:
                out = out + self.vector(c).scale(v)
        return out


_SLICES = {}


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _balanced_candidates(n):
    """One graph per orbit of unions of cycles and isolated points.

    Under a graded policy every vertex is (1,1) or (0,0), so these are
    all admissible graphs up to relabeling.
    """
    for parts in _partitions(n):
        ones = parts.count(1)
        cycles = parts[:len(parts) - ones]
        # each part of size 1 is either a loop or an isolated point
        for points in range(ones + 1):
            comps = [cycle_graph(k) for k in cycles] + [cycle_graph(1)] * (ones - points)
            comps += [AerialGraph([()])] * points
            yield disjoint_union(*comps)


def enumerate_basis(n, policy, mode, cap=None):
    """Orbit representatives of admissible graphs on n vertices.

    ``cap`` bounds out-degrees (default: the policy's enumeration cap).
    Orbits that symmetrize to zero are left out.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    mode = parse_mode(mode)
    cap = policy.enumeration_cap if cap is None else cap
    key = (n, policy, mode, cap)
    if key in _SLICES:
        return _SLICES[key]
    seen = set()
    reps = []
    source = enumerate_graphs(n, cap) if policy.kind == "unrestricted" else _balanced_candidates(n)
    for g in source:
        if g in seen:
            continue
        if not is_admissible(g, policy):
            continue
        if mode == EXCLUDE and has_isolated(g):
            continue
        members = set()
        odd = False
        for pi in perms_1based(n):
            h, s = relabel(g, pi)
            if h == g and s == -1:
                odd = True
            members.add(h)
        seen |= members
        if not odd:
            reps.append(min(members))
    reps.sort()
    sl = BasisSlice(n, policy, mode, cap, reps, {r: k for k, r in enumerate(reps)})
    _SLICES[key] = sl
    return sl


def _target_cap(policy, cap):
    # splitting can give one vertex one more out-arrow than it had
    return cap if policy.kind != "unrestricted" else cap + 1


def differential_matrix(n, policy, mode, cap=None):
    """Matrix of the coboundary from the n-slice to the (n+1)-slice."""
    src = enumerate_basis(n, policy, mode, cap)
    dst = enumerate_basis(n + 1, policy, mode, _target_cap(policy, src.cap))
    m = SparseRationalMatrix(len(dst), len(src))
    for c in range(len(src)):
        image = coboundary(src.vector(c), policy)
        for r, v in enumerate(dst.coordinates(image)):
            if v:
                m[r, c] = v
    return m


@dataclass(frozen=True)
class BettiRow:
    n: int
    dim_basis: int
    rank_in: int
    rank_out: int
    betti: int
    mode: str
    policy: str

    def to_json(self):
        return {"n": self.n, "betti": self.betti, "mode": self.mode, "policy": self.policy,
                "dim_basis": self.dim_basis, "rank_in": self.rank_in, "rank_out": self.rank_out}


def _require_graded(policy):
    if policy.kind == "unrestricted":
        raise ValueError("out-degree truncation is not a subcomplex; "
                         "cohomology is only computed for ascending or descending policies")


def betti_row(n, policy, mode):
    _require_graded(policy)
    mode = parse_mode(mode)
    dim = len(enumerate_basis(n, policy, mode))
    rank_out = rank(differential_matrix(n, policy, mode))
    rank_in = rank(differential_matrix(n - 1, policy, mode)) if n > 1 else 0
    return BettiRow(n, dim, rank_in, rank_out, dim - rank_out - rank_in, mode, str(policy))


def cohomology_dim(n, policy, mode):
    """dim ker(d_n) - rank(d_{n-1})."""
    return betti_row(n, policy, mode).betti


def is_cocycle(delta, policy):
    return not coboundary(delta, policy)


def coboundary_witness(delta, policy, mode, cap=None):
    """A symmetric beta on n-1 vertices with coboundary(beta) == delta, or None."""
    n = delta.n
    if n == 1:
        return GraphSum.zero(1) if not delta else None
    src = enumerate_basis(n - 1, policy, mode, cap)
    dst = enumerate_basis(n, policy, mode, _target_cap(policy, src.cap))
    m = differential_matrix(n - 1, policy, mode, src.cap)
    try:
        b = dst.coordinates(delta, check=True)
    except (KeyError, ValueError):
        return None
    x = solve(m, b)
    if x is None:
        return None
    beta = src.combination(x)
    if coboundary(beta, policy) != delta:
        raise AssertionError("witness failed exact verification")
    return beta
