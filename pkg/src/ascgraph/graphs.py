"""Aerial graphs, admissibility policies, graded relabeling and symmetrization.

A graph on ``n`` numbered vertices is stored as a tuple of ``n`` tuples;
entry ``i`` (0-based position, vertex ``i+1``) lists the 1-based targets
of the arrows leaving that vertex, in their significant order.

Linear combinations live in :class:`GraphSum`, keyed by arrow-canonical
graphs (each out-list sorted ascending).  Swapping two arrows of one
vertex flips the sign; a repeated target therefore kills the graph.
Relabeling the vertices acts with the Koszul sign of the permutation of
the out-arrow blocks.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
import json

from ._perm import koszul_sign, perm_parity, sort_with_sign


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True, order=True)
class AerialGraph:
    deb: tuple

    def __init__(self, deb):
        deb = tuple(tuple(int(t) for t in lst) for lst in deb)
        n = len(deb)
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        for lst in deb:
            for t in lst:
                if not 1 <= t <= n:
                    raise ValueError(f"arrow target {t} outside 1..{n}")
        object.__setattr__(self, "deb", deb)

    @classmethod
    def _trusted(cls, deb):
        """Build from an already validated tuple of tuples."""
        g = object.__new__(cls)
        object.__setattr__(g, "deb", deb)
        return g

    @property
    def n(self):
        return len(self.deb)

    @property
    def out_degrees(self):
        return tuple(len(lst) for lst in self.deb)

    @property
    def in_degrees(self):
        f = [0] * self.n
        for lst in self.deb:
            for t in lst:
                f[t - 1] += 1
        return tuple(f)

    @property
    def arrow_count(self):
        return sum(len(lst) for lst in self.deb)

    def types(self):
        return tuple(VertexType(f, l) for f, l in zip(self.in_degrees, self.out_degrees))

    def to_json(self):
        return {"n": self.n, "deb": [list(lst) for lst in self.deb]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "deb" not in obj:
            raise ValueError("graph JSON needs a 'deb' field")
        g = cls(obj["deb"])
        if "n" in obj and int(obj["n"]) != g.n:
            raise ValueError("graph JSON: 'n' disagrees with len(deb)")
        return g

    def __repr__(self):
        return f"AerialGraph({[list(x) for x in self.deb]})"


@dataclass(frozen=True)
class VertexType:
    f: int
    l: int


def vertex_type(g, i):
    """(in-degree, out-degree) of the 1-based vertex ``i``."""
    if not 1 <= i <= g.n:
        raise IndexError(f"vertex {i} outside 1..{g.n}")
    return VertexType(g.in_degrees[i - 1], len(g.deb[i - 1]))


def cycle_graph(k):
    """The oriented k-cycle 1->2->...->k->1 (a loop when k == 1)."""
    if k < 1:
        raise ValueError("cycle length must be positive")
    return AerialGraph([(i % k + 1,) for i in range(1, k + 1)])


def disjoint_union(*graphs):
    deb = []
    offset = 0
    for g in graphs:
        deb.extend(tuple(t + offset for t in lst) for lst in g.deb)
        offset += g.n
    return AerialGraph(deb)


# -------------------------------------------------------------- policies

@dataclass(frozen=True)
class TypePolicy:
    """Which vertex types (f, l) are admissible.

    ``max_out`` only matters for the unrestricted policy, where it caps
    out-degrees during enumeration; acceptance itself is unconditional.
    """
    kind: str
    max_out: int = None

    def __post_init__(self):
        if self.kind not in ("ascending", "descending", "unrestricted"):
            raise ValueError(f"unknown policy {self.kind!r}")
        if self.kind == "unrestricted":
            if self.max_out is None or self.max_out < 1:
                raise ValueError("unrestricted policy needs a positive max_out")

    def accepts(self, f, l):
        if self.kind == "ascending":
            return f < l if l > 1 else f <= l
        if self.kind == "descending":
            return f > l if f > 1 else f >= l
        return True

    @property
    def enumeration_cap(self):
        # Sum f = sum l forces every ascending (or descending) vertex to
        # be (1,1) or (0,0), so out-degree 1 is enough to enumerate.
        return self.max_out if self.kind == "unrestricted" else 1

    def __str__(self):
        if self.kind == "unrestricted":
            return f"unrestricted(max_out={self.max_out})"
        return self.kind


ASCENDING = TypePolicy("ascending")
DESCENDING = TypePolicy("descending")


def unrestricted(max_out=3):
    return TypePolicy("unrestricted", max_out)


def parse_policy(name, max_out=3):
    name = name.lower()
    if name == "unrestricted":
        return unrestricted(max_out)
    return TypePolicy(name)


def is_admissible(g, policy):
    return all(policy.accepts(f, l) for f, l in zip(g.in_degrees, g.out_degrees))


# --------------------------------------------------------- sign handling

def arrow_canonicalize(g):
    """Sort every out-list.  Returns ``(graph, sign, is_zero)``."""
    sign = 1
    deb = []
    for lst in g.deb:
        s, e = sort_with_sign(lst)
        if e == 0:
            return g, 0, True
        sign *= e
        deb.append(s)
    return AerialGraph(deb), sign, False


def transposition_sign(out_degrees, i, j):
    """Sign of swapping vertices ``i < j`` (1-based) with the given out-degrees."""
    n = len(out_degrees)
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= len(out_degrees)")
    li, lj = out_degrees[i - 1], out_degrees[j - 1]
    mid = sum(out_degrees[i:j - 1])
    return -1 if (li * lj + (li + lj) * mid) % 2 else 1


def relabel(g, pi):
    """Rename vertex ``v`` to ``pi[v-1]`` (1-based images).

    Returns ``(canonical graph, sign)``; the sign is 0 when the renamed
    graph is killed by a repeated arrow (never happens for a canonical
    input, since relabeling keeps targets distinct).
    """
    pi = tuple(pi)
    n = g.n
    if len(pi) != n or set(pi) != set(range(1, n + 1)):
        raise ValueError("relabel needs a bijection of 1..n")
    new = [None] * n
    order = [0] * n
    sign = 1
    for v, lst in enumerate(g.deb):
        renamed = [pi[t - 1] for t in lst]
        s, e = sort_with_sign(renamed)
        if e == 0:
            return g, 0
        sign *= e
        new[pi[v] - 1] = s
        order[pi[v] - 1] = v
    sign *= koszul_sign([len(lst) for lst in g.deb], order)
    return AerialGraph._trusted(tuple(new)), sign


def transpose(g):
    """Reverse every arrow.  Returns ``(canonical graph, sign)``, sign 0 if killed."""
    new = [[] for _ in range(g.n)]
    for v, lst in enumerate(g.deb, start=1):
        for t in lst:
            new[t - 1].append(v)
    h, sign, zero = arrow_canonicalize(AerialGraph(new))
    return h, (0 if zero else sign)


# ------------------------------------------------------------- GraphSum

def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class GraphSum:
    """Immutable rational combination of arrow-canonical graphs on n vertices."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n, terms=()):
        """``terms`` is an iterable of ``(graph, coeff)`` or a mapping.

        Graphs need not be canonical; they are canonicalized here and the
        sign is folded into the coefficient.
        """
        if n < 1:
            raise ValueError("vertex count must be positive")
        if hasattr(terms, "items"):
            terms = terms.items()
        acc = {}
        for g, c in terms:
            if g.n != n:
                raise ValueError(f"graph with {g.n} vertices in a sum over {n}")
            c = _frac(c)
            if not c:
                continue
            h, sign, zero = arrow_canonicalize(g)
            if zero:
                continue
            acc[h] = acc.get(h, 0) + sign * c
        self.n = n
        self._terms = {g: c for g, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: keys canonical, values nonzero Fractions
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def single(cls, g, coeff=1):
        return cls(g.n, [(g, coeff)])

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def items(self):
        return [(g, self._terms[g]) for g in sorted(self._terms)]

    def coeff(self, g):
        return self._terms.get(g, Fraction(0))

    def graphs(self):
        return sorted(self._terms)

    def _check(self, other):
        if not isinstance(other, GraphSum):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"vertex counts differ: {self.n} vs {other.n}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for g, c in other._terms.items():
            v = acc.get(g, 0) + c
            if v:
                acc[g] = v
            else:
                acc.pop(g, None)
        return GraphSum._raw(self.n, acc)

    def __neg__(self):
        return GraphSum._raw(self.n, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = _frac(c)
        if not c:
            return GraphSum.zero(self.n)
        return GraphSum._raw(self.n, {g: c * v for g, v in self._terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def map_graphs(self, fn, n=None):
        """Apply ``fn(graph) -> iterable of (graph, sign_or_coeff)`` termwise."""
        out = {}
        n = self.n if n is None else n
        for g, c in self._terms.items():
            for h, s in fn(g):
                if not s:
                    continue
                v = out.get(h, 0) + c * s
                if v:
                    out[h] = v
                else:
                    out.pop(h, None)
        return GraphSum._raw(n, out)

    def to_json(self):
        return {
            "n": self.n,
            "terms": [{"coeff": f"{c.numerator}/{c.denominator}", "graph": g.to_json()}
                      for g, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
            raise ValueError("sum JSON needs a 'terms' list")
        pairs = []
        for t in obj["terms"]:
            pairs.append((AerialGraph.from_json(t["graph"]), _frac(t["coeff"])))
        ns = {g.n for g, _ in pairs}
        if "n" in obj:
            ns.add(int(obj["n"]))
        if len(ns) > 1:
            raise ValueError("sum JSON mixes vertex counts")
        if not ns:
            raise ValueError("empty sum JSON needs an 'n' field")
        return cls(ns.pop(), pairs)

    def dumps(self):
        return json.dumps(self.to_json())

    def __repr__(self):
        if not self._terms:
            return f"GraphSum(n={self.n}, 0)"
        body = " + ".join(f"{c}*{[list(x) for x in g.deb]}" for g, c in self.items())
        return f"GraphSum(n={self.n}, {body})"


def add(a, b):
    return a + b


def scale(c, s):
    return s.scale(c)


# ------------------------------------------------------ symmetrization

def _perms(n):
    return [tuple(p[k] + 1 for k in range(n)) for p in permutations(range(n))]


_PERM_CACHE = {}


def perms_1based(n):
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = _perms(n)
    return _PERM_CACHE[n]


def orbit(g):
    """Map each graph in the relabeling orbit of ``g`` to the set of signs reaching it."""
    h0, s0, zero = arrow_canonicalize(g)
    if zero:
        return {}
    out = {}
    for pi in perms_1based(g.n):
        h, s = relabel(h0, pi)
        out.setdefault(h, set()).add(s * s0)
    return out


def symmetrize(g):
    """Sum over all relabelings, each weighted by its graded sign."""
    h0, s0, zero = arrow_canonicalize(g)
    if zero:
        return GraphSum.zero(g.n)
    acc = {}
    for pi in perms_1based(g.n):
        h, s = relabel(h0, pi)
        acc[h] = acc.get(h, 0) + s * s0
    return GraphSum._raw(g.n, {h: Fraction(c) for h, c in acc.items() if c})


def symmetrize_sum(delta):
    out = GraphSum.zero(delta.n)
    for g, c in delta.items():
        out = out + symmetrize(g).scale(c)
    return out


def canonical_rep(g):
    """Minimal graph in the orbit of ``g`` and the sign with relabel(g, pi) = (rep, sign).

    Returns ``(rep, sign, vanishes)``; ``vanishes`` is true when some
    relabeling fixes the graph with sign -1, so the orbit symmetrizes to 0.
    """
    h0, s0, zero = arrow_canonicalize(g)
    if zero:
        return g, 0, True
    best = None
    best_sign = 0
    stab_odd = False
    for pi in perms_1based(g.n):
        h, s = relabel(h0, pi)
        if h == h0 and s == -1:
            stab_odd = True
        if best is None or h < best:
            best, best_sign = h, s * s0
    return best, best_sign, stab_odd


def is_symmetric(delta):
    """True when every relabeling maps ``delta`` to itself."""
    for g, c in delta.items():
        for pi in perms_1based(delta.n):
            h, s = relabel(g, pi)
            if delta.coeff(h) != s * c:
                return False
    return True


def enumerate_graphs(n, max_out):
    """All arrow-canonical graphs on n vertices with out-degree <= max_out."""
    choices = []
    targets = range(1, n + 1)
    for k in range(0, min(max_out, n) + 1):
        choices.extend(combinations(targets, k))
    for deb in product(choices, repeat=n):
        yield AerialGraph(deb)


__all__ = [
    "AerialGraph", "VertexType", "TypePolicy", "GraphSum",
    "ASCENDING", "DESCENDING", "unrestricted", "parse_policy",
    "vertex_type", "is_admissible", "arrow_canonicalize", "transposition_sign",
    "relabel", "transpose", "symmetrize", "symmetrize_sum", "canonical_rep",
    "orbit", "is_symmetric", "enumerate_graphs", "cycle_graph", "disjoint_union",
    "add", "scale", "perm_parity",
]
