"""Polyvector fields on R^d with exact polynomial coefficients.

A p-vector is stored by its coefficients on the wedge basis
``d_{i1} ^ ... ^ d_{ip}`` with ``i1 < ... < ip`` (0-based internally,
1-based in JSON).  Every reordering of wedge factors goes through
:func:`wedge_sort`.
"""

from fractions import Fraction
from itertools import combinations
import random

from ._perm import sort_with_sign


class Poly:
    """Sparse polynomial: exponent tuple -> Fraction."""

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        self.terms = {}
        if terms:
            for e, c in (terms.items() if hasattr(terms, "items") else terms):
                c = Fraction(c)
                if c:
                    e = tuple(e)
                    if len(e) != d:
                        raise ValueError("exponent length differs from d")
                    v = self.terms.get(e, 0) + c
                    if v:
                        self.terms[e] = v
                    else:
                        self.terms.pop(e, None)

    @classmethod
    def const(cls, d, c):
        return cls(d, {(0,) * d: c})

    @classmethod
    def var(cls, d, k):
        e = [0] * d
        e[k] = 1
        return cls(d, {tuple(e): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.d == other.d and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = Poly(self.d)
        out.terms = dict(self.terms)
        for e, c in other.terms.items():
            v = out.terms.get(e, 0) + c
            if v:
                out.terms[e] = v
            else:
                del out.terms[e]
        return out

    def __neg__(self):
        out = Poly(self.d)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        out = Poly(self.d)
        if c:
            out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(Fraction(other))
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        p = Poly(self.d)
        p.terms = out
        return p

    __rmul__ = __mul__

    def deriv(self, k):
        out = Poly(self.d)
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out.terms[tuple(f)] = c * e[k]
        return out

    def degrees(self):
        return {sum(e) for e in self.terms}

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def to_json(self):
        return [{"exp": list(e), "coeff": f"{c.numerator}/{c.denominator}"}
                for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, d, items):
        return cls(d, [(it["exp"], Fraction(str(it["coeff"]))) for it in items])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{k + 1}" + (f"^{p}" if p > 1 else "")
                            for k, p in enumerate(e) if p)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def wedge_sort(idx):
    """Sort wedge indices; ``(sorted, sign)`` or ``(None, 0)`` if an index repeats."""
    return sort_with_sign(idx)


class PolyVector:
    """Antisymmetric p-tensor with polynomial coefficients on R^d."""

    __slots__ = ("d", "p", "comps")

    def __init__(self, d, p, comps=None):
        self.d = d
        self.p = p
        self.comps = {}
        if comps:
            for idx, poly in (comps.items() if hasattr(comps, "items") else comps):
                self.add_component(idx, poly)

    def add_component(self, idx, poly, sign=1):
        """Accumulate ``sign * poly`` on the wedge of ``idx`` (any order, 0-based)."""
        if len(idx) != self.p:
            raise ValueError("index length differs from tensor order")
        key, s = wedge_sort(idx)
        if not s or not poly:
            return
        if any(not 0 <= k < self.d for k in key):
            raise ValueError("index outside 0..d-1")
        cur = self.comps.get(key)
        new = poly.scale(s * sign) if cur is None else cur + poly.scale(s * sign)
        if new:
            self.comps[key] = new
        else:
            self.comps.pop(key, None)

    @property
    def deg(self):
        return self.p - 1

    @property
    def order(self):
        return self.p

    def __bool__(self):
        return bool(self.comps)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        if not self.comps and not other.comps:
            return True
        return self.d == other.d and self.p == other.p and self.comps == other.comps

    def __add__(self, other):
        if not other.comps:
            return self
        if not self.comps:
            return other
        _check_same(self, other)
        if self.p != other.p:
            raise ValueError("cannot add tensors of different orders")
        out = PolyVector(self.d, self.p)
        out.comps = dict(self.comps)
        for k, v in other.comps.items():
            out.add_component(k, v)
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        out = PolyVector(self.d, self.p)
        c = Fraction(c)
        if c:
            out.comps = {k: v.scale(c) for k, v in self.comps.items()}
        return out

    def component(self, idx):
        """Coefficient on the wedge of ``idx`` in the given order (signed)."""
        key, s = wedge_sort(idx)
        if not s or key not in self.comps:
            return Poly(self.d)
        return self.comps[key].scale(s)

    def poly_degrees(self):
        out = set()
        for v in self.comps.values():
            out |= v.degrees()
        return out

    def to_json(self):
        return {"d": self.d, "p": self.p,
                "comps": [{"idx": [k + 1 for k in key], "poly": v.to_json()}
                          for key, v in sorted(self.comps.items())]}

    @classmethod
    def from_json(cls, obj):
        d, p = int(obj["d"]), int(obj["p"])
        out = cls(d, p)
        for c in obj["comps"]:
            out.add_component([k - 1 for k in c["idx"]], Poly.from_json(d, c["poly"]))
        return out

    def __repr__(self):
        if not self.comps:
            return f"PolyVector(d={self.d}, p={self.p}, 0)"
        parts = []
        for key, v in sorted(self.comps.items()):
            basis = "^".join(f"d{k + 1}" for k in key) or "1"
            parts.append(f"({v})*{basis}")
        return f"PolyVector(d={self.d}, p={self.p}, " + " + ".join(parts) + ")"


def _check_same(a, b):
    if a.d != b.d:
        raise ValueError(f"dimension mismatch: {a.d} vs {b.d}")


def zero(d, p):
    return PolyVector(d, p)


def function(d, poly):
    return PolyVector(d, 0, {(): poly})


def nabla(alpha, beta):
    """Contract each slot of ``alpha`` into a derivative of ``beta``.

    Sum over wedge keys I of alpha, slots r (sign (-1)^(r-1)) and keys J
    of beta of  alpha_I * d_{i_r} beta_J  on  (I without i_r) ^ J.
    """
    _check_same(alpha, beta)
    k, l = alpha.p, beta.p
    out = PolyVector(alpha.d, max(k + l - 1, 0))
    if k == 0:
        return out
    dbeta = {}
    for I, a in alpha.comps.items():
        for r, ir in enumerate(I):
            rest = I[:r] + I[r + 1:]
            sgn = -1 if r % 2 else 1
            for J, b in beta.comps.items():
                key = (ir, J)
                db = dbeta.get(key)
                if db is None:
                    db = dbeta[key] = b.deriv(ir)
                if not db:
                    continue
                out.add_component(rest + J, a * db, sgn)
    return out


def schouten(alpha, beta):
    """[a, b] = (-1)^deg(a) nabla_a b - (-1)^((deg(a)+1) deg(b)) nabla_b a."""
    _check_same(alpha, beta)
    da, db = alpha.deg, beta.deg
    s1 = -1 if da % 2 else 1
    s2 = -1 if ((da + 1) * db) % 2 else 1
    return nabla(alpha, beta).scale(s1) - nabla(beta, alpha).scale(s2)


def q_bracket(alpha, beta):
    """The symmetric version (-1)^deg(a) [a, b] of the bracket."""
    s = -1 if alpha.deg % 2 else 1
    return schouten(alpha, beta).scale(s)


def homogeneous_degree(alpha):
    degs = alpha.poly_degrees()
    if len(degs) > 1:
        raise ValueError("coefficients are not homogeneous")
    return degs.pop() if degs else None


def ascending_allows(q, p):
    return q < p if p > 1 else q <= p


def is_ascending_tensor(alpha):
    q = homogeneous_degree(alpha)
    if q is None:
        return True
    return ascending_allows(q, alpha.p)


def monomials(d, q):
    """Exponent tuples of total degree q in d variables."""
    if d == 0:
        return [()] if q == 0 else []
    out = []
    for split in combinations(range(q + d - 1), d - 1):
        prev = -1
        e = []
        for s in split:
            e.append(s - prev - 1)
            prev = s
        e.append(q + d - 1 - prev - 1)
        out.append(tuple(e))
    return out


def random_ascending_tensor(d, p, maxq=None, seed=0, rng=None, coeff_range=3, density=0.6, q=None):
    """A seeded random p-vector with homogeneous ascending coefficients.

    The degree is drawn up to the ascending bound unless ``q`` fixes it.
    Returns the zero tensor only when p > d (no wedge keys exist).
    """
    rng = rng if rng is not None else random.Random(seed)
    if q is None:
        if maxq is None:
            maxq = p
        qmax = min(maxq, p - 1 if p > 1 else p)
        q = rng.randint(0, max(qmax, 0))
    elif not ascending_allows(q, p):
        raise ValueError(f"degree {q} is not ascending for order {p}")
    keys = list(combinations(range(d), p))
    out = PolyVector(d, p)
    if not keys:
        return out
    monos = monomials(d, q)
    while not out.comps:
        for key in keys:
            if rng.random() > density:
                continue
            terms = {}
            for e in monos:
                if rng.random() < density:
                    c = rng.randint(-coeff_range, coeff_range)
                    if c:
                        terms[e] = c
            if terms:
                out.add_component(key, Poly(d, terms))
    return out
