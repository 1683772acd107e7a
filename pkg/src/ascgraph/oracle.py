"""Tensor-level evaluation of graph cochains and the Chevalley coboundary.

This is the independent check on the graph differential: a graph
combination is turned into a multilinear map on polyvector fields, and
the coboundary is computed from brackets of the arguments.

Weighting.  A vertex with ``l`` aerial arrows and ``m`` legs eats a
``p = l + m`` vector.  Its component is read as the signed wedge
coefficient ``sgn * c_{sort(t_1..t_l, L)}`` summed over ordered aerial
indices ``t`` and increasing leg sets ``L``; this counts every way of
choosing which wedge slots the arrows use.  A key ``c * g`` in a
GraphSum stands for ``c`` times the sum over all arrow orderings of
``g`` with their signs; in this reading the evaluation below equals
that expanded sum with fully antisymmetric components.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from ._perm import koszul_sign, perm_parity, sort_with_sign
from .graphs import AerialGraph, GraphSum, cycle_graph, symmetrize
from .polyvector import Poly, PolyVector, nabla


def _sgn(e):
    return -1 if e % 2 else 1


# ---------------------------------------------------------------- signs

def graded_signature(orders, perm):
    """Koszul sign of reordering items with degrees ``orders``.

    ``perm[k]`` is the original position of the item placed at ``k``.
    """
    return koszul_sign(list(orders), list(perm))


def legs_sign(out_degrees, legs):
    """Sign of moving all legs behind all aerial arrows.

    Closed form: (-1)^(sum_i m_i (l_{i+1} + ... + l_n)).
    """
    e = 0
    tail = 0
    for l, m in zip(reversed(out_degrees), reversed(legs)):
        e += m * tail
        tail += l
    return _sgn(e)


def legs_sign_explicit(out_degrees, legs):
    """The same sign, as the parity of the explicit shuffle."""
    compatible = []
    for v, (l, m) in enumerate(zip(out_degrees, legs)):
        compatible += [(0, v, k) for k in range(l)] + [(1, v, k) for k in range(m)]
    # target order: all aerial arrows by vertex, then all legs by vertex
    return perm_parity(compatible)


# --------------------------------------------------- cochain evaluation

def _vertex_table(alpha, ell, fin_count):
    """For one vertex: map aerial index tuple -> list of (leg key, signed poly).

    Polys are differentiated later; here only the component lookup.
    """
    table = {}
    p = alpha.p
    m = p - ell
    for key, poly in alpha.comps.items():
        for aer in permutations(key, ell) if ell else [()]:
            legs = tuple(k for k in key if k not in aer)
            sign = perm_parity(aer + legs) if p else 1
            # perm_parity sorts (aer+legs); the sorted tuple is key
            table.setdefault(aer, []).append((legs, poly, sign))
    return table


def b_graph(g, args, weight="expanded"):
    """Evaluate the operator of ``g`` with legs filling the remaining slots.

    Returns the PolyVector of order sum(m_i) without the legs sign.
    ``weight`` selects the normalization: "expanded" (default, see module
    docstring) or "literal" (fully antisymmetric components with 1/p!
    and ordered leg sums).
    """
    n = g.n
    if len(args) != n:
        raise ValueError(f"graph has {n} vertices but {len(args)} arguments given")
    d = args[0].d
    for a in args:
        if a.d != d:
            raise ValueError("arguments live in different dimensions")
    ell = g.out_degrees
    legs = [a.p - l for a, l in zip(args, ell)]
    out = PolyVector(d, sum(max(m, 0) for m in legs))
    if any(m < 0 for m in legs):
        return out
    # arrows: (source vertex, position) -> target vertex
    arrows = [(v, k, t - 1) for v, lst in enumerate(g.deb) for k, t in enumerate(lst)]
    fins = [[a for a, (_, _, t) in enumerate(arrows) if t == v] for v in range(n)]
    debs = [[a for a, (s, _, _) in enumerate(arrows) if s == v] for v in range(n)]
    tables = [_vertex_table(args[v], ell[v], len(fins[v])) for v in range(n)]
    weight_factor = Fraction(1)
    if weight == "literal":
        for l, a in zip(ell, args):
            weight_factor *= Fraction(factorial(a.p - l) * factorial(l), factorial(a.p))
    elif weight != "expanded":
        raise ValueError(f"unknown weight {weight!r}")

    deriv_cache = {}

    def derived(v, poly, idx):
        key = (id(poly), idx)
        r = deriv_cache.get(key)
        if r is None:
            r = poly
            for k in idx:
                r = r.deriv(k)
                if not r:
                    break
            deriv_cache[key] = r
        return r

    total_legs = out.p
    for t in product(range(d), repeat=len(arrows)):
        # per-vertex candidate factors
        factors = []
        dead = False
        for v in range(n):
            aer = tuple(t[a] for a in debs[v])
            entries = tables[v].get(aer)
            if not entries:
                dead = True
                break
            dv = tuple(sorted(t[a] for a in fins[v]))
            opts = []
            for legs_v, poly, sign in entries:
                dp = derived(v, poly, dv)
                if dp:
                    opts.append((legs_v, dp, sign))
            if not opts:
                dead = True
                break
            factors.append(opts)
        if dead:
            continue
        for choice in product(*factors):
            legidx = ()
            sign = 1
            poly = None
            for legs_v, dp, s in choice:
                legidx += legs_v
                sign *= s
                poly = dp if poly is None else poly * dp
                if not poly:
                    break
            if not poly:
                continue
            if len(set(legidx)) != total_legs:
                continue
            out.add_component(legidx, poly, sign)
    if weight_factor != 1:
        out = out.scale(weight_factor)
    return out


def cochain_graph(g, args, weight="expanded"):
    ell = g.out_degrees
    legs = [a.p - l for a, l in zip(args, ell)]
    if any(m < 0 for m in legs):
        return PolyVector(args[0].d, 0)
    return b_graph(g, args, weight).scale(legs_sign(ell, legs))


def cochain_eval(delta, args, weight="expanded"):
    """Evaluate the cochain of a graph combination on ``args``."""
    if len(args) != delta.n:
        raise ValueError(f"cochain on {delta.n} vertices needs {delta.n} arguments")
    d = args[0].d
    total = None
    for g, c in delta.items():
        v = cochain_graph(g, args, weight)
        if v:
            v = v.scale(c)
            total = v if total is None else total + v
    return total if total is not None else PolyVector(d, 0)


# ----------------------------------------------- Chevalley coboundary

def _move_sign(orders, order_list):
    return graded_signature(orders, order_list)


def chevalley_coboundary(cochain, cochain_parity, args):
    """Coboundary of a symmetric cochain (a callable on a list of tensors).

    ``cochain_parity`` is the parity of the cochain's degree in the
    shifted grading |a| = tensor order.
    """
    n1 = len(args)
    orders = [a.p for a in args]
    d = args[0].d
    cp = cochain_parity % 2
    total = PolyVector(d, 0)

    def acc(v, s):
        nonlocal total
        if v and s:
            v = v.scale(s)
            total = v if not total else total + v

    idx = list(range(n1))
    for i in range(n1):
        rest = [k for k in idx if k != i]
        sub = [args[k] for k in rest]
        c = cochain(sub)
        if not c:
            continue
        s1 = _move_sign(orders, [i] + rest) * _sgn(cp * (orders[i] - 1))
        acc(nabla(args[i], c), s1)
        s2 = _sgn(cp) * _move_sign(orders, rest + [i])
        acc(nabla(c, args[i]), s2)
    for i in range(n1):
        for j in range(n1):
            if i == j:
                continue
            rest = [k for k in idx if k != i and k != j]
            s = _move_sign(orders, [i, j] + rest)
            acc(cochain([nabla(args[i], args[j])] + [args[k] for k in rest]), -s)
    return total


def chevalley_coboundary_eval(delta, args, weight="expanded"):
    """Tensor-level coboundary of the cochain of ``delta`` on n+1 arguments."""
    if len(args) != delta.n + 1:
        raise ValueError(f"coboundary of an {delta.n}-cochain needs {delta.n + 1} arguments")
    arrows = {g.arrow_count % 2 for g in delta.graphs()}
    if len(arrows) > 1:
        # split by arrow parity; each part has a definite degree
        parts = {}
        for g, c in delta.items():
            parts.setdefault(g.arrow_count % 2, []).append((g, c))
        total = PolyVector(args[0].d, 0)
        for par, terms in parts.items():
            total = total + chevalley_coboundary_eval(GraphSum(delta.n, terms), args, weight)
        return total
    if not arrows:
        return PolyVector(args[0].d, 0)
    par = arrows.pop()
    return chevalley_coboundary(lambda xs: cochain_eval(delta, xs, weight), par, args)


# ------------------------------------------------------ wheels, traces

def antisym_trace(mats):
    """Sum over permutations of sign * trace of the ordered product."""
    k = len(mats)
    if k == 0:
        raise ValueError("need at least one matrix")
    size = len(mats[0])
    for m in mats:
        if len(m) != size or any(len(row) != size for row in m):
            raise ValueError("matrices must be square of equal size")
    mats = [[[Fraction(x) for x in row] for row in m] for m in mats]
    total = Fraction(0)
    for perm in permutations(range(k)):
        prod = mats[perm[0]]
        for p in perm[1:]:
            b = mats[p]
            prod = [[sum(prod[r][s] * b[s][c] for s in range(size)) for c in range(size)]
                    for r in range(size)]
        total += perm_parity(perm) * sum(prod[r][r] for r in range(size))
    return total


def _jacobian_blocks(alpha):
    """Leg key L -> d x d matrix of polys  J[t][s] = d_s (sgn(t,L) c_{t u L})."""
    d = alpha.d
    m = alpha.p - 1
    blocks = {}
    if m < 0:
        return blocks
    for L in combinations(range(d), m):
        mat = [[None] * d for _ in range(d)]
        nonzero = False
        for t in range(d):
            if t in L:
                continue
            key, sign = sort_with_sign((t,) + L)
            c = alpha.comps.get(key)
            if c is None:
                continue
            for s in range(d):
                dc = c.deriv(s)
                if dc:
                    mat[t][s] = dc.scale(sign)
                    nonzero = True
        if nonzero:
            blocks[L] = mat
    return blocks


def _poly_matmul(a, b, d, dim):
    out = [[None] * dim for _ in range(dim)]
    for r in range(dim):
        for c in range(dim):
            acc = None
            for s in range(dim):
                x, y = a[r][s], b[s][c]
                if x is None or y is None:
                    continue
                v = x * y
                acc = v if acc is None else acc + v
            out[r][c] = acc if acc else None
    return out


def wheel_trace_eval(p, args):
    """Cochain of the symmetric wheel of length 2p+1, through Jacobian traces.

    For the single cycle 1 -> 2 -> ... -> k -> 1 the aerial indices chain
    through the vertices, so the operator is the trace of the product of
    per-vertex Jacobian blocks taken against the arrows.  The symmetric
    wheel is the graded sum over argument permutations.
    """
    k = 2 * p + 1
    if len(args) != k:
        raise ValueError(f"wheel of length {k} needs {k} arguments")
    d = args[0].d
    orders = [a.p for a in args]
    total = PolyVector(d, max(sum(orders) - k, 0))
    if any(o < 1 for o in orders):
        return total
    ell = [1] * k
    for perm in permutations(range(k)):
        eps = graded_signature(orders, perm)
        sub = [args[q] for q in perm]
        blocks = [_jacobian_blocks(a) for a in sub]
        lsign = legs_sign(ell, [a.p - 1 for a in sub])
        for choice in product(*[list(b.items()) for b in blocks]):
            legidx = ()
            for L, _ in choice:
                legidx += L
            if len(set(legidx)) != len(legidx):
                continue
            # J_k ... J_1 : vertex a carries J_a[t_a][t_{a-1}]
            prod = choice[-1][1]
            for _, mat in reversed(choice[:-1]):
                prod = _poly_matmul(prod, mat, d, d)
            tr = None
            for r in range(d):
                if prod[r][r] is not None:
                    tr = prod[r][r] if tr is None else tr + prod[r][r]
            if tr:
                total.add_component(legidx, tr, eps * lsign)
    return total


def wheel_cochain_eval(k, args, weight="expanded"):
    return cochain_eval(symmetrize(cycle_graph(k)), args, weight)
