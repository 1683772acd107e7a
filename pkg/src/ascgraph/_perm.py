"""Small permutation helpers shared by the graph and tensor code."""

from itertools import permutations


def perm_parity(seq):
    """Return +1 or -1, the sign of the permutation that sorts ``seq``.

    ``seq`` must consist of pairwise distinct, mutually comparable items.
    """
    seq = list(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(seq)
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_with_sign(seq):
    """Sort ``seq``; return ``(sorted_tuple, sign)`` or ``(None, 0)`` on a repeat."""
    n = len(seq)
    if n < 2:
        return tuple(seq), 1
    if n == 2:
        a, b = seq
        if a == b:
            return None, 0
        return ((a, b), 1) if a < b else ((b, a), -1)
    s = tuple(sorted(seq))
    for a, b in zip(s, s[1:]):
        if a == b:
            return None, 0
    return s, perm_parity(seq)


def koszul_sign(degrees, perm):
    """Koszul sign of moving graded items into the order ``perm``.

    ``perm[k]`` is the original position of the item that ends up at
    position ``k``. Only the parities of ``degrees`` matter.
    """
    odd = 0
    n = len(perm)
    for a in range(n):
        da = degrees[perm[a]] & 1
        if not da:
            continue
        pa = perm[a]
        for b in range(a + 1, n):
            if pa > perm[b] and degrees[perm[b]] & 1:
                odd ^= 1
    return -1 if odd else 1


def all_permutations(n):
    return permutations(range(n))
