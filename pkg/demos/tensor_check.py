"""Evaluate graph cochains on polynomial polyvector fields and compare the two coboundaries.

    python3 demos/tensor_check.py
"""
import random

from ascgraph import (AerialGraph, antisym_trace, chevalley_coboundary_eval, coboundary,
                      cochain_eval, random_ascending_tensor, symmetrize, unrestricted,
                      wheel, wheel_trace_eval)

rng = random.Random(3)

# Graph side: split vertices. Tensor side: the Chevalley coboundary for the
# bracket q(a, b) = nabla(a, b) +- nabla(b, a). They must agree term for term.
pol = unrestricted(3)
delta = symmetrize(AerialGraph([()]))
print("d S(point) =", [(str(c), list(g.deb)) for g, c in coboundary(delta, pol).items()])
for _ in range(3):
    args = [random_ascending_tensor(2, rng.randint(1, 2), rng=rng) for _ in range(2)]
    lhs = chevalley_coboundary_eval(delta, args)
    rhs = cochain_eval(coboundary(delta, pol), args)
    print("agree:", lhs == rhs, " value:", lhs.to_json())

# The 3-wheel on linear vector fields reduces to an antisymmetrized trace of
# their matrices, which vanishes in dimension one.
for d in (1, 2):
    for trial in range(10):
        args = [random_ascending_tensor(d, 1, rng=rng, q=1) for _ in range(3)]
        a = cochain_eval(wheel(3), args)
        if a:
            break
    print(f"d={d}, {trial + 1} draws: wheel(3) -> {a.to_json() if a else 0};",
          "trace form agrees:", a == wheel_trace_eval(1, args))

# Five 2x2 matrices always give zero; three usually do not.
mats = [[[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)] for _ in range(5)]
print("five:", antisym_trace(mats), " three:", antisym_trace(mats[:3]))
