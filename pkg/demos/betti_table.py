"""Walk through the graded complex: wheels, the differential, and small Betti numbers.

    python3 demos/betti_table.py
"""
from ascgraph import ASCENDING, AerialGraph, coboundary, symmetrize, wheel, wheel_product
from ascgraph.cohomology import betti_row, enumerate_basis

# A wheel is the symmetrized oriented cycle. Odd lengths survive symmetrization.
for k in range(1, 6):
    w = wheel(k)
    print(f"wheel({k}): {len(w)} terms" if w else f"wheel({k}) = 0")

# Under the Ascending policy every vertex is (1,1) or (0,0), so the
# differential has nothing admissible to split into and wheels are closed.
print("d R3 =", coboundary(wheel(3), ASCENDING).to_json()["terms"])
print("R1 ^ R3 on", wheel_product([1, 3]).n, "vertices")

# Orbit representatives per slice, in both isolated-vertex modes.
for mode in ("include", "exclude"):
    print(f"\nmode={mode}")
    print(" n  basis  betti  reps")
    for n in range(1, 6):
        sl = enumerate_basis(n, ASCENDING, mode)
        row = betti_row(n, ASCENDING, mode)
        reps = " ".join(str(list(r.deb)) for r in sl.reps)
        print(f"{n:2d}  {row.dim_basis:5d}  {row.betti:5d}  {reps}")

# A graph with an isolated vertex beside a loop: a separate generator when included.
print("\nS(loop + point):", symmetrize(AerialGraph([(1,), ()])).to_json())
