"""Race the two inversion routes and watch coefficient growth.

The factorization route works almost entirely in integers and touches
fractions only through the 1/2 scalings; Gauss-Jordan drags full rationals
through every elimination step.  Both are exact, and their outputs are
asserted equal before any timing is reported.
"""
from recpascal.cli import bench

print(f"{'n':>4}  {'factorization':>16}  {'gauss-jordan':>14}  "
      f"{'bits (fact)':>12}  {'bits (gj)':>10}")
print("-" * 64)
for n in (4, 8, 16, 24, 32):
    result = bench(n)
    assert result["equal"], f"routes disagree at n={n}"
    fact = result["factorization"]
    gj = result["gauss_jordan"]
    print(f"{n:>4}  {fact['seconds']:>14.4f}s  {gj['seconds']:>12.4f}s  "
          f"{fact['max_numerator_bits']:>12}  {gj['max_numerator_bits']:>10}")

print("\nBit counts are the largest numerator seen anywhere in each route's")
print("intermediate matrices.  Timings are informational, never asserted.")
print("\nBenchmark demo passed.")
