"""Enumerate the Horn inequalities that cut out the cone of eigenvalue
triples (lam^1, lam^2; nu) with eigenvalues of A + B prescribed by nu.

Each inequality is indexed by subsets I_1, I_2, K of [r] of common size d
whose associated Littlewood-Richardson coefficient equals 1.
"""

from lrcone.cones import all_horn_data, enumerate_horn, horn_slack, parse_point

for r in (2, 3, 4):
    total = sum(len(enumerate_horn(r, 3, d)) for d in range(1, r))
    print(f"r={r}: {total} Horn inequalities")

print("\nAll Horn data for r=3, d=1:")
for h in enumerate_horn(3, 3, 1):
    print(f"  {h}")

x = parse_point("2,1,0;1,1,0;3,2,0")
print(f"\nslack of each r=3 inequality at {x}:")
for h in all_horn_data(3, 3):
    print(f"  {h}: {horn_slack(x, h)}")
