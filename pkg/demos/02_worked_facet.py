"""Walk through one Horn facet of EqLR_3^3 and list every extremal ray
lying on it: the three type I rays built from swap data, and the type II
rays obtained as induction images of rays of the two smaller cones
LR_1^3 x EqLR_2^3.
"""

from lrcone.cones import HornDatum, format_point
from lrcone.rays import facet_rays, p2_hat, pi, type1_data, type1_ray

h = HornDatum(3, 3, 1, ((2,), (2,)), (3,))
print(f"facet: {h}  (lam^1_2 + lam^2_2 = nu_3)")

print("\ntype I rays, one per swap datum:")
for t in type1_data(h):
    print(f"  datum {t}: {format_point(type1_ray(h, t))}")

print("\nfull decomposition of the facet's ray set:")
dec = facet_rays(h, "EqLR")
print(f"  type II extremal images ({len(dec.type2_extremal)}):")
for p in dec.type2_extremal:
    print(f"    {format_point(p)}")
print(f"  zero images: {dec.type2_zero}")
print(f"  non-extremal images ({len(dec.type2_nonextremal)}):")
for p in dec.type2_nonextremal:
    print(f"    {format_point(p)}")

x = dec.type2_extremal[0]
a, b = pi(x, h)
print(f"\nprojection of {format_point(x)} to the product of subcones:")
print(f"  pi_1 -> {format_point(a)}   pi_2 -> {format_point(b)}")
print(f"  p2_hat fixes it: {p2_hat(x, h) == x}")
