"""Optimal Z-complementary code sets with non-power-of-two length.

Extending a base function with a prime p produces p times as many codes
of length p*2**m. The set meets the size bound K = M * floor(N/Z) with
equality, so no larger set can share this zone width.
"""
from zccs import (
    build_zccs,
    build_zccs_by_concatenation,
    check_optimal,
    check_zccs,
    max_zcz,
    parse_gbf,
    verify_code_set,
)

# 12 codes x 4 sequences x length 24, entries are 6th roots of unity.
f = parse_gbf("x1*x2", m=3, q=2)
cs = build_zccs(f, deleted=[0], gamma=2, p=3, s=2)
print("params:", cs.params)
print("labels:", [(c.label.family, c.label.t, c.label.lam) for c in cs.codes])

ok, witness = check_zccs(cs, 8)
print("\nzone holds at Z=8:", ok)
print("optimal (K = M*floor(N/Z)):", check_optimal(cs, 8))
print("exact maximal zone width:", max_zcz(cs))

# Verification just past the zone shows where the first violation sits.
ok9, witness9 = check_zccs(cs, 9)
print("zone holds at Z=9:", ok9, "first violation:", witness9)

# The same set can be assembled by concatenating p phase-rotated copies
# of the base codes; the exponent data matches bit for bit.
concat = build_zccs_by_concatenation(f, deleted=[0], gamma=2, p=3)
print("\nconcatenation route identical:", cs == concat)

# Power-of-two lengths fall out of p = 2 with binary entries for q = 2.
binary = build_zccs(parse_gbf("x0*x1", m=2, q=2), deleted=[], p=2)
print("\np=2 case:", binary.params)
report = verify_code_set(binary, compute_max=True)
print("verified:", report.is_zccs_at_claimed_z, "optimal:", report.optimal,
      "max zone:", report.max_zcz)
