# Checking the bases against the reflection representation.
#
# Over Q(phi) the generators act by exact matrices, so group elements can be
# hashed and counted.  A correct basis gives a bijection between standard
# words and matrices that respects multiplication.

from gsbasis import (GoldenScalar, PHI, build_rep, complete, count_standard, enumerate_group,
                     preset, preset_presentation, verify_homomorphism, verify_relation)
from gsbasis.relations import catalog

print("phi^2 =", PHI * PHI)
print("1/phi =", 1 / PHI)
print("norm(2 + 3 phi) =", GoldenScalar(2, 3).norm())

for name in ("H2", "H3", "H4"):
    M, _, _ = preset(name)
    rep = build_rep(M)
    S = complete(preset_presentation(name)).system
    order = enumerate_group(rep).order
    rels = catalog(name)
    ok = sum(verify_relation(lhs, rhs, rep) for _, lhs, rhs in rels)
    samples = None if order <= 120 else 20000
    report = verify_homomorphism(S, rep, samples=samples, seed=7)
    print(f"{name}: order {order}, standard {count_standard(S)}, "
          f"relations {ok}/{len(rels)}, products {report.pairs_checked} "
          f"{'ok' if report.passed else 'FAILED'}")

rep = build_rep(preset("H2")[0])
print("sigma_1 for H2:")
print(rep.generators[0].approx())
