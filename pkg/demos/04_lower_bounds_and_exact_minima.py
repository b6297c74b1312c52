"""Certified lower bounds vs exact minima vs constructions in the plane."""

from kakeya import best_m, construct_variant, field_make, lemma_bound, min_kakeya

print("q   lemma bound   exact minimum   construction")
for q in (2, 3, 4, 5):
    field = field_make(q)
    _, rep = best_m(2, q, 4)
    size, witness = min_kakeya(field)
    variant = "even" if field.p == 2 else "odd"
    upper = construct_variant(field, 2, variant).size
    print(f"{q}   {rep.bound_ceiling:11d}   {size:13d}   {upper:12d}")

print("\nThe n=3, m=2 instance beats the (1/6) q^3 rate at every odd q:")
for q in (3, 5, 7, 11, 101):
    rep = lemma_bound(3, q, 2)
    print(f"  q={q:3d}: bound = {rep.N}/{rep.denom} = {float(rep.bound):10.2f}"
          f"   vs 5/24 q^3 = {5 * q**3 / 24:10.2f}")

print("\nScanning m for the best certificate at fixed (n, q):")
for q in (5, 31):
    for n in (2, 3, 4):
        m, rep = best_m(n, q, 8)
        print(f"  n={n} q={q:2d}: best m = {m}, bound ceiling = {rep.bound_ceiling}")
