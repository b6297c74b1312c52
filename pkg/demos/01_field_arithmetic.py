"""Tour of the finite-field layer: exact arithmetic, squares, and the
characteristic-2 maps the constructions rely on."""

from kakeya import field_make

f5 = field_make(5)
print("F_5: 3 * 4 =", f5.mul(3, 4))
print("F_5 squares:", sorted(a for a in f5.elements() if f5.is_square(a)))

f4 = field_make(4)
print("\nF_4 modulus (coeffs of x^2 + x + 1):", f4.modulus)
print("F_4: x * x =", f4.mul(2, 2), " (rep 3 = x + 1)")

f8 = field_make(8)
print("\nF_8 square roots (unique in characteristic 2):")
for a in f8.elements():
    r = f8.sqrt_char2(a)
    assert f8.mul(r, r) == a
print("  sqrt is the inverse of squaring for all", f8.q, "elements")

print("\nArtin-Schreier images over F_8 (size q/2 whenever beta != 0):")
for beta in f8.elements():
    img = f8.artin_schreier_image(beta)
    print(f"  beta={beta}: {sorted(img)}  ({len(img)} elements)")
