"""Print q,t-Catalan polynomials and check their symmetry."""

from math import gcd

from ratcat.verify import qt_catalan

for n in range(2, 6):
    for p in range(n + 1, 9):
        if gcd(n, p) == 1:
            poly = qt_catalan(n, p)
            print(f"C({n},{p}) at q=t=1: {poly.total():4d}  symmetric: {poly.is_symmetric()}")
print("\nC(3,5) =", qt_catalan(3, 5))
