"""Walk one affine permutation of period 7 through every map in the package."""

from ratcat import abacus as ab
from ratcat import affine as af
from ratcat import dyck as dk
from ratcat import partition as pt

n, p = 7, 16
w = af.parse_window("[-2,15,-1,16,-14,10,4]")
print("omega        ", w)
print("inverse      ", af.inverse(w))
print("dominant:", af.is_dominant(w), " 16-stable:", af.is_p_stable(w, p), " length:", af.length(w))

print("\ninversion table")
print(af.inversion_table(w).to_text())
print("\nShi tableau for p = 16")
print(af.shi_tableau(w, p).to_text())

G = af.gamma(w)
kappa = ab.alpha_inv(G)
print("\ncore         ", kappa)
print("7-rows       ", pt.n_rows(kappa, n))
print("skew length  ", pt.skew_length(kappa, n, p))

x = dk.anderson_map(w, p)
print("\nDyck path    ", x)
print("north labels ", dk.north_labels(x))
print("area         ", dk.area(x), "(equals the number of parts of the core)")
print("zeta(x)      ", dk.zeta(x), " area", dk.area(dk.zeta(x)))
print("codinv tableau equals Shi tableau:", dk.codinv_tableau(x) == af.shi_tableau(w, p))
