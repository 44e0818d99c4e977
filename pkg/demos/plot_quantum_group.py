"""
The small quantum group at a cube root of unity
================================================

"""

from rbx import check_dendriform, derive_dendriform, rb_from_element, uq_left_integral, uq_sl2_bar
from rbx.families import integral_times_e_closed_form

# 27-dimensional, built over Q(z3) and self-checked on construction
H = uq_sl2_bar(3)
print(H.dim, H.algebra.ring)

# the left integral is a sum over the group-like part
xi = uq_left_integral(H)
print("xi =", xi, " eps(xi) =", H.counit(xi))

# xi^2 = 0, so left multiplication by xi is a weight 0 operator
P = rb_from_element(H.algebra, xi)
print("weight", P.weight)
print("P(F) =", P(H.F), " P(K) =", P(H.K))

# the direct product xi E, next to the closed form for comparison
print("xi E        =", P(H.E))
print("closed form =", integral_times_e_closed_form(H))

# weight 0 gives a dendriform structure
D = derive_dendriform(H.algebra, P)
print([r.passed for r in check_dendriform(D)])
