"""
Kazhdan-Lusztig generators in the Hecke algebra of S3
======================================================

"""

from rbx import check_tridendriform, derive_tridendriform, hecke_algebra, kl_generator, rb_from_element

H = hecke_algebra("A:2")
v = H.ring.generator()
W = H.coxeter

# C_s = v^-1 T_s - v satisfies C_s^2 = -(v + v^-1) C_s
cs = kl_generator(H, "s1")
print("C_s   =", cs)
print("C_s^2 =", cs * cs)

P = rb_from_element(H, cs)
print("weight", P.weight)

# P(T_w) depends on whether s lengthens w
for w in range(W.order):
    print("  P(%s) = %s" % (H.basis[w], P(H.T(w))))

# the weight is not a unit in Z[v, v^-1], so the structure lives over Q(v)
T = derive_tridendriform(H, cs)
print("lifted:", T.lifted, [r.passed for r in check_tridendriform(T)])
