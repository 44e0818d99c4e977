"""
Rota-Baxter operators on the Sweedler algebra
==============================================

"""

from rbx import rb_from_element, sweedler, sweedler_family_element, derive_tridendriform, check_tridendriform

# the four-dimensional Hopf algebra with x^2 = 1, y^2 = 0, yx = -xy
H = sweedler()
A = H.algebra
print(A.basis)

# trace element from the left regular traces of the dual basis
x_H = H.trace_element()
print("x_H =", x_H, " eps(x_H) =", H.counit(x_H))
print("x_H^2 == 4 x_H:", x_H * x_H == 4 * x_H)

# one-dimensional spaces of left and right integrals
print("left:", *H.integrals("left"), " right:", *H.integrals("right"))

# a three-parameter family of quasi-idempotents and their operators
for mu in [(1, 0, 0), (1, 2, 3), (0, 1, 1)]:
    xi = sweedler_family_element(*mu)
    P = rb_from_element(A, xi)
    print(mu, "weight", P.weight)
    for label, b in zip(A.basis, A.gens()):
        print("   P(%s) = %s" % (label, P(b)))

# the tridendriform structure induced by x_H
T = derive_tridendriform(A, x_H)
print([r.passed for r in check_tridendriform(T, budget=None)])
