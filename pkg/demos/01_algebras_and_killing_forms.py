"""Build compact Lie algebras and inspect their Killing forms.

Every algebra here is presented by its structure constants.  The Killing
form decides everything structural we need: its signature detects compact
type, its rank detects semi-simplicity, and its kernel is the center.
"""

import numpy as np

import liecurv as lc

# su(2) from the skew-Hermitian Pauli triple: [E_1, E_2] = 2 E_3 cyclically.
su2 = lc.build_su(2)
print("su(2) bracket [e_0, e_1] =", su2.bracket(np.eye(3)[0], np.eye(3)[1]))

kd = lc.killing(su2)
print("Killing form:\n", kd.K)
print("signature (neg, zero, pos):", kd.signature)
print("semisimple:", kd.semisimple, "| center dim:", kd.center_dim)

# so(5) is the largest built-in exercised throughout; structurally it is
# just another compact simple algebra.
so5 = lc.build_so(5)
kd5 = lc.killing(so5)
print("\nso(5): dim", so5.dim, "| signature", kd5.signature,
      "| jacobi defect", lc.jacobi_defect(so5))

# Direct sums keep the Killing form block diagonal.  An abelian summand
# contributes a kernel block: the center.
u2_like = lc.direct_sum(su2, lc.abelian(1))
kdu = lc.killing(u2_like)
print("\nsu(2) + R: semisimple", kdu.semisimple, "| center dim", kdu.center_dim)

# Algebras round-trip through a plain JSON structure-constant format, so
# anything (including exceptional algebras) can be supplied from a file.
as_dict = lc.algebra_to_dict(su2)
print("\nfile form of su(2):", as_dict)
print("round trip ok:", np.allclose(lc.algebra_from_dict(as_dict).c, su2.c))
