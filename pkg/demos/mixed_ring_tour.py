"""A walk through the mixed Witt ring of a quaternion algebra.

Run with: python3 demos/mixed_ring_tour.py
"""

from fractions import Fraction

from quatwitt.hermitian import AntiHermForm, hyperbolicity_certificate
from quatwitt.invariants import lambda_all, n_q_mixed
from quatwitt.mixed import mixed, mixed_equal, twisted_trace_form
from quatwitt.quadforms import qf, witt_class
from quatwitt.quaternions import QuatAlgebra


def main():
    A = QuatAlgebra(-1, -1)   # Hamilton quaternions over Q
    i, j, ij = A.i(), A.j(), A.ij()

    print("== odd times odd ==")
    print("An odd class <z1> times <z2> lands in the even part; its value")
    print("is the Witt class of the twisted involution trace form.")
    z1, z2 = i + j, j + ij.scale(Fraction(2))
    q = twisted_trace_form(z1, z2)
    print(f"  <{z1}> * <{z2}> = {witt_class(q)}")
    print(f"  <i> * <j> = {witt_class(twisted_trace_form(i, j))}"
          "   (zero: Trd(ij) = 0)")

    print()
    print("== lambda operations ==")
    h = AntiHermForm((i, i + j), A)
    print(f"lambda powers of {h}:")
    for d, lam in enumerate(lambda_all(h)):
        print(f"  lambda^{d} = {lam}")
    print("The top power of a rank-r form is the even class of its")
    print("reduced-norm determinant.")

    print()
    print("== the n_Q relation ==")
    print("n_Q <z> is always hyperbolic when the algebra is division:")
    z = i + j + ij
    nq = AntiHermForm(tuple(z.scale(c) for c in (1, 1, 1, 1)), A)
    cert = hyperbolicity_certificate(nq, bound=8)
    print(f"  certificate for n_Q<{z}>: {cert.status}")

    print()
    print("== equality decisions ==")
    x = mixed(A, odd_entries=(z,))
    y = mixed(A, odd_entries=(z.scale(Fraction(9, 4)),))
    print(f"  <z> vs <(9/4) z>: {mixed_equal(x, y)}   (square scaling)")
    print(f"  <z> vs n_Q: {mixed_equal(x, n_q_mixed(A))}")
    print(f"  <1> vs <2>: "
          f"{mixed_equal(mixed(A, even=witt_class(qf([1]))), mixed(A, even=witt_class(qf([2]))))}")


if __name__ == "__main__":
    main()
