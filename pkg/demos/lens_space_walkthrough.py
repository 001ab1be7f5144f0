"""
A lens space where the class group obstructs bounding
======================================================

Surgery with framing 5 on one unknot produces L(5,1), the simplest
manifold with nontrivial first homology. A knot passing once through the
handle represents a generator of Z/5, and the failure of small divisors
to bound is the topological face of a nontrivial class group.
"""

from fractions import Fraction

from idelink import (
    Divisor,
    DivisorNotPrincipal,
    complement_homology,
    delta_from_divisor,
    load_and_validate,
    preferred_longitude,
    presentation_from_dict,
    principal_lattice_basis,
)

lens = load_and_validate(
    presentation_from_dict(
        {
            "surgery": {"components": ["L1"], "matrix": [[5]]},
            "link": {"components": ["K"], "lk_with_surgery": [[1]], "lk_mutual": [[0]]},
        }
    )
)

print("H1(M) invariant factors:", lens.h1.invariant_factors)
print("order of [K] in H1(M):", lens.knot_order("K"))

# The preferred longitude is the peripheral class killed in the knot
# complement. Here it is mu + 5*l0: not a basis vector of the boundary
# torus, and its index in the kernel direction equals the knot order.
ld = preferred_longitude(lens, "K")
print("preferred longitude (meridian, longitude) =",
      (ld.lambda_class.meridian, ld.lambda_class.longitude))
print("index:", ld.index, "| part of a peripheral basis:", ld.is_basis)

# Divisors on K bound exactly when their degree is divisible by 5.
comp = complement_homology(lens)
for degree in (1, 2, 5, -10):
    try:
        idele = delta_from_divisor(comp, Divisor.of({"K": degree}))
        print(f"{degree}*K bounds: boundary idele {idele.to_dict()}")
    except DivisorNotPrincipal:
        print(f"{degree}*K does not bound (class {degree % 5} mod 5)")

print("principal lattice basis:",
      [b.to_dict() for b in principal_lattice_basis(comp)])

# Rational linking numbers pick up the 1/5 from the surgery: two parallel
# knots through the handle link each other with lk = -1/5.
two = load_and_validate(
    presentation_from_dict(
        {
            "surgery": {"components": ["L1"], "matrix": [[5]]},
            "link": {
                "components": ["J", "K"],
                "lk_with_surgery": [[1], [1]],
                "lk_mutual": [[0, 0], [0, 0]],
            },
        }
    )
)
lk = two.linking_number("J", "K")
assert lk == Fraction(-1, 5)
print("lk_M(J, K) =", lk)
