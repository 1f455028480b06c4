"""
Canonical forms in the quotient algebra
=======================================

Words in the shift T_z and the composition operator C (written in a small
expression grammar) normalize, modulo compact operators, to a unique
quintuple (w; f, g, h, k): a Toeplitz symbol plus four functions on
[0, s] filling the 2x2 matrix symbol.  The quintuple can be rewritten
back as a sum of composition operators with iterated symbols.
"""

from tcalgebra import (
    MoebiusMap,
    boundary_contact,
    composition_sum_pretty,
    normalize,
    parse,
    render,
    to_composition_sum,
)

phi = MoebiusMap(-1, -1, 0, 2)
contact = boundary_contact(phi)

for text in (
    "C*C",                    # the composition operator squares to a compact
    "C'*C",                   # |C|^2: the positive generator of the interval
    "C' - 2*S",               # the adjoint identity: C' = s S mod compacts
    "T{z}*C - C*T{z}",        # shift commutator: essentially nonzero here
    "T{z} + C + C'",
    "2*(C*S - S*C)",
):
    element = normalize(parse(text), contact)
    print(f"expression: {text}")
    print("  quintuple:")
    for line in render(element).splitlines():
        print("   ", line)
    try:
        print("  composition sum:", composition_sum_pretty(element))
        print("  grammar form:   ", to_composition_sum(element))
    except Exception as err:  # outside the generator ring
        print("  composition sum: n/a ->", err)
    print()

# The normal form is faithful: parsing the grammar form back and
# normalizing returns the identical quintuple.
b = normalize(parse("T{z}*C - C*T{z} + 0.5*C'*C"), contact)
round_trip = normalize(parse(to_composition_sum(b)), contact)
print("round trip exact:", round_trip.equals_exact(b))
