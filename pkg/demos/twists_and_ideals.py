"""Twisted operators, the twisted real structure, and a small ideal-membership proof.

Run with ``python3 demos/twists_and_ideals.py``.
"""

from ncsphere.deform import (
    dump_expr,
    left_twist,
    monomial,
    monomials_in_box,
    numeric_confirmation,
    order_one_check,
    right_twist,
    star_left,
    twist_J_check,
)
from ncsphere.ideal import dump_witness, gr12_suite

u, v = monomial(1, 0), monomial(0, 1)
print("l(v) =", dump_expr(left_twist(v)))
print("r(u) =", dump_expr(right_twist(u)))
print("l(v) l(u) = l(v * u):", left_twist(v) * left_twist(u) == left_twist(star_left(v, u)))

uv = twist_J_check(monomial(1, 1))
print("twisted J conjugation of l(uv):", dump_expr(uv["lhs"]))
print("  matches phase λ^(+1):", uv["plus"], " matches phase λ^(-1):", uv["minus"])

mons = monomials_in_box(3)
print("order one holds on all", len(mons) ** 2, "pairs:", all(order_one_check(a, b) for a in mons for b in mons))
dev = numeric_confirmation()
print("clock-shift deviations:", {k: f"{x:.1e}" for k, x in dev.items()})

for name, (ok, witness) in gr12_suite(3).items():
    print(f"\n{name} in the ideal: {ok}")
    print(dump_witness(witness))
