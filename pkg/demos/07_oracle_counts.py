"""Brute-force LR coefficients and the three symmetric counts."""
from lrsym.oracle import enumerate_lr, lr_coefficient, verify_symmetries

lam, mu, nu = (4, 3, 2), (2, 1), (3, 2, 1)
for T in enumerate_lr(lam, mu, nu):
    print(T)
    print()
print("c =", lr_coefficient(lam, mu, nu))

rep = verify_symmetries(lam, mu, nu)
print(rep.to_json())
print("all counts equal and both bijections hit their targets:", rep.consistent)

for triple in [((5, 3, 2, 1), (3, 1), (4, 2, 1)), ((4, 4, 2), (2, 1), (3, 2, 2))]:
    r = verify_symmetries(*triple)
    print(triple, "->", r.c, r.conj_count, r.comm_count, r.diamond_count)
