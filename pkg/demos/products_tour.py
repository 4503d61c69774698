# coding: utf-8

# # Multiplying eta functions
#
# Three product rules are implemented.  They should always agree, and they
# should agree with multiplying polynomials by brute force.

from qeta import products, qsym, oracle

a, b, c = 1, 2, 3


# Rule one walks over the stufufufflers directly.

p1 = products.eta_product_v1((a, b), (c,))
print(p1)


# Rules two and three take different routes to the same answer.

print(p1 == products.eta_product_v2((a, b), (c,)) == products.eta_product_v3((a, b), (c,)))


# How many stufufufflers are there for lengths (2, 2)?

fs = products.enumerate_stufufufflers(2, 2)
print(len(fs))
for f in fs[:4]:
    print(f, products.stats(f, (1, 2), (3, 4)))


# Check against the quasi-shuffle product in M and against truncated polynomials.

lhs = p1.to("M")
print(lhs == qsym.m_product(qsym.eta_basis((a, b)), qsym.eta_basis((c,))))
print(oracle.oracle_product(qsym.eta_basis((a, b)), qsym.eta_basis((c,)), 6) == lhs)
