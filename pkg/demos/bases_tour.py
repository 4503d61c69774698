# coding: utf-8

# # The eta basis of QSym
#
# Everything here is exact.  Coefficients live in Q(q), so nothing is ever rounded.

import qeta
from qeta import qsym, oracle
from qeta.scalars import q, r


# ## Expanding a basis element
#
# eta_alpha is a sum over the M_beta whose descent set sits inside D(alpha),
# weighted by r = q + 1 raised to the length of beta.

e = qsym.eta_basis((1, 3, 1))
print(e)


# The same element tagged in the Eta basis converts back and forth without loss.

f = qsym.element("Eta", (1, 3, 1)) + qsym.element("Eta", (2,)).scale(q)
print(f.to("M"))
print(f.to("M").to("Eta") == f)


# ## Against the fundamental basis

print(qsym.eta_to_l((2, 1)))


# ## A sanity check with actual polynomials
#
# Five variables, degree 5.  The oracle expands M_beta monomial by monomial.

poly = oracle.expand(e)
print(len(poly.terms), "monomials")
print(oracle.extract_m(poly) == e)


# ## Specializing q
#
# At q = 0 every coefficient becomes 1.

print(qsym.specialize(e, 0))
print(qeta.__version__)
