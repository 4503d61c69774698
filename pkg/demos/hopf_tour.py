# coding: utf-8

# # Coproduct, antipode and the dual basis

from qeta import nsym, qsym
from qeta.scalars import q


# ## Coproduct of eta

print(qsym.coproduct_eta((2, 1)))
print(qsym.coproduct_eta((2, 1)) == qsym.coproduct_m(qsym.eta_basis((2, 1))))


# ## Antipodes
#
# The closed form stays inside the eta basis.

s = qsym.antipode_eta_s2((1, 2))
print(s)
print(s.to("M") == qsym.antipode_m(qsym.eta_basis((1, 2))))


# ## The dual basis in NSym

g = nsym.eta_star((2,))
print(g)
print(nsym.pairing(nsym.element("EtaStar", (2, 1)), qsym.element("Eta", (2, 1))))
print(nsym.pairing(nsym.element("EtaStar", (2, 1)), qsym.element("Eta", (1, 2))))

print(nsym.coproduct_eta_star_n(2))


# ## Generating series
#
# G(t) = (H(t) - 1)(H(t) + q)^(-1), truncated at t^4.

G = nsym.series_g(4)
print(G == nsym.series_g_closed_form(4))
print((G ** 2) == nsym.series_eta_star_length(2, 4))
