# coding: utf-8

# # Words and the sharp product
#
# The free algebra on letters x_1, x_2, ... with a two-parameter product.
# With a = q - 1, b = -q it models multiplication of eta functions.

from qeta import fshuffle
from qeta.scalars import q

P = fshuffle.SharpParams(q - 1, -q)
x = lambda *w: fshuffle.word(w, P)  # noqa: E731

prod = fshuffle.sharp(x(1), x(2, 3), P)
print(prod)
print(prod == fshuffle.sharp_explicit((1,), (2, 3), P))


# Other parameters give other algebras.  a = b = 0 is the plain shuffle.

P0 = fshuffle.SharpParams(0, 0)
print(fshuffle.sharp(fshuffle.word((1,), P0), fshuffle.word((2,), P0), P0))


# Closed-form antipode against the recursive one.

print(fshuffle.antipode_f((1, 2), P) == fshuffle.antipode_recursive((1, 2), P))


# Send words to eta functions.  The product goes along for the ride.

lhs = fshuffle.eta_morphism(prod)
rhs = fshuffle.eta_morphism(x(1)) * fshuffle.eta_morphism(x(2, 3))
print(lhs == rhs)
