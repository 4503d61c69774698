import pytest

from qeta import nsym, qsym
from qeta.compositions import compositions
from qeta.errors import DomainError, PoleError, UsageError
from qeta.linear import NSymElement, TensorElement, tensor
from qeta.nsym import NSymSeries
from qeta.scalars import q, r


def H(*terms):
    return NSymElement("H", dict(terms))


def test_h_product_is_concatenation():
    h2, h1 = nsym.h_basis((2,)), nsym.h_basis((1,))
    assert nsym.h_product(h2, h1) == H(((2, 1), 1))
    assert nsym.h_product(h1, h2) == H(((1, 2), 1))
    assert nsym.h_product(h1, h2) != nsym.h_product(h2, h1)
    assert nsym.h_product(nsym.h_basis(()), h2) == h2


def test_coproduct_h():
    assert nsym.coproduct_h(nsym.h_basis((2,))).support() == [((), (2,)), ((1,), (1,)), ((2,), ())]
    assert nsym.coproduct_h(nsym.h_basis(())).support() == [((), ())]
    d1 = nsym.coproduct_h(nsym.h_basis((1,)))
    assert nsym.coproduct_h(nsym.h_basis((1, 1))) == d1 * d1


def test_pairing():
    assert nsym.pairing(nsym.h_basis((2, 1)), qsym.m_basis((2, 1))) == 1
    assert nsym.pairing(nsym.h_basis((1, 1)), qsym.m_basis((2,))) == 0
    assert nsym.pairing(nsym.eta_star((2,)), qsym.eta_basis((1, 1))) == 0
    assert nsym.pairing(nsym.eta_star((2,)), qsym.eta_basis((2,))) == 1
    with pytest.raises(UsageError):
        nsym.pairing(qsym.m_basis((1,)), qsym.m_basis((1,)))


def test_eta_star_values():
    assert nsym.eta_star((2,)) == H(((2,), 1 / r), ((1, 1), -1 / r ** 2))
    assert nsym.eta_star(()) == 1
    assert nsym.eta_star((1,)) == H(((1,), 1 / r))
    assert nsym.eta_star((1, 1)) == H(((1, 1), 1 / r ** 2))
    with pytest.raises(PoleError):
        nsym.eta_star((2,)).specialize(-1)


def test_eta_star_conversion_round_trip():
    for n in range(5):
        for a in compositions(n):
            e = NSymElement("EtaStar", {a: 1})
            assert nsym.to_eta_star(nsym.to_h(e))._terms == e._terms


def test_multiplicativity():
    assert nsym.eta_star_multiplicativity_check((1,), (1,))
    assert nsym.eta_star_multiplicativity_check((), (2,))
    assert nsym.eta_star_multiplicativity_check((2,), (1,))


def test_coproduct_eta_star_n():
    es = lambda *a: NSymElement("EtaStar", {a: 1})  # noqa: E731
    one = NSymElement("EtaStar", {(): 1})
    expect2 = tensor(one, es(2)) + tensor(es(1), es(1)).scale(q - 1) + tensor(es(2), one)
    assert nsym.coproduct_eta_star_n(2) == expect2
    assert nsym.coproduct_eta_star_n(1) == tensor(one, es(1)) + tensor(es(1), one)
    expect3 = (tensor(one, es(3)) + tensor(es(1), es(2)).scale(q - 1)
               + tensor(es(1), es(1, 1)).scale(-q) + tensor(es(1, 1), es(1)).scale(-q)
               + tensor(es(2), es(1)).scale(q - 1) + tensor(es(3), one))
    assert nsym.coproduct_eta_star_n(3) == expect3
    with pytest.raises(DomainError):
        nsym.coproduct_eta_star_n(0)
    for n in range(1, 5):
        assert nsym.coproduct_eta_star_n(n) == nsym.coproduct_h(nsym.eta_star((n,)))


def test_coproduct_eta_star_alpha():
    d1 = nsym.coproduct_eta_star_n(1)
    assert nsym.coproduct_eta_star((1,)) == d1
    assert nsym.coproduct_eta_star((1, 1)) == d1 * d1
    assert nsym.coproduct_eta_star((2,)) == nsym.coproduct_eta_star_n(2)
    assert nsym.coproduct_eta_star((2, 1)) == nsym.coproduct_h(nsym.eta_star((2, 1)))


def test_series():
    G = nsym.series_g_closed_form(1)
    assert G.coeffs[1] == nsym.eta_star((1,)) == H(((1,), 1 / r))
    assert nsym.series_g(3) ** 0 == NSymSeries.constant(1, 3)
    G2 = nsym.series_g(2) ** 2
    assert G2.coeffs[2] == nsym.eta_star((1, 1))
    assert nsym.series_g_closed_form(4) == nsym.series_g(4)
    with pytest.raises(PoleError):
        (nsym.series_h(2) - 1).invert()
    with pytest.raises(UsageError):
        nsym.series_h(2) * nsym.series_h(3)


def test_tensor_equality_across_bases():
    t = nsym.coproduct_eta_star((2,))
    assert isinstance(t, TensorElement)
    assert t == t.to(("H", "H"))
