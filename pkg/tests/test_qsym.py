import pytest

from qeta import qsym
from qeta.errors import DomainError, PoleError, UsageError
from qeta.linear import QSymElement
from qeta.scalars import q, r


def M(*terms):
    return QSymElement("M", dict(terms))


def E(*terms):
    return QSymElement("Eta", dict(terms))


def test_basis_constructors():
    assert qsym.eta_basis((1, 3, 1)) == M(((5,), r), ((1, 4), r ** 2), ((4, 1), r ** 2),
                                          ((1, 3, 1), r ** 3))
    assert qsym.eta_basis(()) == 1
    assert qsym.l_basis((1, 1)) == M(((1, 1), 1))
    assert qsym.l_basis((2,)) == M(((2,), 1), ((1, 1), 1))


def test_zero_coefficients_are_dropped():
    f = M(((2,), q), ((1, 1), 1)) - M(((2,), q))
    assert f.support() == [(1, 1)]
    assert not (f - f)


def test_m_product():
    assert qsym.m_product(qsym.m_basis((1,)), qsym.m_basis((1,))) == M(((1, 1), 2), ((2,), 1))
    assert qsym.m_product(qsym.m_basis((2,)), qsym.m_basis((1,))) == M(
        ((2, 1), 1), ((1, 2), 1), ((3,), 1))
    f = qsym.eta_basis((2, 1))
    assert qsym.m_product(qsym.m_basis(()), f) == f
    with pytest.raises(UsageError):
        qsym.m_product(qsym.element("Eta", (1,)), qsym.m_basis((1,)))


def test_to_eta_and_back():
    assert qsym.to_eta(qsym.m_basis((2,))) == E(((2,), 1 / r))
    assert qsym.to_eta(qsym.m_basis((1, 1))) == E(((1, 1), 1 / r ** 2), ((2,), -1 / r ** 2))
    m = qsym.m_basis((1, 3, 1))
    assert qsym.from_eta(qsym.to_eta(m)) == m
    with pytest.raises(PoleError):
        qsym.to_eta(qsym.m_basis((1, 1))).specialize(-1)


def test_cross_basis_equality():
    assert qsym.element("Eta", (1, 3, 1)) == qsym.eta_basis((1, 3, 1))
    assert qsym.element("L", (2,)) == qsym.l_basis((2,))
    assert qsym.to_l(qsym.m_basis((2,))) == QSymElement("L", {(2,): 1, (1, 1): -1})


def test_eta_in_fundamental_basis():
    from qeta.linear import QSymElement as Q

    assert qsym.eta_to_l((1,)) == Q("L", {(1,): r})
    assert qsym.l_to_eta((2,)) == E(((2,), q), ((1, 1), 1))
    for a in [(2,), (1, 2), (2, 1, 1)]:
        assert qsym.to_m(qsym.eta_to_l(a)) == qsym.eta_basis(a)
    with pytest.raises(DomainError):
        qsym.eta_to_l(())
    with pytest.raises(DomainError):
        qsym.l_to_eta(())


def test_eta_to_l_at_q1_matches_m_expansion():
    at1 = qsym.to_m(qsym.eta_to_l((2,))).specialize(1)
    assert at1 == M(((2,), 2))


def test_coproducts():
    t = qsym.coproduct_m(qsym.m_basis((2, 1)))
    assert t.support() == [((), (2, 1)), ((2,), (1,)), ((2, 1), ())]
    assert qsym.coproduct_m(qsym.m_basis(())).support() == [((), ())]
    t = qsym.coproduct_eta((1, 2))
    assert t.basis == ("Eta", "Eta")
    assert t.support() == [((), (1, 2)), ((1,), (2,)), ((1, 2), ())]
    assert qsym.coproduct_eta((2, 1)).to(("M", "M")) == qsym.coproduct_m(qsym.eta_basis((2, 1)))
    assert qsym.counit(qsym.eta_basis(())) == 1
    assert qsym.counit(qsym.eta_basis((1,))) == 0


def test_antipode_m():
    assert qsym.antipode_m(qsym.m_basis((1,))) == M(((1,), -1))
    assert qsym.antipode_m(qsym.m_basis(())) == 1
    # the sign (-1)^len makes S(M_2) = -M_2, in line with S(eta_2) = -eta_2
    assert qsym.antipode_m(qsym.m_basis((2,))) == M(((2,), -1))
    assert qsym.antipode_m(qsym.m_basis((1, 1))) == M(((1, 1), 1), ((2,), 1))


def test_antipode_eta_formulas():
    assert qsym.antipode_eta_s2((1,)) == E(((1,), -1))
    assert qsym.antipode_eta_s2((2,)) == E(((2,), -1))
    assert qsym.antipode_eta_s2((1, 1)) == E(((1, 1), 1), ((2,), q - 1))
    assert qsym.antipode_eta_s((1,)) == M(((1,), -r))
    assert qsym.antipode_eta_s(()) == 1
    e = qsym.eta_basis((1, 3, 1))
    assert qsym.antipode_eta_s((1, 3, 1)) == qsym.antipode(e) == qsym.antipode_eta_s2((1, 3, 1))


def test_t_r_and_r_q():
    assert qsym.t_r(qsym.m_basis((1, 3, 1))) == M(((1, 3, 1), r ** 3))
    assert qsym.t_r(qsym.m_basis(())) == 1
    lhs = qsym.t_r(qsym.antipode_m(qsym.m_basis((1, 2))))
    assert lhs == qsym.eta_basis((2, 1))
    assert qsym.r_q(qsym.m_basis((2,))) == M(((1, 1), r ** 2))
    assert qsym.r_q(qsym.r_q(qsym.m_basis((2,)))) == M(((2,), r ** 3))
    assert qsym.r_q(qsym.l_basis((1, 1))) == qsym.eta_basis((2,)) == M(((2,), r))
    with pytest.raises(UsageError):
        qsym.t_r(qsym.element("Eta", (1,)))


def test_eta_support_in():
    from qeta.products import eta_product_v1

    odd = lambda x: x % 2 == 1  # noqa: E731
    even = lambda x: x % 2 == 0  # noqa: E731
    assert qsym.eta_support_in(eta_product_v1((3,), (1, 1)).specialize(1), odd)
    assert qsym.eta_support_in(eta_product_v1((2,), (2,)), even)
    assert not qsym.eta_support_in(eta_product_v1((1,), (1,)), lambda x: x == 1)
    with pytest.raises(DomainError):
        qsym.eta_support_in(qsym.eta_basis((4,)), odd, maxdeg=3)


def test_specialize_q0_gives_essential_functions():
    assert qsym.specialize(qsym.eta_basis((1, 2)), 0) == M(((3,), 1), ((1, 2), 1))


def test_display():
    assert str(qsym.element("Eta", (1,)).scale(-1)) == "-1 * eta[1]"
    assert str(QSymElement("M")) == "0"
