import pytest

from qeta import oracle, qsym
from qeta.errors import TruncationError, UsageError, ValidationError
from qeta.linear import QSymElement
from qeta.oracle import TruncatedPolynomial
from qeta.scalars import r


def test_expand_monomial():
    p = oracle.expand(qsym.m_basis((2, 1)), 3, 3)
    assert p.terms == {((1, 2), (2, 1)): 1, ((1, 2), (3, 1)): 1, ((2, 2), (3, 1)): 1}
    assert oracle.expand(qsym.m_basis(()), 2, 2).terms == {(): 1}


def test_expand_eta():
    p = oracle.expand(qsym.element("Eta", (2,)), 2, 2)
    assert p.terms == {((1, 2),): r, ((2, 2),): r}
    for a in [(1, 3, 1), (2, 2), (1, 1, 1, 1)]:
        n = sum(a)
        assert oracle.expand(qsym.eta_basis(a), n, n) == oracle.expand_eta_direct(a, n, n)


def test_truncation_error():
    with pytest.raises(TruncationError):
        oracle.expand(qsym.m_basis((3,)), 3, 2)


def test_poly_product():
    x1 = TruncatedPolynomial(2, 2, {((1, 1),): 1})
    assert oracle.poly_product(x1, x1).terms == {((1, 2),): 1}
    p = oracle.expand(qsym.m_basis((1,)), 2, 2)
    sq = oracle.poly_product(p, p)
    assert sq.terms == {((1, 2),): 1, ((1, 1), (2, 1)): 2, ((2, 2),): 1}
    assert oracle.poly_product(p, oracle.one(2, 2)) == p
    with pytest.raises(UsageError):
        oracle.poly_product(p, oracle.one(3, 2))


def test_extract_m():
    m = qsym.m_basis((2, 1))
    assert oracle.extract_m(oracle.expand(m, 3, 3)) == m
    p = oracle.expand(qsym.m_basis((1,)), 2, 2)
    assert oracle.extract_m(oracle.poly_product(p, p)) == QSymElement("M", {(1, 1): 2, (2,): 1})
    bad = TruncatedPolynomial(3, 2, {((1, 1), (2, 1)): 1, ((1, 1), (3, 1)): -1})
    with pytest.raises(ValidationError):
        oracle.extract_m(bad)
    partial = TruncatedPolynomial(3, 2, {((1, 1), (2, 1)): 1})
    with pytest.raises(ValidationError):
        oracle.extract_m(partial)


def test_text_dump():
    p = oracle.expand(qsym.element("Eta", (2,)), 2, 2)
    assert p.to_text() == "(q + 1) * x1^2\n(q + 1) * x2^2"
