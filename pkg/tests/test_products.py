import pytest

from qeta import products, qsym
from qeta.errors import ParseError, UsageError
from qeta.linear import QSymElement
from qeta.products import Stufufuffler, StufuffleStats
from qeta.scalars import q


def E(terms):
    out = QSymElement("Eta")
    for comp, c in terms:
        out = out + QSymElement("Eta", {comp: c})
    return out


def ab_c(a, b, c):
    return E([((a + b + c,), -q), ((a, b + c), q - 1), ((a + c, b), q - 1),
              ((c, a, b), 1), ((a, c, b), 1), ((a, b, c), 1)])


def ab_cd(a, b, c, d):
    return E([
        ((a, b, c, d), 1), ((a, c, b, d), 1), ((a, c, d, b), 1),
        ((c, a, b, d), 1), ((c, a, d, b), 1), ((c, d, a, b), 1),
        ((a, b + c + d), -q), ((c, a + b + d), -q), ((a + b + c, d), -q),
        ((a + c + d, b), -q), ((a + c, b + d), (q - 1) ** 2), ((a + b + c + d,), -q * (q - 1)),
        ((a + c, b, d), q - 1), ((a + c, d, b), q - 1), ((a, c, b + d), q - 1),
        ((c, a, b + d), q - 1), ((a, b + c, d), q - 1), ((c, a + d, b), q - 1),
    ])


def a_bc(a, b, c):
    return E([((b, c, a), 1), ((a + b + c,), -q), ((b, a + c), q - 1),
              ((b, a, c), 1), ((a + b, c), q - 1), ((a, b, c), 1)])


def test_counts():
    assert len(products.enumerate_stufufufflers(2, 2)) == 18
    assert products.enumerate_stufufufflers(1, 0) == [Stufufuffler((1,), ())]
    assert len(products.enumerate_stufufufflers(2, 1)) == 6
    assert products.enumerate_stufufufflers(0, 0) == [Stufufuffler((), ())]
    fs = products.enumerate_stufufufflers(2, 2)
    assert fs == sorted(fs, key=lambda f: (f.fP, f.fQ))


def test_stats():
    f = Stufufuffler((1, 1), (1, 2, 3))
    assert products.stats(f, (1, 2), (3, 4, 5)) == StufuffleStats((6, 4, 5), 1, 0)
    g = Stufufuffler((1, 2), (1, 1, 2))
    assert products.stats(g, (1, 2), (3, 4, 5)) == StufuffleStats((8, 7), 1, 1)
    h = Stufufuffler((1, 2), (3, 4, 5))
    assert products.stats(h, (1, 2), (3, 4, 5)) == StufuffleStats((1, 2, 3, 4, 5), 0, 0)
    with pytest.raises(UsageError):
        products.stats(f, (1,), (3, 4, 5))


def test_text_form():
    f = Stufufuffler((1, 1), (1, 2, 3))
    assert str(f) == "P:1,1|Q:1,2,3"
    assert Stufufuffler.parse("P:1,1|Q:1,2,3") == f
    assert Stufufuffler.parse("P:|Q:1") == Stufufuffler((), (1,))
    with pytest.raises(ParseError):
        Stufufuffler.parse("P:1,1|Q:3")
    with pytest.raises(ParseError):
        Stufufuffler.parse("1,1;1")


@pytest.mark.parametrize("method", ["v1", "v2", "v3"])
def test_worked_examples(method):
    rule = lambda d, e: products.eta_product(d, e, method)  # noqa: E731
    for vals in [(1, 2, 3), (1, 10, 100)]:
        assert rule(vals[:2], vals[2:]) == ab_c(*vals)
        assert rule(vals[:1], vals[1:]) == a_bc(*vals)
    for vals in [(1, 2, 3, 4), (1, 10, 100, 1000)]:
        assert rule(vals[:2], vals[2:]) == ab_cd(*vals)
    assert rule((), (2, 1)) == E([((2, 1), 1)])
    assert rule((1,), ()) == E([((1,), 1)])
    assert rule((1,), (2,)) == E([((3,), q - 1), ((1, 2), 1), ((2, 1), 1)])


def test_rules_agree_with_m_basis_product():
    for d, e in [((1, 2), (3,)), ((2,), (1, 1)), ((1, 1), (1, 1)), ((3,), ())]:
        via_m = qsym.m_product(qsym.eta_basis(d), qsym.eta_basis(e))
        assert qsym.from_eta(products.eta_product_v1(d, e)) == via_m


def test_shuffle_terms():
    assert products.shuffle_terms((1,), (1,)) == E([((1, 1), 2)])
    with pytest.raises(UsageError):
        products.eta_product((1,), (1,), "v4")
