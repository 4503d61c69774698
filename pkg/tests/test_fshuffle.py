import pytest

from qeta import fshuffle, qsym
from qeta.errors import UsageError
from qeta.fshuffle import SharpParams, word
from qeta.linear import FreeWordElement
from qeta.scalars import q

A = q + 5  # a generic-looking value keeps a visible in the output
P = SharpParams(A, -q)


def X(terms):
    return FreeWordElement("x", terms)


def test_zeta():
    assert fshuffle.zeta(3, word((2, 1))) == X({(5, 1): 1})
    assert fshuffle.zeta(4, word(())) == X({})
    assert fshuffle.zeta(1, word((1, 1, 1))) == X({(2, 1, 1): 1})


def test_sharp_small():
    assert fshuffle.sharp(word((1,)), word((1,)), P) == X({(1, 1): 2, (2,): A})
    assert fshuffle.sharp(word(()), word((2, 1)), P) == word((2, 1))
    assert fshuffle.sharp(word((1,)), word((2,)), P) == X({(1, 2): 1, (2, 1): 1, (3,): A})


def test_sharp_explicit():
    assert fshuffle.sharp_explicit((1,), (1,), P) == X({(1, 1): 2, (2,): A})
    assert fshuffle.sharp_explicit((), (3, 1), P) == word((3, 1))
    for d, e in [((1, 2), (3,)), ((1, 1), (2, 1)), ((2,), (1, 1, 1))]:
        assert fshuffle.sharp(word(d), word(e), P) == fshuffle.sharp_explicit(d, e, P)


def test_deconcat_and_counit():
    t = fshuffle.deconcat(word((2, 1)))
    assert t.support() == [((), (2, 1)), ((2,), (1,)), ((2, 1), ())]
    assert fshuffle.deconcat(word(())).support() == [((), ())]
    assert fshuffle.counit(word((3,))) == 0
    assert fshuffle.counit(word(())) == 1


def test_antipode():
    assert fshuffle.antipode_f((1,), P) == X({(1,): -1})
    assert fshuffle.antipode_f((), P) == word(())
    assert fshuffle.antipode_f((1, 1), P) == X({(1, 1): 1, (2,): A})
    for a in [(1, 2), (2, 1, 1), (1, 1, 1)]:
        assert fshuffle.antipode_f(a, P) == fshuffle.antipode_recursive(a, P)


def test_eta_morphism():
    assert fshuffle.eta_morphism(word((1,)), 1) == qsym.eta_basis((1,))
    assert fshuffle.eta_morphism(word(()), 1) == 1
    p = SharpParams.for_eta(1)
    lhs = fshuffle.eta_morphism(fshuffle.sharp(word((1,)), word((1,)), p), 1)
    rhs = qsym.m_product(qsym.eta_basis((1,)), qsym.eta_basis((1,)))
    assert lhs == rhs
    assert qsym.to_eta(lhs) == qsym.element("Eta", (2,)).scale(q - 1) + qsym.element(
        "Eta", (1, 1)).scale(2)


def test_eta_morphism_parameter_mismatch():
    f = fshuffle.sharp(word((1,)), word((1,)), SharpParams.for_eta(1))
    with pytest.raises(UsageError):
        fshuffle.eta_morphism(f, 2)
    with pytest.raises(UsageError):
        fshuffle.eta_morphism(word((1,)), q)
    with pytest.raises(UsageError):
        fshuffle.eta_morphism(word((1,)), 1, params=P)


def test_operator_product_uses_params():
    p = SharpParams.for_eta(-1)
    f = word((1,), p)
    assert f * word((2,)) == fshuffle.sharp(word((1,)), word((2,)), p)
    with pytest.raises(UsageError):
        word((1,)) * word((1,))
