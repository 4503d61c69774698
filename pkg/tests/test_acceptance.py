"""Acceptance gate: one test per criterion, exact arithmetic throughout.

Run with ``pytest tests/test_acceptance.py`` (a summary block lists one
PASS/FAIL line per criterion) or directly with ``python tests/test_acceptance.py``.
"""
import sys

from qeta import nsym, products, qsym, verify
from qeta.linear import NSymElement, QSymElement, tensor
from qeta.scalars import q, r

CRITERIA = {
    1: "worked examples",
    2: "basis theorem",
    3: "product-rule triangle",
    4: "coproduct",
    5: "antipodes",
    6: "duality",
    7: "generating series",
    8: "stufufuffle algebra",
    9: "R_q and T_r identities",
    10: "specialization and subalgebras",
    11: "composition combinatorics",
}


def _families(maxdeg, *names):
    table = {n: fn for fams in verify.FAMILIES.values() for n, fn in fams}
    results = [verify.run_family(n, table[n], maxdeg) for n in names]
    bad = [r.line() for r in results if not r.ok]
    assert not bad, "\n".join(bad)
    assert all(r.total > 0 for r in results)
    return results


def _eta(terms):
    out = QSymElement("Eta")
    for comp, c in terms:
        out = out + QSymElement("Eta", {comp: c})
    return out


def test_criterion_01_worked_examples():
    M = lambda a: qsym.m_basis(a)  # noqa: E731
    assert qsym.eta_basis((1, 3, 1)) == (M((5,)).scale(r) + M((1, 4)).scale(r ** 2)
                                         + M((4, 1)).scale(r ** 2) + M((1, 3, 1)).scale(r ** 3))
    H = lambda a: nsym.h_basis(a)  # noqa: E731
    assert nsym.eta_star((2,)) == H((2,)).scale(1 / r) - H((1, 1)).scale(1 / r ** 2)

    es = lambda *a: NSymElement("EtaStar", {a: 1})  # noqa: E731
    one = es()
    assert nsym.coproduct_eta_star_n(2) == (tensor(one, es(2)) + tensor(es(1), es(1)).scale(q - 1)
                                            + tensor(es(2), one))

    a, b, c, d = 1, 2, 3, 4
    ab_c = _eta([((a + b + c,), -q), ((a, b + c), q - 1), ((a + c, b), q - 1),
                 ((c, a, b), 1), ((a, c, b), 1), ((a, b, c), 1)])
    ab_cd = _eta([
        ((a, b, c, d), 1), ((a, c, b, d), 1), ((a, c, d, b), 1),
        ((c, a, b, d), 1), ((c, a, d, b), 1), ((c, d, a, b), 1),
        ((a, b + c + d), -q), ((c, a + b + d), -q), ((a + b + c, d), -q),
        ((a + c + d, b), -q), ((a + c, b + d), (q - 1) ** 2), ((a + b + c + d,), -q * (q - 1)),
        ((a + c, b, d), q - 1), ((a + c, d, b), q - 1), ((a, c, b + d), q - 1),
        ((c, a, b + d), q - 1), ((a, b + c, d), q - 1), ((c, a + d, b), q - 1),
    ])
    a_bc = _eta([((b, c, a), 1), ((a + b + c,), -q), ((b, a + c), q - 1),
                 ((b, a, c), 1), ((a + b, c), q - 1), ((a, b, c), 1)])
    two = _eta([((a + b,), q - 1), ((a, b), 1), ((b, a), 1)])
    for rule in (products.eta_product_v1, products.eta_product_v2, products.eta_product_v3):
        assert rule((a, b), (c,)) == ab_c
        assert rule((a, b), (c, d)) == ab_cd
        assert rule((a,), (b, c)) == a_bc
        assert rule((a,), (b,)) == two


def test_criterion_02_basis_theorem():
    _families(6, "bases.triangular", "bases.round_trip")


def test_criterion_03_product_rule_triangle():
    res = _families(6, "products.rules_v1_v2_v3", "products.oracle_eta", "products.oracle_m")
    assert res[0].total == 256


def test_criterion_04_coproduct():
    _families(6, "coproduct.eta_vs_m", "coproduct.tr_intertwine")


def test_criterion_05_antipodes():
    _families(6, "antipode.s2_vs_m", "antipode.s_vs_m", "antipode.involution",
              "antipode.hopf_axiom")


def test_criterion_06_duality():
    _families(6, "dual.gram_identity", "dual.multiplicative", "dual.coproduct_n",
              "dual.coproduct_alpha")


def test_criterion_07_generating_series():
    _families(6, "series.closed_form", "series.powers")


def test_criterion_08_stufufuffle_algebra():
    assert len(products.enumerate_stufufufflers(2, 1)) == 6
    assert len(products.enumerate_stufufufflers(2, 2)) == 18
    _families(5, "shuffle.algebra_axioms", "shuffle.explicit", "shuffle.eta_algebra_morphism",
              "shuffle.eta_coalgebra_morphism", "shuffle.antipode", "shuffle.hopf_axiom")


def test_criterion_09_rq_and_tr_identities():
    _families(6, "bases.rq", "bases.tr_antipode")


def test_criterion_10_specialization_and_subalgebras():
    _families(6, "bases.q0_essential", "subalg.odd_at_q1", "subalg.even_symbolic",
              "subalg.ge2_symbolic", "subalg.two_letters")


def test_criterion_11_composition_combinatorics():
    # maxdeg 6 covers sizes up to 8 in this suite
    _families(6, "compositions.bijection", "compositions.length", "compositions.involutions",
              "compositions.complement_length", "compositions.concat")


if __name__ == "__main__":
    failed = 0
    for num, label in CRITERIA.items():
        fn = next(v for k, v in globals().items() if k.startswith(f"test_criterion_{num:02d}_"))
        try:
            fn()
            status = "PASS"
        except AssertionError as exc:
            status, failed = f"FAIL ({str(exc).splitlines()[0] if str(exc) else 'assertion'})", failed + 1
        print(f"criterion {num:2d} {label:<32} {status}")
    sys.exit(1 if failed else 0)
