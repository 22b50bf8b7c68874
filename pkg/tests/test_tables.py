from drgkit.catalog import build
from drgkit.tables import PRINTED_ALPHA, PRINTED_EXAMPLES, check_bounds_chain, section2_alpha, section2_examples
from drgkit.suites import catalog_drgs
from drgkit.exact import independence_number_exact

import pytest


@pytest.fixture(scope="module")
def examples():
    return section2_examples()


@pytest.fixture(scope="module")
def alpha_table():
    return section2_alpha()


def test_examples_rows_match(examples):
    assert examples.mismatches == 0
    labels = [r["graph"] for r in examples.rows]
    assert len(labels) == len(PRINTED_EXAMPLES) + 4 + 1


def test_examples_exact_cells(examples):
    rows = {r["graph"]: r for r in examples.rows}
    dod = next(r for name, r in rows.items() if name.startswith("dodecahedron"))
    assert dod["mc"] == 24
    cox = next(r for name, r in rows.items() if name.startswith("coxeter"))
    assert cox["mc"] == 36
    hs = next(r for name, r in rows.items() if name.startswith("hoffman"))
    assert isinstance(hs["mc"], str) and hs["mc"].endswith("*")


def test_alpha_table(alpha_table):
    assert alpha_table.unexplained == 0
    assert alpha_table.mismatches == 1
    alphas = [r["alpha"] for r in alpha_table.rows]
    assert alphas == [row[1] for row in PRINTED_ALPHA]
    dod = alpha_table.rows[0]
    assert {dod["alpha_inertia"], dod["alpha_hoffman"]} == {8, 11}
    assert dod["discrepancy"]


def test_render_marks_mismatch(alpha_table):
    text = alpha_table.render()
    assert "MISMATCH" in text and text.count("\n") >= len(alpha_table.rows) + 1


def test_bounds_chain_over_small_catalog():
    for g, _ in catalog_drgs():
        if g.v > 64:
            continue
        alpha = independence_number_exact(g).alpha
        assert check_bounds_chain(g, None, alpha) == [], g.name


def test_bounds_chain_reports_violation():
    g, _ = build("petersen")
    assert check_bounds_chain(g, 14, 5)
