import pytest
from hypothesis import given, strategies as st

from drgkit import dimacs
from drgkit.dimacs import DimacsError
from drgkit.graph import Graph

from conftest import graph


def test_writer_format():
    g = Graph.from_edges(3, [(2, 1), (0, 1)])
    assert dimacs.dumps(g, ["tiny"]) == "c tiny\np edge 3 2\ne 1 2\ne 2 3\n"


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_round_trip(case):
    n, pairs = case
    g = Graph.from_edges(n, [(a, b) for a, b in pairs if a != b])
    text = dimacs.dumps(g)
    assert dimacs.loads(text) == g
    assert dimacs.dumps(dimacs.loads(text)) == text


def test_catalog_round_trip(tmp_path):
    g = graph("coxeter")
    path = tmp_path / "coxeter.dimacs"
    dimacs.write(g, path, ["coxeter"])
    back = dimacs.read(path)
    assert back == g and back.name == "coxeter"


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge 3 1\ne 1 1\n", 2),
        ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
        ("p edge 3 1\ne 1 4\n", 2),
        ("e 1 2\n", 1),
        ("p edge 3 1\np edge 3 1\n", 2),
        ("c ok\np edge 2 1\nx 1 2\n", 3),
    ],
)
def test_rejects_bad_input_with_line(text, line):
    with pytest.raises(DimacsError) as info:
        dimacs.loads(text)
    assert info.value.line_no == line
    assert f"line {line}" in str(info.value)


def test_rejects_count_mismatch_and_missing_header():
    with pytest.raises(DimacsError):
        dimacs.loads("p edge 3 2\ne 1 2\n")
    with pytest.raises(DimacsError):
        dimacs.loads("c nothing\n")
