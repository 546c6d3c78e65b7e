from autonet import Network
from autonet.io import to_dot
from autonet.io.dot import arc_count
from autonet.io.plotting import save_transition_graph, verification_figure


def test_dot_single_coordinate_arcs(swap):
    text = to_dot(swap)
    assert text.startswith("digraph G {") and text.rstrip().endswith("}")
    assert '"01" -> "10" [dir=both];' not in text  # swapping both nodes is not a single-node arc
    assert '"01" -> "11";' in text and '"01" -> "00";' in text
    assert arc_count(swap) == 4


def test_dot_marks_unreachable_fixed_points(x3_negate):
    text = to_dot(x3_negate)
    assert '"001" [color=gray, fontcolor=gray];' in text
    assert '"011" [color=gray, fontcolor=gray];' in text
    assert '"000" [color' not in text


def test_dot_negation_is_double_headed():
    text = to_dot(Network.negation(2))
    assert '"00" -> "01" [dir=both];' in text and '"01" -> "00"' not in text
    assert "dir=none" not in text


def test_dot_full_arcs(x3_negate):
    lines = [l for l in to_dot(x3_negate, full_arcs=True).splitlines() if "->" in l]
    assert '  "000" -> "110";' in lines
    assert all("dir=" not in l for l in lines)


def test_plots_render(tmp_path, x3_negate):
    p = save_transition_graph(x3_negate, tmp_path / "g.png", title="example")
    assert p.read_bytes()[:4] == b"\x89PNG"
    q = save_transition_graph(Network.identity(3, 2), tmp_path / "t.svg")
    assert "<svg" in q.read_text()
    v = verification_figure(["a", "b"], [10, 0], [True, False], tmp_path / "v.png")
    assert v.stat().st_size > 0
