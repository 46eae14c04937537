import json

import pytest

from gmmdist import ColoredGraph, Graph, SignedGraph, cycle_graph
from gmmdist.io import (FormatError, colored_graph_from_dict, dump_json,
                        graph_from_dict, graph_to_dict, load_graph,
                        load_signed, read_graph_text, read_signed_text,
                        save_graph, save_signed, signed_from_dict,
                        signed_to_dict, write_graph_text, write_signed_text)


def test_graph_text_round_trip():
    g = Graph(5, edges={(3, 1), (0, 4), (0, 1)})
    text = write_graph_text(g)
    assert text.splitlines()[0] == "5 3"
    assert read_graph_text(text) == g
    assert write_graph_text(read_graph_text(text)) == text


def test_signed_text_round_trip():
    d = SignedGraph(4, pos={(0, 1), (2, 3)}, neg={(1, 2)})
    text = write_signed_text(d)
    assert text.splitlines()[0] == "4 2 1"
    assert read_signed_text(text) == d
    assert write_signed_text(read_signed_text(text)) == text


def test_graph_json_round_trip():
    g = Graph(4, edges={(0, 2), (1, 3)})
    d = graph_to_dict(g)
    assert graph_from_dict(json.loads(dump_json(d))) == g


def test_signed_json_round_trip():
    d = SignedGraph(3, pos={(0, 1)}, neg={(0, 2)})
    assert signed_from_dict(json.loads(dump_json(signed_to_dict(d)))) == d


def test_colored_json():
    cg = ColoredGraph(Graph(3, edges={(0, 1)}), (1, 2, 1))
    d = graph_to_dict(cg.graph, cg.colors)
    back = colored_graph_from_dict(d)
    assert back == cg
    with pytest.raises(FormatError):
        colored_graph_from_dict(graph_to_dict(cg.graph))


def test_header_count_enforced():
    with pytest.raises(FormatError):
        read_graph_text("2 2\n0 1\n")
    with pytest.raises(FormatError):
        read_signed_text("2 1 0\n")
    with pytest.raises(FormatError):
        read_signed_text("2 1 0\n* 0 1\n")


def test_file_dispatch(tmp_path):
    g = cycle_graph(5)
    save_graph(tmp_path / "g.g", g)
    save_graph(tmp_path / "g.json", g)
    assert load_graph(tmp_path / "g.g") == g
    assert load_graph(tmp_path / "g.json") == g
    d = SignedGraph(3, pos={(0, 1)})
    save_signed(tmp_path / "d.sg", d)
    save_signed(tmp_path / "d.json", d)
    assert load_signed(tmp_path / "d.sg") == d
    assert load_signed(tmp_path / "d.json") == d
