from __future__ import annotations

import json

import pytest

from cycdec.assembly import build_cocktail, build_complete
from cycdec.constructions import exclusively_alt, toy_three_part
from cycdec.fileformat import (
    CheckRecord,
    ParseError,
    Report,
    format_decomposition,
    host_header,
    load_decomposition,
    parse_decomposition,
    strip_timing,
    write_decomposition,
)
from cycdec.hostgraph import HostGraph
from cycdec.seeds import cocktail_seed


def test_host_headers():
    assert host_header(HostGraph.complete(9)) == "complete 9"
    assert host_header(HostGraph.cocktail(12)) == "cocktail 12"
    assert host_header(HostGraph.multipartite([2, 3])) == "multipartite 2 3"


@pytest.mark.parametrize(
    "decomposition",
    [
        toy_three_part(),
        exclusively_alt(6, [2] * 6),
        build_complete(49),
        build_cocktail(50),
    ],
    ids=["toy", "exclusively-alt", "complete-49", "cocktail-50"],
)
def test_round_trip(decomposition):
    text = format_decomposition(decomposition.host, decomposition.cycles)
    host, cycles = parse_decomposition(text)
    assert host == decomposition.host
    assert frozenset(cycles) == decomposition.cycles
    assert len(cycles) == decomposition.cycle_count


def test_output_is_sorted_and_canonical():
    text = format_decomposition(toy_three_part().host, toy_three_part().cycles)
    lines = text.splitlines()
    assert lines[0] == "multipartite 2 2 2"
    assert lines[1:] == sorted(lines[1:])
    assert text == "multipartite 2 2 2\n0 2 1 3\n0 4 1 5\n2 4 3 5\n"


def test_parse_tolerates_comments_blank_lines_and_order():
    text = """
# a three part toy
multipartite 2 2 2

2 4 3 5   # one cycle
3 1 5 0
0 4 1 5
"""
    host, cycles = parse_decomposition(text)
    assert host.part_sizes == (2, 2, 2)
    # body cycles come back canonicalised
    assert cycles[1] == (0, 3, 1, 5)


def test_parse_preserves_duplicates():
    text = "complete 9\n0 1 2 3\n1 0 3 2\n"
    _, cycles = parse_decomposition(text)
    assert cycles == [(0, 1, 2, 3), (0, 1, 2, 3)]


def test_parse_errors():
    for bad in (
        "",
        "# only a comment\n",
        "triangular 9\n",
        "complete\n",
        "complete nine\n",
        "complete 0\n",
        "cocktail 9\n",
        "multipartite\n",
        "complete 9\n0 1 2\n",
        "complete 9\n0 1 2 x\n",
        "complete 9\n0 1 2 2\n",
        "complete 9\n0 1 2 9\n",
    ):
        with pytest.raises(ParseError):
            parse_decomposition(bad)


def test_write_and_load(tmp_path):
    path = tmp_path / "toy.txt"
    write_decomposition(path, toy_three_part())
    assert load_decomposition(path) == toy_three_part()


def test_load_rejects_duplicates_and_non_host_edges(tmp_path):
    dup = tmp_path / "dup.txt"
    dup.write_text("complete 9\n0 1 2 3\n0 1 2 3\n")
    with pytest.raises(ValueError):
        load_decomposition(dup)
    bad_edge = tmp_path / "edge.txt"
    # 0-1 is the removed matching pair
    bad_edge.write_text("cocktail 10\n0 1 2 3\n")
    with pytest.raises(ValueError):
        load_decomposition(bad_edge)


def test_seed_files_round_trip(tmp_path):
    seed = cocktail_seed(3)
    text = format_decomposition(seed.host, seed.cycles)
    host, cycles = parse_decomposition(text)
    assert host == seed.host
    assert frozenset(cycles) == seed.cycles


def test_report_json_shape():
    report = Report(subject="x.txt", host="complete 49", cycle_count=294)
    report.add("exact_cover", CheckRecord(verdict=True))
    report.add(
        "uniquely_2colourable",
        CheckRecord(verdict=None, model_count=1, nodes_explored=42),
    )
    report.wall_time_s = 1.23456
    obj = json.loads(report.to_json())
    assert obj["schema"] == 1
    assert obj["wall_time_s"] == 1.235
    assert obj["checks"]["exact_cover"]["verdict"] is True
    assert obj["checks"]["uniquely_2colourable"]["verdict"] is None
    assert obj["checks"]["uniquely_2colourable"]["nodes_explored"] == 42
    assert not report.all_passed()


def test_report_timing_can_be_stripped():
    report = Report(subject="x", host="complete 9", cycle_count=9)
    report.add("exact_cover", CheckRecord(verdict=True))
    report.wall_time_s = 0.5
    with_timing = report.to_json()
    without = report.to_json(include_timing=False)
    assert "wall_time_s" in with_timing
    assert "wall_time_s" not in without
    assert strip_timing(with_timing) == without


def test_all_passed_requires_every_verdict_true():
    report = Report(subject="x", host="complete 9", cycle_count=9)
    report.add("a", CheckRecord(verdict=True))
    assert report.all_passed()
    report.add("b", CheckRecord(verdict=False))
    assert not report.all_passed()
