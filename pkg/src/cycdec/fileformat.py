"""Plain-text interchange format for decompositions and structured reports.

A decomposition file is a header line naming the host graph followed by one
cycle per line.  The grammar is deliberately small enough to parse in any
language:

    complete <n>
    cocktail <n>
    multipartite <s1> <s2> ...

and each body line holds four distinct vertex ids.  Comments start with
``#`` and run to end of line; blank lines are ignored.  On output the body
is written in canonical cycle form, sorted lexicographically, so the same
construction serialises to identical bytes on every run and platform.

Parsing is two-staged on purpose.  ``parse_decomposition`` returns the host
together with the raw cycle list, preserving duplicates, so that a file
containing the same cycle twice can still be fed to the edge-cover checker
(which will then name the doubly covered edge).  ``load_decomposition``
additionally builds the validated :class:`~cycdec.hostgraph.Decomposition`,
which requires the cycles to be distinct and host-compatible.

Reports are JSON documents with a top-level integer ``schema`` version.
Wall-clock timing lives in a single optional field so that two reports for
the same input can be compared for equality after stripping it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .hostgraph import Cycle, Decomposition, HostGraph, canonical_cycle

REPORT_SCHEMA = 1


class ParseError(ValueError):
    """Raised when a decomposition file violates the grammar."""


def _strip_comment(line: str) -> str:
    head, _, _ = line.partition("#")
    return head.strip()


def host_header(host: HostGraph) -> str:
    if host.family == "complete":
        return f"complete {host.n}"
    if host.family == "cocktail":
        return f"cocktail {host.n}"
    sizes = " ".join(str(s) for s in host.part_sizes)
    return f"multipartite {sizes}"


def _parse_header(line: str, lineno: int) -> HostGraph:
    tokens = line.split()
    family, args = tokens[0], tokens[1:]
    try:
        if family == "complete":
            (n,) = args
            return HostGraph.complete(int(n))
        if family == "cocktail":
            (n,) = args
            return HostGraph.cocktail(int(n))
        if family == "multipartite":
            if not args:
                raise ParseError(f"line {lineno}: multipartite header needs part sizes")
            return HostGraph.multipartite([int(s) for s in args])
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad header: {exc}") from exc
    raise ParseError(f"line {lineno}: unknown host family {family!r}")


def parse_decomposition(text: str) -> tuple[HostGraph, list[Cycle]]:
    """Parse a decomposition file into its host and raw cycle list.

    Cycles are canonicalised but not deduplicated, and membership of each
    edge in the host is not checked here; both properties are the business
    of the cover checker, which can then report the offence precisely.
    """
    host: HostGraph | None = None
    cycles: list[Cycle] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if host is None:
            host = _parse_header(line, lineno)
            continue
        tokens = line.split()
        if len(tokens) != 4:
            raise ParseError(f"line {lineno}: expected 4 vertex ids, got {len(tokens)}")
        try:
            quad = tuple(int(t) for t in tokens)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex id") from exc
        try:
            cycle = canonical_cycle(quad)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        for v in cycle:
            try:
                host.check_vertex(v)
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
        cycles.append(cycle)
    if host is None:
        raise ParseError("empty file: missing host header")
    return host, cycles


def format_decomposition(host: HostGraph, cycles: list[Cycle] | frozenset[Cycle]) -> str:
    lines = [host_header(host)]
    lines.extend(" ".join(str(v) for v in cyc) for cyc in sorted(cycles))
    return "\n".join(lines) + "\n"


def write_decomposition(path: str | Path, decomposition: Decomposition) -> None:
    text = format_decomposition(decomposition.host, decomposition.cycles)
    Path(path).write_text(text, encoding="ascii")


def load_decomposition(path: str | Path) -> Decomposition:
    """Parse and fully validate a decomposition file.

    Raises :class:`ParseError` for grammar violations and ``ValueError``
    when the cycles are duplicated or use non-host edges.
    """
    host, cycles = parse_decomposition(Path(path).read_text(encoding="ascii"))
    if len(set(cycles)) != len(cycles):
        raise ValueError("file contains a duplicated cycle")
    return Decomposition(host=host, cycles=frozenset(cycles))


@dataclass
class CheckRecord:
    """Outcome of one named check.

    ``verdict`` is ``True`` for a certified pass, ``False`` for a certified
    failure, and ``None`` for indeterminate (the solver hit its node limit
    before the enumeration was complete).
    """

    verdict: bool | None
    detail: str | None = None
    model_count: int | None = None
    nodes_explored: int | None = None

    def to_obj(self) -> dict:
        return {
            "verdict": self.verdict,
            "detail": self.detail,
            "model_count": self.model_count,
            "nodes_explored": self.nodes_explored,
        }


@dataclass
class Report:
    """Structured verification report, JSON-serialisable.

    Only checks that were actually run appear in ``checks``; a missing key
    means the check was not requested, which is different from both a
    failure and an indeterminate outcome.
    """

    subject: str
    host: str
    cycle_count: int
    checks: dict[str, CheckRecord] = field(default_factory=dict)
    wall_time_s: float | None = None
    schema: int = REPORT_SCHEMA

    def add(self, name: str, record: CheckRecord) -> None:
        self.checks[name] = record

    def all_passed(self) -> bool:
        return all(rec.verdict is True for rec in self.checks.values())

    def to_obj(self, include_timing: bool = True) -> dict:
        obj: dict = {
            "schema": self.schema,
            "subject": self.subject,
            "host": self.host,
            "cycle_count": self.cycle_count,
            "checks": {name: rec.to_obj() for name, rec in sorted(self.checks.items())},
        }
        if include_timing and self.wall_time_s is not None:
            obj["wall_time_s"] = round(self.wall_time_s, 3)
        return obj

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_obj(include_timing), indent=2, sort_keys=True) + "\n"


def strip_timing(report_json: str) -> str:
    """Return the report with its timing field removed, for byte comparison."""
    obj = json.loads(report_json)
    obj.pop("wall_time_s", None)
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
