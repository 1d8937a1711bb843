"""Reading and writing the TSPLIB file subset used by the evaluation harness.

Supported instance files are keyword/value headers (``NAME``, ``TYPE``,
``COMMENT``, ``DIMENSION``, ``EDGE_WEIGHT_TYPE``) followed by a
``NODE_COORD_SECTION`` of ``id x y`` records and an optional ``EOF``.
Only the coordinate norms EUC_2D, CEIL_2D and ATT are accepted; explicit
weight matrices (``EDGE_WEIGHT_SECTION``) and display data are rejected
because the evaluation works on unrounded point geometry only.

Tour files carry a ``TOUR_SECTION`` with 1-based vertex ids terminated by
``-1``. Reported optima and Held-Karp bounds are ingested from a small CSV
(`name,reported_opt,hk`) and never computed here.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import IO, Iterable

from .errors import TsplibFormatError, UnsupportedEdgeWeightError

SUPPORTED_EDGE_WEIGHT_TYPES = ("EUC_2D", "CEIL_2D", "ATT")

#: Section keywords that signal an unsupported instance flavour.
_REJECTED_SECTIONS = ("EDGE_WEIGHT_SECTION", "DISPLAY_DATA_SECTION")

_HEADER_KEYWORDS = ("NAME", "TYPE", "COMMENT", "DIMENSION", "EDGE_WEIGHT_TYPE")


@dataclass
class RawInstanceFile:
    """Parsed TSPLIB instance: header fields plus raw coordinate records."""

    name: str
    declared_type: str
    dimension: int
    edge_weight_type: str
    node_coords: list[tuple[int, float, float]]
    warnings: list[str] = field(default_factory=list)


@dataclass
class RawTourFile:
    """Parsed tour file: a validated permutation of 1..dimension."""

    name: str
    sequence: list[int]


@dataclass
class ReportedValues:
    """One row of externally reported values for an instance.

    ``reported_opt`` is the published integer optimum in the instance's
    native units; ``hk_bound`` is the ingested Held-Karp lower bound.
    Either may be absent.
    """

    instance_name: str
    reported_opt: float | None = None
    hk_bound: float | None = None


def _as_text(source: str | bytes | IO) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _split_keyword(line: str) -> tuple[str, str] | None:
    """Split ``KEYWORD : value`` / ``KEYWORD: value`` lines, else None."""
    if ":" not in line:
        return None
    key, value = line.split(":", 1)
    key = key.strip().upper()
    if not key or not key.replace("_", "").isalpha():
        return None
    return key, value.strip()


def _try_coord(line: str) -> tuple[int, float, float] | None:
    parts = line.split()
    if len(parts) < 3:
        return None
    try:
        return int(parts[0]), float(parts[1]), float(parts[2])
    except ValueError:
        return None


def parse_instance(source: str | bytes | IO) -> RawInstanceFile:
    """Parse a TSPLIB instance from text, bytes, or an open stream.

    Header keywords may appear in any order. Unknown keywords outside the
    supported set are skipped and recorded on ``warnings``. Raises
    :class:`TsplibFormatError` for structural violations and
    :class:`UnsupportedEdgeWeightError` for norms outside
    ``SUPPORTED_EDGE_WEIGHT_TYPES``.
    """
    text = _as_text(source)
    name = ""
    declared_type = ""
    dimension: int | None = None
    edge_weight_type: str | None = None
    coords: list[tuple[int, float, float]] = []
    warnings: list[str] = []
    in_coords = False

    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        upper = line.upper()
        if upper == "EOF":
            break
        for section in _REJECTED_SECTIONS:
            if upper.startswith(section):
                raise TsplibFormatError(
                    f"{section} is not supported; only coordinate instances "
                    f"of type {'/'.join(SUPPORTED_EDGE_WEIGHT_TYPES)} are accepted"
                )
        if upper.startswith("NODE_COORD_SECTION"):
            in_coords = True
            continue
        if in_coords:
            record = _try_coord(line)
            if record is not None:
                coords.append(record)
                continue
            in_coords = False  # fall through: the section ended
        kv = _split_keyword(line)
        if kv is None:
            raise TsplibFormatError(f"unparseable line: {line!r}")
        key, value = kv
        if key == "NAME":
            name = value
        elif key == "TYPE":
            declared_type = value
        elif key == "COMMENT":
            pass
        elif key == "DIMENSION":
            try:
                dimension = int(value)
            except ValueError as exc:
                raise TsplibFormatError(f"bad DIMENSION value {value!r}") from exc
        elif key == "EDGE_WEIGHT_TYPE":
            edge_weight_type = value.upper()
        else:
            warnings.append(f"skipped unknown keyword {key}")

    if edge_weight_type is None:
        raise TsplibFormatError("missing EDGE_WEIGHT_TYPE")
    if edge_weight_type not in SUPPORTED_EDGE_WEIGHT_TYPES:
        raise UnsupportedEdgeWeightError(
            f"EDGE_WEIGHT_TYPE {edge_weight_type} is outside the supported set "
            f"{SUPPORTED_EDGE_WEIGHT_TYPES}"
        )
    if dimension is None:
        raise TsplibFormatError("missing DIMENSION")
    if len(coords) != dimension:
        raise TsplibFormatError(
            f"DIMENSION is {dimension} but {len(coords)} coordinate records found"
        )
    ids = [record[0] for record in coords]
    if sorted(ids) != list(range(1, dimension + 1)):
        raise TsplibFormatError(
            "node ids must be a permutation of 1..DIMENSION "
            f"(got duplicates or out-of-range ids in {name or '<unnamed>'})"
        )
    return RawInstanceFile(
        name=name,
        declared_type=declared_type,
        dimension=dimension,
        edge_weight_type=edge_weight_type,
        node_coords=coords,
        warnings=warnings,
    )


def parse_tour(source: str | bytes | IO, dimension: int) -> RawTourFile:
    """Parse a TSPLIB tour file and validate it against ``dimension``.

    The sequence must be a permutation of 1..dimension and must be closed
    by the ``-1`` terminator; both violations raise
    :class:`TsplibFormatError`.
    """
    text = _as_text(source)
    name = ""
    sequence: list[int] = []
    in_tour = False
    terminated = False

    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        upper = line.upper()
        if upper == "EOF":
            break
        if upper.startswith("TOUR_SECTION"):
            in_tour = True
            continue
        if not in_tour:
            kv = _split_keyword(line)
            if kv is not None and kv[0] == "NAME":
                name = kv[1]
            continue
        for token in line.split():
            if token == "-1":
                terminated = True
                in_tour = False
                break
            try:
                sequence.append(int(token))
            except ValueError as exc:
                raise TsplibFormatError(f"bad tour token {token!r}") from exc
        if terminated:
            break

    if not terminated:
        raise TsplibFormatError("tour file lacks the -1 terminator")
    if sorted(sequence) != list(range(1, dimension + 1)):
        raise TsplibFormatError(
            f"tour is not a permutation of 1..{dimension} "
            f"({len(sequence)} ids, {len(set(sequence))} distinct)"
        )
    return RawTourFile(name=name, sequence=sequence)


def load_reported_values(source: str | bytes | IO) -> list[ReportedValues]:
    """Load the ``name,reported_opt,hk`` CSV of externally reported values.

    Empty cells map to absent values. Malformed rows raise
    :class:`TsplibFormatError` naming the offending line number.
    """
    text = _as_text(source)
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or [cell.strip() for cell in rows[0]] != ["name", "reported_opt", "hk"]:
        raise TsplibFormatError(
            "reported-values CSV must start with header 'name,reported_opt,hk'"
        )
    records: list[ReportedValues] = []
    for line_no, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise TsplibFormatError(
                f"line {line_no}: expected 3 columns, got {len(row)}"
            )
        name = row[0].strip()
        if not name:
            raise TsplibFormatError(f"line {line_no}: empty instance name")
        values: list[float | None] = []
        for cell in row[1:]:
            cell = cell.strip()
            if not cell:
                values.append(None)
                continue
            try:
                value = float(cell)
            except ValueError as exc:
                raise TsplibFormatError(
                    f"line {line_no}: non-numeric value {cell!r}"
                ) from exc
            if value <= 0:
                raise TsplibFormatError(
                    f"line {line_no}: reported values must be positive, got {value}"
                )
            values.append(value)
        records.append(ReportedValues(name, values[0], values[1]))
    return records


def write_instance(instance: RawInstanceFile, sink: IO) -> None:
    """Write an instance in TSPLIB format.

    Coordinates are written with ``repr`` so that a parse/write/parse
    round trip is bit-identical on the floats.
    """
    lines = [
        f"NAME : {instance.name}",
        f"TYPE : {instance.declared_type or 'TSP'}",
        f"DIMENSION : {instance.dimension}",
        f"EDGE_WEIGHT_TYPE : {instance.edge_weight_type}",
        "NODE_COORD_SECTION",
    ]
    for node_id, x, y in instance.node_coords:
        lines.append(f"{node_id} {x!r} {y!r}")
    lines.append("EOF")
    payload = "\n".join(lines) + "\n"
    try:
        sink.write(payload)
    except TypeError:
        sink.write(payload.encode("utf-8"))


def load_instance(path) -> RawInstanceFile:
    """Read and parse an instance file from disk."""
    with open(path, "rb") as handle:
        parsed = parse_instance(handle)
    if not parsed.name:
        parsed.name = _stem(path)
    return parsed


def load_tour(path, dimension: int) -> RawTourFile:
    """Read and parse a tour file from disk."""
    with open(path, "rb") as handle:
        return parse_tour(handle, dimension)


def load_reported_values_file(path) -> list[ReportedValues]:
    with open(path, "rb") as handle:
        return load_reported_values(handle)


def _stem(path) -> str:
    import os

    base = os.path.basename(os.fspath(path))
    return base.split(".")[0]
