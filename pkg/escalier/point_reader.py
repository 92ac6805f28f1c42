"""
Point ingestion from CSV or JSON text

CSV: one point per line, coordinates comma-separated, ``#`` starts a comment.
JSON: an array of arrays of scalar strings (or integers).
Input order is preserved.
"""

import json
import re
from io import StringIO
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

import pandas as pd

from .errors import DuplicatePointError, PointParseError, ScalarParseError
from .scalars import QQ, Field, Scalar, render_scalar

PARSER_LINE = re.compile(r'line (\d+)')

Point = Tuple[Scalar, ...]


class PointReader:
    """Parse and render point sets"""

    @staticmethod
    def detect_format(text: str, path: Optional[str] = None) -> str:
        if path and path != "-":
            suffix = Path(path).suffix.lower()
            if suffix == '.json':
                return 'json'
            if suffix in ('.csv', '.txt'):
                return 'csv'
        return 'json' if text.lstrip().startswith('[') else 'csv'

    @staticmethod
    def _strip_comments(text: str) -> Tuple[str, List[int]]:
        """Drop comments and blank lines, keeping the source line of each row"""
        kept: List[str] = []
        source_lines: List[int] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            body = raw.split('#', 1)[0]
            if body.strip():
                kept.append(body)
                source_lines.append(number)
        return "\n".join(kept) + "\n", source_lines

    @staticmethod
    def parse_csv(text: str, field: Field = QQ) -> List[Point]:
        body, source_lines = PointReader._strip_comments(text)
        if not source_lines:
            raise PointParseError("no points in input")
        try:
            df = pd.read_csv(
                StringIO(body), header=None, dtype=str, keep_default_na=False,
                skipinitialspace=True,
            )
        except pd.errors.EmptyDataError:
            raise PointParseError("no points in input")
        except pd.errors.ParserError as e:
            match = PARSER_LINE.search(str(e))
            row = int(match.group(1)) if match else 0
            line = source_lines[row - 1] if 0 < row <= len(source_lines) else None
            raise PointParseError("row has more coordinates than the first row", line=line)

        points: List[Point] = []
        lines: List[int] = []
        for idx, row in enumerate(df.itertuples(index=False, name=None)):
            line = source_lines[idx]
            cells = [None if pd.isna(c) else str(c).strip() for c in row]
            if all(c is None or c == "" for c in cells):
                continue
            if any(c is None for c in cells):
                raise PointParseError(
                    f"row has {sum(c is not None for c in cells)} coordinates, expected {len(cells)}",
                    line=line,
                )
            try:
                points.append(tuple(field.parse(c) for c in cells))
            except ScalarParseError as e:
                raise PointParseError(str(e), line=line)
            lines.append(line)

        if not points:
            raise PointParseError("no points in input")
        PointReader._check_distinct(points, lines, unit="line")
        return points

    @staticmethod
    def parse_json(text: str, field: Field = QQ) -> List[Point]:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PointParseError(f"invalid JSON: {e.msg}", line=e.lineno)
        if not isinstance(data, list):
            raise PointParseError("JSON input must be an array of points")
        if not data:
            raise PointParseError("no points in input")

        points: List[Point] = []
        for k, entry in enumerate(data, start=1):
            if not isinstance(entry, list) or not entry:
                raise PointParseError(f"point {k} is not a nonempty array")
            coordinates = []
            for value in entry:
                if isinstance(value, bool) or not isinstance(value, (str, int)):
                    raise PointParseError(f"point {k}: coordinate {value!r} is not a string or integer")
                try:
                    coordinates.append(field.parse(value) if isinstance(value, str) else field(value))
                except ScalarParseError as e:
                    raise PointParseError(f"point {k}: {e}")
            points.append(tuple(coordinates))

        n = len(points[0])
        for k, point in enumerate(points, start=1):
            if len(point) != n:
                raise PointParseError(f"point {k} has {len(point)} coordinates, expected {n}")
        PointReader._check_distinct(points, list(range(1, len(points) + 1)), unit="point")
        return points

    @staticmethod
    def _check_distinct(points: Sequence[Point], labels: Sequence[int], unit: str):
        seen = {}
        for point, label in zip(points, labels):
            if point in seen:
                raise DuplicatePointError(seen[point], label, point, unit=unit)
            seen[point] = label

    @staticmethod
    def render_csv(points: Sequence[Sequence[Any]]) -> str:
        df = pd.DataFrame([[render_scalar(c) for c in p] for p in points])
        return df.to_csv(index=False, header=False)

    @staticmethod
    def render_json(points: Sequence[Sequence[Any]]) -> str:
        return json.dumps([[render_scalar(c) for c in p] for p in points])


def parse_points(text: str, field: Field = QQ, input_format: str = "auto",
                 path: Optional[str] = None) -> List[Point]:
    """Ordered, distinct points of uniform dimension"""
    if input_format == "auto":
        input_format = PointReader.detect_format(text, path)
    if input_format == "json":
        return PointReader.parse_json(text, field)
    if input_format == "csv":
        return PointReader.parse_csv(text, field)
    raise PointParseError(f"unknown input format: {input_format}")


def render_points(points: Sequence[Sequence[Any]], output_format: str = "csv") -> str:
    if output_format == "json":
        return PointReader.render_json(points) + "\n"
    return PointReader.render_csv(points)
