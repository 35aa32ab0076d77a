"""JSON documents holding named interval modules and an optional grid function.

Coordinates are strings (``"2"``, ``"-1/3"``, ``"0.25"``, ``"inf"``) so that
values survive the trip through JSON exactly.  Errors carry the location of
the offending field, e.g. ``modules[0].intervals[1].lower[2][0]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .dimdist import GridFunction
from .errors import IntervalError, ParseError, ValidationError
from .extreal import format_scalar, to_scalar
from .interval import IntervalModule, validate

__all__ = ["GridBlock", "ModuleDocument", "parse", "serialize", "load", "dump"]

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class GridBlock:
    shape: tuple
    origin: tuple
    spacing: object
    values: GridFunction

    def __eq__(self, other):
        return (
            isinstance(other, GridBlock)
            and self.shape == other.shape
            and self.origin == other.origin
            and self.spacing == other.spacing
            and self.values == other.values
        )


@dataclass(frozen=True)
class ModuleDocument:
    modules: dict = field(default_factory=dict)
    grid: Optional[GridBlock] = None
    format_version: str = FORMAT_VERSION

    def module(self, name=None) -> IntervalModule:
        """The named module, or the first one."""
        if name is None:
            if not self.modules:
                raise ParseError("modules", "document holds no module")
            return next(iter(self.modules.values()))
        try:
            return self.modules[name]
        except KeyError:
            raise ParseError("modules", f"no module named {name!r}") from None


def _expect(value, kind, where):
    if not isinstance(value, kind):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ParseError(where, f"expected {names}, got {type(value).__name__}")
    return value


def _coord(raw, where):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ParseError(where, "coordinates must be strings such as \"3\", \"1/2\" or \"inf\"")
    try:
        return to_scalar(raw)
    except (TypeError, ValueError) as exc:
        raise ParseError(where, str(exc)) from None


def _chain(raw, where):
    _expect(raw, list, where)
    if not raw:
        raise ParseError(where, "a chain needs at least one vertex")
    out = []
    for k, vertex in enumerate(raw):
        spot = f"{where}[{k}]"
        _expect(vertex, list, spot)
        if len(vertex) != 2:
            raise ParseError(spot, "a vertex is a pair [x, y]")
        out.append((_coord(vertex[0], f"{spot}[0]"), _coord(vertex[1], f"{spot}[1]")))
    return out


def _interval(raw, where):
    _expect(raw, dict, where)
    for key in ("lower", "upper"):
        if key not in raw:
            raise ParseError(where, f"missing field {key!r}")
    lower = _chain(raw["lower"], f"{where}.lower")
    upper = _chain(raw["upper"], f"{where}.upper")
    try:
        return validate(lower, upper)
    except IntervalError as exc:
        raise ValidationError(where, exc) from exc


def _grid(raw, where):
    _expect(raw, dict, where)
    for key in ("shape", "values"):
        if key not in raw:
            raise ParseError(where, f"missing field {key!r}")
    shape = _expect(raw["shape"], list, f"{where}.shape")
    for k, s in enumerate(shape):
        if isinstance(s, bool) or not isinstance(s, int) or s <= 0:
            raise ParseError(f"{where}.shape[{k}]", "axis sizes are positive integers")
    origin_raw = raw.get("origin", ["0"] * len(shape))
    _expect(origin_raw, list, f"{where}.origin")
    if len(origin_raw) != len(shape):
        raise ParseError(f"{where}.origin", "origin needs one coordinate per axis")
    origin = tuple(_coord(o, f"{where}.origin[{k}]") for k, o in enumerate(origin_raw))
    spacing = _coord(raw.get("spacing", "1"), f"{where}.spacing")
    if not spacing > 0 or spacing == float("inf"):
        raise ParseError(f"{where}.spacing", "spacing must be positive and finite")
    values = raw["values"]
    try:
        arr = np.array(values, dtype=object)
    except ValueError:
        raise ParseError(f"{where}.values", "values must form a dense array") from None
    if arr.shape != tuple(shape):
        raise ParseError(f"{where}.values", f"array shape {arr.shape} does not match shape {tuple(shape)}")
    for idx, v in np.ndenumerate(arr):
        if isinstance(v, bool) or not isinstance(v, int):
            spot = "".join(f"[{i}]" for i in idx)
            raise ParseError(f"{where}.values{spot}", "grid values are integers")
    return GridBlock(tuple(shape), origin, spacing, GridFunction(arr.astype(np.int64)))


def parse(data) -> "ModuleDocument":
    """Parse UTF-8 bytes or text into a validated :class:`ModuleDocument`."""
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"byte {exc.start}", "input is not UTF-8") from None
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    _expect(raw, dict, "document")
    version = raw.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError("format_version", f"unsupported format version {version!r}")
    modules_raw = _expect(raw.get("modules", []), list, "modules")
    modules = {}
    for i, mod in enumerate(modules_raw):
        where = f"modules[{i}]"
        _expect(mod, dict, where)
        name = mod.get("name", f"M{i}")
        _expect(name, str, f"{where}.name")
        if name in modules:
            raise ParseError(f"{where}.name", f"duplicate module name {name!r}")
        intervals = _expect(mod.get("intervals", []), list, f"{where}.intervals")
        modules[name] = IntervalModule(
            _interval(iv, f"{where}.intervals[{k}]") for k, iv in enumerate(intervals)
        )
    grid = _grid(raw["grid"], "grid") if raw.get("grid") is not None else None
    return ModuleDocument(modules, grid, version)


def _vertices(chain):
    return [[format_scalar(v.x), format_scalar(v.y)] for v in chain.vertices]


def to_json_obj(doc: ModuleDocument) -> dict:
    out = {
        "format_version": doc.format_version,
        "modules": [
            {
                "name": name,
                "intervals": [
                    {"lower": _vertices(iv.lower), "upper": _vertices(iv.upper)}
                    for iv in module
                ],
            }
            for name, module in doc.modules.items()
        ],
    }
    if doc.grid is not None:
        g = doc.grid
        out["grid"] = {
            "shape": list(g.shape),
            "origin": [format_scalar(o) for o in g.origin],
            "spacing": format_scalar(g.spacing),
            "values": g.values.values.tolist(),
        }
    return out


def serialize(doc: ModuleDocument) -> str:
    return json.dumps(to_json_obj(doc), indent=2) + "\n"


def load(path) -> ModuleDocument:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(doc: ModuleDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))
