"""TOML serialization for bound quiver presentations and biserial quiver data.

The writer is hand-rolled for these two fixed schemas so that files
round-trip bit-exactly and stay diffable; the reader uses the standard
library TOML parser.  Both schemas carry a schema_version field.
"""

from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from selfext.hybrid import BiserialQuiverData, validate_biserial
from selfext.oracle import Arrow, BoundQuiverPresentation

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    pass


def _fmt_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt_value(v) for v in x) + "]"
    raise SchemaError(f"cannot serialize {type(x).__name__} to TOML")


def _arrow_blocks(arrows) -> list[str]:
    lines = []
    for a in arrows:
        lines.append("[[quiver.arrows]]")
        lines.append(f"label = {_fmt_value(a.label)}")
        lines.append(f"source = {_fmt_value(a.source)}")
        lines.append(f"target = {_fmt_value(a.target)}")
        lines.append("")
    return lines


def dump_presentation(pres: BoundQuiverPresentation, name: str | None = None) -> str:
    lines = [f"schema_version = {SCHEMA_VERSION}"]
    if name is not None:
        lines.append(f"name = {_fmt_value(name)}")
    lines += [
        f"char = {pres.char_p}",
        f"loewy_bound = {pres.loewy_bound}",
        "",
        "[quiver]",
        f"vertices = {_fmt_value(list(pres.vertices))}",
        "",
    ]
    lines += _arrow_blocks(pres.arrows)
    for rel in pres.relations:
        lines.append("[[relation]]")
        terms = [[int(coeff), list(path)] for coeff, path in rel]
        lines.append(f"terms = {_fmt_value(terms)}")
        lines.append("")
    return "\n".join(lines)


def _parse_common(data: dict):
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {data.get('schema_version')!r}")
    quiver = data.get("quiver")
    if not isinstance(quiver, dict) or "vertices" not in quiver:
        raise SchemaError("missing [quiver] table with vertices")
    arrows = [
        Arrow(a["label"], a["source"], a["target"])
        for a in quiver.get("arrows", [])
    ]
    return list(quiver["vertices"]), arrows


def load_presentation(text: str) -> tuple[BoundQuiverPresentation, str | None]:
    """Parse a presentation TOML document; returns (presentation, optional name)."""
    data = tomllib.loads(text)
    vertices, arrows = _parse_common(data)
    for key in ("char", "loewy_bound"):
        if key not in data:
            raise SchemaError(f"missing {key}")
    relations = []
    for rel in data.get("relation", []):
        terms = rel.get("terms")
        if not isinstance(terms, list):
            raise SchemaError("relation without terms")
        relations.append([(int(c), tuple(path)) for c, path in terms])
    pres = BoundQuiverPresentation(
        vertices=vertices,
        arrows=arrows,
        char_p=int(data["char"]),
        relations=relations,
        loewy_bound=int(data["loewy_bound"]),
    )
    return pres, data.get("name")


def load_presentation_file(path) -> tuple[BoundQuiverPresentation, str | None]:
    with open(path, "rb") as fh:
        return load_presentation(fh.read().decode("utf-8"))


def _perm_cycles(perm: dict) -> list[list]:
    seen, cycles = set(), []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc, x = [start], perm[start]
        seen.add(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles


def dump_biserial(data: BiserialQuiverData, p: int, name: str | None = None) -> str:
    validate_biserial(data)
    lines = [f"schema_version = {SCHEMA_VERSION}"]
    if name is not None:
        lines.append(f"name = {_fmt_value(name)}")
    lines += [
        f"char = {p}",
        "",
        "[quiver]",
        f"vertices = {_fmt_value(list(data.vertices))}",
        "",
    ]
    lines += _arrow_blocks(data.arrows)
    lines.append("[biserial]")
    lines.append(f"f = {_fmt_value(_perm_cycles(data.f))}")
    tri_orbits = [
        cyc for cyc in _perm_cycles(data.f) if all(lab in data.triangles for lab in cyc)
    ]
    lines.append(f"triangles = {_fmt_value(tri_orbits)}")
    lines.append("")
    seen = set()
    for lab in sorted(data.f):
        cyc = frozenset(_cycle_of(data.g, lab))
        if cyc in seen:
            continue
        seen.add(cyc)
        lines.append("[[biserial.cycle]]")
        lines.append(f"arrow = {_fmt_value(lab)}")
        lines.append(f"weight = {data.m[lab]}")
        lines.append(f"scalar = {data.c[lab]}")
        lines.append("")
    return "\n".join(lines)


def _cycle_of(perm: dict, start):
    cyc, x = [start], perm[start]
    while x != start:
        cyc.append(x)
        x = perm[x]
    return cyc


def load_biserial(text: str) -> tuple[BiserialQuiverData, int, str | None]:
    """Parse a biserial TOML document; returns (data, char, optional name)."""
    data = tomllib.loads(text)
    vertices, arrows = _parse_common(data)
    bis = data.get("biserial")
    if not isinstance(bis, dict):
        raise SchemaError("missing [biserial] table")
    f = {}
    for cyc in bis.get("f", []):
        for lab, img in zip(cyc, cyc[1:] + cyc[:1]):
            f[lab] = img
    triangles = frozenset(lab for orb in bis.get("triangles", []) for lab in orb)
    weights, scalars = {}, {}
    for entry in bis.get("cycle", []):
        weights[entry["arrow"]] = int(entry["weight"])
        scalars[entry["arrow"]] = int(entry.get("scalar", 1))
    bq = BiserialQuiverData(vertices, arrows, f, triangles, weights, scalars)
    validate_biserial(bq)
    if "char" not in data:
        raise SchemaError("missing char")
    return bq, int(data["char"]), data.get("name")


def load_biserial_file(path) -> tuple[BiserialQuiverData, int, str | None]:
    with open(path, "rb") as fh:
        return load_biserial(fh.read().decode("utf-8"))
