"""Reading and writing arrangement files.

Format::

    {"ambient_dim": 3,
     "subspaces": [{"name": "h0", "equations": [[0, 1, 0], [0, 0, 1]]},
                   {"name": "L", "span": [[1, 1, "1/2"]]}]}

Entries are integers or ``"p/q"`` strings; floats are refused.  A subspace
is given either by ``equations`` (rows of linear forms vanishing on it) or
by ``span`` (spanning vectors).
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .arrangement import (Arrangement, ArrangementError, SubspaceFamily, ambient_space,
                          subspace_from_equations, subspace_from_span)

__all__ = ["ArrangementFileError", "parse_arrangement", "loads_arrangement",
           "load_arrangement", "dump_arrangement"]


class ArrangementFileError(ValueError):
    pass


def _entry(x, where: str):
    if isinstance(x, bool) or isinstance(x, float):
        raise ArrangementFileError(f"{where}: {x!r} is not an exact rational (use an int or 'p/q')")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            if any(ch in x for ch in ".eE"):
                raise ValueError
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ArrangementFileError(f"{where}: cannot read {x!r} as a rational") from None
    raise ArrangementFileError(f"{where}: unsupported entry {x!r}")


def _rows(rows, l: int, where: str):
    if not isinstance(rows, list):
        raise ArrangementFileError(f"{where}: expected a list of vectors")
    out = []
    for k, row in enumerate(rows):
        if not isinstance(row, list):
            raise ArrangementFileError(f"{where}[{k}]: expected a list")
        if len(row) != l:
            raise ArrangementFileError(f"{where}[{k}]: has length {len(row)}, ambient_dim is {l}")
        out.append([_entry(x, f"{where}[{k}]") for x in row])
    return out


def parse_arrangement(data: dict, family: bool = False) -> SubspaceFamily:
    """Validate a decoded arrangement document.

    With ``family=True`` containment between members is allowed and a plain
    :class:`SubspaceFamily` is returned.
    """
    if not isinstance(data, dict):
        raise ArrangementFileError("top level must be an object")
    l = data.get("ambient_dim")
    if isinstance(l, bool) or not isinstance(l, int) or l < 0:
        raise ArrangementFileError("ambient_dim must be a nonnegative integer")
    specs = data.get("subspaces", [])
    if not isinstance(specs, list):
        raise ArrangementFileError("subspaces must be a list")
    members, names = [], set()
    for k, spec in enumerate(specs):
        if not isinstance(spec, dict):
            raise ArrangementFileError(f"subspaces[{k}]: expected an object")
        name = spec.get("name", f"x{k}")
        if not isinstance(name, str) or not name:
            raise ArrangementFileError(f"subspaces[{k}]: name must be a nonempty string")
        if name in names:
            raise ArrangementFileError(f"subspaces[{k}]: duplicate name {name!r}")
        names.add(name)
        where = f"subspaces[{k}] ({name})"
        has_eq, has_span = "equations" in spec, "span" in spec
        if has_eq == has_span:
            raise ArrangementFileError(f"{where}: give exactly one of 'equations' or 'span'")
        if has_eq:
            s = subspace_from_equations(_rows(spec["equations"], l, where + ".equations"), l, name)
        else:
            s = subspace_from_span(_rows(spec["span"], l, where + ".span"), l, name)
        members.append(s)
    cls = SubspaceFamily if family else Arrangement
    try:
        return cls(tuple(members), ambient_space(l))
    except ArrangementError as exc:
        raise ArrangementFileError(str(exc)) from None


def loads_arrangement(text: str, family: bool = False) -> SubspaceFamily:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_arrangement(data, family=family)


def load_arrangement(path: Union[str, Path], family: bool = False) -> SubspaceFamily:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ArrangementFileError(f"{path}: {exc.strerror}") from None
    try:
        return loads_arrangement(text, family=family)
    except ArrangementFileError as exc:
        raise ArrangementFileError(f"{path}: {exc}") from None


def _fmt(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump_arrangement(fam: SubspaceFamily) -> dict:
    """Inverse of :func:`parse_arrangement` for families in C^l."""
    if fam.ambient_codim_offset:
        raise ValueError("only families whose ambient is all of C^l can be written")
    return {
        "ambient_dim": fam.ambient_dim,
        "subspaces": [{"name": m.name, "equations": [[_fmt(x) for x in row] for row in m.equations]}
                      for m in fam.members],
    }
