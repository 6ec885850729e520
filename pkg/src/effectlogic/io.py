"""Reading and writing the JSON file formats.

``.ea.json`` holds an effect algebra, ``.imp.json`` an implication table
and ``.prf.json`` a derivation.  Implication cells may be written as a
bare index or as an index array; optional ``names`` label the elements in
either model format.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import EffectAlgebra, MalformedTable, OrderStructure
from .implication import ImplicationTable
from .proofs.checker import Derivation, MalformedDerivation

Model = EffectAlgebra | ImplicationTable


class FormatError(ValueError):
    """A file could not be read as the expected format."""


def load_json(path: str | Path):
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise FormatError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def save_json(path: str | Path, doc) -> Path:
    path = Path(path)
    path.write_text(json.dumps(doc, indent=2) + "\n")
    return path


def _cells_as_lists(imp):
    return [[c if isinstance(c, list) else [c] for c in row] for row in imp]


def implication_from_doc(doc) -> tuple[ImplicationTable, list[str] | None]:
    doc = dict(doc)
    if "imp" in doc and isinstance(doc["imp"], list):
        doc["imp"] = _cells_as_lists(doc["imp"])
    T = ImplicationTable.from_dict(doc)
    names = doc.get("names")
    if names is not None and len(names) != T.size:
        raise MalformedTable(f"names has {len(names)} entries, expected {T.size}")
    return T, names


def implication_to_doc(T: ImplicationTable, names=None) -> dict:
    doc = T.to_dict()
    if names:
        doc["names"] = list(names)
    return doc


def load_model(path: str | Path) -> tuple[Model, list[str] | None]:
    """An effect algebra or implication table, decided by the fields present."""
    doc = load_json(path)
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: expected a JSON object")
    try:
        if "plus" in doc:
            E = EffectAlgebra.from_dict(doc)
            return E, list(E.names) if E.names else None
        if "imp" in doc:
            return implication_from_doc(doc)
    except MalformedTable as exc:
        raise FormatError(f"{path}: {exc}") from None
    raise FormatError(f"{path}: neither an effect algebra ('plus') nor an implication table ('imp')")


def load_effect(path: str | Path) -> EffectAlgebra:
    model, _ = load_model(path)
    if not isinstance(model, EffectAlgebra):
        raise FormatError(f"{path}: expected an effect algebra file")
    return model


def model_files(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    if not directory.is_dir():
        raise FormatError(f"{directory}: not a directory")
    return sorted(p for p in directory.iterdir() if p.name.endswith((".ea.json", ".imp.json")))


def load_model_dir(directory: str | Path) -> list[tuple[Path, Model, list[str] | None]]:
    return [(p, *load_model(p)) for p in model_files(directory)]


def load_derivation(path: str | Path) -> Derivation:
    doc = load_json(path)
    try:
        d = Derivation.from_dict(doc)
    except (MalformedDerivation, ValueError) as exc:
        raise FormatError(f"{path}: {exc}") from None
    if not d.id:
        d = Derivation(d.system, d.hypotheses, d.lines, d.conclusion, Path(path).name.split(".")[0])
    return d


def order_to_doc(order: OrderStructure) -> dict:
    return {
        "leq": [[int(b) for b in row] for row in order.leq],
        "is_lattice": order.is_lattice,
        "join": None if order.join is None else [list(r) for r in order.join],
        "meet": None if order.meet is None else [list(r) for r in order.meet],
    }


def order_from_doc(doc) -> OrderStructure:
    try:
        return OrderStructure(
            tuple(tuple(bool(b) for b in row) for row in doc["leq"]),
            bool(doc["is_lattice"]),
            None if doc.get("join") is None else tuple(tuple(r) for r in doc["join"]),
            None if doc.get("meet") is None else tuple(tuple(r) for r in doc["meet"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad order document: {exc!r}") from None
