"""JSON presentations.  Tuples are written as lists and read back as tuples."""

from __future__ import annotations

from typing import Any

from .core import (
    CategoryError,
    FiniteCategory,
    Functor,
    MonoidalData,
    TwoMonoidalData,
    TwoMonoidalFunctor,
)


def enc(x: Any) -> Any:
    if isinstance(x, tuple):
        return [enc(v) for v in x]
    return x


def dec(x: Any) -> Any:
    if isinstance(x, list):
        return tuple(dec(v) for v in x)
    return x


def category_to_json(C: FiniteCategory) -> dict:
    return {
        "name": C.name,
        "objects": [enc(o) for o in C.objects],
        "morphisms": [{"id": enc(m), "src": enc(s), "tgt": enc(t)} for m, (s, t) in C.morphisms.items()],
        "compose": [[enc(g), enc(f), enc(h)] for (g, f), h in C.compose.items()],
        "identities": [[enc(o), enc(i)] for o, i in C.identities.items()],
    }


def category_from_json(doc: dict) -> FiniteCategory:
    try:
        return FiniteCategory(
            [dec(o) for o in doc["objects"]],
            {dec(m["id"]): (dec(m["src"]), dec(m["tgt"])) for m in doc["morphisms"]},
            {(dec(g), dec(f)): dec(h) for g, f, h in doc["compose"]},
            {dec(o): dec(i) for o, i in doc["identities"]},
            doc.get("name", "C"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CategoryError(f"malformed category presentation: {exc}") from exc


def monoidal_to_json(M: MonoidalData) -> dict:
    return {
        "tensor_obj": [[enc(a), enc(b), enc(v)] for (a, b), v in M.tensor_obj.items()],
        "tensor_mor": [[enc(f), enc(g), enc(v)] for (f, g), v in M.tensor_mor.items()],
        "unit": enc(M.unit),
        "assoc": [[enc(a), enc(b), enc(c), enc(v)] for (a, b, c), v in M.assoc.items()],
        "lambda": [[enc(a), enc(v)] for a, v in M.lam.items()],
        "rho": [[enc(a), enc(v)] for a, v in M.rho.items()],
    }


def monoidal_from_json(doc: dict, C: FiniteCategory) -> MonoidalData:
    try:
        return MonoidalData(
            C,
            {(dec(a), dec(b)): dec(v) for a, b, v in doc["tensor_obj"]},
            {(dec(f), dec(g)): dec(v) for f, g, v in doc["tensor_mor"]},
            dec(doc["unit"]),
            {(dec(a), dec(b), dec(c)): dec(v) for a, b, c, v in doc["assoc"]},
            {dec(a): dec(v) for a, v in doc["lambda"]},
            {dec(a): dec(v) for a, v in doc["rho"]},
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CategoryError(f"malformed monoidal structure: {exc}") from exc


def two_monoidal_to_json(T: TwoMonoidalData) -> dict:
    return {
        "category": category_to_json(T.cat),
        "box": monoidal_to_json(T.box),
        "minus": monoidal_to_json(T.minus),
        "zeta": [[*(enc(x) for x in q), enc(v)] for q, v in T.zeta.items()],
    }


def two_monoidal_from_json(doc: dict) -> TwoMonoidalData:
    C = category_from_json(doc["category"])
    try:
        zeta = {tuple(dec(x) for x in row[:4]): dec(row[4]) for row in doc["zeta"]}
    except (KeyError, TypeError, IndexError) as exc:
        raise CategoryError(f"malformed interchange table: {exc}") from exc
    return TwoMonoidalData(monoidal_from_json(doc["box"], C), monoidal_from_json(doc["minus"], C), zeta)


def functor_to_json(F: TwoMonoidalFunctor) -> dict:
    Fn = F.functor
    return {
        "target": two_monoidal_to_json(F.target) if F.target is not F.source else "source",
        "obj": [[enc(a), enc(b)] for a, b in Fn.obj.items()],
        "mor": [[enc(a), enc(b)] for a, b in Fn.mor.items()],
        "box_cells": [[enc(a), enc(b), enc(v)] for (a, b), v in F.box_cells.items()],
        "minus_cells": [[enc(a), enc(b), enc(v)] for (a, b), v in F.minus_cells.items()],
    }


def functor_from_json(doc: dict, source: TwoMonoidalData) -> TwoMonoidalFunctor:
    tgt_doc = doc.get("target", "source")
    target = source if tgt_doc == "source" else two_monoidal_from_json(tgt_doc)
    try:
        Fn = Functor(source.cat, target.cat, {dec(a): dec(b) for a, b in doc["obj"]},
                     {dec(a): dec(b) for a, b in doc["mor"]})
        box = {(dec(a), dec(b)): dec(v) for a, b, v in doc["box_cells"]}
        minus = {(dec(a), dec(b)): dec(v) for a, b, v in doc["minus_cells"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise CategoryError(f"malformed functor: {exc}") from exc
    return TwoMonoidalFunctor(Fn, source, target, box, minus)
