"""Serialize datasets into the named JSON artifact files.

Formatting is canonical so rebuilding unchanged inputs yields
byte-identical files: sorted keys, 2-space indent, LF, UTF-8, terminal
newline, numbers without exponent notation. The key names inside each
file are documented in docs/data-format.md.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path

from .aggregation import FacetIndex, OverviewStats
from .diagnostics import DiagnosticsReport
from .model import Cookbook, IngredientUse, Recipe
from .textnorm import format_number
from .viz_datasets import (
    CooccurrenceMatrix,
    IngredientNetwork,
    MapDataset,
    PieDataset,
    UnitsProfile,
)


class EmitError(Exception):
    """Fatal serialization or write failure."""


TOP_LEVEL_FILES = (
    "general",
    "alphabet",
    "categories",
    "ingredients",
    "provenance",
    "map",
    "matrix",
    "network",
    "piechart",
    "units",
)


def _render(value, indent: int, out: list[str]) -> None:
    pad = " " * (indent + 2)
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise EmitError(f"cannot serialize non-finite number {value!r}")
        out.append(format_number(value))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        if not all(isinstance(key, str) for key in value):
            raise EmitError("object keys must be text")
        out.append("{\n")
        for pos, key in enumerate(sorted(value)):
            if pos:
                out.append(",\n")
            out.append(pad)
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(": ")
            _render(value[key], indent + 2, out)
        out.append("\n" + " " * indent + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for pos, item in enumerate(value):
            if pos:
                out.append(",\n")
            out.append(pad)
            _render(item, indent + 2, out)
        out.append("\n" + " " * indent + "]")
    else:
        raise EmitError(f"cannot serialize {type(value).__name__} values")


def canonical_json(value) -> bytes:
    """Serialize maps/lists/text/numbers/booleans/null to stable bytes."""
    out: list[str] = []
    _render(value, 0, out)
    out.append("\n")
    return "".join(out).encode("utf-8")


@dataclass
class SiteDataset:
    """Everything one build emits, ready for serialization."""

    overview: OverviewStats
    alphabet: FacetIndex
    categories: FacetIndex
    ingredients: FacetIndex
    provenance: FacetIndex
    map: MapDataset
    matrix: CooccurrenceMatrix
    network: IngredientNetwork
    piechart: PieDataset
    units: UnitsProfile
    cookbooks: list[Cookbook]


def facet_payload(index: FacetIndex) -> dict:
    return {
        "facet": index.facet,
        "buckets": [{"value": key, "recipes": list(ids)}
                    for key, ids in index.buckets.items()],
    }


def map_payload(dataset: MapDataset) -> dict:
    points = []
    for point in dataset.points:
        entry: dict = {
            "city": point.city,
            "latitude": point.latitude,
            "longitude": point.longitude,
            "cookbooks": point.cookbook_count,
            "recipes": point.recipe_count,
        }
        if point.region is not None:
            entry["region"] = point.region
        if point.country is not None:
            entry["country"] = point.country
        points.append(entry)
    return {"points": points}


def matrix_payload(matrix: CooccurrenceMatrix) -> dict:
    return {"labels": list(matrix.labels),
            "cells": [list(row) for row in matrix.cells]}


def network_payload(network: IngredientNetwork) -> dict:
    return {
        "nodes": [{"id": node.ingredient, "weight": node.weight}
                  for node in network.nodes],
        "edges": [{"source": edge.source, "target": edge.target,
                   "weight": edge.weight} for edge in network.edges],
    }


def piechart_payload(piechart: PieDataset) -> dict:
    return {"slices": [{"label": label, "count": count}
                       for label, count in piechart.slices]}


def units_payload(units: UnitsProfile) -> dict:
    return {"entries": [{"unit": unit, "count": count}
                        for unit, count in units.entries]}


def _use_payload(use: IngredientUse) -> dict:
    entry: dict = {"name": use.canonical_name}
    if use.variant_name is not None:
        entry["variant"] = use.variant_name
    if use.qualifier is not None:
        entry["qualifier"] = use.qualifier
    if use.quantity_value is not None:
        entry["quantity"] = use.quantity_value
    if use.quantity_unit is not None:
        entry["unit"] = use.quantity_unit
    return entry


def _recipe_payload(recipe: Recipe) -> dict:
    record: dict = {
        "title": recipe.title,
        "pages": list(recipe.pages),
        "images": list(recipe.images),
        "procedures": list(recipe.procedures),
        "ingredients": [_use_payload(use) for use in recipe.ingredients],
    }
    for key, value in (("chapter", recipe.chapter),
                       ("course", recipe.course_type),
                       ("scope", recipe.scope),
                       ("serves", recipe.serves),
                       ("prep_time", recipe.prep_time),
                       ("cook_time", recipe.cook_time),
                       ("temperature", recipe.temperature)):
        if value is not None:
            record[key] = value
    return record


def emit_cookbook_file(cookbook: Cookbook) -> dict:
    """Cookbook metadata plus a map of recipe id to full recipe record."""
    record: dict = {"id": cookbook.id, "title": cookbook.title}
    timespan: dict = {}
    if cookbook.year_from is not None:
        timespan["from"] = cookbook.year_from
    if cookbook.year_to is not None:
        timespan["to"] = cookbook.year_to
    if cookbook.time_qualifier is not None:
        timespan["qualifier"] = cookbook.time_qualifier
    if timespan:
        record["timespan"] = timespan
    for key, value in (("place", cookbook.place), ("region", cookbook.region),
                       ("country", cookbook.country), ("author", cookbook.author)):
        if value is not None:
            record[key] = value
    acquisition: dict = {}
    if cookbook.acquisition_date is not None:
        acquisition["date"] = cookbook.acquisition_date.isoformat()
    if cookbook.acquisition_place is not None:
        acquisition["place"] = cookbook.acquisition_place
    if acquisition:
        record["acquisition"] = acquisition
    record["recipes"] = {recipe.id: _recipe_payload(recipe)
                         for recipe in cookbook.recipes}
    return record


def _general_payload(dataset: SiteDataset) -> dict:
    paths: dict = {name: f"{name}.json" for name in TOP_LEVEL_FILES}
    paths["cookbooks"] = {cookbook.id: f"cookbooks/{cookbook.id}.json"
                          for cookbook in dataset.cookbooks}
    stats = dataset.overview
    return {
        "stats": {
            "cookbooks": stats.cookbook_count,
            "recipes": stats.recipe_count,
            "ingredients": stats.ingredient_count,
        },
        "gender": dict(stats.gender_recipes),
        "paths": paths,
    }


def _write_file(path: Path, payload) -> None:
    data = canonical_json(payload)
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_bytes(data)
        os.replace(tmp, path)
    except OSError as exc:
        raise EmitError(f"cannot write {path}: {exc}") from exc


def emit_site_data(dataset: SiteDataset, out_dir: str | Path) -> list[str]:
    """Write every artifact file under out_dir; relative paths returned.

    Files are written atomically (temporary then rename) and nothing
    outside out_dir is touched. Raises EmitError on write failure or when
    two cookbooks share a slug.
    """
    out_dir = Path(out_dir)
    ids = [cookbook.id for cookbook in dataset.cookbooks]
    collisions = sorted({slug for slug in ids if ids.count(slug) > 1})
    if collisions:
        raise EmitError(f"cookbook slug collision: {', '.join(collisions)}")

    try:
        (out_dir / "cookbooks").mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise EmitError(f"cannot create {out_dir}: {exc}") from exc

    payloads: dict[str, dict] = {
        "general.json": _general_payload(dataset),
        "alphabet.json": facet_payload(dataset.alphabet),
        "categories.json": facet_payload(dataset.categories),
        "ingredients.json": facet_payload(dataset.ingredients),
        "provenance.json": facet_payload(dataset.provenance),
        "map.json": map_payload(dataset.map),
        "matrix.json": matrix_payload(dataset.matrix),
        "network.json": network_payload(dataset.network),
        "piechart.json": piechart_payload(dataset.piechart),
        "units.json": units_payload(dataset.units),
    }
    for cookbook in dataset.cookbooks:
        payloads[f"cookbooks/{cookbook.id}.json"] = emit_cookbook_file(cookbook)

    manifest = sorted(payloads)
    for relative in manifest:
        _write_file(out_dir / relative, payloads[relative])
    return manifest


def check_image_manifest(dataset: SiteDataset,
                         images_dir: str | Path) -> DiagnosticsReport:
    """Cross-check referenced image filenames against the images directory."""
    report = DiagnosticsReport()
    images_dir = Path(images_dir)
    if not images_dir.is_dir():
        report.warning("missing-images-dir",
                       f"images directory {images_dir} not found; check skipped")
        return report

    referenced: dict[str, list[str]] = {}
    for cookbook in dataset.cookbooks:
        for recipe in cookbook.recipes:
            for name in recipe.images:
                referenced.setdefault(name, []).append(recipe.id)
    on_disk = {entry.name for entry in images_dir.iterdir() if entry.is_file()}

    for name in sorted(referenced):
        if name not in on_disk:
            for recipe_id in referenced[name]:
                report.warning("missing-image",
                               f"image {name!r} referenced by {recipe_id} not found")
    for name in sorted(on_disk - set(referenced)):
        report.warning("orphan-image", f"image {name!r} is referenced by no recipe")
    return report
