"""Parse the crowdsourced TSV working table and group rows into cookbooks.

The working table is a UTF-8, tab-separated export of the shared
transcription spreadsheet: one row per ingredient-level annotation, with
recipe and cookbook metadata repeated on every row. Header names are
configurable through :class:`ColumnMapping`.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass, fields, replace
from typing import BinaryIO

from .diagnostics import DiagnosticsReport
from .model import AnnotationRow, Cookbook, IngredientUse, Recipe
from .textnorm import format_number, slugify


class ParseError(Exception):
    """Fatal input problem: bad encoding or missing mandatory columns."""


@dataclass(frozen=True)
class ColumnMapping:
    """Semantic field -> header name in the input table."""

    notebook: str = "Notebook"
    year_from: str = "From"
    year_to: str = "To"
    time_qualifier: str = "Time qualifier"
    place: str = "Place"
    region: str = "Region"
    country: str = "Country"
    author: str = "Author surname name"
    images: str = "Img nome"
    pages: str = "Pag. numero"
    chapter: str = "Title chapter"
    recipe: str = "Title Recipe"
    ingredient: str = "Ingredient"
    quantity: str = "Quantity"
    unit: str = "Unit"
    course: str = "Course"
    scope: str = "Scope"
    procedures: str = "Procedure"
    serves: str = "Serves"
    prep_time: str = "Prep time"
    cook_time: str = "Cook time"
    temperature: str = "Temperature"

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def with_overrides(self, overrides: dict[str, str]) -> "ColumnMapping":
        unknown = set(overrides) - set(self.field_names())
        if unknown:
            raise ValueError(f"unknown column fields: {', '.join(sorted(unknown))}")
        return replace(self, **overrides)


# Cell values that stand for "not stated" in the spreadsheet.
_ABSENT = {"", "n/s", "-"}

_YEAR = re.compile(r"\d{4}")
_QUANTITY = re.compile(r"(\d+(?:[.,]\d+)?)\s*([^\s\d.,].*)?$")
_PARENTHETICAL = re.compile(r"([^()]+?)\s*\(([^()]*)\)$")

_IT_MONTHS = {
    "gen": 1, "feb": 2, "mar": 3, "apr": 4, "mag": 5, "giu": 6,
    "lug": 7, "ago": 8, "set": 9, "ott": 10, "nov": 11, "dic": 12,
}
_ACQUISITION = re.compile(
    r"[^_]+_([^_]+)_(\d{1,2})(" + "|".join(_IT_MONTHS) + r")(\d{4})_[^_]+\.[A-Za-z0-9]+$"
)


def clean_cell(cell: str | None) -> str | None:
    """Trimmed cell text, or None for the shared absent markers."""
    if cell is None:
        return None
    text = cell.strip()
    if text.casefold() in _ABSENT:
        return None
    return text


def split_multivalue(cell: str) -> list[str]:
    """Split a ';'-separated cell into trimmed, non-empty items."""
    return [item.strip() for item in cell.split(";") if item.strip()]


def parse_quantity(raw: str) -> tuple[float, str | None] | None:
    """Parse '<number> <unit>' or '<number><unit>' into (value, unit).

    Both ',' and '.' work as decimal separator. Returns None for absent
    markers. Raises ValueError when the leading token is not a positive
    number.
    """
    text = clean_cell(raw)
    if text is None:
        return None
    match = _QUANTITY.fullmatch(text)
    if not match:
        raise ValueError(f"unparseable quantity {raw!r}")
    value = float(match.group(1).replace(",", "."))
    if value <= 0:
        raise ValueError(f"unparseable quantity {raw!r}: must be positive")
    unit = match.group(2)
    return value, (unit.strip() if unit else None)


def format_quantity(value: float, unit: str | None) -> str:
    """Inverse of parse_quantity for emitted values ('.' decimal, no zeros)."""
    text = format_number(value)
    return f"{text} {unit}" if unit else text


def parse_ingredient_name(raw: str) -> tuple[str, str | None]:
    """Split a trailing parenthetical qualifier off an ingredient name.

    Raises ValueError for unbalanced or non-trailing parentheses; callers
    fall back to the whole raw text.
    """
    text = raw.strip()
    if "(" not in text and ")" not in text:
        return text, None
    match = _PARENTHETICAL.fullmatch(text)
    if not match:
        raise ValueError(f"unbalanced parentheses in {raw!r}")
    base = match.group(1).strip()
    qualifier = match.group(2).strip()
    return base, qualifier or None


def parse_acquisition_from_filename(filename: str) -> tuple[str, datetime.date] | None:
    """Extract (place, date) from '<label>_<Place>_<DD><month><YYYY>_<page>.<ext>'.

    Month abbreviations are Italian (gen..dic). Returns None when the
    filename does not follow the pattern; raises ValueError when it does
    but the calendar date is invalid.
    """
    match = _ACQUISITION.fullmatch(filename.strip())
    if not match:
        return None
    place, day, month, year = match.groups()
    date = datetime.date(int(year), _IT_MONTHS[month], int(day))
    return place, date


def _parse_year(text: str, row: int, column: str,
                report: DiagnosticsReport) -> int | None:
    value = clean_cell(text)
    if value is None:
        return None
    if not _YEAR.fullmatch(value):
        report.warning("bad-year", f"expected a 4-digit year, got {value!r}",
                       row=row, column=column)
        return None
    return int(value)


def parse_table(data: bytes | BinaryIO,
                mapping: ColumnMapping | None = None,
                ) -> tuple[list[AnnotationRow], DiagnosticsReport]:
    """Parse the working table into annotation rows.

    One AnnotationRow per non-empty data line; unmapped columns are
    ignored; rows without a notebook or recipe title are excluded and
    reported. Raises ParseError for non-UTF-8 input or when the notebook
    or recipe title column is missing from the header.
    """
    mapping = mapping or ColumnMapping()
    report = DiagnosticsReport()
    raw = data.read() if hasattr(data, "read") else data
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from exc

    lines = text.split("\n")
    header = [cell.strip() for cell in lines[0].rstrip("\r").split("\t")]
    col_index: dict[str, int] = {}
    for idx, name in enumerate(header):
        if name in col_index:
            report.warning("duplicate-column",
                           f"header {name!r} appears more than once; first wins",
                           row=1, column=name)
            continue
        col_index[name] = idx

    for field_name in ("notebook", "recipe"):
        header_name = getattr(mapping, field_name)
        if header_name not in col_index:
            raise ParseError(f"mandatory column {header_name!r} not found in header")

    rows: list[AnnotationRow] = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        cells = line.split("\t")

        def raw_cell(field_name: str) -> str:
            idx = col_index.get(getattr(mapping, field_name))
            if idx is None or idx >= len(cells):
                return ""
            return cells[idx]

        def cell(field_name: str) -> str | None:
            return clean_cell(raw_cell(field_name))

        notebook = cell("notebook")
        recipe = cell("recipe")
        if notebook is None or recipe is None:
            missing = mapping.notebook if notebook is None else mapping.recipe
            report.error("missing-title",
                         "notebook and recipe title must be non-empty",
                         row=lineno, column=missing)
            continue

        images = split_multivalue(cell("images") or "")
        pages = split_multivalue(cell("pages") or "")
        if len(images) != len(pages):
            report.error(
                "image-page-mismatch",
                f"{len(images)} image(s) vs {len(pages)} page(s)",
                row=lineno, column=mapping.images)

        rows.append(AnnotationRow(
            source_row=lineno,
            notebook_title=notebook,
            recipe_title=recipe,
            year_from=_parse_year(raw_cell("year_from"), lineno,
                                  mapping.year_from, report),
            year_to=_parse_year(raw_cell("year_to"), lineno,
                                mapping.year_to, report),
            time_qualifier=cell("time_qualifier"),
            place=cell("place"),
            region=cell("region"),
            country=cell("country"),
            author=cell("author"),
            image_names=images,
            page_numbers=pages,
            chapter_title=cell("chapter"),
            ingredient=cell("ingredient"),
            quantity=cell("quantity"),
            unit=cell("unit"),
            course_type=cell("course"),
            scope=cell("scope"),
            procedures=split_multivalue(cell("procedures") or ""),
            serves=cell("serves"),
            prep_time=cell("prep_time"),
            cook_time=cell("cook_time"),
            temperature=cell("temperature"),
        ))

    return rows, report


def _merge_scalar(current, new, *, code: str, what: str, row: int, column: str,
                  report: DiagnosticsReport):
    """First non-empty value wins; a different later value is reported."""
    if new is None:
        return current
    if current is None:
        return new
    if current != new:
        report.warning(code, f"conflicting {what}: kept {current!r}, saw {new!r}",
                       row=row, column=column)
    return current


def _append_unique(target: list[str], items: list[str]) -> None:
    for item in items:
        if item not in target:
            target.append(item)


def _parse_serves(text: str, row: int, report: DiagnosticsReport) -> int | None:
    match = re.match(r"(\d+)", text)
    if not match or int(match.group(1)) <= 0:
        report.warning("bad-serves", f"expected a positive count, got {text!r}",
                       row=row, column="serves")
        return None
    return int(match.group(1))


def _build_use(row: AnnotationRow, report: DiagnosticsReport) -> IngredientUse:
    try:
        base, qualifier = parse_ingredient_name(row.ingredient or "")
    except ValueError:
        report.warning("unbalanced-parentheses",
                       f"could not extract qualifier from {row.ingredient!r}",
                       row=row.source_row, column="ingredient")
        base, qualifier = (row.ingredient or "").strip(), None

    value: float | None = None
    unit: str | None = None
    if row.quantity is not None:
        try:
            parsed = parse_quantity(row.quantity)
        except ValueError:
            report.warning("unparseable-quantity",
                           f"could not parse quantity {row.quantity!r}",
                           row=row.source_row, column="quantity")
            parsed = None
        if parsed is not None:
            value, unit = parsed
            if unit is None:
                unit = row.unit
    return IngredientUse(
        raw_name=base,
        canonical_name=base,
        source_row=row.source_row,
        qualifier=qualifier,
        quantity_value=value,
        quantity_unit=unit,
    )


def group_recipes(rows: list[AnnotationRow],
                  ) -> tuple[list[Cookbook], DiagnosticsReport]:
    """Group annotation rows into cookbooks and recipes.

    Cookbooks are keyed by notebook title, recipes by (notebook, chapter,
    recipe title); both keep first-appearance order. Scalar metadata takes
    the first non-empty value across the group, with later conflicting
    values reported. Recipe ids are '<cookbook-slug>/<recipe-slug>' with
    '-2', '-3', ... appended on slug collisions within a cookbook.
    """
    report = DiagnosticsReport()
    cookbooks: dict[str, Cookbook] = {}
    recipes: dict[tuple[str, str, str], Recipe] = {}
    recipe_slugs: dict[str, set[str]] = {}
    serves_raw: dict[str, str] = {}
    cookbook_images: dict[str, list[str]] = {}

    for row in rows:
        cookbook = cookbooks.get(row.notebook_title)
        if cookbook is None:
            cookbook = Cookbook(
                id=slugify(row.notebook_title),
                title=row.notebook_title,
                first_row=row.source_row,
            )
            cookbooks[row.notebook_title] = cookbook
            recipe_slugs[cookbook.id] = set()
            cookbook_images[cookbook.id] = []

        for attr, column, what in (
            ("year_from", "From", "start year"),
            ("year_to", "To", "end year"),
            ("time_qualifier", "Time qualifier", "time qualifier"),
            ("place", "Place", "place"),
            ("region", "Region", "region"),
            ("country", "Country", "country"),
            ("author", "Author", "author"),
        ):
            merged = _merge_scalar(getattr(cookbook, attr), getattr(row, attr),
                                   code="inconsistent-group", what=what,
                                   row=row.source_row, column=column,
                                   report=report)
            setattr(cookbook, attr, merged)

        _append_unique(cookbook_images[cookbook.id], row.image_names)

        key = (row.notebook_title, row.chapter_title or "", row.recipe_title)
        recipe = recipes.get(key)
        if recipe is None:
            # Suffix -2, -3, ... in source order; probe so a literal
            # "torta-2" title can never collide with a suffixed id.
            slug = slugify(row.recipe_title)
            taken = recipe_slugs[cookbook.id]
            candidate, attempt = slug, 1
            while candidate in taken:
                attempt += 1
                candidate = f"{slug}-{attempt}"
            taken.add(candidate)
            recipe = Recipe(
                id=f"{cookbook.id}/{candidate}",
                title=row.recipe_title,
                cookbook_ref=cookbook.id,
                first_row=row.source_row,
                chapter=row.chapter_title,
            )
            recipes[key] = recipe
            cookbook.recipes.append(recipe)

        for attr, what in (
            ("course_type", "course"),
            ("scope", "scope"),
            ("prep_time", "preparation time"),
            ("cook_time", "cooking time"),
            ("temperature", "temperature"),
        ):
            merged = _merge_scalar(getattr(recipe, attr), getattr(row, attr),
                                   code="inconsistent-group", what=what,
                                   row=row.source_row, column=what,
                                   report=report)
            setattr(recipe, attr, merged)

        if row.serves is not None:
            previous = serves_raw.get(recipe.id)
            if previous is None:
                serves_raw[recipe.id] = row.serves
                recipe.serves = _parse_serves(row.serves, row.source_row, report)
            elif previous != row.serves:
                report.warning("inconsistent-group",
                               f"conflicting serves: kept {previous!r}, saw {row.serves!r}",
                               row=row.source_row, column="serves")

        _append_unique(recipe.pages, row.page_numbers)
        _append_unique(recipe.images, row.image_names)
        _append_unique(recipe.procedures, row.procedures)

        if row.ingredient is not None:
            recipe.ingredients.append(_build_use(row, report))

    for cookbook in cookbooks.values():
        for filename in cookbook_images[cookbook.id]:
            try:
                acquired = parse_acquisition_from_filename(filename)
            except ValueError:
                report.warning("invalid-acquisition-date",
                               f"filename {filename!r} carries an invalid date",
                               row=cookbook.first_row, column="Img nome")
                continue
            if acquired is not None:
                cookbook.acquisition_place, cookbook.acquisition_date = acquired
                break

    return list(cookbooks.values()), report
