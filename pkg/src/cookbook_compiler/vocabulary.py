"""Controlled vocabularies: loading, term resolution, corpus validation.

Vocabulary terms match case-insensitively after trimming whitespace, but
accents are significant ("Forlì" and "Forli" are different places).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .diagnostics import DiagnosticsReport
from .model import Cookbook
from .table_ingest import ParseError

INGREDIENTS = "ingredients"
COURSES = "courses"
SCOPES = "scopes"
PROCEDURES = "procedures"
UNITS = "units"

GENDERS = ("female", "male", "unknown")


def _key(term: str) -> str:
    return term.strip().casefold()


@dataclass(frozen=True)
class GeoPlace:
    city: str
    region: str | None = None
    country: str | None = None
    latitude: float | None = None
    longitude: float | None = None


@dataclass(frozen=True)
class Resolution:
    """Outcome of looking a term up in one vocabulary facet."""

    term: str
    resolved: str | None
    was_variant: bool = False


@dataclass
class VocabularySet:
    """Per-facet canonical terms plus geography, units and author registry."""

    terms: dict[str, dict[str, str]] = field(default_factory=dict)
    ingredient_variants: dict[str, str] = field(default_factory=dict)
    geography: dict[str, GeoPlace] = field(default_factory=dict)
    unit_grams: dict[str, float | None] = field(default_factory=dict)
    author_gender: dict[str, str] = field(default_factory=dict)

    def has_terms(self, facet: str) -> bool:
        return bool(self.terms.get(facet))

    def resolve(self, facet: str, term: str) -> Resolution:
        key = _key(term)
        canonical = self.terms.get(facet, {}).get(key)
        if canonical is not None:
            return Resolution(term, canonical)
        if facet == INGREDIENTS:
            canonical = self.ingredient_variants.get(key)
            if canonical is not None:
                return Resolution(term, canonical, was_variant=True)
        return Resolution(term, None)

    def lookup_place(self, city: str) -> GeoPlace | None:
        return self.geography.get(_key(city))

    def grams(self, unit: str) -> float | None:
        return self.unit_grams.get(_key(unit))

    def gender(self, author: str) -> str:
        return self.author_gender.get(_key(author), "unknown")


def _add_term(vocab: VocabularySet, facet: str, term: str,
              lineno: int, filename: str, report: DiagnosticsReport) -> bool:
    bucket = vocab.terms.setdefault(facet, {})
    key = _key(term)
    if key in bucket:
        report.warning("duplicate-term",
                       f"term {term!r} already defined; first wins",
                       row=lineno, column=filename)
        return False
    bucket[key] = term.strip()
    return True


def _read_rows(path: Path, expected: list[str],
               report: DiagnosticsReport) -> list[tuple[int, list[str]]]:
    """Data lines of one vocabulary file as (lineno, cells), header checked."""
    filename = path.name
    if not path.is_file():
        report.warning("missing-vocabulary",
                       f"{filename} not found; facet left open", column=filename)
        return []
    try:
        text = path.read_bytes().decode("utf-8-sig")
    except UnicodeDecodeError:
        report.error("bad-vocabulary-file", f"{filename} is not valid UTF-8",
                     column=filename)
        return []
    lines = text.split("\n")
    header = [cell.strip() for cell in lines[0].rstrip("\r").split("\t")]
    if [name.casefold() for name in header] != expected:
        report.error("bad-vocabulary-header",
                     f"{filename} header must be {chr(9).join(expected)!r}",
                     row=1, column=filename)
        return []
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        rows.append((lineno, [cell.strip() for cell in line.split("\t")]))
    return rows


def _cell(cells: list[str], idx: int) -> str:
    return cells[idx] if idx < len(cells) else ""


def load_vocabulary(directory: str | Path) -> tuple[VocabularySet, DiagnosticsReport]:
    """Load the vocabulary TSV files under directory.

    Missing files leave their facet open (warning); malformed lines are
    reported as errors and skipped. Raises ParseError when the directory
    itself does not exist.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ParseError(f"vocabulary directory {directory} does not exist")
    vocab = VocabularySet()
    report = DiagnosticsReport()

    for lineno, cells in _read_rows(directory / "ingredients.tsv",
                                    ["ingredient", "variants"], report):
        term = _cell(cells, 0)
        if not term:
            report.error("bad-vocabulary-line", "empty ingredient term",
                         row=lineno, column="ingredients.tsv")
            continue
        if not _add_term(vocab, INGREDIENTS, term, lineno, "ingredients.tsv", report):
            continue
        for variant in _cell(cells, 1).split(";"):
            variant = variant.strip()
            if not variant:
                continue
            key = _key(variant)
            if key in vocab.ingredient_variants or key in vocab.terms[INGREDIENTS]:
                report.warning("duplicate-term",
                               f"variant {variant!r} already defined; first wins",
                               row=lineno, column="ingredients.tsv")
                continue
            vocab.ingredient_variants[key] = term.strip()

    for facet, filename, header in ((COURSES, "courses.tsv", ["course"]),
                                    (PROCEDURES, "procedures.tsv", ["procedure"]),
                                    (SCOPES, "scopes.tsv", ["scope"])):
        for lineno, cells in _read_rows(directory / filename, header, report):
            term = _cell(cells, 0)
            if not term:
                report.error("bad-vocabulary-line", f"empty {header[0]} term",
                             row=lineno, column=filename)
                continue
            _add_term(vocab, facet, term, lineno, filename, report)

    for lineno, cells in _read_rows(directory / "geography.tsv",
                                    ["city", "region", "country", "lat", "lon"],
                                    report):
        city = _cell(cells, 0)
        if not city:
            report.error("bad-vocabulary-line", "empty city name",
                         row=lineno, column="geography.tsv")
            continue
        key = _key(city)
        if key in vocab.geography:
            report.warning("duplicate-term",
                           f"city {city!r} already defined; first wins",
                           row=lineno, column="geography.tsv")
            continue
        lat_text, lon_text = _cell(cells, 3), _cell(cells, 4)
        try:
            latitude = float(lat_text) if lat_text else None
            longitude = float(lon_text) if lon_text else None
        except ValueError:
            report.error("bad-vocabulary-line",
                         f"coordinates for {city!r} are not numbers",
                         row=lineno, column="geography.tsv")
            continue
        if (latitude is None) != (longitude is None):
            report.error("bad-vocabulary-line",
                         f"{city!r} needs both coordinates or neither",
                         row=lineno, column="geography.tsv")
            continue
        vocab.geography[key] = GeoPlace(
            city=city,
            region=_cell(cells, 1) or None,
            country=_cell(cells, 2) or None,
            latitude=latitude,
            longitude=longitude,
        )

    for lineno, cells in _read_rows(directory / "units.tsv",
                                    ["unit", "grams_per_unit"], report):
        term = _cell(cells, 0)
        if not term:
            report.error("bad-vocabulary-line", "empty unit term",
                         row=lineno, column="units.tsv")
            continue
        grams_text = _cell(cells, 1)
        grams: float | None = None
        if grams_text:
            try:
                grams = float(grams_text)
            except ValueError:
                report.error("bad-vocabulary-line",
                             f"grams per {term!r} is not a number",
                             row=lineno, column="units.tsv")
                continue
            if grams <= 0:
                report.error("bad-vocabulary-line",
                             f"grams per {term!r} must be positive",
                             row=lineno, column="units.tsv")
                continue
        if _add_term(vocab, UNITS, term, lineno, "units.tsv", report):
            vocab.unit_grams[_key(term)] = grams

    for lineno, cells in _read_rows(directory / "authors.tsv",
                                    ["name", "gender"], report):
        name = _cell(cells, 0)
        gender = _cell(cells, 1).casefold()
        if not name or gender not in GENDERS:
            report.error("bad-vocabulary-line",
                         f"author lines need a name and a gender in {GENDERS}",
                         row=lineno, column="authors.tsv")
            continue
        key = _key(name)
        if key in vocab.author_gender:
            report.warning("duplicate-term",
                           f"author {name!r} already defined; first wins",
                           row=lineno, column="authors.tsv")
            continue
        vocab.author_gender[key] = gender

    return vocab, report


def _canon(vocab: VocabularySet, facet: str, term: str | None) -> str | None:
    if term is None:
        return None
    resolution = vocab.resolve(facet, term)
    return resolution.resolved if resolution.resolved is not None else _key(term)


def resolve_corpus(cookbooks: list[Cookbook], vocab: VocabularySet) -> None:
    """Replace facet terms with canonical spellings, in place.

    Unresolved terms are kept in trimmed, casefolded form so that later
    grouping stays case-insensitive. Ingredients matched through a variant
    keep the original spelling in variant_name. Known cities normalize the
    place spelling and fill missing region/country.
    """
    for cookbook in cookbooks:
        if cookbook.place is not None:
            geo = vocab.lookup_place(cookbook.place)
            if geo is not None:
                cookbook.place = geo.city
                cookbook.region = cookbook.region or geo.region
                cookbook.country = cookbook.country or geo.country
        for recipe in cookbook.recipes:
            recipe.course_type = _canon(vocab, COURSES, recipe.course_type)
            recipe.scope = _canon(vocab, SCOPES, recipe.scope)
            procedures: list[str] = []
            for procedure in recipe.procedures:
                term = _canon(vocab, PROCEDURES, procedure)
                if term not in procedures:
                    procedures.append(term)
            recipe.procedures = procedures
            for use in recipe.ingredients:
                resolution = vocab.resolve(INGREDIENTS, use.raw_name)
                if resolution.resolved is not None:
                    use.canonical_name = resolution.resolved
                    if resolution.was_variant:
                        use.variant_name = use.raw_name
                else:
                    use.canonical_name = _key(use.raw_name)
                if use.quantity_unit is not None:
                    use.quantity_unit = _canon(vocab, UNITS, use.quantity_unit)


def validate_corpus(cookbooks: list[Cookbook], vocab: VocabularySet,
                    strict: bool = False) -> DiagnosticsReport:
    """Check the corpus against the vocabularies and structural rules.

    Unresolved terms and unknown cities are warnings, or errors under
    strict; a facet with no loaded terms is never checked. Image/page
    count mismatches and inverted year ranges are always errors.
    """
    report = DiagnosticsReport()
    unresolved = report.error if strict else report.warning

    def check_term(facet: str, term: str | None, label: str,
                   row: int, column: str) -> None:
        if term is None or not vocab.has_terms(facet):
            return
        if vocab.resolve(facet, term).resolved is None:
            unresolved(f"unknown-{label}", f"unknown {label} {term!r}",
                       row=row, column=column)

    for cookbook in cookbooks:
        if (cookbook.place is not None and vocab.geography
                and vocab.lookup_place(cookbook.place) is None):
            unresolved("unknown-city", f"unknown city {cookbook.place!r}",
                       row=cookbook.first_row, column="Place")
        if (cookbook.year_from is not None and cookbook.year_to is not None
                and cookbook.year_from > cookbook.year_to):
            report.error("year-order",
                         f"years {cookbook.year_from}-{cookbook.year_to} are inverted",
                         row=cookbook.first_row, column="From")
        for recipe in cookbook.recipes:
            check_term(COURSES, recipe.course_type, "course",
                       recipe.first_row, "course")
            check_term(SCOPES, recipe.scope, "scope", recipe.first_row, "scope")
            for procedure in recipe.procedures:
                check_term(PROCEDURES, procedure, "procedure",
                           recipe.first_row, "procedure")
            if len(recipe.images) != len(recipe.pages):
                report.error(
                    "image-page-mismatch",
                    f"{len(recipe.images)} image(s) vs {len(recipe.pages)} page(s)",
                    row=recipe.first_row, column="Img nome")
            for use in recipe.ingredients:
                check_term(INGREDIENTS, use.raw_name, "ingredient",
                           use.source_row, "ingredient")
                check_term(UNITS, use.quantity_unit, "unit",
                           use.source_row, "unit")

    return report
