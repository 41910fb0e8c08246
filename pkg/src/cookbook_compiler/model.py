"""Corpus model: annotation rows grouped into recipes and cookbooks."""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field


@dataclass
class AnnotationRow:
    """One table row: one ingredient-level annotation of one recipe.

    Rows with an empty ingredient cell still carry recipe and cookbook
    metadata. ``source_row`` is the 1-based physical line number in the
    input file (the header is line 1).
    """

    source_row: int
    notebook_title: str
    recipe_title: str
    year_from: int | None = None
    year_to: int | None = None
    time_qualifier: str | None = None
    place: str | None = None
    region: str | None = None
    country: str | None = None
    author: str | None = None
    image_names: list[str] = field(default_factory=list)
    page_numbers: list[str] = field(default_factory=list)
    chapter_title: str | None = None
    ingredient: str | None = None
    quantity: str | None = None
    unit: str | None = None
    course_type: str | None = None
    scope: str | None = None
    procedures: list[str] = field(default_factory=list)
    serves: str | None = None
    prep_time: str | None = None
    cook_time: str | None = None
    temperature: str | None = None


@dataclass
class IngredientUse:
    """One ingredient mention inside a recipe.

    ``canonical_name`` starts as the raw base name and is rewritten by
    vocabulary resolution; ``variant_name`` keeps the transcribed spelling
    when resolution went through the variant map.
    """

    raw_name: str
    canonical_name: str
    source_row: int
    qualifier: str | None = None
    variant_name: str | None = None
    quantity_value: float | None = None
    quantity_unit: str | None = None


@dataclass
class Recipe:
    id: str
    title: str
    cookbook_ref: str
    first_row: int
    chapter: str | None = None
    pages: list[str] = field(default_factory=list)
    images: list[str] = field(default_factory=list)
    ingredients: list[IngredientUse] = field(default_factory=list)
    course_type: str | None = None
    scope: str | None = None
    procedures: list[str] = field(default_factory=list)
    serves: int | None = None
    prep_time: str | None = None
    cook_time: str | None = None
    temperature: str | None = None


@dataclass
class Cookbook:
    id: str
    title: str
    first_row: int
    year_from: int | None = None
    year_to: int | None = None
    time_qualifier: str | None = None
    place: str | None = None
    region: str | None = None
    country: str | None = None
    author: str | None = None
    acquisition_date: datetime.date | None = None
    acquisition_place: str | None = None
    recipes: list[Recipe] = field(default_factory=list)
