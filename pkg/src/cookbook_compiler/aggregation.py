"""Corpus statistics and faceted recipe indexes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import Cookbook, Recipe
from .textnorm import letter_bucket, sort_fold
from .vocabulary import VocabularySet

UNCATEGORISED = "uncategorised"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class OverviewStats:
    cookbook_count: int
    recipe_count: int
    ingredient_count: int
    gender_recipes: dict[str, int]


@dataclass
class FacetIndex:
    """Ordered buckets of recipe ids for one facet."""

    facet: str
    buckets: dict[str, list[str]] = field(default_factory=dict)

    def bucket_sizes(self) -> dict[str, int]:
        return {key: len(ids) for key, ids in self.buckets.items()}


def _ordered_recipes(cookbooks: list[Cookbook]) -> list[tuple[Recipe, Cookbook]]:
    """Recipes in listing order: folded title, then folded author, then id."""
    pairs = [(recipe, cookbook)
             for cookbook in cookbooks for recipe in cookbook.recipes]
    pairs.sort(key=lambda pair: (sort_fold(pair[0].title),
                                 sort_fold(pair[1].author or ""),
                                 pair[0].title, pair[1].author or "",
                                 pair[0].id))
    return pairs


def _finish(facet: str, buckets: dict[str, list[str]],
            last: str | None = None) -> FacetIndex:
    """Index with buckets sorted by folded key, the catch-all key last."""
    index = FacetIndex(facet)
    for key in sorted(buckets, key=lambda k: (k == last, sort_fold(k), k)):
        index.buckets[key] = buckets[key]
    return index


def index_by_letter(cookbooks: list[Cookbook]) -> FacetIndex:
    """Partition recipes by the accent-folded initial of their title.

    Keys are A-Z, with "#" for non-letter initials; "#" sorts last.
    """
    buckets: dict[str, list[str]] = {}
    for recipe, _ in _ordered_recipes(cookbooks):
        buckets.setdefault(letter_bucket(recipe.title), []).append(recipe.id)
    index = FacetIndex("alphabet")
    for key in sorted(buckets, key=lambda k: (k == "#", k)):
        index.buckets[key] = buckets[key]
    return index


def index_by_category(cookbooks: list[Cookbook]) -> FacetIndex:
    """Partition recipes by course; no course buckets under "uncategorised"."""
    buckets: dict[str, list[str]] = {}
    for recipe, _ in _ordered_recipes(cookbooks):
        key = recipe.course_type if recipe.course_type is not None else UNCATEGORISED
        buckets.setdefault(key, []).append(recipe.id)
    return _finish("categories", buckets, last=UNCATEGORISED)


def index_by_ingredient(cookbooks: list[Cookbook]) -> FacetIndex:
    """Invert recipes over canonical ingredient names.

    A recipe appears once per distinct canonical ingredient it uses.
    """
    buckets: dict[str, list[str]] = {}
    for recipe, _ in _ordered_recipes(cookbooks):
        for name in sorted({use.canonical_name for use in recipe.ingredients}):
            buckets.setdefault(name, []).append(recipe.id)
    return _finish("ingredients", buckets)


def index_by_provenance(cookbooks: list[Cookbook]) -> FacetIndex:
    """Partition recipes by their cookbook's city; no city → "unknown"."""
    buckets: dict[str, list[str]] = {}
    for recipe, cookbook in _ordered_recipes(cookbooks):
        key = cookbook.place if cookbook.place is not None else UNKNOWN
        buckets.setdefault(key, []).append(recipe.id)
    return _finish("provenance", buckets, last=UNKNOWN)


def gender_breakdown(cookbooks: list[Cookbook],
                     vocab: VocabularySet) -> dict[str, int]:
    """Recipe counts per registered author gender; unregistered → "unknown"."""
    tallies: dict[str, int] = {}
    for cookbook in cookbooks:
        gender = vocab.gender(cookbook.author) if cookbook.author else UNKNOWN
        if cookbook.recipes:
            tallies[gender] = tallies.get(gender, 0) + len(cookbook.recipes)
    return dict(sorted(tallies.items()))


def overview_stats(cookbooks: list[Cookbook],
                   vocab: VocabularySet) -> OverviewStats:
    """Corpus headline numbers: cookbooks, recipes, distinct ingredients."""
    names = {use.canonical_name
             for cookbook in cookbooks
             for recipe in cookbook.recipes
             for use in recipe.ingredients}
    return OverviewStats(
        cookbook_count=len(cookbooks),
        recipe_count=sum(len(cookbook.recipes) for cookbook in cookbooks),
        ingredient_count=len(names),
        gender_recipes=gender_breakdown(cookbooks, vocab),
    )
