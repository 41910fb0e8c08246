"""Datasets behind the homepage charts: map, matrix, network, pie, units."""

from __future__ import annotations

from dataclasses import dataclass, field

from .aggregation import index_by_category
from .diagnostics import DiagnosticsReport
from .model import Cookbook
from .textnorm import sort_fold
from .vocabulary import VocabularySet


@dataclass(frozen=True)
class MapPoint:
    city: str
    latitude: float
    longitude: float
    cookbook_count: int
    recipe_count: int
    region: str | None = None
    country: str | None = None


@dataclass
class MapDataset:
    points: list[MapPoint] = field(default_factory=list)


@dataclass
class CooccurrenceMatrix:
    """Square recipe-co-occurrence counts over sorted ingredient labels."""

    labels: list[str] = field(default_factory=list)
    cells: list[list[int]] = field(default_factory=list)


@dataclass(frozen=True)
class NetworkNode:
    ingredient: str
    weight: int


@dataclass(frozen=True)
class NetworkEdge:
    source: str
    target: str
    weight: int


@dataclass
class IngredientNetwork:
    nodes: list[NetworkNode] = field(default_factory=list)
    edges: list[NetworkEdge] = field(default_factory=list)


@dataclass
class PieDataset:
    slices: list[tuple[str, int]] = field(default_factory=list)


@dataclass
class UnitsProfile:
    entries: list[tuple[str, int]] = field(default_factory=list)


def build_map_dataset(cookbooks: list[Cookbook], vocab: VocabularySet,
                      ) -> tuple[MapDataset, DiagnosticsReport]:
    """Aggregate cookbook and recipe counts per geolocated city.

    Cookbooks whose city is unknown to the geography vocabulary, or known
    but without coordinates, are left off the map and reported.
    """
    report = DiagnosticsReport()
    tallies: dict[str, list] = {}
    for cookbook in cookbooks:
        if cookbook.place is None:
            continue
        geo = vocab.lookup_place(cookbook.place)
        if geo is None:
            report.warning("unknown-city", f"unknown city {cookbook.place!r}",
                           row=cookbook.first_row, column="Place")
            continue
        if geo.latitude is None or geo.longitude is None:
            report.warning("missing-coordinates",
                           f"no coordinates for {geo.city!r}",
                           row=cookbook.first_row, column="Place")
            continue
        entry = tallies.setdefault(geo.city, [geo, 0, 0])
        entry[1] += 1
        entry[2] += len(cookbook.recipes)

    dataset = MapDataset()
    for city in sorted(tallies, key=lambda c: (sort_fold(c), c)):
        geo, cookbook_count, recipe_count = tallies[city]
        dataset.points.append(MapPoint(
            city=geo.city,
            latitude=geo.latitude,
            longitude=geo.longitude,
            cookbook_count=cookbook_count,
            recipe_count=recipe_count,
            region=geo.region,
            country=geo.country,
        ))
    return dataset, report


def build_cooccurrence_matrix(cookbooks: list[Cookbook],
                              max_labels: int = 200,
                              report: DiagnosticsReport | None = None,
                              ) -> CooccurrenceMatrix:
    """Count, per ingredient pair, the recipes using both.

    Each recipe's ingredient set is deduplicated first, so a recipe adds
    at most 1 to any cell; the diagonal holds per-ingredient recipe
    counts. When distinct ingredients exceed max_labels, only the
    top-max_labels by recipe count are kept (warning on the report).
    """
    if max_labels < 1:
        raise ValueError("max_labels must be at least 1")
    recipe_sets = [frozenset(use.canonical_name for use in recipe.ingredients)
                   for cookbook in cookbooks for recipe in cookbook.recipes]
    recipe_counts: dict[str, int] = {}
    for names in recipe_sets:
        for name in names:
            recipe_counts[name] = recipe_counts.get(name, 0) + 1

    kept = set(recipe_counts)
    if len(kept) > max_labels:
        ranked = sorted(recipe_counts, key=lambda n: (-recipe_counts[n], n))
        kept = set(ranked[:max_labels])
        if report is not None:
            report.warning(
                "matrix-truncated",
                f"{len(recipe_counts)} ingredients exceed the cap of "
                f"{max_labels}; keeping the most used")

    labels = sorted(kept)
    position = {label: i for i, label in enumerate(labels)}
    size = len(labels)
    cells = [[0] * size for _ in range(size)]
    for names in recipe_sets:
        present = sorted(position[name] for name in names if name in position)
        for offset, i in enumerate(present):
            cells[i][i] += 1
            for j in present[offset + 1:]:
                cells[i][j] += 1
                cells[j][i] += 1
    return CooccurrenceMatrix(labels=labels, cells=cells)


def build_network(matrix: CooccurrenceMatrix,
                  threshold: int = 1) -> IngredientNetwork:
    """Reduce the matrix to a weighted graph of frequent pairings.

    Nodes keep their diagonal recipe count even when isolated; an edge
    appears for each unordered pair whose co-occurrence reaches the
    threshold. Raises ValueError for thresholds below 1.
    """
    if threshold < 1:
        raise ValueError("network threshold must be at least 1")
    network = IngredientNetwork()
    for i, label in enumerate(matrix.labels):
        network.nodes.append(NetworkNode(label, matrix.cells[i][i]))
    for i, source in enumerate(matrix.labels):
        for j in range(i + 1, len(matrix.labels)):
            weight = matrix.cells[i][j]
            if weight >= threshold:
                network.edges.append(NetworkEdge(source, matrix.labels[j], weight))
    return network


def build_piechart(cookbooks: list[Cookbook]) -> PieDataset:
    """One slice per course (uncategorised included), largest first."""
    sizes = index_by_category(cookbooks).bucket_sizes()
    slices = sorted(sizes.items(), key=lambda item: (-item[1], item[0]))
    return PieDataset(slices=slices)


def build_units_profile(cookbooks: list[Cookbook]) -> UnitsProfile:
    """Tally ingredient uses per unit; quantity-less uses are "unspecified"."""
    tallies: dict[str, int] = {}
    for cookbook in cookbooks:
        for recipe in cookbook.recipes:
            for use in recipe.ingredients:
                unit = use.quantity_unit if use.quantity_unit is not None else "unspecified"
                tallies[unit] = tallies.get(unit, 0) + 1
    entries = sorted(tallies.items(), key=lambda item: (-item[1], item[0]))
    return UnitsProfile(entries=entries)
