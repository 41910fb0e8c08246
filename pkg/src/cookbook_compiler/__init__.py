"""Compile crowdsourced cookbook transcription tables into JSON site data.

The pipeline: parse the TSV working table, group annotation rows into
recipes and cookbooks, resolve terms against controlled vocabularies,
validate, aggregate statistics and facet indexes, build the chart
datasets, and emit canonical JSON artifacts.
"""

from .aggregation import (
    FacetIndex,
    OverviewStats,
    gender_breakdown,
    index_by_category,
    index_by_ingredient,
    index_by_letter,
    index_by_provenance,
    overview_stats,
)
from .config import BuildConfig, ConfigError
from .diagnostics import Diagnostic, DiagnosticsReport
from .emit import (
    EmitError,
    SiteDataset,
    canonical_json,
    check_image_manifest,
    emit_cookbook_file,
    emit_site_data,
)
from .model import AnnotationRow, Cookbook, IngredientUse, Recipe
from .table_ingest import (
    ColumnMapping,
    ParseError,
    group_recipes,
    parse_quantity,
    parse_table,
)
from .viz_datasets import (
    CooccurrenceMatrix,
    IngredientNetwork,
    MapDataset,
    PieDataset,
    UnitsProfile,
    build_cooccurrence_matrix,
    build_map_dataset,
    build_network,
    build_piechart,
    build_units_profile,
)
from .vocabulary import (
    VocabularySet,
    load_vocabulary,
    resolve_corpus,
    validate_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotationRow",
    "BuildConfig",
    "ColumnMapping",
    "ConfigError",
    "Cookbook",
    "CooccurrenceMatrix",
    "Diagnostic",
    "DiagnosticsReport",
    "EmitError",
    "FacetIndex",
    "IngredientNetwork",
    "IngredientUse",
    "MapDataset",
    "OverviewStats",
    "ParseError",
    "PieDataset",
    "Recipe",
    "SiteDataset",
    "UnitsProfile",
    "VocabularySet",
    "build_cooccurrence_matrix",
    "build_map_dataset",
    "build_network",
    "build_piechart",
    "build_units_profile",
    "canonical_json",
    "check_image_manifest",
    "emit_cookbook_file",
    "emit_site_data",
    "gender_breakdown",
    "group_recipes",
    "index_by_category",
    "index_by_ingredient",
    "index_by_letter",
    "index_by_provenance",
    "load_vocabulary",
    "overview_stats",
    "parse_quantity",
    "parse_table",
    "resolve_corpus",
    "validate_corpus",
]
