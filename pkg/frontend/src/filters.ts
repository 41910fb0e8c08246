// Client-side faceted filtering over the emitted indexes. Within a facet,
// selected values union (OR); across facets they intersect (AND); an empty
// state selects the whole corpus. Pure functions, no DOM.

import type { RecipeEntry } from "./loader.js";
import type { FacetArtifact } from "./types.js";
import { sortFold } from "./textfold.js";

export interface FilterState {
  provenance: Set<string>;
  ingredients: Set<string>;
  courses: Set<string>;
}

export interface FilterIndexes {
  provenance: FacetArtifact;
  ingredients: FacetArtifact;
  categories: FacetArtifact;
}

export function emptyFilter(): FilterState {
  return { provenance: new Set(), ingredients: new Set(), courses: new Set() };
}

export function isEmptyFilter(state: FilterState): boolean {
  return state.provenance.size === 0 && state.ingredients.size === 0 &&
    state.courses.size === 0;
}

export function resetFilters(): FilterState {
  return emptyFilter();
}

function facetUnion(index: FacetArtifact, selected: Set<string>): Set<string> {
  const ids = new Set<string>();
  for (const bucket of index.buckets) {
    if (selected.has(bucket.value)) {
      for (const id of bucket.recipes) ids.add(id);
    }
  }
  return ids;
}

export function compareRecipes(a: RecipeEntry, b: RecipeEntry): number {
  const keyA = [sortFold(a.title), sortFold(a.author), a.title, a.author, a.id];
  const keyB = [sortFold(b.title), sortFold(b.author), b.title, b.author, b.id];
  for (let i = 0; i < keyA.length; i++) {
    if (keyA[i]! < keyB[i]!) return -1;
    if (keyA[i]! > keyB[i]!) return 1;
  }
  return 0;
}

// Ordered recipe ids matching the state; catalog defines the universe.
export function applyFilters(
  state: FilterState,
  indexes: FilterIndexes,
  catalog: RecipeEntry[],
): string[] {
  const constraints: Set<string>[] = [];
  if (state.provenance.size > 0) {
    constraints.push(facetUnion(indexes.provenance, state.provenance));
  }
  if (state.ingredients.size > 0) {
    constraints.push(facetUnion(indexes.ingredients, state.ingredients));
  }
  if (state.courses.size > 0) {
    constraints.push(facetUnion(indexes.categories, state.courses));
  }
  const matches = catalog.filter((entry) =>
    constraints.every((ids) => ids.has(entry.id)),
  );
  return matches.sort(compareRecipes).map((entry) => entry.id);
}
