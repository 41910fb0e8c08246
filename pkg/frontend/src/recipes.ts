// The faceted recipe search page: three filter groups, a reset control,
// and the result list as "Title (Author)" links. Rendering is pure; the
// bootstrap wires checkbox changes back into the hash route.

import type { SiteData } from "./loader.js";
import { recipeCatalog } from "./loader.js";
import {
  applyFilters,
  isEmptyFilter,
  type FilterIndexes,
  type FilterState,
} from "./filters.js";
import { escapeHtml } from "./charts.js";
import { recipeHash } from "./router.js";
import type { FacetArtifact } from "./types.js";

function filterGroup(
  name: string,
  param: string,
  index: FacetArtifact,
  selected: Set<string>,
): string {
  const boxes = index.buckets.map((bucket) => {
    const value = escapeHtml(bucket.value);
    const checked = selected.has(bucket.value) ? " checked" : "";
    return (
      `<label><input type="checkbox" data-facet="${param}" ` +
      `value="${value}"${checked}> ${value} (${bucket.recipes.length})</label>`
    );
  });
  return (
    `<fieldset class="filter-group" data-group="${param}">` +
    `<legend>${escapeHtml(name)}</legend>${boxes.join("")}</fieldset>`
  );
}

export function renderRecipesPage(
  data: SiteData,
  state: FilterState,
): string {
  const catalog = recipeCatalog(data);
  const byId = new Map(catalog.map((entry) => [entry.id, entry]));

  const groups: string[] = [];
  let results: string;
  if (data.provenance.ok && data.ingredients.ok && data.categories.ok) {
    const indexes: FilterIndexes = {
      provenance: data.provenance.data,
      ingredients: data.ingredients.data,
      categories: data.categories.data,
    };
    groups.push(
      filterGroup("Provenance", "prov", data.provenance.data,
                  state.provenance),
      filterGroup("Ingredients", "ing", data.ingredients.data,
                  state.ingredients),
      filterGroup("Type of dish", "course", data.categories.data,
                  state.courses),
    );
    const ids = applyFilters(state, indexes, catalog);
    const items = ids.map((id) => {
      const entry = byId.get(id)!;
      const label = entry.author
        ? `${entry.title} (${entry.author})`
        : entry.title;
      return (
        `<li><a href="${escapeHtml(recipeHash(id))}">` +
        `${escapeHtml(label)}</a></li>`
      );
    });
    const open = isEmptyFilter(state)
      ? "every recipe"
      : "matching the filters";
    results =
      `<p class="result-count">${ids.length} recipes ${open}</p>` +
      `<ol class="recipe-list">${items.join("")}</ol>`;
  } else {
    const broken = [data.provenance, data.ingredients, data.categories]
      .filter((load) => !load.ok)
      .map((load) => (load.ok ? "" : load.error));
    results =
      `<div class="section-error"><p>Filter indexes did not load.</p>` +
      `<p class="error-detail">${escapeHtml(broken.join("; "))}</p></div>`;
  }

  return (
    `<div class="recipes-page">` +
    `<aside class="filters">` +
    `<button type="button" id="reset-filters">RESET ALL FILTERS</button>` +
    groups.join("") +
    `</aside>` +
    `<main class="results">${results}</main>` +
    `</div>`
  );
}
