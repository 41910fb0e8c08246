// Hash routes: "#/" story page, "#/recipes?prov=...&ing=...&course=..."
// faceted search with the filter state deep-linked, "#/recipe/<id>" detail.

import { emptyFilter, type FilterState } from "./filters.js";

export type Route =
  | { kind: "story" }
  | { kind: "recipes"; state: FilterState }
  | { kind: "recipe"; id: string };

const PARAM_TO_FACET = {
  prov: "provenance",
  ing: "ingredients",
  course: "courses",
} as const;

function decodeList(raw: string): Set<string> {
  const values = raw.split(",").filter((v) => v.length > 0)
    .map((v) => decodeURIComponent(v));
  return new Set(values);
}

export function parseRoute(hash: string): Route {
  const path = hash.startsWith("#") ? hash.slice(1) : hash;
  if (path.startsWith("/recipe/")) {
    return { kind: "recipe", id: decodeURIComponent(path.slice(8)) };
  }
  if (path === "/recipes" || path.startsWith("/recipes?")) {
    const state = emptyFilter();
    const query = path.includes("?") ? path.slice(path.indexOf("?") + 1) : "";
    for (const pair of query.split("&")) {
      if (!pair) continue;
      const eq = pair.indexOf("=");
      if (eq < 0) continue;
      const key = pair.slice(0, eq) as keyof typeof PARAM_TO_FACET;
      const facet = PARAM_TO_FACET[key];
      if (facet) state[facet] = decodeList(pair.slice(eq + 1));
    }
    return { kind: "recipes", state };
  }
  return { kind: "story" };
}

function encodeList(values: Set<string>): string {
  return [...values].sort().map(encodeURIComponent).join(",");
}

export function recipesHash(state: FilterState): string {
  const params: string[] = [];
  if (state.provenance.size) params.push(`prov=${encodeList(state.provenance)}`);
  if (state.ingredients.size) params.push(`ing=${encodeList(state.ingredients)}`);
  if (state.courses.size) params.push(`course=${encodeList(state.courses)}`);
  return params.length ? `#/recipes?${params.join("&")}` : "#/recipes";
}

export function recipeHash(id: string): string {
  return `#/recipe/${encodeURIComponent(id)}`;
}
