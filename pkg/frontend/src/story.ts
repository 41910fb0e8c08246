// The scroll-driven homepage: five sections in fixed order, each bound to
// its dataset. A section whose data failed to load renders a placeholder
// with a retry control instead of taking the page down.

import type { Loaded, SiteData } from "./loader.js";
import { escapeHtml, svgBars, svgMap, svgMatrix, svgNetwork, svgPie } from "./charts.js";
import { recipesHash } from "./router.js";
import { emptyFilter } from "./filters.js";

export type TopicId =
  | "overview"
  | "provenance"
  | "ingredients"
  | "dishes"
  | "gender";

export interface StorySection {
  topic: TopicId;
  heading: string;
  narrative: string;
}

export const STORY_ORDER: readonly TopicId[] = [
  "overview",
  "provenance",
  "ingredients",
  "dishes",
  "gender",
];

export function storySections(): StorySection[] {
  return [
    {
      topic: "overview",
      heading: "A corpus of handwritten cookbooks",
      narrative:
        "Family notebooks, transcribed page by page by volunteers, become " +
        "a browsable collection. Start with the numbers.",
    },
    {
      topic: "provenance",
      heading: "Where the notebooks come from",
      narrative:
        "Each cookbook is tied to the city where it was written or found. " +
        "Larger dots hold more recipes; click one to browse them.",
    },
    {
      topic: "ingredients",
      heading: "What the kitchens shared",
      narrative:
        "Ingredients that appear together in the same recipes, and the " +
        "units of measure the writers reached for.",
    },
    {
      topic: "dishes",
      heading: "Types of courses",
      narrative:
        "From first courses to desserts: how the corpus splits by type " +
        "of dish. Click a slice to see its recipes.",
    },
    {
      topic: "gender",
      heading: "Who wrote them",
      narrative:
        "Recipes attributed through each notebook's author, tallied by " +
        "gender where the registry knows the name.",
    },
  ];
}

function plural(count: number, noun: string): string {
  return `${count} ${noun}${count === 1 ? "" : "s"}`;
}

function errorCard(topic: TopicId, error: string): string {
  return (
    `<div class="section-error" data-topic="${topic}">` +
    `<p>This section's data did not load.</p>` +
    `<p class="error-detail">${escapeHtml(error)}</p>` +
    `<button type="button" data-retry="${topic}">Retry</button></div>`
  );
}

function firstError(...loads: Loaded<unknown>[]): string | null {
  for (const load of loads) {
    if (!load.ok) return load.error;
  }
  return null;
}

function overviewBody(data: SiteData): string {
  const stats = data.general.stats;
  const summary = [
    plural(stats.cookbooks, "cookbook"),
    plural(stats.recipes, "recipe"),
    plural(stats.ingredients, "ingredient"),
  ].join(", ");
  return (
    `<p class="corpus-numbers">${escapeHtml(summary)}</p>` +
    `<p><a href="#/recipes">Browse all recipes</a></p>`
  );
}

function provenanceBody(data: SiteData): string {
  if (!data.map.ok) return errorCard("provenance", data.map.error);
  return svgMap(data.map.data);
}

function ingredientsBody(data: SiteData): string {
  const error = firstError(data.ingredients, data.matrix, data.network,
                           data.units);
  if (error !== null) return errorCard("ingredients", error);
  if (!data.ingredients.ok || !data.matrix.ok || !data.network.ok ||
      !data.units.ok) return errorCard("ingredients", "not loaded");
  const count = data.ingredients.data.buckets.length;
  const units = data.units.data.entries.map((e) => ({
    label: e.unit,
    count: e.count,
  }));
  return (
    `<p>${plural(count, "distinct ingredient")} across the corpus.</p>` +
    svgMatrix(data.matrix.data) +
    svgNetwork(data.network.data) +
    `<h3>Units of measure</h3>` + svgBars(units)
  );
}

function dishesBody(data: SiteData): string {
  if (!data.piechart.ok) return errorCard("dishes", data.piechart.error);
  const legend = data.piechart.data.slices.map((slice) => {
    const link = slice.label === "uncategorised"
      ? "#/recipes"
      : recipesHash({ ...emptyFilter(), courses: new Set([slice.label]) });
    return (
      `<li><a href="${escapeHtml(link)}">${escapeHtml(slice.label)}</a>` +
      ` (${slice.count})</li>`
    );
  });
  return svgPie(data.piechart.data) +
    `<ul class="pie-legend">${legend.join("")}</ul>`;
}

function genderBody(data: SiteData): string {
  const entries = Object.entries(data.general.gender)
    .map(([label, count]) => ({ label, count }))
    .sort((a, b) => b.count - a.count || (a.label < b.label ? -1 : 1));
  if (entries.length === 0) {
    return `<p>No recipes to attribute yet.</p>`;
  }
  return svgBars(entries);
}

const BODIES: Record<TopicId, (data: SiteData) => string> = {
  overview: overviewBody,
  provenance: provenanceBody,
  ingredients: ingredientsBody,
  dishes: dishesBody,
  gender: genderBody,
};

export function renderSection(
  section: StorySection,
  data: SiteData,
): string {
  return (
    `<section class="story-section" id="topic-${section.topic}" ` +
    `data-topic="${section.topic}" data-reveal>` +
    `<h2>${escapeHtml(section.heading)}</h2>` +
    `<p class="narrative">${escapeHtml(section.narrative)}</p>` +
    BODIES[section.topic](data) +
    `</section>`
  );
}

export function renderStory(data: SiteData): string {
  const sections = storySections()
    .map((section) => renderSection(section, data))
    .join("");
  return `<div class="story">${sections}</div>`;
}
