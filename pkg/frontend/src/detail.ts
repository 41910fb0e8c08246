// Recipe detail view: the full card for one recipe, with the citation
// line, timing fields falling back to "n/s", the quantity-annotated
// ingredient list, variant footnotes, and the digitised page images.

import type { SiteData } from "./loader.js";
import type { CookbookArtifact, IngredientEntry, RecipeRecord } from "./types.js";
import { escapeHtml } from "./charts.js";

// Quantities print with a decimal comma, the way the notebooks write them.
export function formatQuantity(value: number): string {
  return String(value).replace(".", ",");
}

export function ingredientLine(entry: IngredientEntry): string {
  const name = entry.qualifier
    ? `${entry.name} (${entry.qualifier})`
    : entry.name;
  if (entry.quantity === undefined) return name;
  const amount = entry.unit
    ? `${formatQuantity(entry.quantity)} ${entry.unit}`
    : formatQuantity(entry.quantity);
  return `${amount} | ${name}`;
}

function timespanText(book: CookbookArtifact): string | null {
  const span = book.timespan;
  if (!span) return null;
  const range = span.from !== undefined && span.to !== undefined
    ? `${span.from} - ${span.to}`
    : String(span.from ?? span.to ?? "");
  if (!range) return null;
  return span.qualifier ? `years ${range} ${span.qualifier}` : `years ${range}`;
}

export function citationLine(
  record: RecipeRecord,
  book: CookbookArtifact,
): string {
  const parts: string[] = [];
  if (book.author) parts.push(book.author);
  parts.push(book.title);
  if (record.pages.length > 0) parts.push(`p. ${record.pages.join(", ")}`);
  if (record.chapter) parts.push(`(ch. ${record.chapter})`);
  if (book.place) parts.push(book.place);
  const years = timespanText(book);
  if (years) parts.push(years);
  return parts.join(", ");
}

function field(label: string, value: string | undefined): string {
  return `<li>${escapeHtml(label)}: ${escapeHtml(value ?? "n/s")}</li>`;
}

function findRecipe(
  data: SiteData,
  recipeId: string,
): { record: RecipeRecord; book: CookbookArtifact } | null {
  for (const book of data.cookbooks.values()) {
    if (!book.ok) continue;
    const record = book.data.recipes[recipeId];
    if (record) return { record, book: book.data };
  }
  return null;
}

export function renderRecipeDetail(recipeId: string, data: SiteData): string {
  const found = findRecipe(data, recipeId);
  if (!found) {
    return (
      `<div class="not-found"><h2>Recipe not found</h2>` +
      `<p>No recipe with id <code>${escapeHtml(recipeId)}</code>.</p>` +
      `<p><a href="#/recipes">Back to the recipe list</a></p></div>`
    );
  }
  const { record, book } = found;

  const footnotes: string[] = [];
  const items = record.ingredients.map((entry) => {
    let line = escapeHtml(ingredientLine(entry));
    if (entry.variant) {
      footnotes.push(
        `${escapeHtml(entry.name)} is also known as ` +
        `[${escapeHtml(entry.variant)}]`,
      );
      line += `<sup>*</sup>`;
    }
    return `<li>${line}</li>`;
  });

  const procedures = record.procedures.length
    ? `<h3>cooking procedure</h3><ul class="procedures">` +
      record.procedures.map((p) => `<li>${escapeHtml(p)}</li>`).join("") +
      `</ul>`
    : "";

  const images = record.images.map((name, i) =>
    `<figure class="page-image"><img src="images/${escapeHtml(encodeURIComponent(name))}" ` +
    `alt="digitised page ${i + 1} of ${escapeHtml(record.title)}" loading="lazy">` +
    `<figcaption>${escapeHtml(name)}</figcaption></figure>`,
  );

  const serves = record.serves !== undefined
    ? `${record.serves} people`
    : "n/s";

  return (
    `<article class="recipe-detail" data-recipe="${escapeHtml(recipeId)}">` +
    `<h2>${escapeHtml(record.title)}` +
    (record.course ? ` <span class="course">| ${escapeHtml(record.course)}</span>` : "") +
    `</h2>` +
    `<p class="citation">${escapeHtml(citationLine(record, book))}</p>` +
    `<ul class="meta">` +
    `<li>serves: ${escapeHtml(serves)}</li>` +
    field("preparation time", record.prep_time) +
    field("cooking time", record.cook_time) +
    field("temperature", record.temperature) +
    `</ul>` +
    `<h3>ingredients</h3><ul class="ingredients">${items.join("")}</ul>` +
    procedures +
    (footnotes.length
      ? `<p class="footnotes">${footnotes.map((f) => `* ${f}`).join("<br>")}</p>`
      : "") +
    `<div class="images">${images.join("")}</div>` +
    `</article>`
  );
}
