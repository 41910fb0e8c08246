// Browser bootstrap: load the artifact set once, then render the route on
// every hash change. Filter checkboxes and reset write the new state back
// into the hash so every view stays deep-linkable.

import { loadSiteData, type SiteData } from "./loader.js";
import { emptyFilter, type FilterState } from "./filters.js";
import { parseRoute, recipesHash } from "./router.js";
import { renderStory } from "./story.js";
import { renderRecipesPage } from "./recipes.js";
import { renderRecipeDetail } from "./detail.js";
import { escapeHtml } from "./charts.js";

const DATA_BASE = "data";

let site: SiteData | null = null;

function app(): HTMLElement {
  return document.getElementById("app")!;
}

function revealOnScroll(): void {
  if (window.matchMedia("(prefers-reduced-motion: reduce)").matches) {
    document.querySelectorAll("[data-reveal]").forEach((el) => {
      el.classList.add("revealed");
    });
    return;
  }
  const observer = new IntersectionObserver(
    (entries) => {
      for (const entry of entries) {
        if (entry.isIntersecting) {
          entry.target.classList.add("revealed");
          observer.unobserve(entry.target);
        }
      }
    },
    { threshold: 0.15 },
  );
  document.querySelectorAll("[data-reveal]").forEach((el) => {
    observer.observe(el);
  });
}

function stateFromCheckboxes(): FilterState {
  const state = emptyFilter();
  const facetOf: Record<string, keyof FilterState> = {
    prov: "provenance",
    ing: "ingredients",
    course: "courses",
  };
  document
    .querySelectorAll<HTMLInputElement>("input[data-facet]:checked")
    .forEach((box) => {
      const facet = facetOf[box.dataset["facet"] ?? ""];
      if (facet) state[facet].add(box.value);
    });
  return state;
}

function render(): void {
  if (!site) return;
  const route = parseRoute(window.location.hash);
  if (route.kind === "story") {
    app().innerHTML = renderStory(site);
    revealOnScroll();
  } else if (route.kind === "recipes") {
    app().innerHTML = renderRecipesPage(site, route.state);
  } else {
    app().innerHTML = renderRecipeDetail(route.id, site);
  }
}

async function boot(): Promise<void> {
  const loaded = await loadSiteData(DATA_BASE);
  if (!loaded.ok) {
    app().innerHTML =
      `<div class="global-error"><h2>The collection did not load</h2>` +
      `<p>${escapeHtml(loaded.error)}</p>` +
      `<button type="button" id="reload">Try again</button></div>`;
    return;
  }
  site = loaded.data;
  render();
}

document.addEventListener("change", (event) => {
  const target = event.target as HTMLElement | null;
  if (target instanceof HTMLInputElement && target.dataset["facet"]) {
    window.location.hash = recipesHash(stateFromCheckboxes());
  }
});

document.addEventListener("click", (event) => {
  const target = event.target as HTMLElement | null;
  if (!target) return;
  if (target.id === "reset-filters") {
    window.location.hash = recipesHash(emptyFilter());
  } else if (target.id === "reload" || target.dataset["retry"]) {
    void boot();
  }
});

window.addEventListener("hashchange", render);
void boot();
