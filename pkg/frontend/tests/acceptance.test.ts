// Release gate for the frontend: one check per criterion, each printing a
// verdict line. Both run against artifacts the compiler CLI actually
// emitted, fetched the way the browser fetches them.

import { describe, expect, it } from "vitest";
import { join } from "node:path";

import { applyFilters, emptyFilter, resetFilters } from "../src/filters.js";
import { loadSiteData, recipeCatalog } from "../src/loader.js";
import { renderStory, STORY_ORDER } from "../src/story.js";
import { loadFromDisk, rng, sample, serveStatic, TEST_DATA } from "./helpers.js";
import { oracleFilter } from "./oracle.js";

function report(name: string, body: () => void | Promise<void>) {
  return async () => {
    try {
      await body();
    } catch (err) {
      console.log(`\nACCEPTANCE FAIL: ${name}`);
      throw err;
    }
    console.log(`\nACCEPTANCE PASS: ${name}`);
  };
}

describe("frontend acceptance", () => {
  it("filter semantics", report(
    "200 random filter states match the set-algebra oracle",
    async () => {
      const data = await loadFromDisk("synthetic");
      expect(data.general.stats.recipes).toBe(460);
      if (!data.provenance.ok || !data.ingredients.ok || !data.categories.ok) {
        throw new Error("indexes failed to load");
      }
      const indexes = {
        provenance: data.provenance.data,
        ingredients: data.ingredients.data,
        categories: data.categories.data,
      };
      const catalog = recipeCatalog(data);
      const pools = {
        provenance: indexes.provenance.buckets.map((b) => b.value),
        ingredients: indexes.ingredients.buckets.map((b) => b.value),
        courses: indexes.categories.buckets.map((b) => b.value),
      };

      const all = applyFilters(emptyFilter(), indexes, catalog);
      expect(all.length).toBe(460);
      expect(new Set(all).size).toBe(460);

      const rand = rng(0xacce97);
      for (let trial = 0; trial < 200; trial++) {
        const state = emptyFilter();
        for (const facet of ["provenance", "ingredients",
                             "courses"] as const) {
          if (rand() < 0.4) {
            state[facet] = new Set(
              sample(rand, pools[facet], 1 + Math.floor(rand() * 3)));
          }
        }
        const got = applyFilters(state, indexes, catalog);
        expect(new Set(got)).toEqual(oracleFilter(state, indexes, catalog));
      }

      const reset = applyFilters(resetFilters(), indexes, catalog);
      expect(reset).toEqual(all);
    },
  ));

  it("story data binding", report(
    "five story sections bind their datasets over static HTTP",
    async () => {
      const site = await serveStatic(join(TEST_DATA, "fixture"));
      try {
        const loaded = await loadSiteData(site.baseUrl);
        expect(loaded.ok).toBe(true);
        if (!loaded.ok) return;
        const html = renderStory(loaded.data);
        for (const topic of STORY_ORDER) {
          expect(html).toContain(`id="topic-${topic}"`);
        }
        expect(html).toContain("1 cookbook, 2 recipes");
        expect(html).toContain('data-city="Rimini"');
        expect(html).toContain('data-course="first"');
        expect(html).toContain('data-label="female"');
        expect(html).not.toContain("data-retry");
      } finally {
        await site.close();
      }

      const degraded = await serveStatic(join(TEST_DATA, "fixture"),
                                         ["map.json"]);
      try {
        const loaded = await loadSiteData(degraded.baseUrl);
        expect(loaded.ok).toBe(true);
        if (!loaded.ok) return;
        const html = renderStory(loaded.data);
        expect(html).toContain('data-retry="provenance"');
        for (const topic of STORY_ORDER) {
          expect(html).toContain(`id="topic-${topic}"`);
        }
        const retries = [...html.matchAll(/data-retry="([a-z]+)"/g)]
          .map((m) => m[1]);
        expect(retries).toEqual(["provenance"]);
        expect(html).toContain("1 cookbook, 2 recipes");
      } finally {
        await degraded.close();
      }
    },
  ));
});
