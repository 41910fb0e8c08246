import { beforeAll, describe, expect, it } from "vitest";

import { renderStory, storySections, STORY_ORDER } from "../src/story.js";
import type { SiteData } from "../src/loader.js";
import { loadFromDisk } from "./helpers.js";

let fixture: SiteData;
let full: SiteData;
let empty: SiteData;

beforeAll(async () => {
  fixture = await loadFromDisk("fixture");
  full = await loadFromDisk("full");
  empty = await loadFromDisk("empty");
});

function sectionOrderIn(html: string): string[] {
  return [...html.matchAll(/data-topic="([a-z]+)"/g)]
    .map((m) => m[1]!)
    .filter((topic, i, all) => all.indexOf(topic) === i);
}

describe("section catalogue", () => {
  it("defines the five topics in fixed order", () => {
    expect(storySections().map((s) => s.topic)).toEqual([...STORY_ORDER]);
    expect(STORY_ORDER).toEqual(
      ["overview", "provenance", "ingredients", "dishes", "gender"]);
  });
});

describe("story rendering with fixture data", () => {
  it("renders all five sections in order", () => {
    const html = renderStory(fixture);
    expect(sectionOrderIn(html)).toEqual([...STORY_ORDER]);
    for (const topic of STORY_ORDER) {
      expect(html).toContain(`id="topic-${topic}"`);
    }
  });

  it("overview shows 1 cookbook, 2 recipes", () => {
    const html = renderStory(fixture);
    expect(html).toContain("1 cookbook, 2 recipes");
  });

  it("binds the map to the provenance section", () => {
    const html = renderStory(fixture);
    expect(html).toContain('data-city="Rimini"');
    expect(html).toContain("1 cookbooks, 2 recipes");
  });

  it("binds matrix, network, and units to the ingredients section", () => {
    const html = renderStory(full);
    expect(html).toContain("chart-matrix");
    expect(html).toContain("chart-network");
    expect(html).toContain('data-label="unspecified"');
    expect(html).toContain("17 distinct ingredients");
  });

  it("pie slices deep-link into the filtered recipes page", () => {
    const html = renderStory(fixture);
    expect(html).toContain('data-course="first"');
    expect(html).toContain("#/recipes?course=first");
  });

  it("gender section tallies from general.json", () => {
    const html = renderStory(fixture);
    expect(html).toContain('data-label="female"');
    expect(html).toContain('data-count="2"');
  });
});

describe("degraded artifact sets", () => {
  it("missing map.json degrades only the provenance section", async () => {
    const broken = await loadFromDisk("fixture", ["map.json"]);
    const html = renderStory(broken);
    expect(sectionOrderIn(html)).toEqual([...STORY_ORDER]);
    expect(html).toContain('data-retry="provenance"');
    expect(html).not.toContain('data-retry="ingredients"');
    expect(html).not.toContain('data-retry="dishes"');
    expect(html).toContain("1 cookbook, 2 recipes");
    expect(html).toContain('data-course="first"');
  });

  it("missing matrix.json degrades only the ingredients section", async () => {
    const broken = await loadFromDisk("fixture", ["matrix.json"]);
    const html = renderStory(broken);
    expect(html).toContain('data-retry="ingredients"');
    expect(html).not.toContain('data-retry="provenance"');
    expect(html).toContain('data-city="Rimini"');
  });
});

describe("empty corpus", () => {
  it("all sections render with zero-state copy", () => {
    const html = renderStory(empty);
    expect(sectionOrderIn(html)).toEqual([...STORY_ORDER]);
    expect(html).toContain("0 cookbooks, 0 recipes");
    expect(html).toContain("no geolocated cookbooks");
    expect(html).toContain("no recipes");
    expect(html).toContain("No recipes to attribute yet");
    expect(html).not.toContain("data-retry");
  });
});
