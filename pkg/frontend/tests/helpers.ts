// Shared test plumbing: a throwaway static HTTP server over an artifact
// directory, a disk-backed SiteData loader for tests that don't need HTTP,
// and a small deterministic RNG for the property suites.

import { createServer, type Server } from "node:http";
import { readFile } from "node:fs/promises";
import { join, normalize } from "node:path";
import { fileURLToPath } from "node:url";

import { loadSiteData, type SiteData } from "../src/loader.js";

export const TEST_DATA = fileURLToPath(
  new URL("../test-data", import.meta.url),
);

export interface StaticSite {
  baseUrl: string;
  close: () => Promise<void>;
}

// Serves files under root; paths listed in `missing` return 404 and paths
// in `overrides` return the given body instead of the file, so tests can
// simulate a partially broken artifact set.
export async function serveStatic(
  root: string,
  missing: string[] = [],
  overrides: Record<string, string> = {},
): Promise<StaticSite> {
  const blocked = new Set(missing.map((m) => normalize(m)));
  const replaced = new Map(
    Object.entries(overrides).map(([k, v]) => [normalize(k), v]),
  );
  const server: Server = createServer((req, res) => {
    void (async () => {
      const path = normalize(decodeURIComponent(
        (req.url ?? "/").split("?")[0]!.replace(/^\/+/, ""),
      ));
      if (path.includes("..") || blocked.has(path)) {
        res.writeHead(404);
        res.end("not found");
        return;
      }
      const override = replaced.get(path);
      if (override !== undefined) {
        res.writeHead(200, { "content-type": "application/json" });
        res.end(override);
        return;
      }
      try {
        const body = await readFile(join(root, path));
        res.writeHead(200, { "content-type": "application/json" });
        res.end(body);
      } catch {
        res.writeHead(404);
        res.end("not found");
      }
    })();
  });
  await new Promise<void>((resolve) => server.listen(0, "127.0.0.1", resolve));
  const address = server.address();
  if (address === null || typeof address === "string") {
    throw new Error("server has no port");
  }
  return {
    baseUrl: `http://127.0.0.1:${address.port}`,
    close: () =>
      new Promise((resolve, reject) =>
        server.close((err) => (err ? reject(err) : resolve())),
      ),
  };
}

export async function loadFromDisk(
  name: string,
  missing: string[] = [],
): Promise<SiteData> {
  const site = await serveStatic(join(TEST_DATA, name), missing);
  try {
    const loaded = await loadSiteData(site.baseUrl);
    if (!loaded.ok) throw new Error(`load failed: ${loaded.error}`);
    return loaded.data;
  } finally {
    await site.close();
  }
}

// mulberry32: tiny seeded PRNG, good enough for reproducible test inputs.
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function sample<T>(rand: () => number, pool: T[], count: number): T[] {
  const copy = [...pool];
  const picked: T[] = [];
  for (let i = 0; i < count && copy.length > 0; i++) {
    const at = Math.floor(rand() * copy.length);
    picked.push(copy.splice(at, 1)[0]!);
  }
  return picked;
}
