// Fetch the artifact set over static HTTP: general.json first, then every
// file its path registry names. A failed file becomes a per-file error
// state so the page can degrade section by section instead of going blank.

import type {
  CookbookArtifact,
  FacetArtifact,
  GeneralArtifact,
  MapArtifact,
  MatrixArtifact,
  NetworkArtifact,
  PieArtifact,
  UnitsArtifact,
} from "./types.js";

export type Loaded<T> =
  | { ok: true; data: T }
  | { ok: false; error: string };

export interface SiteData {
  baseUrl: string;
  general: GeneralArtifact;
  alphabet: Loaded<FacetArtifact>;
  categories: Loaded<FacetArtifact>;
  ingredients: Loaded<FacetArtifact>;
  provenance: Loaded<FacetArtifact>;
  map: Loaded<MapArtifact>;
  matrix: Loaded<MatrixArtifact>;
  network: Loaded<NetworkArtifact>;
  piechart: Loaded<PieArtifact>;
  units: Loaded<UnitsArtifact>;
  cookbooks: Map<string, Loaded<CookbookArtifact>>;
}

async function fetchJson<T>(url: string): Promise<Loaded<T>> {
  let response: Response;
  try {
    response = await fetch(url);
  } catch (err) {
    return { ok: false, error: `cannot reach ${url}: ${String(err)}` };
  }
  if (!response.ok) {
    return { ok: false, error: `${url}: HTTP ${response.status}` };
  }
  try {
    return { ok: true, data: (await response.json()) as T };
  } catch {
    return { ok: false, error: `${url}: not valid JSON` };
  }
}

function joinUrl(base: string, relative: string): string {
  return base.endsWith("/") ? base + relative : `${base}/${relative}`;
}

export async function loadSiteData(
  baseUrl: string,
): Promise<Loaded<SiteData>> {
  const general = await fetchJson<GeneralArtifact>(
    joinUrl(baseUrl, "general.json"),
  );
  if (!general.ok) {
    return { ok: false, error: general.error };
  }
  const paths = general.data.paths;
  const at = (relative: string) => joinUrl(baseUrl, relative);

  const [alphabet, categories, ingredients, provenance, map, matrix,
         network, piechart, units] = await Promise.all([
    fetchJson<FacetArtifact>(at(paths.alphabet)),
    fetchJson<FacetArtifact>(at(paths.categories)),
    fetchJson<FacetArtifact>(at(paths.ingredients)),
    fetchJson<FacetArtifact>(at(paths.provenance)),
    fetchJson<MapArtifact>(at(paths.map)),
    fetchJson<MatrixArtifact>(at(paths.matrix)),
    fetchJson<NetworkArtifact>(at(paths.network)),
    fetchJson<PieArtifact>(at(paths.piechart)),
    fetchJson<UnitsArtifact>(at(paths.units)),
  ]);

  const slugs = Object.keys(paths.cookbooks).sort();
  const loadedBooks = await Promise.all(
    slugs.map((slug) =>
      fetchJson<CookbookArtifact>(at(paths.cookbooks[slug]!)),
    ),
  );
  const cookbooks = new Map<string, Loaded<CookbookArtifact>>();
  slugs.forEach((slug, i) => cookbooks.set(slug, loadedBooks[i]!));

  return {
    ok: true,
    data: {
      baseUrl, general: general.data, alphabet, categories, ingredients,
      provenance, map, matrix, network, piechart, units, cookbooks,
    },
  };
}

export interface RecipeEntry {
  id: string;
  title: string;
  author: string;
  cookbook: string;
}

// Every recipe across successfully loaded cookbook files, in stable order.
export function recipeCatalog(data: SiteData): RecipeEntry[] {
  const entries: RecipeEntry[] = [];
  for (const [slug, book] of data.cookbooks) {
    if (!book.ok) continue;
    for (const [id, record] of Object.entries(book.data.recipes)) {
      entries.push({
        id,
        title: record.title,
        author: book.data.author ?? "",
        cookbook: slug,
      });
    }
  }
  return entries;
}
