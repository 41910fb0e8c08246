// Shapes of the JSON artifacts the compiler emits. general.json is the
// entry point; its path registry names every other file.

export interface GeneralArtifact {
  stats: { cookbooks: number; recipes: number; ingredients: number };
  gender: Record<string, number>;
  paths: {
    general: string;
    alphabet: string;
    categories: string;
    ingredients: string;
    provenance: string;
    map: string;
    matrix: string;
    network: string;
    piechart: string;
    units: string;
    cookbooks: Record<string, string>;
  };
}

export interface FacetBucket {
  value: string;
  recipes: string[];
}

export interface FacetArtifact {
  facet: string;
  buckets: FacetBucket[];
}

export interface MapPoint {
  city: string;
  latitude: number;
  longitude: number;
  cookbooks: number;
  recipes: number;
  region?: string;
  country?: string;
}

export interface MapArtifact {
  points: MapPoint[];
}

export interface MatrixArtifact {
  labels: string[];
  cells: number[][];
}

export interface NetworkArtifact {
  nodes: { id: string; weight: number }[];
  edges: { source: string; target: string; weight: number }[];
}

export interface PieArtifact {
  slices: { label: string; count: number }[];
}

export interface UnitsArtifact {
  entries: { unit: string; count: number }[];
}

export interface IngredientEntry {
  name: string;
  variant?: string;
  qualifier?: string;
  quantity?: number;
  unit?: string;
}

export interface RecipeRecord {
  title: string;
  chapter?: string;
  pages: string[];
  images: string[];
  course?: string;
  scope?: string;
  procedures: string[];
  serves?: number;
  prep_time?: string;
  cook_time?: string;
  temperature?: string;
  ingredients: IngredientEntry[];
}

export interface CookbookArtifact {
  id: string;
  title: string;
  timespan?: { from?: number; to?: number; qualifier?: string };
  place?: string;
  region?: string;
  country?: string;
  author?: string;
  acquisition?: { date?: string; place?: string };
  recipes: Record<string, RecipeRecord>;
}
