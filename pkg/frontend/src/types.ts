/** Response shapes of the opinion analytics HTTP API. */

export interface DocumentRecord {
  id: string;
  title: string;
  content: string;
  published_at: string;
  source_name: string;
  media_type: string;
  url: string;
  abstract: string;
  keywords: string[];
  regions: string[];
  primary_region: string | null;
  sentiment_label: string | null;
  sentiment_score: number | null;
  model_probability: number | null;
}

export interface DocumentsPage {
  total: number;
  page: number;
  page_size: number;
  documents: DocumentRecord[];
}

export interface TrendPoint {
  date: string;
  count: number;
  ppr: number;
}

export interface RegionRow {
  region: string;
  count: number;
  ppr: number;
  attention: number;
}

export interface ScoreHistogram {
  bin_edges: number[];
  counts: number[];
}

export interface BoxStats {
  min: number;
  q1: number;
  median: number;
  q3: number;
  max: number;
}

export interface MediaEntry {
  count: number;
  ppr: number;
  score_histogram: ScoreHistogram;
  box_stats: BoxStats | null;
}

export type MediaSummary = Record<string, MediaEntry>;

export interface ClassifyResult {
  lexicon: { score: number; label: string };
  model: { label: string; probability: number } | null;
}
