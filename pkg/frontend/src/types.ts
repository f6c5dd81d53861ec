// Wire types for the argfacets JSON API (snake_case keys as served).

export type SemanticsTag =
  | "cnf" | "nai" | "adm" | "comp" | "stab" | "pref" | "semi" | "stag";

export const ALL_SEMANTICS: SemanticsTag[] = [
  "cnf", "nai", "adm", "comp", "stab", "pref", "semi", "stag",
];

export type Polarity = "approve" | "disapprove";

export interface FrameworkHandle {
  id: string;
  name: string;
  n_arguments: number;
  n_attacks: number;
}

export interface FrameworkDetail {
  id: string;
  name: string;
  arguments: string[];
  attacks: [string, string][];
}

export interface Score {
  num: number;
  den: number;
  decimal: number;
  display: string;
}

export interface SignificanceEntry {
  argument: string;
  polarity: Polarity;
  remaining_facets: number;
  score: Score;
}

export interface FacetsPayload {
  semantics: SemanticsTag;
  cred: string[];
  skep: string[];
  facets: string[];
  n_facets: number;
}

export interface HistoryItem {
  argument: string;
  polarity: Polarity;
}

export interface SessionHandle {
  id: string;
  framework_id: string;
  semantics: SemanticsTag;
  history_length: number;
}

export interface SessionStatePayload {
  id: string;
  framework_id: string;
  semantics: SemanticsTag;
  history: HistoryItem[];
  facets: string[];
  significance: SignificanceEntry[];
  sample_extension: string[] | null;
}

export interface ExampleEntry {
  name: string;
}
