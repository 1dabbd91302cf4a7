/**
 * The nine smell colors and their legend text, defined once.
 * Every highlight, palette chip and legend entry reads from here.
 */

export interface SmellInfo {
  /** dataset column name, used as the stable key everywhere */
  column: string;
  /** short code as sent by the API ("S1".."S9") */
  code: string;
  /** human name shown in legends and palettes */
  name: string;
  /** one-line definition shown in tooltips */
  definition: string;
  /** highlight color */
  color: string;
}

export const SMELLS: SmellInfo[] = [
  {
    column: "subjective_language",
    code: "S1",
    name: "Subjective language",
    definition: "Wording that depends on personal opinion or taste",
    color: "#e0598b",
  },
  {
    column: "ambiguous_adv_adj",
    code: "S2",
    name: "Ambiguous adverb/adjective",
    definition: "Degree words that leave the extent unspecified",
    color: "#d88a2e",
  },
  {
    column: "non_verifiable_term",
    code: "S3",
    name: "Non-verifiable term",
    definition: "A term no test could measure or confirm",
    color: "#b5a024",
  },
  {
    column: "superlative",
    code: "S4",
    name: "Superlative",
    definition: "Ranks the requirement against every alternative",
    color: "#5ba546",
  },
  {
    column: "comparative",
    code: "S5",
    name: "Comparative",
    definition: "Compares against an unstated baseline",
    color: "#2aa198",
  },
  {
    column: "negative",
    code: "S6",
    name: "Negative statement",
    definition: "States what the system must not do instead of what it does",
    color: "#3f8fd2",
  },
  {
    column: "vague_pronoun",
    code: "S7",
    name: "Vague pronoun",
    definition: "A pronoun whose referent is unclear",
    color: "#7a6fd9",
  },
  {
    column: "uncertain_verb",
    code: "S8",
    name: "Uncertain verb",
    definition: "A modal verb that weakens the commitment (may, can, should)",
    color: "#b659dd",
  },
  {
    column: "polysemy",
    code: "S9",
    name: "Polysemy",
    definition: "A word whose domain meaning drifts from its technical one",
    color: "#a9632c",
  },
];

const byColumn = new Map(SMELLS.map((s) => [s.column, s]));

export function smellInfo(column: string): SmellInfo {
  const info = byColumn.get(column);
  if (!info) {
    throw new Error(`unknown smell column: ${column}`);
  }
  return info;
}

/** Tooltip text for a highlight: name plus definition. */
export function tooltipFor(column: string): string {
  const info = smellInfo(column);
  return `${info.name}: ${info.definition}`;
}
