/**
 * Profile level names accepted by the server, in display order.
 * Unknown levels are rejected server-side, so the UI offers these only.
 */

export const CRITICALITY_LEVELS = [
  "non_critical",
  "business_critical",
  "mission_critical",
  "safety_critical",
];

export const REQUIREMENT_TYPES = ["non_functional", "functional", "business"];

export const TEMPLATES = ["single_sentence", "multiple_sentences"];

export const DOMAIN_CODES = [
  "CS",
  "SS",
  "CL",
  "EC",
  "LW",
  "MD",
  "AT",
  "EE",
  "ME",
  "SP",
  "LT",
];
