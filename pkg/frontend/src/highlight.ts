/**
 * Turns a requirement text plus its findings into highlighted DOM.
 *
 * Invariant: one <mark> per finding, always, so the rendered highlight
 * count equals the finding count. Overlapping spans are clipped at the
 * previous mark's end rather than dropped.
 */

import { Finding } from "./api.js";
import { codePointToUtf16 } from "./offsets.js";
import { smellInfo, tooltipFor } from "./theme.js";

export interface Segment {
  text: string;
  finding: Finding | null;
}

/** Split text into plain and highlighted segments, one per finding. */
export function buildSegments(text: string, findings: Finding[]): Segment[] {
  const ordered = [...findings].sort((a, b) => a.start - b.start || a.end - b.end);
  const segments: Segment[] = [];
  let cursor = 0;
  for (const finding of ordered) {
    let start = codePointToUtf16(text, finding.start);
    let end = codePointToUtf16(text, finding.end);
    if (start < cursor) {
      start = cursor;
    }
    if (end < start) {
      end = start;
    }
    if (start > cursor) {
      segments.push({ text: text.slice(cursor, start), finding: null });
    }
    segments.push({ text: text.slice(start, end), finding });
    cursor = end;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), finding: null });
  }
  return segments;
}

/** Replace `container`'s children with the highlighted rendering. */
export function renderHighlights(
  container: HTMLElement,
  text: string,
  findings: Finding[],
): void {
  container.textContent = "";
  for (const segment of buildSegments(text, findings)) {
    if (segment.finding === null) {
      container.appendChild(document.createTextNode(segment.text));
      continue;
    }
    const mark = document.createElement("mark");
    mark.className = "smell-mark";
    mark.dataset.column = segment.finding.column;
    mark.dataset.smell = segment.finding.smell;
    mark.title = tooltipFor(segment.finding.column);
    mark.style.backgroundColor = smellInfo(segment.finding.column).color;
    mark.textContent = segment.text;
    container.appendChild(mark);
  }
}
