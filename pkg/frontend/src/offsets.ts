/**
 * Finding offsets count Unicode code points; JS strings index UTF-16
 * units. These helpers convert so highlights stay aligned even when
 * the text contains characters outside the basic plane.
 */

/** UTF-16 index of the code point at position `index`. */
export function codePointToUtf16(text: string, index: number): number {
  if (index < 0) {
    throw new RangeError(`negative code point index: ${index}`);
  }
  let seen = 0;
  let unit = 0;
  for (const ch of text) {
    if (seen === index) {
      return unit;
    }
    seen += 1;
    unit += ch.length;
  }
  if (seen === index) {
    return unit;
  }
  throw new RangeError(`code point index ${index} past end of text (${seen})`);
}

/** Slice by code point offsets, the way the server counts them. */
export function sliceByCodePoints(text: string, start: number, end: number): string {
  return text.slice(codePointToUtf16(text, start), codePointToUtf16(text, end));
}

/** Number of code points in the string. */
export function codePointLength(text: string): number {
  let n = 0;
  for (const _ of text) {
    n += 1;
  }
  return n;
}
