/** Display formatting. The UI shows service numbers verbatim through these
 * functions and never re-derives them, so "displayed = format(received)"
 * holds byte for byte. */

/** Four decimal places, the table convention of the reports. */
export function format4(value: number): string {
  return value.toFixed(4);
}

/** Signed delta at four decimals; used by the what-if comparison. */
export function formatDelta(value: number): string {
  const text = format4(Math.abs(value));
  if (value > 0) return `+${text}`;
  if (value < 0) return `-${text}`;
  return text;
}

/** Full-precision rendering for exports; round-trips through JSON.parse. */
export function formatExact(value: number): string {
  return String(value);
}

/** Parse a judgment field's text into a positive finite number. */
export function parseJudgment(raw: string): number | null {
  const trimmed = raw.trim();
  if (trimmed === "") return null;
  const value = Number(trimmed);
  if (!Number.isFinite(value) || value <= 0) return null;
  return value;
}
