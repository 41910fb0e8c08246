// Accent-and-case folding for sort keys, matching the compiler's ordering
// so the recipe list sorts the same way the emitted buckets do.

const NON_DECOMPOSING: Record<string, string> = {
  "æ": "ae", "ø": "o", "œ": "oe", "ß": "ss", "ð": "d", "þ": "th",
  "đ": "d", "ħ": "h", "ĳ": "ij", "ĸ": "k", "ł": "l", "ŋ": "n",
  "ŧ": "t", "ſ": "s",
};

export function foldAscii(text: string): string {
  const stripped = text.normalize("NFD").replace(/[̀-ͯ]/g, "");
  let out = "";
  for (const ch of stripped) {
    const lower = ch.toLowerCase();
    out += NON_DECOMPOSING[lower] ?? ch;
  }
  return out;
}

export function sortFold(text: string): string {
  return foldAscii(text).toLowerCase();
}
