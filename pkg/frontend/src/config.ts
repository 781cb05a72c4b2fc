/**
 * API base URL resolution, most specific first:
 *   1. window.DOCLOOP_API_BASE set by the optional runtime config.js
 *   2. a <meta name="docloop-api-base" content="..."> tag baked at build time
 *   3. the service's default local address
 */
declare global {
  interface Window {
    DOCLOOP_API_BASE?: string;
  }
}

export const DEFAULT_API_BASE = "http://127.0.0.1:5000";

export function apiBase(): string {
  if (typeof window !== "undefined" && window.DOCLOOP_API_BASE) {
    return window.DOCLOOP_API_BASE.replace(/\/$/, "");
  }
  if (typeof document !== "undefined") {
    const meta = document.querySelector('meta[name="docloop-api-base"]');
    const content = meta?.getAttribute("content");
    if (content) return content.replace(/\/$/, "");
  }
  return DEFAULT_API_BASE;
}
