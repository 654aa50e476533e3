// Helpers for replaying the recorded API session in contract tests.

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

export interface RecordedExchange {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

const here = dirname(fileURLToPath(import.meta.url));

export function loadRecordedSession(): RecordedExchange[] {
  const raw = readFileSync(join(here, "fixtures", "recorded-session.json"), "utf-8");
  return JSON.parse(raw) as RecordedExchange[];
}

export function findExchange(
  records: RecordedExchange[],
  method: string,
  path: string,
  nth = 0,
): RecordedExchange {
  const hits = records.filter((r) => r.method === method && r.path === path);
  if (hits.length <= nth) {
    throw new Error(`no recorded exchange for ${method} ${path} (#${nth})`);
  }
  return hits[nth];
}

/**
 * A fetch stub that serves the recorded session and logs every request it
 * receives, so tests can assert the client sent exactly what was recorded.
 */
export function recordedFetch(records: RecordedExchange[]) {
  const seen: { method: string; path: string; body: unknown }[] = [];
  const remaining = [...records];
  const stub = async (input: string | URL | Request, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const method = init?.method ?? "GET";
    const path = url.replace(/^.*\/api\/v1/, "");
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    seen.push({ method, path, body });
    const idx = remaining.findIndex((r) => r.method === method && r.path === path);
    if (idx === -1) {
      throw new Error(`unexpected request ${method} ${path}`);
    }
    const record = remaining[idx];
    remaining.splice(idx, 1);
    return new Response(JSON.stringify(record.response), {
      status: record.status,
      headers: { "Content-Type": "application/json" },
    });
  };
  return { stub, seen };
}
