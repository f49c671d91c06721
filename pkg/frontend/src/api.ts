// Client for the identification service.  A fetch implementation is
// injected so tests can stub the network.

export interface Invariants {
  jones: string;
  alexander: string;
  determinant: number;
}

export interface IdentifyResponse {
  valid: boolean;
  kind: "knot" | "link" | "invalid";
  nonblank: number;
  crossings: number;
  dt: number[] | null;
  knot: string | null;
  invariants: Invariants | null;
  errors: string[];
}

export interface CatalogMosaic {
  matrix: string;
  n: number;
  nonblank: number;
  crossings: number;
  realized: { mosaic: boolean; tile: boolean; crossing: boolean };
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(private fetchImpl: FetchLike, private base: string = "") {}

  async identify(cells: number[][]): Promise<IdentifyResponse> {
    const response = await this.fetchImpl(`${this.base}/api/identify`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ cells }),
    });
    if (!response.ok) {
      const detail = await response.text();
      throw new Error(`identify failed (${response.status}): ${detail}`);
    }
    return (await response.json()) as IdentifyResponse;
  }

  async tiles(): Promise<unknown[]> {
    const response = await this.fetchImpl(`${this.base}/api/tiles`);
    if (!response.ok) throw new Error(`tiles failed (${response.status})`);
    return (await response.json()) as unknown[];
  }

  async catalog(knot: string, realize?: string): Promise<{ knot: string; mosaics: CatalogMosaic[] }> {
    const query = realize ? `?knot=${encodeURIComponent(knot)}&realize=${realize}` : `?knot=${encodeURIComponent(knot)}`;
    const response = await this.fetchImpl(`${this.base}/api/catalog${query}`);
    if (!response.ok) throw new Error(`catalog lookup failed (${response.status})`);
    return (await response.json()) as { knot: string; mosaics: CatalogMosaic[] };
  }
}

// The headline the result panel shows for a response.
export function resultHeadline(result: IdentifyResponse): string {
  if (result.kind === "invalid") {
    return result.errors[0] === "no strand" ? "no strand" : "not suitably connected";
  }
  if (result.kind === "link") return "link (not a knot)";
  return result.knot ?? "unknown";
}
