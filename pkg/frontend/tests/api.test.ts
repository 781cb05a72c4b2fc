import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, api, fileToBase64 } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function captureFetch(response: Response) {
  const calls: { url: string; init: RequestInit | undefined }[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (url: string, init?: RequestInit) => {
      calls.push({ url, init });
      return response.clone();
    }),
  );
  return calls;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("payload wire formats", () => {
  it("identify posts {image}", async () => {
    const calls = captureFetch(jsonResponse({ class_id: "pan_v1", confidence: 1.0 }));
    const reply = await api.identify("QUJD");
    expect(reply.class_id).toBe("pan_v1");
    expect(calls[0]!.url).toMatch(/\/document\/identify$/);
    expect(calls[0]!.init?.method).toBe("POST");
    expect(JSON.parse(calls[0]!.init?.body as string)).toEqual({ image: "QUJD" });
  });

  it("propose posts the exact three keys", async () => {
    const calls = captureFetch(jsonResponse({ message: "Request processed successfully." }));
    await api.proposeModification("pan_v1", "adhaar_v1_p1", "QUJD");
    const body = JSON.parse(calls[0]!.init?.body as string);
    expect(Object.keys(body).sort()).toEqual([
      "document_identified",
      "document_suggested",
      "image",
    ]);
    expect(body.document_identified).toBe("pan_v1");
    expect(body.document_suggested).toBe("adhaar_v1_p1");
    expect(body.image).toBe("QUJD");
  });

  it("getAll posts with no body", async () => {
    const calls = captureFetch(jsonResponse([]));
    await api.getAllRequests();
    expect(calls[0]!.url).toMatch(/\/document\/request\/getAll$/);
    expect(calls[0]!.init?.body).toBeUndefined();
  });

  it("approve and reject post {req_id}", async () => {
    const calls = captureFetch(jsonResponse({ message: "ok" }));
    await api.approveRequest(17);
    await api.rejectRequest(18);
    expect(JSON.parse(calls[0]!.init?.body as string)).toEqual({ req_id: 17 });
    expect(JSON.parse(calls[1]!.init?.body as string)).toEqual({ req_id: 18 });
  });
});

describe("error envelopes", () => {
  it("surfaces the server envelope message", async () => {
    captureFetch(jsonResponse({ error: "NotFound: no modification request" }, 500));
    await expect(api.approveRequest(9)).rejects.toThrowError(
      /NotFound: no modification request/,
    );
  });

  it("carries the HTTP status", async () => {
    captureFetch(jsonResponse({ error: "Invalid input, JSON expected" }, 400));
    const failure = await api.identify("x").catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(400);
  });

  it("rejects malformed (non-JSON) replies", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response("<html>oops</html>", { status: 200 })),
    );
    await expect(api.getAllRequests()).rejects.toThrowError(/malformed server reply/);
  });
});

describe("fileToBase64", () => {
  it("encodes file bytes", async () => {
    const file = new File([new Uint8Array([72, 105, 33])], "x.bin");
    expect(await fileToBase64(file)).toBe(btoa("Hi!"));
  });
});
