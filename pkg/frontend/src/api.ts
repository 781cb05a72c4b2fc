/**
 * Typed client for the six document-service endpoints.
 *
 * All endpoints are POST with JSON bodies; failures carry the envelope
 * {"error": "<message>"} which surfaces here as ApiError. Payload keys match
 * the service contract byte for byte.
 */
import { apiBase } from "./config.js";

export const DOCUMENT_CLASSES = [
  "adhaar_v1_p1",
  "dl_v1_p1",
  "pan_v1",
  "passport_v1_p1",
  "votercard_v1",
] as const;

export type DocumentClass = (typeof DOCUMENT_CLASSES)[number];

export interface ExtractedField {
  code: string;
  text: string;
}

export interface ExtractResponse {
  class_id: string;
  confidence: number;
  fields: ExtractedField[];
  serialized: string;
  error_detail?: string;
}

export interface IdentifyResponse {
  class_id: string;
  confidence: number;
}

export interface ModificationRequest {
  req_id: number;
  document_identified: string;
  document_suggested: string;
  image: string;
}

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function post<T>(path: string, body?: unknown): Promise<T> {
  let response: Response;
  try {
    response = await fetch(`${apiBase()}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
  } catch (cause) {
    throw new ApiError(`network error: ${String(cause)}`, 0);
  }
  let payload: unknown;
  try {
    payload = await response.json();
  } catch {
    throw new ApiError(`malformed server reply (status ${response.status})`, response.status);
  }
  if (!response.ok) {
    const envelope = payload as { error?: string };
    throw new ApiError(envelope.error ?? `request failed (${response.status})`, response.status);
  }
  return payload as T;
}

export interface DocumentApi {
  identify(imageB64: string): Promise<IdentifyResponse>;
  extractData(imageB64: string): Promise<ExtractResponse>;
  proposeModification(
    documentIdentified: string,
    documentSuggested: string,
    imageB64: string,
  ): Promise<{ message: string }>;
  getAllRequests(): Promise<ModificationRequest[]>;
  approveRequest(reqId: number): Promise<{ message: string }>;
  rejectRequest(reqId: number): Promise<{ message: string }>;
}

export const api: DocumentApi = {
  identify: (imageB64) => post("/document/identify", { image: imageB64 }),
  extractData: (imageB64) => post("/document/extract/data", { image: imageB64 }),
  proposeModification: (documentIdentified, documentSuggested, imageB64) =>
    post("/document/propose/modification", {
      document_identified: documentIdentified,
      document_suggested: documentSuggested,
      image: imageB64,
    }),
  getAllRequests: () => post("/document/request/getAll"),
  approveRequest: (reqId) => post("/document/request/approve", { req_id: reqId }),
  rejectRequest: (reqId) => post("/document/request/reject", { req_id: reqId }),
};

/** Base64 of a file's bytes (the wire format for image payloads). */
export async function fileToBase64(file: File): Promise<string> {
  const buffer = new Uint8Array(await file.arrayBuffer());
  let binary = "";
  const chunk = 0x8000;
  for (let offset = 0; offset < buffer.length; offset += chunk) {
    binary += String.fromCharCode(...buffer.subarray(offset, offset + chunk));
  }
  return btoa(binary);
}
