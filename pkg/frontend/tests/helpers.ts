import { vi } from "vitest";

import type { DocumentApi, ExtractResponse, ModificationRequest } from "../src/api.js";

export const SAMPLE_EXTRACT: ExtractResponse = {
  class_id: "adhaar_v1_p1",
  confidence: 1.0,
  fields: [
    { code: "NAME", text: "Sherry Rivers" },
    { code: "DATE_OF_BIRTH", text: "03/05/2018" },
    { code: "GENDER", text: "Male" },
    { code: "ADHAAR_NUMBER", text: "0000 0000 0091" },
  ],
  serialized: "Sherry Rivers::03/05/2018::Male::0000 0000 0091",
};

export function makeRequest(reqId: number): ModificationRequest {
  return {
    req_id: reqId,
    document_identified: "pan_v1",
    document_suggested: "adhaar_v1_p1",
    image: btoa(`image-bytes-${reqId}`),
  };
}

export function mockApi(overrides: Partial<DocumentApi> = {}): DocumentApi {
  return {
    identify: vi.fn(async () => ({ class_id: "adhaar_v1_p1", confidence: 1.0 })),
    extractData: vi.fn(async () => SAMPLE_EXTRACT),
    proposeModification: vi.fn(async () => ({ message: "Request processed successfully." })),
    getAllRequests: vi.fn(async () => []),
    approveRequest: vi.fn(async () => ({ message: "Request processed successfully." })),
    rejectRequest: vi.fn(async () => ({ message: "Request processed successfully." })),
    ...overrides,
  };
}

export function pickFile(input: HTMLInputElement, contents: string): File {
  const file = new File([contents], "upload.png", { type: "image/png" });
  Object.defineProperty(input, "files", { value: [file], configurable: true });
  return file;
}

export async function flushTasks(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}
