import { beforeEach, describe, expect, it, vi } from "vitest";

import { UploadView } from "../src/upload.js";
import { SAMPLE_EXTRACT, flushTasks, mockApi, pickFile } from "./helpers.js";

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app")!;
});

function clickUpload() {
  (root.querySelector("#extract-button") as HTMLButtonElement).click();
}

describe("upload and extract", () => {
  it("renders the field table and serialized string", async () => {
    const api = mockApi();
    new UploadView(root, api).render();
    pickFile(root.querySelector("#file-input")!, "png-bytes");
    clickUpload();
    await flushTasks();

    expect(api.extractData).toHaveBeenCalledWith(btoa("png-bytes"));
    expect(root.querySelector("#result-class")!.textContent).toBe("adhaar_v1_p1");
    const rows = [...root.querySelectorAll("#field-table tbody tr")].map((tr) =>
      [...tr.querySelectorAll("td")].map((td) => td.textContent),
    );
    expect(rows).toEqual([
      ["NAME", "Sherry Rivers"],
      ["DATE_OF_BIRTH", "03/05/2018"],
      ["GENDER", "Male"],
      ["ADHAAR_NUMBER", "0000 0000 0091"],
    ]);
    expect(root.querySelector("#result-serialized")!.textContent).toBe(
      SAMPLE_EXTRACT.serialized,
    );
  });

  it("requires a file before uploading", async () => {
    const api = mockApi();
    new UploadView(root, api).render();
    clickUpload();
    await flushTasks();
    expect(api.extractData).not.toHaveBeenCalled();
    expect((root.querySelector("#error-banner") as HTMLElement).hidden).toBe(false);
  });

  it("re-upload replaces the previous result", async () => {
    const second = {
      ...SAMPLE_EXTRACT,
      class_id: "pan_v1",
      fields: [{ code: "NAME", text: "WANDA PAUL" }],
      serialized: "WANDA PAUL",
    };
    const api = mockApi();
    (api.extractData as ReturnType<typeof vi.fn>)
      .mockResolvedValueOnce(SAMPLE_EXTRACT)
      .mockResolvedValueOnce(second);
    new UploadView(root, api).render();
    pickFile(root.querySelector("#file-input")!, "first");
    clickUpload();
    await flushTasks();
    pickFile(root.querySelector("#file-input")!, "second");
    clickUpload();
    await flushTasks();

    expect(root.querySelector("#result-class")!.textContent).toBe("pan_v1");
    expect(root.querySelectorAll("#field-table tbody tr")).toHaveLength(1);
  });

  it("shows a visible banner on a malformed server reply", async () => {
    const api = mockApi({
      extractData: vi.fn(async () => {
        throw new Error("malformed server reply (status 200)");
      }),
    });
    new UploadView(root, api).render();
    pickFile(root.querySelector("#file-input")!, "x");
    clickUpload();
    await flushTasks();
    const banner = root.querySelector("#error-banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toMatch(/malformed server reply/);
  });
});

describe("report flow", () => {
  it("is locked until a result is shown and a suggestion picked", async () => {
    const api = mockApi();
    new UploadView(root, api).render();
    const report = root.querySelector("#report-section") as HTMLElement;
    expect(report.hidden).toBe(true);

    pickFile(root.querySelector("#file-input")!, "bytes");
    clickUpload();
    await flushTasks();
    expect(report.hidden).toBe(false);

    const button = root.querySelector("#report-button") as HTMLButtonElement;
    expect(button.disabled).toBe(true);
    const select = root.querySelector("#suggested-select") as HTMLSelectElement;
    select.value = "votercard_v1";
    select.dispatchEvent(new Event("change"));
    expect(button.disabled).toBe(false);
  });

  it("submits the uploaded payload with identified and suggested classes", async () => {
    const api = mockApi();
    new UploadView(root, api).render();
    pickFile(root.querySelector("#file-input")!, "bytes");
    clickUpload();
    await flushTasks();

    const select = root.querySelector("#suggested-select") as HTMLSelectElement;
    select.value = "votercard_v1";
    select.dispatchEvent(new Event("change"));
    (root.querySelector("#report-button") as HTMLButtonElement).click();
    await flushTasks();

    expect(api.proposeModification).toHaveBeenCalledWith(
      "adhaar_v1_p1",
      "votercard_v1",
      btoa("bytes"),
    );
    expect(root.querySelector("#report-status")!.textContent).toBe(
      "Request processed successfully.",
    );
  });

  it("anchor failures still allow reporting", async () => {
    const api = mockApi({
      extractData: vi.fn(async () => ({
        class_id: "pan_v1",
        confidence: 0.9,
        fields: [],
        serialized: "",
        error_detail: "anchor_not_found",
      })),
    });
    new UploadView(root, api).render();
    pickFile(root.querySelector("#file-input")!, "bytes");
    clickUpload();
    await flushTasks();

    expect((root.querySelector("#error-banner") as HTMLElement).hidden).toBe(false);
    expect((root.querySelector("#report-section") as HTMLElement).hidden).toBe(false);

    const select = root.querySelector("#suggested-select") as HTMLSelectElement;
    select.value = "adhaar_v1_p1";
    select.dispatchEvent(new Event("change"));
    (root.querySelector("#report-button") as HTMLButtonElement).click();
    await flushTasks();
    expect(api.proposeModification).toHaveBeenCalledWith(
      "pan_v1",
      "adhaar_v1_p1",
      btoa("bytes"),
    );
  });

  it("shows the server envelope on a failed report", async () => {
    const api = mockApi({
      proposeModification: vi.fn(async () => {
        throw new Error("UnknownClass: unknown document class 'x'");
      }),
    });
    new UploadView(root, api).render();
    pickFile(root.querySelector("#file-input")!, "bytes");
    clickUpload();
    await flushTasks();
    const select = root.querySelector("#suggested-select") as HTMLSelectElement;
    select.value = "pan_v1";
    select.dispatchEvent(new Event("change"));
    (root.querySelector("#report-button") as HTMLButtonElement).click();
    await flushTasks();
    const status = root.querySelector("#report-status") as HTMLElement;
    expect(status.className).toContain("error");
    expect(status.textContent).toMatch(/UnknownClass/);
  });
});
