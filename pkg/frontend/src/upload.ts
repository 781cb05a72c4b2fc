/**
 * Upload view: pick a document image, see the identify/extract result, and
 * file a discrepancy report when the result looks wrong.
 *
 * The report form only unlocks once a result (or an extraction error) is on
 * screen, and its submit button stays disabled until a document type is
 * suggested. Submitting posts the exact payload the review queue expects.
 */
import { ApiError, DOCUMENT_CLASSES, DocumentApi, ExtractResponse, fileToBase64 } from "./api.js";

interface UploadState {
  imageB64: string | null;
  identified: string | null;
  hasResult: boolean;
}

export class UploadView {
  private state: UploadState = { imageB64: null, identified: null, hasResult: false };

  constructor(
    private readonly root: HTMLElement,
    private readonly api: DocumentApi,
  ) {}

  render(): void {
    this.root.innerHTML = `
      <section class="panel">
        <h2>Identify &amp; extract a document</h2>
        <div class="form-row">
          <input type="file" id="file-input" accept="image/*">
          <button id="extract-button">Upload</button>
        </div>
        <div id="error-banner" class="banner error" hidden></div>
        <div id="result-panel" hidden>
          <p>
            <strong id="result-class"></strong>
            <span id="result-confidence" class="muted"></span>
          </p>
          <table id="field-table">
            <thead><tr><th>Field</th><th>Value</th></tr></thead>
            <tbody></tbody>
          </table>
          <p class="muted">serialized: <code id="result-serialized"></code></p>
        </div>
        <div id="report-section" hidden>
          <h3>Not happy with the results?</h3>
          <p>Select the correct document type and submit a modification request.</p>
          <div class="form-row">
            <select id="suggested-select">
              <option value="">-- choose document type --</option>
              ${DOCUMENT_CLASSES.map((c) => `<option value="${c}">${c}</option>`).join("")}
            </select>
            <button id="report-button" disabled>Report</button>
          </div>
          <div id="report-status" class="banner" hidden></div>
        </div>
      </section>
    `;
    this.query<HTMLButtonElement>("#extract-button").addEventListener("click", () =>
      this.upload(),
    );
    this.query<HTMLSelectElement>("#suggested-select").addEventListener("change", () =>
      this.syncReportButton(),
    );
    this.query<HTMLButtonElement>("#report-button").addEventListener("click", () =>
      this.submitReport(),
    );
  }

  private query<T extends HTMLElement>(selector: string): T {
    const element = this.root.querySelector<T>(selector);
    if (!element) throw new Error(`missing element ${selector}`);
    return element;
  }

  private showError(message: string): void {
    const banner = this.query<HTMLDivElement>("#error-banner");
    banner.textContent = message;
    banner.hidden = false;
  }

  private clearResult(): void {
    this.query<HTMLDivElement>("#error-banner").hidden = true;
    this.query<HTMLDivElement>("#result-panel").hidden = true;
    this.query<HTMLDivElement>("#report-status").hidden = true;
  }

  async upload(): Promise<void> {
    const input = this.query<HTMLInputElement>("#file-input");
    const file = input.files?.[0];
    if (!file) {
      this.showError("Choose an image file first.");
      return;
    }
    this.clearResult();
    const imageB64 = await fileToBase64(file);
    this.state = { imageB64, identified: null, hasResult: false };

    try {
      const result = await this.api.extractData(imageB64);
      this.state.identified = result.class_id ?? null;
      this.state.hasResult = true;
      if (result.error_detail) {
        this.showError(
          `Extraction failed (${result.error_detail}); the document was identified as ` +
            `${result.class_id}. You can still report the correct type below.`,
        );
      } else {
        this.renderResult(result);
      }
    } catch (error) {
      // identification/extraction errors still open the report flow
      this.state.identified = null;
      this.state.hasResult = true;
      this.showError(error instanceof ApiError ? error.message : String(error));
    }
    this.query<HTMLDivElement>("#report-section").hidden = false;
    this.syncReportButton();
  }

  private renderResult(result: ExtractResponse): void {
    this.query<HTMLElement>("#result-class").textContent = result.class_id;
    this.query<HTMLElement>("#result-confidence").textContent =
      `confidence ${result.confidence.toFixed(3)}`;
    const tbody = this.query<HTMLTableSectionElement>("#field-table tbody");
    tbody.innerHTML = "";
    for (const field of result.fields) {
      const row = document.createElement("tr");
      const code = document.createElement("td");
      code.textContent = field.code;
      const value = document.createElement("td");
      value.textContent = field.text;
      row.append(code, value);
      tbody.append(row);
    }
    this.query<HTMLElement>("#result-serialized").textContent = result.serialized;
    this.query<HTMLDivElement>("#result-panel").hidden = false;
  }

  private syncReportButton(): void {
    const select = this.query<HTMLSelectElement>("#suggested-select");
    const button = this.query<HTMLButtonElement>("#report-button");
    button.disabled = !this.state.hasResult || !select.value;
  }

  async submitReport(): Promise<void> {
    const select = this.query<HTMLSelectElement>("#suggested-select");
    const status = this.query<HTMLDivElement>("#report-status");
    if (!this.state.imageB64 || !select.value) return;
    try {
      const reply = await this.api.proposeModification(
        this.state.identified ?? "NONE",
        select.value,
        this.state.imageB64,
      );
      status.className = "banner success";
      status.textContent = reply.message;
    } catch (error) {
      status.className = "banner error";
      status.textContent = error instanceof ApiError ? error.message : String(error);
    }
    status.hidden = false;
  }
}
