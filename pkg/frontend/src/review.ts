/**
 * Review queue: the approver triages pending modification requests.
 *
 * The server is the single source of truth: the table re-fetches after every
 * approve/reject instead of mutating rows locally, so two open tabs converge
 * on the next refresh. A failed action keeps the row and shows the error
 * envelope next to it.
 */
import { ApiError, DocumentApi, ModificationRequest } from "./api.js";

const ROW_CAP = 200;

export class ReviewQueueView {
  constructor(
    private readonly root: HTMLElement,
    private readonly api: DocumentApi,
  ) {}

  render(): void {
    this.root.innerHTML = `
      <section class="panel">
        <h2>Modification requests</h2>
        <p>Approve or reject the following modification requests.</p>
        <div class="form-row">
          <button id="refresh-button">Refresh</button>
        </div>
        <div id="queue-error" class="banner error" hidden></div>
        <div id="queue-container"></div>
      </section>
    `;
    this.query<HTMLButtonElement>("#refresh-button").addEventListener("click", () =>
      this.refresh(),
    );
    void this.refresh();
  }

  private query<T extends HTMLElement>(selector: string): T {
    const element = this.root.querySelector<T>(selector);
    if (!element) throw new Error(`missing element ${selector}`);
    return element;
  }

  async refresh(): Promise<void> {
    const errorBanner = this.query<HTMLDivElement>("#queue-error");
    errorBanner.hidden = true;
    let requests: ModificationRequest[];
    try {
      requests = await this.api.getAllRequests();
    } catch (error) {
      errorBanner.textContent = error instanceof ApiError ? error.message : String(error);
      errorBanner.hidden = false;
      return;
    }
    this.renderTable(requests.slice(0, ROW_CAP));
  }

  private renderTable(requests: ModificationRequest[]): void {
    const container = this.query<HTMLDivElement>("#queue-container");
    container.innerHTML = "";
    if (requests.length === 0) {
      const empty = document.createElement("p");
      empty.id = "empty-state";
      empty.textContent = "No pending requests.";
      container.append(empty);
      return;
    }
    const table = document.createElement("table");
    table.id = "queue-table";
    table.innerHTML = `
      <thead>
        <tr>
          <th>Request Id</th><th>Image</th>
          <th>Document Identified</th><th>Document Suggested</th><th>Action</th>
        </tr>
      </thead>
    `;
    const tbody = document.createElement("tbody");
    for (const request of requests) {
      tbody.append(this.renderRow(request));
    }
    table.append(tbody);
    container.append(table);
  }

  private renderRow(request: ModificationRequest): HTMLTableRowElement {
    const row = document.createElement("tr");
    row.dataset.reqId = String(request.req_id);

    const id = document.createElement("td");
    id.textContent = String(request.req_id);

    const imageCell = document.createElement("td");
    const thumbnail = document.createElement("img");
    thumbnail.className = "thumbnail";
    thumbnail.alt = `request ${request.req_id}`;
    thumbnail.src = `data:image/png;base64,${request.image}`;
    imageCell.append(thumbnail);

    const identified = document.createElement("td");
    identified.textContent = request.document_identified;
    const suggested = document.createElement("td");
    suggested.textContent = request.document_suggested;

    const actions = document.createElement("td");
    const status = document.createElement("span");
    status.className = "row-error";
    for (const [label, action] of [
      ["Approve", () => this.api.approveRequest(request.req_id)],
      ["Reject", () => this.api.rejectRequest(request.req_id)],
    ] as const) {
      const button = document.createElement("button");
      button.textContent = label;
      button.addEventListener("click", async () => {
        button.disabled = true;
        try {
          await action();
          await this.refresh();
        } catch (error) {
          button.disabled = false;
          status.textContent = error instanceof ApiError ? error.message : String(error);
        }
      });
      actions.append(button);
    }
    actions.append(status);

    row.append(id, imageCell, identified, suggested, actions);
    return row;
  }
}
