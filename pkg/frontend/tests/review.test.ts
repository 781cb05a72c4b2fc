import { beforeEach, describe, expect, it, vi } from "vitest";

import { ReviewQueueView } from "../src/review.js";
import { flushTasks, makeRequest, mockApi } from "./helpers.js";

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app")!;
});

describe("review queue", () => {
  it("shows the empty state", async () => {
    new ReviewQueueView(root, mockApi()).render();
    await flushTasks();
    expect(root.querySelector("#empty-state")!.textContent).toBe("No pending requests.");
  });

  it("renders one row per request with thumbnail and classes", async () => {
    const api = mockApi({
      getAllRequests: vi.fn(async () => [makeRequest(101), makeRequest(102)]),
    });
    new ReviewQueueView(root, api).render();
    await flushTasks();

    const rows = root.querySelectorAll("#queue-table tbody tr");
    expect(rows).toHaveLength(2);
    const first = rows[0]!;
    expect(first.querySelector("td")!.textContent).toBe("101");
    const image = first.querySelector("img") as HTMLImageElement;
    expect(image.src).toBe(`data:image/png;base64,${makeRequest(101).image}`);
    const cells = [...first.querySelectorAll("td")].map((td) => td.textContent);
    expect(cells[2]).toBe("pan_v1");
    expect(cells[3]).toBe("adhaar_v1_p1");
  });

  it("approve posts the id and re-fetches from the server", async () => {
    const queue = [makeRequest(7), makeRequest(8)];
    const api = mockApi({
      getAllRequests: vi.fn(async () => queue.map((r) => ({ ...r }))),
      approveRequest: vi.fn(async (reqId: number) => {
        const index = queue.findIndex((r) => r.req_id === reqId);
        queue.splice(index, 1);
        return { message: "Request processed successfully." };
      }),
    });
    new ReviewQueueView(root, api).render();
    await flushTasks();

    const approve = [...root.querySelectorAll("#queue-table tbody tr")][0]!
      .querySelectorAll("button")[0] as HTMLButtonElement;
    approve.click();
    await flushTasks();

    expect(api.approveRequest).toHaveBeenCalledWith(7);
    expect(api.getAllRequests).toHaveBeenCalledTimes(2); // on load + after action
    const remaining = [...root.querySelectorAll("#queue-table tbody tr")].map(
      (tr) => tr.getAttribute("data-req-id"),
    );
    expect(remaining).toEqual(["8"]);
  });

  it("a failed action keeps the row and shows the envelope", async () => {
    const api = mockApi({
      getAllRequests: vi.fn(async () => [makeRequest(9)]),
      rejectRequest: vi.fn(async () => {
        throw new Error("NotFound: no modification request with id 9");
      }),
    });
    new ReviewQueueView(root, api).render();
    await flushTasks();

    const reject = root
      .querySelector("#queue-table tbody tr")!
      .querySelectorAll("button")[1] as HTMLButtonElement;
    reject.click();
    await flushTasks();

    expect(root.querySelectorAll("#queue-table tbody tr")).toHaveLength(1);
    expect(root.querySelector(".row-error")!.textContent).toMatch(/NotFound/);
  });

  it("another tab's approval disappears on the next refresh", async () => {
    // server truth changes between fetches; our refresh converges on it
    const responses = [[makeRequest(1), makeRequest(2)], [makeRequest(2)]];
    const api = mockApi({
      getAllRequests: vi.fn(async () => responses.shift() ?? [makeRequest(2)]),
    });
    new ReviewQueueView(root, api).render();
    await flushTasks();
    expect(root.querySelectorAll("#queue-table tbody tr")).toHaveLength(2);

    (root.querySelector("#refresh-button") as HTMLButtonElement).click();
    await flushTasks();
    const rows = [...root.querySelectorAll("#queue-table tbody tr")];
    expect(rows).toHaveLength(1);
    expect(rows[0]!.getAttribute("data-req-id")).toBe("2");
  });

  it("getAll failures render in the queue banner", async () => {
    const api = mockApi({
      getAllRequests: vi.fn(async () => {
        throw new Error("network error: connection refused");
      }),
    });
    new ReviewQueueView(root, api).render();
    await flushTasks();
    const banner = root.querySelector("#queue-error") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toMatch(/network error/);
  });
});
