/**
 * Entry point: two routes, no authentication.
 *   "/"        (or #/)       the end-user upload page
 *   "/review"  (or #/review) the approver's queue
 */
import { api } from "./api.js";
import { ReviewQueueView } from "./review.js";
import { UploadView } from "./upload.js";

function currentRoute(): "upload" | "review" {
  const hash = window.location.hash.replace(/^#/, "");
  const path = hash || window.location.pathname;
  return path.endsWith("/review") ? "review" : "upload";
}

export function mount(root: HTMLElement): void {
  root.innerHTML = `
    <nav>
      <strong>docloop</strong>
      <a href="#/" id="nav-upload">Upload</a>
      <a href="#/review" id="nav-review">Review queue</a>
    </nav>
    <main id="view"></main>
  `;
  const view = root.querySelector<HTMLElement>("#view")!;
  const dispatch = () => {
    if (currentRoute() === "review") {
      new ReviewQueueView(view, api).render();
    } else {
      new UploadView(view, api).render();
    }
  };
  window.addEventListener("hashchange", dispatch);
  dispatch();
}

const root = document.getElementById("app");
if (root) {
  mount(root);
}
