// Runtime configuration: point the UI at the document service.
// Served alongside index.html so deployments can edit it without rebuilding.
window.DOCLOOP_API_BASE = "http://127.0.0.1:5000";
