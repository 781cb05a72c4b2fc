"""Drive the six HTTP endpoints against a live in-process server.

Needs the dataset from 02_build_dataset.py. The same flow works against
`docloop serve --port 5000 --backend oracle --dataset demo_output/dataset`.
"""
import base64
import threading
import time
from pathlib import Path

import httpx
import uvicorn

from docloop import FeedbackStore, bundled_registry
from docloop.pipeline import ManifestIndex, OracleDetector, OracleOcr
from docloop.service import ServiceContext, create_app

dataset = Path("demo_output/dataset")
index = ManifestIndex.for_dataset(dataset)
context = ServiceContext(
    registry=bundled_registry(),
    detector=OracleDetector(index),
    ocr=OracleOcr(index),
    store=FeedbackStore("demo_output/svc_requests", "demo_output/svc_rejected"),
)

server = uvicorn.Server(uvicorn.Config(create_app(context), host="127.0.0.1",
                                       port=5099, log_level="warning"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

base = "http://127.0.0.1:5099"
sample = next((dataset / "data" / "images" / "test").glob("*_a4_100_1000.png"))
image_b64 = base64.b64encode(sample.read_bytes()).decode("ascii")

with httpx.Client() as client:
    print("POST /document/identify")
    print("  ", client.post(f"{base}/document/identify", json={"image": image_b64}).json())

    print("POST /document/extract/data")
    body = client.post(f"{base}/document/extract/data", json={"image": image_b64}).json()
    print("  ", {k: body[k] for k in ("class_id", "serialized")})

    print("POST /document/propose/modification")
    proposal = {
        "document_identified": body["class_id"],
        "document_suggested": "votercard_v1",
        "image": image_b64,
    }
    print("  ", client.post(f"{base}/document/propose/modification", json=proposal).json())

    print("POST /document/request/getAll")
    queue = client.post(f"{base}/document/request/getAll").json()
    print("  ", [(r["req_id"], r["document_suggested"]) for r in queue])

    print("POST /document/request/approve")
    req_id = queue[0]["req_id"]
    print("  ", client.post(f"{base}/document/request/approve", json={"req_id": req_id}).json())

    print("POST /document/request/reject on the same id (already settled)")
    print("  ", client.post(f"{base}/document/request/reject", json={"req_id": req_id}).json())

server.should_exit = True
thread.join(timeout=5)
