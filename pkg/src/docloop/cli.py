"""Command-line entry points.

    docloop gen      --class adhaar_v1_p1 --count 10 --seed 42 --out DIR
    docloop augment  --in DIR --out DIR [--jpeg]
    docloop build    --count 100 --seed 42 --out DIR [--jpeg]
    docloop split    --total 100
    docloop eval     --dataset DIR --split test --backend oracle [--out report.json]
    docloop simulate --dataset DIR --rounds 3 --seed 7
    docloop assemble --base DIR --rejected DIR --out DIR
    docloop serve    --port 5000 --backend oracle [--dataset DIR]
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .model import CLASS_IDS


def _cmd_gen(args: argparse.Namespace) -> int:
    from .generate import GenSeed, generate_batch

    class_ids = CLASS_IDS if args.document_class == "all" else (args.document_class,)
    for class_id in class_ids:
        bases = generate_batch(
            class_id, args.count, GenSeed(seed=args.seed, max_count=args.count), args.out
        )
        print(f"{class_id}: generated {len(bases)} documents under {args.out}")
    return 0


def _cmd_augment(args: argparse.Namespace) -> int:
    from .dataset import augment_dataset

    counts = augment_dataset(
        args.in_dir, args.out, image_format="jpeg" if args.jpeg else "png"
    )
    print(json.dumps(counts, indent=2))
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    from .dataset import build_dataset

    counts = build_dataset(
        args.out,
        count=args.count,
        seed=args.seed,
        image_format="jpeg" if args.jpeg else "png",
        workers=args.workers,
    )
    print(json.dumps(counts, indent=2))
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    from .render import assign_split

    boundaries: dict[str, list[int]] = {"train": [], "validation": [], "test": []}
    for index in range(1, args.total + 1):
        boundaries[assign_split(index, args.total)].append(index)
    for split, indices in boundaries.items():
        span = f"{indices[0]}..{indices[-1]}" if indices else "-"
        print(f"{split:<12} {len(indices):>6} images  (indices {span})")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    from .evalkit import evaluate
    from .pipeline import ManifestIndex, OracleDetector, OracleOcr
    from .templates import bundled_registry

    if args.backend != "oracle":
        print(f"unknown backend {args.backend!r}; only 'oracle' ships in-process",
              file=sys.stderr)
        return 2
    index = ManifestIndex.for_dataset(args.dataset)
    metrics = evaluate(
        args.dataset,
        args.split,
        OracleDetector(index),
        OracleOcr(index),
        bundled_registry(),
        index=index,
    )
    payload = metrics.to_json_dict()
    print(json.dumps(payload, indent=2))
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    from .evalkit import expected_initial_accuracy, simulate_arl_loop

    trajectory = simulate_arl_loop(args.dataset, args.rounds, args.seed)
    print(json.dumps({
        "accuracy_per_round": trajectory,
        "expected_round0": expected_initial_accuracy(),
    }, indent=2))
    return 0


def _cmd_assemble(args: argparse.Namespace) -> int:
    from .feedback import assemble_dataset

    summary = assemble_dataset(args.base, args.rejected, args.out)
    print(json.dumps(summary, indent=2))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import os

    from .service import serve

    if args.backend != "oracle":
        print(f"unknown backend {args.backend!r}; only 'oracle' ships in-process",
              file=sys.stderr)
        return 2
    if args.dataset:
        os.environ["DATASET_DIR"] = str(args.dataset)
    serve(port=args.port, host=args.host)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="docloop", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate documents and their annotations")
    p.add_argument("--class", dest="document_class", default="all",
                   choices=("all",) + CLASS_IDS)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("augment", help="fan generated bases out into the dataset tree")
    p.add_argument("--in", dest="in_dir", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jpeg", action="store_true", help="save .jpg instead of lossless .png")
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("build", help="gen + augment for all classes in one step")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", required=True)
    p.add_argument("--jpeg", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("split", help="show the 7:2:1 split for a given total")
    p.add_argument("--total", type=int, required=True)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("eval", help="identify+extract+validate over a split")
    p.add_argument("--dataset", required=True)
    p.add_argument("--split", default="test", choices=("train", "validation", "test"))
    p.add_argument("--backend", default="oracle")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("simulate", help="run the feedback-loop simulation")
    p.add_argument("--dataset", required=True)
    p.add_argument("--rounds", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("assemble", help="merge base dataset with the rejected pipeline")
    p.add_argument("--base", required=True)
    p.add_argument("--rejected", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_assemble)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=5000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--backend", default="oracle")
    p.add_argument("--dataset", help="dataset dir providing the oracle manifest index")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
