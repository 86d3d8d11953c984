"""CLI entry point: ``embed-service [--model ...] [--host ...] [--port ...]``."""

from __future__ import annotations

import argparse

from .app import create_app
from .config import DEFAULT_MODEL, ServiceConfig


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="embed-service",
        description="HTTP embedding service (sentence-transformers backend)",
    )
    parser.add_argument("--model", default=None, help=f"model id (default {DEFAULT_MODEL})")
    parser.add_argument("--host", default=None)
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--max-batch", type=int, default=None, dest="max_batch_size")
    parser.add_argument(
        "--translate-url",
        default=None,
        dest="translator_url",
        help="enable the /translate passthrough, proxying to this upstream service",
    )
    args = parser.parse_args(argv)

    config = ServiceConfig.from_env(
        model=args.model,
        host=args.host,
        port=args.port,
        max_batch_size=args.max_batch_size,
        translator_url=args.translator_url,
    )
    app = create_app(config)

    import uvicorn

    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
