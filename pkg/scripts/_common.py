"""Shared helpers for the experiment scripts."""

import argparse
from pathlib import Path


def output_dir_parser(description: str, default: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--out-dir", type=Path, default=Path(default),
                        help=f"directory for the CSV files (default: {default})")
    return parser


def prepare(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path
