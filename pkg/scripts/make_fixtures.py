#!/usr/bin/env python3
"""Regenerate the shipped synthetic noise-experiment corpora under data/."""

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "tests"))

from corpusgen import make_noise_corpus  # noqa: E402

if __name__ == "__main__":
    disjoint = make_noise_corpus(REPO / "data" / "noise_disjoint", seed=11)
    overlap = make_noise_corpus(
        REPO / "data" / "noise_overlap", shared_query_word="surgewater", seed=13
    )
    print(f"wrote {disjoint}\nwrote {overlap}")
