"""Named public contact datasets for the benchmark harness.

Files are cached as plain ``t u v`` text under ``$LSCLIQUE_DATA`` (default
``~/.cache/lsclique``).  Datasets with a known package source are fetched
automatically; the others must be placed in the cache (or passed with
``--file``) by the user.
"""

from __future__ import annotations

import os
import subprocess
import sys
import tempfile
import zipfile
from dataclasses import dataclass, field
from pathlib import Path


class DatasetUnavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class Dataset:
    name: str
    # delta -> (m, max degree, maximal cliques, max clique size), reference values
    reference: dict[int, tuple[int, int, int, int]] = field(default_factory=dict)
    # (pip requirement, archive member) when the raw file ships inside a wheel
    wheel: tuple[str, str] | None = None
    note: str = ""

    @property
    def filename(self) -> str:
        return f"{self.name}.txt"


DATASETS = {
    d.name: d
    for d in [
        Dataset(
            "hypertext",
            {0: (20818, 9, 19037, 6), 125: (6323, 14, 6859, 7), 3125: (4082, 48, 6308, 7)},
            note="SocioPatterns ACM Hypertext 2009 contact list (t i j)",
        ),
        Dataset(
            "highschool11",
            {0: (28539, 8, 26384, 5), 125: (6472, 19, 7732, 7), 3125: (3636, 34, 7500, 10)},
            note="SocioPatterns Thiers high school 2011 contacts (t i j Ci Cj)",
        ),
        Dataset(
            "hospital-ward",
            {0: (32424, 7, 27835, 5), 125: (7971, 12, 9731, 6), 3125: (3033, 25, 9856, 9)},
            wheel=("tnetwork==1.2", "tnetwork/dyn_graph/toy_data/Contacts_Hospital.csv"),
            note="SocioPatterns hospital ward contacts",
        ),
        Dataset(
            "highschool12",
            {0: (45047, 5, 42105, 5), 125: (11329, 10, 12115, 5), 3125: (5691, 18, 7268, 7)},
            wheel=("tnetwork==1.2", "tnetwork/dyn_graph/toy_data/thiers_2012.csv"),
            note="SocioPatterns Thiers high school 2012 contacts",
        ),
    ]
}


def cache_dir() -> Path:
    return Path(os.environ.get("LSCLIQUE_DATA", Path.home() / ".cache" / "lsclique"))


def to_instantaneous(text: str) -> str:
    """Keep the ``t u v`` columns of a contact list, dropping metadata columns."""
    out = []
    for line in text.splitlines():
        tokens = line.split()
        if len(tokens) >= 3 and not tokens[0].startswith("#"):
            out.append(" ".join(tokens[:3]))
    return "\n".join(out) + "\n"


def _fetch_wheel(requirement: str, member: str) -> str:
    with tempfile.TemporaryDirectory() as tmp:
        cmd = [sys.executable, "-m", "pip", "download", "--no-deps", "-q", "-d", tmp, requirement]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        if proc.returncode != 0:
            raise DatasetUnavailable(f"pip download {requirement} failed: {proc.stderr.strip()}")
        wheels = list(Path(tmp).glob("*.whl"))
        if not wheels:
            raise DatasetUnavailable(f"no wheel downloaded for {requirement}")
        with zipfile.ZipFile(wheels[0]) as zf:
            return zf.read(member).decode("utf-8")


def locate(name: str, fetch: bool = True) -> Path:
    """Path of the cached ``t u v`` file for ``name``, fetching it if possible."""
    try:
        ds = DATASETS[name]
    except KeyError:
        raise DatasetUnavailable(f"unknown dataset {name!r}; known: {', '.join(DATASETS)}") from None
    path = cache_dir() / ds.filename
    if path.exists():
        return path
    if not fetch or ds.wheel is None:
        raise DatasetUnavailable(
            f"{name} not found at {path}; place the {ds.note} there "
            f"(or pass --file) to run this benchmark"
        )
    text = to_instantaneous(_fetch_wheel(*ds.wheel))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return path
