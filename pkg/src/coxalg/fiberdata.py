"""Reader for the sectioned reference-data files under ``data/``."""
from __future__ import annotations

from .coxring import data_text


def read_sections(name: str) -> dict:
    out: dict = {}
    cur = None
    for raw in data_text(name).splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            cur = line[1:-1]
            out[cur] = []
            continue
        if cur is None:
            raise ValueError(f"{name}: data before the first section")
        out[cur].append(line)
    return {k: " ".join(v) for k, v in out.items()}


def poly_list(text: str) -> list:
    return [s.strip() for s in text.split(",") if s.strip()]


def int_vectors(text: str) -> list:
    return [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]


def word_groups(text: str) -> list:
    return [part.split() for part in text.split(";") if part.strip()]


def minor_seeds(text: str) -> list:
    """Entries 'rows | cols | zeroed vars or - | support', separated by ';'."""
    out = []
    for part in text.split(";"):
        if not part.strip():
            continue
        rows, cols, zero, support = (f.split() for f in part.split("|"))
        out.append({
            "rows": tuple(int(r) for r in rows),
            "cols": tuple(int(c) for c in cols),
            "zero": [] if zero == ["-"] else zero,
            "support": set(support),
        })
    return out
