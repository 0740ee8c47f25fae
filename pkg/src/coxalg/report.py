"""Verification reports: ordered items with PASS/FAIL/SKIP/RESOURCE/INFO status."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .groebner import ResourceLimit

PASS, FAIL, SKIP, RESOURCE, INFO = "PASS", "FAIL", "SKIP", "RESOURCE", "INFO"


@dataclass
class Item:
    id: str
    status: str
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "detail": self.detail, "seconds": round(self.seconds, 3)}


@dataclass
class Report:
    title: str
    items: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, item_id: str, status: str, detail: dict | None = None, seconds: float = 0.0) -> Item:
        it = Item(item_id, status, detail or {}, seconds)
        self.items.append(it)
        return it

    def run(self, item_id: str, fn) -> Item:
        """Run ``fn() -> (status, detail)``; a hit resource bound becomes RESOURCE."""
        t0 = time.monotonic()
        try:
            status, detail = fn()
        except ResourceLimit as err:
            status, detail = RESOURCE, {"reason": str(err)}
        return self.add(item_id, status, detail, time.monotonic() - t0)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for it in other.items:
            self.items.append(Item(prefix + it.id, it.status, it.detail, it.seconds))

    def get(self, item_id: str) -> Item:
        for it in self.items:
            if it.id == item_id:
                return it
        raise KeyError(item_id)

    def statuses(self) -> dict:
        return {it.id: it.status for it in self.items}

    def failed(self) -> list:
        return [it for it in self.items if it.status == FAIL]

    def exit_code(self) -> int:
        if self.failed():
            return 1
        if any(it.status == RESOURCE for it in self.items):
            return 2
        return 0

    def to_dict(self, timings: bool = True) -> dict:
        items = [it.to_dict() for it in self.items]
        if not timings:
            for d in items:
                d.pop("seconds")
        return {"title": self.title, "meta": self.meta, "items": items}

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2, default=str)

    def summary_lines(self) -> list:
        return [f"{it.status:8s} {it.id}" for it in self.items]
