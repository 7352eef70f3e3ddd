"""Golden report rendering for the figure fixtures.

Run ``python tests/golden.py`` to regenerate ``fixtures/golden``; review the
diff before committing it.
"""

from __future__ import annotations

import sys
from pathlib import Path

from fincat import report, serialize

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = FIXTURES / "golden"


def figure_fixtures() -> list[Path]:
    return sorted(FIXTURES.glob("fig*.json"), key=lambda p: (int(p.stem[3:].split("-")[0]), p.stem))


def render(path: Path) -> str:
    doc = serialize.load_json(path)
    name = path.stem
    if "source" in doc:
        F, G, comps = serialize.transformation_parts(doc, base_dir=path.parent)
        return report.transformation_report(F, G, comps, name).text()
    if "object_map" in doc:
        F = serialize.functor_from_json(doc, base_dir=path.parent)
        return report.functor_report(F, name).text() + report.fibers_report(F, name).text()
    c = serialize.category_from_json(doc, base_dir=path.parent)
    return report.category_report(c, name).text()


def main() -> int:
    GOLDEN.mkdir(exist_ok=True)
    for path in figure_fixtures():
        (GOLDEN / f"{path.stem}.txt").write_text(render(path))
    return 0


if __name__ == "__main__":
    sys.exit(main())
