#!/usr/bin/env python3
"""Record the golden pipeline traces for the 20 fixture queries.

Run once after any intentional pipeline/fixture change, from the repo
root:  PYTHONPATH=src python3 scripts/freeze_goldens.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from sehatbot.service import build_mock_stack  # noqa: E402


def main() -> None:
    fixtures = json.loads((ROOT / "tests" / "data" / "pipeline_fixtures.json").read_text())
    stack = build_mock_stack()
    conversation_id = "golden-conversation"
    stack.sessions  # unused; pipeline is driven directly
    traces = []
    for fixture in fixtures:
        result = stack.pipeline.run_turn(conversation_id, fixture["query"])
        traces.append(result.trace.to_json_dict())
    out = ROOT / "tests" / "data" / "golden_traces.json"
    out.write_text(
        json.dumps(traces, ensure_ascii=False, indent=1, sort_keys=True),
        encoding="utf-8",
    )
    print(f"wrote {out} ({len(traces)} traces)")


if __name__ == "__main__":
    main()
