"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def record(cid: str, ok: bool, detail: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} [{cid}] {detail}"
    print(line)
    LINES.append(line)
    return line
