"""Checkpointed, resumable range scans emitting ScanRecord JSON Lines.

The range of odd a is processed in fixed-size blocks; after each block the
output file is flushed and a checkpoint (a single JSON object, schema_version
1) is replaced atomically via a temp file and os.replace.  The checkpoint
stores a fingerprint of the scan parameters, the next a to process, and the
byte count written so far; resuming validates the fingerprint, truncates the
output back to the recorded byte count (discarding any torn tail), and
continues — which makes an interrupted-and-resumed run byte-identical to an
uninterrupted one.  With workers > 1 the records of each block are computed
in a process pool and merged back in a-order before writing, so the output
never depends on the worker count.
"""

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from collatzmat.records import ScanRecord, scan_record

SCHEMA_VERSION = 1
DEFAULT_BLOCK_SIZE = 256


class CheckpointMismatch(Exception):
    """The checkpoint on disk belongs to a different scan or schema."""


@dataclass
class ScanSummary:
    from_a: int
    to_a: int
    records_written: int
    bytes_written: int
    class_counts: dict[str, int]
    complete: bool
    resumed: bool


def normalize_range(from_a: int, to_a: int) -> tuple[int, int]:
    """Widen the range outward to odd endpoints and clamp the start to 3.

    a = 1 is a Unit with no rank, so scans begin at 3 regardless of the
    requested lower endpoint.
    """
    if from_a > to_a:
        raise ValueError(f"empty scan range: from {from_a} to {to_a}")
    lo = from_a if from_a % 2 else from_a - 1
    hi = to_a if to_a % 2 else to_a + 1
    lo = max(lo, 3)
    if lo > hi:
        raise ValueError(f"scan range {from_a}..{to_a} contains no odd a >= 3")
    return lo, hi


def command_fingerprint(from_a: int, to_a: int) -> str:
    """Stable identity of a scan invocation, for checkpoint validation."""
    payload = json.dumps(
        {"command": "scan", "schema_version": SCHEMA_VERSION, "from": from_a, "to": to_a},
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _write_checkpoint(path: str, state: dict) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh, indent=2)
        fh.write("\n")
    os.replace(tmp, path)


def _load_checkpoint(path: str, fingerprint: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        state = json.load(fh)
    version = state.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CheckpointMismatch(
            f"checkpoint {path} has schema_version {version}, expected {SCHEMA_VERSION}"
        )
    if state.get("command_fingerprint") != fingerprint:
        raise CheckpointMismatch(
            f"checkpoint {path} was written by a different scan "
            f"(fingerprint {state.get('command_fingerprint')!r}, expected {fingerprint!r})"
        )
    return state


def _compute_block(block: list[int], pool: ProcessPoolExecutor | None) -> list[ScanRecord]:
    if pool is None:
        return [scan_record(a) for a in block]
    return list(pool.map(scan_record, block, chunksize=max(1, len(block) // 8)))


def scan_range(
    from_a: int,
    to_a: int,
    out_path: str,
    checkpoint_path: str | None = None,
    workers: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
    stop_after_blocks: int | None = None,
) -> ScanSummary:
    """Scan odd a in [from_a, to_a], streaming JSON Lines to out_path.

    stop_after_blocks ends the run early after that many blocks (used to
    exercise interruption/resume); the checkpoint then allows a later call to
    continue seamlessly.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if block_size < 1:
        raise ValueError(f"block_size must be >= 1, got {block_size}")
    lo, hi = normalize_range(from_a, to_a)
    fingerprint = command_fingerprint(lo, hi)

    next_a = lo
    bytes_written = 0
    records_written = 0
    class_counts: dict[str, int] = {}
    resumed = False
    if checkpoint_path and os.path.exists(checkpoint_path):
        state = _load_checkpoint(checkpoint_path, fingerprint)
        next_a = state["next_a"]
        aggregates = state["partial_aggregates"]
        bytes_written = aggregates["bytes_written"]
        records_written = aggregates["records_written"]
        class_counts = dict(aggregates["class_counts"])
        resumed = True

    mode = "r+b" if resumed and os.path.exists(out_path) else "wb"
    if resumed and not os.path.exists(out_path):
        if bytes_written:
            raise CheckpointMismatch(
                f"checkpoint expects {bytes_written} bytes in {out_path}, "
                "but the output file is missing"
            )
        mode = "wb"

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        with open(out_path, mode) as out:
            if mode == "r+b":
                out.truncate(bytes_written)
                out.seek(bytes_written)
            blocks_done = 0
            while next_a <= hi:
                block_hi = min(next_a + 2 * (block_size - 1), hi)
                block = list(range(next_a, block_hi + 1, 2))
                for record in _compute_block(block, pool):
                    data = (record.to_json_line() + "\n").encode("utf-8")
                    out.write(data)
                    bytes_written += len(data)
                    records_written += 1
                    cls = record.number_class
                    class_counts[cls] = class_counts.get(cls, 0) + 1
                out.flush()
                next_a = block_hi + 2
                if checkpoint_path:
                    _write_checkpoint(
                        checkpoint_path,
                        {
                            "schema_version": SCHEMA_VERSION,
                            "command_fingerprint": fingerprint,
                            "next_a": next_a,
                            "partial_aggregates": {
                                "records_written": records_written,
                                "bytes_written": bytes_written,
                                "class_counts": dict(sorted(class_counts.items())),
                            },
                        },
                    )
                blocks_done += 1
                if stop_after_blocks is not None and blocks_done >= stop_after_blocks:
                    break
    finally:
        if pool is not None:
            pool.shutdown()

    return ScanSummary(
        from_a=lo,
        to_a=hi,
        records_written=records_written,
        bytes_written=bytes_written,
        class_counts=dict(sorted(class_counts.items())),
        complete=next_a > hi,
        resumed=resumed,
    )
