"""
Parallel Scan Runner
====================

Runs a ScanTask over its whole function class.

- The rank space is cut into fixed chunk_size ranges. The cut does not depend
  on the worker count, and results are folded in range order, so the report
  is identical for any number of workers.
- Workers (multiprocessing.Pool, ordered imap) receive only the frozen
  ScanTask and a (start, stop) pair.
- With a checkpoint path, one JSON line {"start", "end", "partial"} is
  appended per checkpoint block. A rerun with the same path skips the
  blocks already on disk.
"""

import functools
import hashlib
import json
import multiprocessing as mp
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from boolinfo.core.env_config import get_environment_config
from boolinfo.core.logger import get_logger
from boolinfo.search.batch import ScanTask, evaluate_range
from boolinfo.search.reports import PartialReport

logger = get_logger(__name__)

Range = Tuple[int, int]


def chunk_ranges(total: int, chunk_size: int, start: int = 0) -> List[Range]:
    """[(0, c), (c, 2c), ...] covering [start, total); boundaries are multiples of chunk_size."""
    first = (start // chunk_size) * chunk_size
    ranges = [(max(lo, start), min(lo + chunk_size, total)) for lo in range(first, total, chunk_size)]
    return [(lo, hi) for lo, hi in ranges if lo < hi]


def task_fingerprint(task: ScanTask, chunk_size: int) -> str:
    payload = dict(task.fingerprint_payload(), chunk_size=chunk_size)
    digest = hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()
    return digest[:16]


def default_checkpoint_path(task: ScanTask, chunk_size: int) -> Path:
    config = get_environment_config()
    cls = task.function_class
    name = f"{task.check}-{cls.scope.value}-n{cls.n}-{task_fingerprint(task, chunk_size)}.jsonl"
    return Path(config.checkpoint_dir) / name


def _decode(line: str) -> Optional[dict]:
    try:
        record = json.loads(line)
    except json.JSONDecodeError:
        return None
    return record if isinstance(record, dict) else None


class Checkpoint:
    """Append-only JSON-lines progress file for one scan."""

    def __init__(self, path: Path, fingerprint: str):
        self.path = Path(path)
        self.fingerprint = fingerprint

    def load(self, task: ScanTask) -> Tuple[int, Optional[PartialReport]]:
        """
        (resume rank, folded partial) from an existing file; (0, None) if absent.

        Only the contiguous prefix of complete records is trusted. A line cut
        short by an interrupted write, or any record after a gap, is dropped
        and the file is rewritten up to the resume point.
        """
        if not self.path.exists():
            return 0, None
        with open(self.path, "r", encoding="utf-8") as f:
            raw = [line for line in f if line.strip()]
        header = _decode(raw[0]) if raw else None
        if header is None or header.get("fingerprint") != self.fingerprint:
            logger.warning(f"⚠️  Checkpoint {self.path} is unreadable or belongs to another scan; starting over")
            self.path.unlink()
            return 0, None

        resumed = 0
        folded: Optional[PartialReport] = None
        kept = [raw[0]]
        for number, line in enumerate(raw[1:], start=2):
            record = _decode(line)
            if record is None:
                logger.warning(f"⚠️  Checkpoint line {number} is incomplete; resuming from rank {resumed:,}")
                break
            if record.get("start") != resumed or "end" not in record or "partial" not in record:
                logger.warning(f"⚠️  Checkpoint gap at rank {resumed:,}; dropping later records")
                break
            partial = PartialReport.from_dict(record["partial"])
            folded = partial if folded is None else _fold(task, folded, partial)
            resumed = record["end"]
            kept.append(line)

        if len(kept) < len(raw) or not raw[-1].endswith("\n"):
            self._rewrite(kept)
        logger.info(f"♻️  Resuming {task.check} from rank {resumed:,} ({self.path})")
        return resumed, folded

    def open(self) -> None:
        if not self.path.exists():
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._append({"fingerprint": self.fingerprint})

    def write_block(self, start: int, end: int, partial: PartialReport) -> None:
        self._append({"start": start, "end": end, "partial": partial.to_dict()})

    def _append(self, record: dict) -> None:
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(json.dumps(record, sort_keys=True))
            f.write("\n")

    def _rewrite(self, lines: List[str]) -> None:
        staging = self.path.with_name(self.path.name + ".tmp")
        with open(staging, "w", encoding="utf-8") as f:
            f.writelines(line.rstrip("\n") + "\n" for line in lines)
        staging.replace(self.path)


def _fold(task: ScanTask, left: PartialReport, right: PartialReport) -> PartialReport:
    return left.merge(right, task.tolerance, task.max_maximizers, task.max_violations)


def _results(task: ScanTask, ranges: List[Range], threads: int) -> Iterator[PartialReport]:
    worker = functools.partial(evaluate_range, task)
    if threads <= 1 or len(ranges) <= 1:
        for bounds in ranges:
            yield worker(bounds)
        return
    with mp.Pool(threads) as pool:
        yield from pool.imap(worker, ranges)


def run_scan(task: ScanTask, threads: Optional[int] = None, chunk_size: Optional[int] = None,
             checkpoint_path: Optional[Path] = None,
             checkpoint_interval: Optional[int] = None) -> PartialReport:
    """
    Evaluate every function of task.function_class and fold the partials.

    Args:
        task: frozen scan configuration
        threads: worker processes (default from settings / BOOLINFO_THREADS)
        chunk_size: functions per range (default from settings)
        checkpoint_path: JSON-lines progress file; None disables checkpointing
        checkpoint_interval: functions per checkpoint block (default from settings)
    """
    config = get_environment_config()
    threads = threads or config.threads
    chunk_size = chunk_size or config.chunk_size
    interval = checkpoint_interval or config.checkpoint_interval
    total = task.function_class.size

    resumed, folded = 0, None
    checkpoint = None
    if checkpoint_path is not None:
        checkpoint = Checkpoint(checkpoint_path, task_fingerprint(task, chunk_size))
        resumed, folded = checkpoint.load(task)
        checkpoint.open()

    ranges = chunk_ranges(total, chunk_size, resumed)
    logger.info(
        f"🔎 Scan {task.check} over {task.function_class.label}: {total - resumed:,} functions "
        f"x {len(task.points)} points, {len(ranges)} chunk(s), {threads} worker(s)"
    )

    block: Optional[PartialReport] = None
    block_start = resumed
    for (lo, hi), partial in zip(ranges, _results(task, ranges, threads)):
        block = partial if block is None else _fold(task, block, partial)
        if hi == total or (hi - block_start) >= interval:
            if checkpoint is not None:
                checkpoint.write_block(block_start, hi, block)
            folded = block if folded is None else _fold(task, folded, block)
            logger.info(f"   ... {hi:,}/{total:,} functions ({100.0 * hi / total:.1f}%)")
            block, block_start = None, hi

    return folded if folded is not None else PartialReport()
