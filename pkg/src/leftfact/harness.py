"""Checkpoint and ledger persistence for long sweeps.

A sweep owns at most one checkpoint file (JSON, atomically replaced) and
one ledger file (JSON lines, append-only between checkpoints). The
invariant linking them: every record at or below the checkpoint frontier
is on disk in the ledger before the checkpoint naming that frontier is
visible. Resume therefore only ever has to discard ledger lines past the
frontier, never invent missing ones.
"""

from __future__ import annotations

import dataclasses
import json
import os
import time
from dataclasses import dataclass, field
from typing import Any, IO

from .modular import VerificationRecord

__all__ = [
    "CHECKPOINT_VERSION",
    "CheckpointError",
    "CheckpointCorrupt",
    "CheckpointMismatch",
    "Checkpoint",
    "write_checkpoint",
    "load_checkpoint",
    "ensure_compatible",
    "LedgerWriter",
    "FileSink",
    "canonical_lines",
    "record_to_row",
    "CSV_HEADER",
]

CHECKPOINT_VERSION = 1

# Fields whose values legitimately differ between two runs of the same
# sweep; stripped before any determinism comparison.
VOLATILE_FIELDS = ("elapsed_ns", "wall_seconds")

CSV_HEADER = "prime,residue,violates_kh,elapsed_ns,method"


class CheckpointError(Exception):
    """Base class for checkpoint load/validation failures."""


class CheckpointCorrupt(CheckpointError):
    """File exists but cannot be trusted (bad JSON, wrong shape, wrong version)."""


class CheckpointMismatch(CheckpointError):
    """Valid checkpoint, but for a different command or parameter set."""


@dataclass(frozen=True)
class Checkpoint:
    command: str
    params: dict[str, Any]
    frontier: int
    counters: dict[str, int]
    wall_seconds: float
    version: int = CHECKPOINT_VERSION

    def __post_init__(self) -> None:
        if self.frontier < 0:
            raise ValueError(f"frontier must be nonnegative, got {self.frontier}")
        if self.wall_seconds < 0:
            raise ValueError("wall_seconds must be nonnegative")


def _fsync_dir(path: str) -> None:
    fd = os.open(os.path.dirname(os.path.abspath(path)) or ".", os.O_RDONLY)
    try:
        os.fsync(fd)
    finally:
        os.close(fd)


def write_checkpoint(path: str, checkpoint: Checkpoint) -> None:
    """Atomically publish a checkpoint: temp file, fsync, rename over."""
    payload = json.dumps(dataclasses.asdict(checkpoint), sort_keys=True)
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(payload + "\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)
    _fsync_dir(path)


def load_checkpoint(path: str) -> Checkpoint | None:
    """Read a checkpoint; None when absent, CheckpointCorrupt when unusable."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except FileNotFoundError:
        return None
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CheckpointCorrupt(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(obj, dict):
        raise CheckpointCorrupt(f"{path}: expected a JSON object")
    if obj.get("version") != CHECKPOINT_VERSION:
        raise CheckpointCorrupt(
            f"{path}: unsupported checkpoint version {obj.get('version')!r}"
        )
    try:
        return Checkpoint(
            command=obj["command"],
            params=dict(obj["params"]),
            frontier=int(obj["frontier"]),
            counters={k: int(v) for k, v in obj["counters"].items()},
            wall_seconds=float(obj["wall_seconds"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointCorrupt(f"{path}: malformed field ({exc})") from exc


def ensure_compatible(
    checkpoint: Checkpoint, command: str, params: dict[str, Any]
) -> None:
    """Refuse checkpoints from a different command or parameter set.

    Worker count is intentionally absent from params: partitioning does not
    change the record stream, so a sweep may resume under a different
    process count.
    """
    if checkpoint.command != command:
        raise CheckpointMismatch(
            f"checkpoint is for command {checkpoint.command!r}, not {command!r}"
        )
    if checkpoint.params != params:
        diff = sorted(
            k
            for k in set(checkpoint.params) | set(params)
            if checkpoint.params.get(k) != params.get(k)
        )
        raise CheckpointMismatch(
            f"checkpoint params differ on {', '.join(diff)}: "
            f"{checkpoint.params} vs {params}"
        )


def record_to_row(record: VerificationRecord) -> str:
    return (
        f"{record.prime},{record.residue},"
        f"{str(record.violates_kh).lower()},{record.elapsed_ns},{record.method}"
    )


class LedgerWriter:
    """Append-only JSON-lines ledger with resume truncation.

    Record lines carry type "record"; a single type "summary" line closes a
    run that finished. Interrupted runs leave no summary, which is how a
    reader tells a partial ledger from a complete one.
    """

    def __init__(self, path: str, resume_frontier: int | None = None) -> None:
        self.path = path
        if resume_frontier is not None and os.path.exists(path):
            self._truncate_to(resume_frontier)
        else:
            # treat any stale file as a fresh start
            with open(path, "w", encoding="utf-8"):
                pass
        self._fh: IO[str] = open(path, "a", encoding="utf-8", newline="\n")

    def _truncate_to(self, frontier: int) -> None:
        kept: list[str] = []
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError:
                    break  # partial tail from an interrupted write
                if obj.get("type") != "record":
                    continue  # stale summary from an older completed run
                if int(obj.get("prime", -1)) > frontier:
                    break
                kept.append(json.dumps(obj, sort_keys=True))
        tmp = f"{self.path}.tmp.{os.getpid()}"
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            for line in kept:
                fh.write(line + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, self.path)
        _fsync_dir(self.path)

    def write_record(self, record: VerificationRecord) -> None:
        obj = {"type": "record", **dataclasses.asdict(record)}
        self._fh.write(json.dumps(obj, sort_keys=True) + "\n")

    def write_summary(self, **fields: Any) -> None:
        self._fh.write(json.dumps({"type": "summary", **fields}, sort_keys=True) + "\n")

    def flush_fsync(self) -> None:
        self._fh.flush()
        os.fsync(self._fh.fileno())

    def close(self) -> None:
        if not self._fh.closed:
            self._fh.flush()
            self._fh.close()


def canonical_lines(path: str, volatile: tuple[str, ...] = VOLATILE_FIELDS) -> list[str]:
    """Ledger lines with volatile fields stripped, for determinism diffs."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            for key in volatile:
                obj.pop(key, None)
            out.append(json.dumps(obj, sort_keys=True))
    return out


@dataclass
class FileSink:
    """Checkpoint sink bound to a file, optionally fronting a ledger.

    advance() flushes the ledger to disk first and only then replaces the
    checkpoint, so a crash between the two leaves a ledger that is ahead of
    the checkpoint, which is the recoverable direction. flush_handles get the
    same treatment, for callers persisting derived outputs (a csv export)
    alongside the ledger. When live_counters is supplied the sink persists
    those (the caller's view, which may include synthetic test records)
    rather than the counts the sweep engine passes.
    """

    path: str
    command: str
    params: dict[str, Any]
    ledger: LedgerWriter | None = None
    live_counters: dict[str, int] | None = None
    flush_handles: tuple[IO[str], ...] = ()
    frontier: int | None = field(init=False, default=None)
    counters: dict[str, int] = field(init=False, default_factory=dict)
    base_wall: float = field(init=False, default=0.0)

    def __post_init__(self) -> None:
        existing = load_checkpoint(self.path)
        if existing is not None:
            ensure_compatible(existing, self.command, self.params)
            self.frontier = existing.frontier
            self.counters = dict(existing.counters)
            self.base_wall = existing.wall_seconds
        self._t0 = time.monotonic()

    def wall_seconds(self) -> float:
        return self.base_wall + (time.monotonic() - self._t0)

    def advance(self, frontier: int, counters: dict[str, int]) -> None:
        if self.frontier is not None and frontier < self.frontier:
            raise ValueError(f"frontier regressed: {frontier} < {self.frontier}")
        self.frontier = frontier
        self.counters = dict(
            self.live_counters if self.live_counters is not None else counters
        )
        if self.ledger is not None:
            self.ledger.flush_fsync()
        for fh in self.flush_handles:
            fh.flush()
            os.fsync(fh.fileno())
        write_checkpoint(
            self.path,
            Checkpoint(
                command=self.command,
                params=self.params,
                frontier=frontier,
                counters=self.counters,
                wall_seconds=self.wall_seconds(),
            ),
        )
