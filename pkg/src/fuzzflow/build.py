"""Build configuration and compiler invocation.

The indexer and the harness/patch stages share one view of how the corpus is
compiled: a compile-commands file (the clang JSON format, one entry per
translation unit) or a discovered fallback of include dirs + base flags.
Compiler runs are serialized per build directory so concurrent syntheses
never race on the same output tree.
"""

from __future__ import annotations

import json
import shlex
import subprocess
import threading
from dataclasses import dataclass, field
from pathlib import Path

DEFAULT_CC = "clang"
# DWARF 4 keeps binutils addr2line usable for offline symbolization.
BASE_DEBUG_FLAGS = ["-O0", "-gdwarf-4", "-fno-omit-frame-pointer"]

_dir_locks: dict[str, threading.Lock] = {}
_dir_locks_guard = threading.Lock()


def _lock_for(directory: Path) -> threading.Lock:
    key = str(directory.resolve())
    with _dir_locks_guard:
        return _dir_locks.setdefault(key, threading.Lock())


@dataclass
class CompileResult:
    ok: bool
    argv: list[str]
    stdout: str
    stderr: str
    output: Path | None

    @property
    def diagnostics(self) -> str:
        return self.stderr or self.stdout


@dataclass
class BuildConfig:
    """Per-file compiler argv plus the flags shared by generated code."""

    root: Path
    entries: dict[str, list[str]] = field(default_factory=dict)  # relpath -> argv
    include_dirs: list[str] = field(default_factory=list)
    extra_flags: list[str] = field(default_factory=list)
    cc: str = DEFAULT_CC
    store_preprocessed: bool = False

    @classmethod
    def from_compile_commands(cls, path: str | Path, root: str | Path | None = None) -> "BuildConfig":
        path = Path(path)
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        base = Path(root) if root else path.parent
        entries: dict[str, list[str]] = {}
        include_dirs: list[str] = []
        for item in raw:
            directory = Path(item.get("directory", "."))
            if not directory.is_absolute():
                directory = (base / directory).resolve()
            if "arguments" in item:
                argv = list(item["arguments"])
            else:
                argv = shlex.split(item.get("command", ""))
            file_path = Path(item["file"])
            if not file_path.is_absolute():
                file_path = (directory / file_path).resolve()
            try:
                rel = str(file_path.relative_to(base.resolve()))
            except ValueError:
                rel = str(file_path)
            entries[rel] = argv
            for i, arg in enumerate(argv):
                inc = None
                if arg.startswith("-I") and len(arg) > 2:
                    inc = arg[2:]
                elif arg == "-I" and i + 1 < len(argv):
                    inc = argv[i + 1]
                if inc:
                    inc_path = Path(inc)
                    if not inc_path.is_absolute():
                        inc_path = directory / inc_path
                    inc_str = str(inc_path.resolve())
                    if inc_str not in include_dirs:
                        include_dirs.append(inc_str)
        return cls(root=base.resolve(), entries=entries, include_dirs=include_dirs)

    @classmethod
    def discover(cls, root: str | Path, extra_flags: list[str] | None = None) -> "BuildConfig":
        """Fallback when no compile-commands file exists: every directory
        containing a header becomes an include dir."""
        root = Path(root).resolve()
        include_dirs = sorted({str(p.parent) for p in root.rglob("*.h")})
        return cls(root=root, include_dirs=include_dirs, extra_flags=list(extra_flags or []))

    def include_flags(self) -> list[str]:
        return [f"-I{d}" for d in self.include_dirs]

    def source_files(self) -> list[Path]:
        return sorted(self.root.rglob("*.c"))

    def preprocess(self, file_path: Path, timeout: float = 30.0) -> str | None:
        """Run the preprocessor on one file; None when it fails."""
        argv = [self.cc, "-E", "-P", str(file_path)] + self.include_flags() + self.extra_flags
        try:
            proc = subprocess.run(
                argv, capture_output=True, text=True, timeout=timeout, check=False
            )
        except (OSError, subprocess.TimeoutExpired):
            return None
        if proc.returncode != 0:
            return None
        return proc.stdout

    def to_dict(self) -> dict:
        return {
            "root": str(self.root),
            "entries": {k: list(v) for k, v in sorted(self.entries.items())},
            "include_dirs": list(self.include_dirs),
            "extra_flags": list(self.extra_flags),
            "cc": self.cc,
            "store_preprocessed": self.store_preprocessed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BuildConfig":
        return cls(
            root=Path(data["root"]),
            entries={k: list(v) for k, v in data.get("entries", {}).items()},
            include_dirs=list(data.get("include_dirs", [])),
            extra_flags=list(data.get("extra_flags", [])),
            cc=data.get("cc", DEFAULT_CC),
            store_preprocessed=bool(data.get("store_preprocessed", False)),
        )


def run_compiler(argv: list[str], cwd: Path, output: Path | None = None,
                 timeout: float = 180.0) -> CompileResult:
    """Invoke the compiler with per-directory serialization."""
    with _lock_for(cwd):
        try:
            proc = subprocess.run(
                argv, cwd=str(cwd), capture_output=True, text=True,
                timeout=timeout, check=False,
            )
        except OSError as exc:
            return CompileResult(False, argv, "", str(exc), None)
        except subprocess.TimeoutExpired as exc:
            return CompileResult(False, argv, "", f"compiler timeout: {exc}", None)
    ok = proc.returncode == 0 and (output is None or output.exists())
    return CompileResult(ok, argv, proc.stdout, proc.stderr, output if ok else None)


def compile_fuzzer_binary(
    config: BuildConfig,
    harness_source: Path,
    corpus_sources: list[Path],
    output: Path,
    sanitizers: list[str] | None = None,
) -> CompileResult:
    """Link harness + corpus into a coverage-instrumented fuzzer binary."""
    san = ",".join(["fuzzer"] + (sanitizers or ["address"]))
    argv = (
        [config.cc, f"-fsanitize={san}"]
        + BASE_DEBUG_FLAGS
        + config.include_flags()
        + config.extra_flags
        + [str(harness_source)]
        + [str(s) for s in corpus_sources]
        + ["-o", str(output)]
    )
    output.parent.mkdir(parents=True, exist_ok=True)
    return run_compiler(argv, cwd=output.parent, output=output)


def compile_object(config: BuildConfig, source: Path, output: Path) -> CompileResult:
    """Syntax/semantic check of a single file without linking."""
    argv = (
        [config.cc, "-c"]
        + BASE_DEBUG_FLAGS
        + config.include_flags()
        + config.extra_flags
        + [str(source), "-o", str(output)]
    )
    output.parent.mkdir(parents=True, exist_ok=True)
    return run_compiler(argv, cwd=output.parent, output=output)


SMOKE_DRIVER = """\
#include <stddef.h>
#include <stdint.h>

int LLVMFuzzerTestOneInput(const uint8_t *data, size_t size);

int main(void) {
    static const uint8_t empty[1] = {0};
    return LLVMFuzzerTestOneInput(empty, 0) == 0 ? 0 : 1;
}
"""


def compile_smoke_binary(
    config: BuildConfig,
    harness_source: Path,
    corpus_sources: list[Path],
    output: Path,
) -> CompileResult:
    """Link the harness against a one-shot driver that feeds an empty buffer."""
    driver = output.parent / "smoke_driver.c"
    output.parent.mkdir(parents=True, exist_ok=True)
    driver.write_text(SMOKE_DRIVER, encoding="utf-8")
    argv = (
        [config.cc, "-fsanitize=address"]
        + BASE_DEBUG_FLAGS
        + config.include_flags()
        + config.extra_flags
        + [str(driver), str(harness_source)]
        + [str(s) for s in corpus_sources]
        + ["-o", str(output)]
    )
    return run_compiler(argv, cwd=output.parent, output=output)


def run_smoke_binary(binary: Path, timeout: float = 20.0) -> tuple[bool, str]:
    try:
        proc = subprocess.run(
            [str(binary)], capture_output=True, text=True, timeout=timeout, check=False
        )
    except (OSError, subprocess.TimeoutExpired) as exc:
        return False, str(exc)
    return proc.returncode == 0, proc.stderr
