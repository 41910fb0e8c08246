"""Generate the JSON artifact sets the frontend tests consume.

The frontend talks to the compiler only through its emitted files, so the
test data is produced by actually running the compiler CLI over the same
fixtures and generators the compiler's own tests use.
"""

import shutil
import subprocess
import sys
from pathlib import Path

FRONTEND = Path(__file__).resolve().parent.parent
REPO = FRONTEND.parent
COMPILER_TESTS = REPO / "tests"
OUT = FRONTEND / "test-data"

sys.path.insert(0, str(COMPILER_TESTS))
import corpusgen  # noqa: E402


def compile_table(table: Path, out: Path, vocab: Path | None) -> None:
    argv = [sys.executable, "-m", "cookbook_compiler.cli", "build",
            "--input", str(table), "--out", str(out)]
    if vocab is not None:
        argv += ["--vocab", str(vocab)]
    done = subprocess.run(argv, capture_output=True, text=True)
    if done.returncode != 0:
        raise SystemExit(f"compiler failed for {table}:\n{done.stderr}")


def main() -> None:
    if OUT.exists():
        shutil.rmtree(OUT)
    work = OUT / "_work"
    work.mkdir(parents=True)

    fixtures = COMPILER_TESTS / "fixtures"
    compile_table(fixtures / "zia_dina.tsv", OUT / "fixture",
                  fixtures / "vocab")
    compile_table(fixtures / "zia_dina_full.tsv", OUT / "full",
                  fixtures / "vocab")

    synthetic = work / "synthetic.tsv"
    synthetic.write_text(corpusgen.synthetic_table(corpusgen.rng(8)),
                         encoding="utf-8")
    vocab = work / "vocab"
    corpusgen.write_synthetic_vocab(vocab)
    compile_table(synthetic, OUT / "synthetic", vocab)

    empty = work / "empty.tsv"
    header = (fixtures / "zia_dina.tsv").read_text("utf-8").splitlines()[0]
    empty.write_text(header + "\n", encoding="utf-8")
    compile_table(empty, OUT / "empty", fixtures / "vocab")

    shutil.rmtree(work)
    print(f"wrote {OUT}/fixture, full, synthetic, empty")


if __name__ == "__main__":
    main()
