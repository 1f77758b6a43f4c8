"""Regenerate the byte-golden CLI outputs under tests/golden/.

The values inside the goldens are pinned by the hand-transcribed tables in
golden_data.py: this script first asserts that the engine reproduces every
transcribed value and only then snapshots the CLI text, so a map bug can never
leak into a golden file.  Run as ``python tests/regen_goldens.py``.
"""

import io
import pathlib
import sys
from contextlib import redirect_stdout

sys.path.insert(0, str(pathlib.Path(__file__).parent))

import golden_data  # noqa: E402
from crankmex import Partition, fold, mex_to_crank, negate_crank, to_low_crank  # noqa: E402
from crankmex import cli  # noqa: E402

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def check_values():
    running = Partition.from_text(golden_data.RUNNING_EXAMPLE)
    for j, (steps, stop) in golden_data.FOLD_TRACES.items():
        out, trace = fold(j, running)
        assert len(trace) == len(steps), (j, len(trace))
        for step, (k, lam, d, case, image) in zip(trace.steps, steps):
            assert step.before.k == k
            assert step.before.lam.to_text() == lam
            assert (step.d, step.case) == (d, case)
            assert step.after.lam.to_text() == image
        assert out.to_text() == stop[1]
    for source, folded, low, final in golden_data.WEIGHT9_ROWS:
        lam = Partition.from_text(source)
        got_folded, _ = fold(0, lam)
        got_low = to_low_crank(0, got_folded)
        got_final = negate_crank(got_low)
        assert got_folded.to_text() == folded, source
        assert got_low.to_text() == low, source
        assert got_final.to_text() == final, source
        assert mex_to_crank(0, lam).to_text() == final


def capture(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    assert code == 0, argv
    return buf.getvalue()


def main():
    check_values()
    GOLDEN_DIR.mkdir(exist_ok=True)
    for j in sorted(golden_data.FOLD_TRACES):
        text = capture(["trace", "fold", golden_data.RUNNING_EXAMPLE, "--j", str(j)])
        (GOLDEN_DIR / f"trace_fold_j{j}.txt").write_text(text, encoding="utf-8")
    text = capture(["table", "--weight", "9", "--j", "0"])
    (GOLDEN_DIR / "table_weight9_j0.txt").write_text(text, encoding="utf-8")
    print(f"goldens regenerated under {GOLDEN_DIR}")


if __name__ == "__main__":
    main()
