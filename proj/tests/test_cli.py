"""End-to-end checks of the plap-claw command line interface and exit codes."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = os.environ["PLAP_CLAW_BIN"]

GOOD_CONFIG = """
problem.flux = none
problem.p = 2
problem.u_minus = 0
problem.u_plus = 0
problem.initial = constant:0
problem.bump = gaussian:0.5,0,0.8
problem.grid = -12,12,300
problem.t_end = 2
problem.observations = list:0.5,1,2
"""

BAD_P_CONFIG = """
problem.flux = none
problem.p = 0.5
problem.u_minus = 0
problem.u_plus = 0
problem.initial = constant:0
problem.grid = -12,12,300
problem.t_end = 2
"""

VERIFY_CONFIG = """
problem.flux = none
problem.p = 2
problem.u_minus = 0
problem.u_plus = 0
problem.initial = constant:0
problem.bump = gaussian:0.5,0,0.8
problem.grid = -16,16,400
problem.t_end = 30
problem.observations = geometric:0.5,1.3
diagnostics.theorem = Thm7.2
diagnostics.fit_window = 2,30
"""


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def main():
    failures = []

    def check(name, cond, detail=""):
        print(("PASS " if cond else "FAIL ") + name + (" " + detail if detail else ""))
        if not cond:
            failures.append(name)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        good = tmp / "good.cfg"
        good.write_text(GOOD_CONFIG)
        bad = tmp / "bad.cfg"
        bad.write_text(BAD_P_CONFIG)
        verify_cfg = tmp / "verify.cfg"
        verify_cfg.write_text(VERIFY_CONFIG)

        out_dir = tmp / "run1"
        res = run("--out", str(out_dir), "simulate", str(good))
        check("simulate exits 0", res.returncode == 0, res.stderr.strip())
        check("norms.csv written", (out_dir / "norms.csv").exists())
        check("manifest.json written", (out_dir / "manifest.json").exists())
        check("fits.json written", (out_dir / "fits.json").exists())
        header = (out_dir / "norms.csv").read_text().splitlines()[0]
        check(
            "csv header schema",
            header == "t,dt,mass,min_u,max_u,l1_phi,l2_phi,linf_phi,grad_lp1_u,grad_lp1_phi",
            header,
        )
        manifest = json.loads((out_dir / "manifest.json").read_text())
        check("manifest carries tool name", manifest.get("tool") == "plap-claw")
        check("manifest carries resolved config", "problem.cfl" in manifest.get("config", {}))

        plot_files = sorted(p.name for p in out_dir.glob("plot_*.dat"))
        check("plot data emitted", "plot_l2_phi.dat" in plot_files, str(plot_files))

        # determinism: second run into a fresh directory is byte-identical
        out_dir2 = tmp / "run2"
        res2 = run("--out", str(out_dir2), "simulate", str(good))
        check("second simulate exits 0", res2.returncode == 0)
        check(
            "byte-identical csv across runs",
            (out_dir / "norms.csv").read_bytes() == (out_dir2 / "norms.csv").read_bytes(),
        )

        # manifest re-ingestion reproduces the csv
        out_dir3 = tmp / "run3"
        res3 = run("--out", str(out_dir3), "simulate", str(out_dir / "manifest.json"))
        check("manifest re-ingest exits 0", res3.returncode == 0, res3.stderr.strip())
        check(
            "byte-identical csv from manifest",
            (out_dir / "norms.csv").read_bytes() == (out_dir3 / "norms.csv").read_bytes(),
        )

        # config errors: exit 1, message names the key, no partial output
        out_bad = tmp / "bad_out"
        res = run("--out", str(out_bad), "simulate", str(bad))
        check("bad config exits 1", res.returncode == 1, str(res.returncode))
        check("error names p", "p must exceed 1" in res.stderr, res.stderr.strip())
        check("no partial files on config error", not out_bad.exists())

        res = run("simulate", str(tmp / "missing.cfg"))
        check("missing file exits 1", res.returncode == 1)

        # verify: pass case
        out_v = tmp / "verify_out"
        res = run("--out", str(out_v), "verify", str(verify_cfg))
        check("verify exits 0 on passing rates", res.returncode == 0, res.stderr + res.stdout)
        check("verdict table written", (out_v / "verdict.csv").exists())
        verdict = (out_v / "verdict.csv").read_text().splitlines()
        check(
            "verdict header",
            verdict[0] == "theorem,norm,q,reference_exponent,fitted_exponent,tolerance,pass",
            verdict[0],
        )
        check("verdict rows present", len(verdict) > 1)

        # verify without a theorem selector is a config error
        res = run("--out", str(tmp / "v2"), "verify", str(good))
        check("verify without selector exits 1", res.returncode == 1, str(res.returncode))

        # a window with too few samples leaves the reference rate unverified
        failing = VERIFY_CONFIG.replace(
            "diagnostics.fit_window = 2,30", "diagnostics.fit_window = 29.5,30"
        )
        fail_cfg = tmp / "fail.cfg"
        fail_cfg.write_text(failing)
        res = run("--out", str(tmp / "v3"), "verify", str(fail_cfg))
        check("verify exits 3 on unverifiable rates", res.returncode == 3, str(res.returncode))

        # parallel verify over two configs writes per-config verdicts
        multi_out = tmp / "multi"
        res = run("--threads", "2", "--out", str(multi_out), "verify",
                  str(verify_cfg), str(good.rename(tmp / "second_verify.cfg")))
        # the second config lacks a theorem selector: config error dominates
        check("multi verify flags missing selector", res.returncode == 1, str(res.returncode))
        check("passing config still wrote its verdict",
              (multi_out / "verify" / "verdict.csv").exists())

        # oracle subcommand
        res = run("oracle", "--lemma", "4.5")
        check("oracle identity suite exits 0", res.returncode == 0, res.stdout + res.stderr)
        check("oracle prints a report", "[PASS]" in res.stdout)

        res = run("oracle", "--lemma", "2.2", "--q", "1")
        check("oracle fan suite with q filter exits 0", res.returncode == 0, res.stdout)

        res = run("oracle", "--lemma", "nope")
        check("unknown suite exits 1", res.returncode == 1)

    print()
    if failures:
        print("FAILED:", ", ".join(failures))
        sys.exit(1)
    print("all cli checks passed")


if __name__ == "__main__":
    main()
