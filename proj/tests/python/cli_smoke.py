# Copyright 2026 The castchaos Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end smoke test of the castchaos command-line tool.

usage: cli_smoke.py CLI_PATH DATA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile

KEY = "000102030405060708090a0b0c0d0e0f"
# Lane 3 of this key falls into an attracting 2-cycle.
DEGENERATE_KEY = "010e2b104722515c4e31f6faff2c6d91"


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *map(str, args)], capture_output=True,
                          text=True, env={"CASTCHAOS_NO_COLOR": "1"})
    if proc.returncode != expect:
        sys.exit(f"{' '.join(map(str, args))}: exit {proc.returncode}, "
                 f"expected {expect}\n{proc.stdout}\n{proc.stderr}")
    return proc.stdout


def main():
    cli, data = sys.argv[1], pathlib.Path(sys.argv[2])
    image = data / "images" / "cameraman_256.pgm"
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        run(cli, "encrypt", image, "--out", tmp / "c.clsm", "--key", KEY,
            "--export-image", tmp / "c.pgm")
        run(cli, "decrypt", tmp / "c.clsm", "--out", tmp / "p.pgm", "--key", KEY)
        assert (tmp / "p.pgm").read_bytes() == image.read_bytes()
        run(cli, "decrypt", tmp / "c.pgm", "--from-image", "--out",
            tmp / "q.pgm", "--key", KEY)
        assert (tmp / "q.pgm").read_bytes() == image.read_bytes()

        run(cli, "decrypt", tmp / "c.clsm", "--out", tmp / "x.pgm",
            "--key", "ffeeddccbbaa99887766554433221100", expect=6)
        run(cli, "encrypt", image, "--out", tmp / "d.clsm",
            "--key", DEGENERATE_KEY, expect=7)
        run(cli, "encrypt", image, "--out", tmp / "e.clsm", "--key", "abc",
            expect=5)
        run(cli, "encrypt", tmp / "missing.pgm", "--out", tmp / "f.clsm",
            "--key", KEY, expect=3)
        run(cli, "frobnicate", expect=2)

        payload = bytes(range(100))
        (tmp / "raw.bin").write_bytes(payload)
        run(cli, "encrypt", tmp / "raw.bin", "--raw", "--out", tmp / "r.clsm",
            "--key", KEY, "--mode", "cbc")
        run(cli, "decrypt", tmp / "r.clsm", "--out", tmp / "r.out", "--key", KEY)
        assert (tmp / "r.out").read_bytes() == payload

        dump = run(cli, "sbox", "dump", "--key", KEY)
        golden = (data / f"sbox_dump_{KEY}.txt").read_text()
        assert dump == golden, "sbox dump differs from golden file"

        report = json.loads(run(cli, "metrics", image, "--key", KEY, "--reps", "3"))
        entropy = report["per_channel"][0]["entropy"]
        assert entropy > 7.99, report
        diff = json.loads(run(cli, "difftest", image, "--key", KEY))
        assert 99.0 < diff["npcr"] <= 100.0, diff
    print("cli smoke: ok")


if __name__ == "__main__":
    main()
