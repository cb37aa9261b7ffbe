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

"""Second implementation of the chaotic S-box generation loop.

Written independently of src/sbox.cpp and used to freeze golden S-boxes:
  - the fixed-parameter box (r = mu = 4.75, x0 = 0.5, warmup 1000),
  - the four keyed permutations for a fixed CLI test key (dump format).
Python floats are IEEE binary64 and math.sin is the platform libm, the same
arithmetic model as the C++ build.
"""
import math
import pathlib
import sys

HERE = pathlib.Path(__file__).resolve().parent
DATA = HERE.parent / "data"
MASK64 = (1 << 64) - 1


def step(x, r, mu):
    v = r * math.sin(math.pi * x) + mu * x * (1.0 - x)
    y = v - math.floor(v)
    return 0.0 if y >= 1.0 else y


def generate(r, mu, x0, warmup):
    x = x0
    for _ in range(warmup):
        x = step(x if x != 0.0 else 2.0 ** -53, r, mu)
    seen, table = set(), []
    for _ in range(1_000_000):
        x = step(x if x != 0.0 else 2.0 ** -53, r, mu)
        b = min(int(math.floor(x * 256.0)), 255)
        if b not in seen:
            seen.add(b)
            table.append(b)
            if len(table) == 256:
                return table
    raise RuntimeError("degenerate")


def derive(key: bytes, lane: int):
    t = int.from_bytes(key[:8], "big") ^ (((lane + 1) * 0x9E3779B97F4A7C15) & MASK64)
    u = int.from_bytes(key[8:], "big") ^ (((lane + 1) * 0xC2B2AE3D27D4EB4F) & MASK64)
    x0 = ((t >> 12) + 1) / 2.0 ** 53
    r = 4.5 + (u >> 48) / 2.0 ** 17
    mu = 4.5 + ((u >> 32) & 0xFFFF) / 2.0 ** 17
    return r, mu, x0, 1000


def dump(table):
    return "".join(" ".join(str(v) for v in table[i:i + 8]) + "\n"
                   for i in range(0, 256, 8))


CLI_KEY = "000102030405060708090a0b0c0d0e0f"

if __name__ == "__main__":
    fixed = generate(4.75, 4.75, 0.5, 1000)
    assert sorted(fixed) == list(range(256))
    out = [dump(fixed)]
    key = bytes.fromhex(CLI_KEY)
    cli = []
    for lane in range(4):
        t = generate(*derive(key, lane))
        assert sorted(t) == list(range(256))
        cli.append(f"# sigma{lane + 1}\n" + dump(t))
    if "--write" in sys.argv:
        (DATA / "sbox_fixed_params.txt").write_text(out[0])
        (DATA / f"sbox_dump_{CLI_KEY}.txt").write_text("".join(cli))
    print(out[0][:64])
