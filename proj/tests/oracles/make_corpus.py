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

"""Builds the test-image corpus in tests/data/images from scikit-image's
bundled sample images: 256x256 grayscale PGMs and 256x256 RGB PPMs (the
acceptance suite upsamples the RGB set to 512x512 with the library's own
nearest-neighbour resize)."""
import pathlib

import numpy as np
from skimage import data, transform
from skimage.color import rgb2gray

OUT = pathlib.Path(__file__).resolve().parents[1] / "data" / "images"
SOURCES = {"cameraman": data.camera, "astronaut": data.astronaut,
           "coffee": data.coffee, "chelsea": data.chelsea, "rocket": data.rocket}


def square(img):
    h, w = img.shape[:2]
    s = min(h, w)
    top, left = (h - s) // 2, (w - s) // 2
    return img[top:top + s, left:left + s]


def to_u8(img, size):
    img = transform.resize(square(img), (size, size), anti_aliasing=True)
    return np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)


def write(path, arr):
    magic = b"P5" if arr.ndim == 2 else b"P6"
    h, w = arr.shape[:2]
    path.write_bytes(magic + f"\n{w} {h}\n255\n".encode() + arr.tobytes())


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for name, load in SOURCES.items():
        img = load()
        gray = img if img.ndim == 2 else rgb2gray(img)
        write(OUT / f"{name}_256.pgm", to_u8(gray, 256))
        if img.ndim == 3:
            write(OUT / f"{name}_rgb_256.ppm", to_u8(img, 256))
    print(sorted(p.name for p in OUT.iterdir()))
