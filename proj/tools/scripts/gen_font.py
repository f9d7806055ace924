#!/usr/bin/env python3
# Copyright 2026 The DocEdit Tools Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/font8x16.inc from DejaVu Sans Mono.

The output is checked in; rerun only when changing the glyph set:

    python3 tools/scripts/gen_font.py /path/to/DejaVuSansMono.ttf > src/font8x16.inc
"""

import sys

from PIL import Image, ImageDraw, ImageFont

WIDTH, HEIGHT = 8, 16
FIRST, LAST = 32, 126


def main(argv):
    path = argv[1] if len(argv) > 1 else "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"
    font = ImageFont.truetype(path, 13)
    ascent, _ = font.getmetrics()
    print("// Generated by tools/scripts/gen_font.py from DejaVu Sans Mono")
    print("// (Bitstream Vera license). One byte per row, MSB = leftmost pixel.")
    for code in range(FIRST, LAST + 1):
        img = Image.new("L", (WIDTH, HEIGHT), 0)
        draw = ImageDraw.Draw(img)
        draw.text((0, 13 - ascent), chr(code), fill=255, font=font)
        rows = []
        for y in range(HEIGHT):
            byte = 0
            for x in range(WIDTH):
                if img.getpixel((x, y)) >= 128:
                    byte |= 0x80 >> x
            rows.append("0x%02x" % byte)
        label = chr(code) if chr(code) not in "\\" else "backslash"
        print("{%s},  // %r" % (", ".join(rows), label))


if __name__ == "__main__":
    main(sys.argv)
