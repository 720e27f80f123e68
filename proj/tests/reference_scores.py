#!/usr/bin/env python3
"""Straight-line reference for the entropy scoring pipeline.

Independent of the C++ implementation. Used to produce the frozen golden
scores asserted in the C++ test suites. Run from the repo root:

    python3 tests/reference_scores.py
"""
import math

M64 = (1 << 64) - 1


def mix(x, y, seed):
    z = (x * 0x9E3779B97F4A7C15 + y * 0xBF58476D1CE4E5B9
         + seed * 0x94D049BB133111EB) & M64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & M64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & M64
    z ^= z >> 31
    return z


def isqrt(n):
    return math.isqrt(n)


# --- fixture generators (integer arithmetic only, mirrored in C++) ---

def flat(size, r, g, b):
    return [[(r, g, b) for _ in range(size)] for _ in range(size)]


def noise_color(size, seed):
    img = []
    for y in range(size):
        row = []
        for x in range(size):
            z = mix(x, y, seed)
            row.append((z & 0xFF, (z >> 8) & 0xFF, (z >> 16) & 0xFF))
        img.append(row)
    return img


def noise_mono(size, seed):
    img = []
    for y in range(size):
        row = []
        for x in range(size):
            v = mix(x, y, seed) & 0xFF
            row.append((v, v, v))
        img.append(row)
    return img


def structured_rings(size=80):
    img = []
    cx = cy = size // 2
    for y in range(size):
        row = []
        g = y * 255 // (size - 1)
        for x in range(size):
            d2 = (x - cx) ** 2 + (y - cy) ** 2
            if isqrt(d2) % 10 < 5:
                row.append((255, 255, 255))
            else:
                row.append((g, g, g))
        img.append(row)
    return img


def structured_blocks(size=80):
    img = []
    for y in range(size):
        row = []
        for x in range(size):
            v = ((x // 8) * (y // 8) * 13 + (x // 8) * 29 + (y // 8) * 47) % 256
            row.append((v, v, v))
        img.append(row)
    return img


def structured_scene(size=80):
    img = []
    for y in range(size):
        row = []
        for x in range(size):
            if y < 25:
                v = 220
            else:
                v = (y - 25) * 255 // (size - 26)
            d2a = (x - 20) ** 2 + (y - 50) ** 2
            d2b = (x - 55) ** 2 + (y - 35) ** 2
            if d2a < 100 or d2b < 225:
                v = 15
            if x % 20 < 2 and y >= 25:
                v = 250
            row.append((v, v, v))
        img.append(row)
    return img


def half_split(size=80):
    img = []
    for y in range(size):
        row = []
        for x in range(size):
            v = 0 if x < size // 2 else 255
            row.append((v, v, v))
        img.append(row)
    return img


# --- scoring pipeline (straight-line, no numpy) ---

def grayscale(img):
    return [[(299 * r + 587 * g + 114 * b) // 1000 for (r, g, b) in row]
            for row in img]


def entropy(signal):
    n = len(signal)
    counts = {}
    for s in signal:
        counts[s] = counts.get(s, 0) + 1
    return sum((c / n) * math.log2(n / c) for c in counts.values())


def entropy_matrix_quantized(grid, N=3):
    H = len(grid)
    W = len(grid[0])
    out = [[0] * W for _ in range(H)]
    for row in range(H):
        for col in range(W):
            lx, ux = max(0, col - N), min(W, col + N)
            ly, uy = max(0, row - N), min(H, row + N)
            region = [grid[r][c] for r in range(ly, uy) for c in range(lx, ux)]
            out[row][col] = int(entropy(region))
    return out


def complexity_score(img):
    first = entropy_matrix_quantized(grayscale(img))
    second = entropy_matrix_quantized(first)
    return sum(sum(row) for row in second)


def main():
    fixtures = [
        ("flat_red_80", flat(80, 255, 0, 0)),
        ("flat_gray_80", flat(80, 128, 128, 128)),
        ("noise_color_a", noise_color(80, 1)),
        ("noise_color_b", noise_color(80, 2)),
        ("noise_mono_a", noise_mono(80, 3)),
        ("structured_rings", structured_rings()),
        ("structured_blocks", structured_blocks()),
        ("structured_scene", structured_scene()),
        ("half_split", half_split()),
    ]
    for name, img in fixtures:
        print(f"{name}: {complexity_score(img)}")


if __name__ == "__main__":
    main()
