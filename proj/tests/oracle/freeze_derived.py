#!/usr/bin/env python3
# Copyright 2026 The GPC Codes Authors
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

"""Independent reference values for the C++ test suite.

Builds every parity-check matrix straight from the defining equations
(all rows, redundant ones included) with its own GF(2^w) arithmetic, then
computes ranks, distances and correctability by plain enumeration. The
results are frozen into tests/data/derived.json; rerun after changing a case.
"""

import itertools
import json
import pathlib
import sys


class GF:
    def __init__(self, w, modulus, alpha=2):
        self.w, self.modulus, self.alpha = w, modulus, alpha
        self.q = 1 << w

    def mul(self, a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.modulus
        return r

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        # a^(q-2) in the multiplicative group
        return self.pow(a, self.q - 2)

    def apow(self, e):
        return self.pow(self.alpha, e)


def rank(f, rows):
    m = [list(r) for r in rows]
    rk, ncols = 0, (len(m[0]) if m else 0)
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = f.inv(m[rk][c])
        m[rk] = [f.mul(inv, x) for x in m[rk]]
        for i in range(len(m)):
            if i != rk and m[i][c]:
                g = m[i][c]
                m[i] = [x ^ f.mul(g, y) for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


def columns(h, idx):
    return [[row[j] for j in idx] for row in h]


def dependent(f, h, idx):
    return rank(f, columns(h, idx)) < len(idx)


def min_distance(f, h):
    n = len(h[0])
    for size in range(1, n + 1):
        for idx in itertools.combinations(range(n), size):
            if dependent(f, h, idx):
                return size
    return n + 1


def gpc_h(f, m, n, k, s, u):
    """Rows of the GPC parity checks over the flattening i*n + j."""
    t = len(u)
    hat = [sum(s[i:]) for i in range(t)]
    rows = []

    def rs_rows(level_u, weights):
        # weights[j] multiplies row j of the array
        for a in range(level_u):
            row = [0] * (m * n)
            for j in range(m):
                for b in range(n):
                    row[j * n + b] = f.mul(weights[j], f.apow(a * b))
            rows.append(row)

    for j in range(m):
        rs_rows(u[0], [1 if jj == j else 0 for jj in range(m)])
    for i in range(1, t):
        for r in range(hat[i]):
            rs_rows(u[i], [f.apow(r * j) for j in range(m)])
    for r in range(m - k):
        for b in range(n):
            row = [0] * (m * n)
            for j in range(m):
                row[j * n + b] = f.apow(r * j)
            rows.append(row)
    return rows


def h2(f, m, n, third=False):
    N = m * n
    rows = []
    for i in range(m):
        rows.append([1 if e // n == i else 0 for e in range(N)])
    for j in range(n):
        rows.append([1 if e % n == j else 0 for e in range(N)])
    rows.append([f.apow(e) for e in range(N)])
    rows.append([f.apow(-e) for e in range(N)])
    if third:
        rows.append([f.apow(2 * e) for e in range(N)])
    return rows


def expand(s, u):
    return [x for si, ui in zip(s, u) for x in [ui] * si]


def parity_layout(m, n, k, s, u):
    hat = [sum(s[i:]) for i in range(len(u))] + [m - k]
    out = set()
    for i in range(len(u)):
        for r in range(m - hat[i], m - hat[i + 1]):
            out.update(r * n + c for c in range(n - u[i], n))
    for r in range(k, m):
        out.update(r * n + c for c in range(n))
    return sorted(out)


def solve_erasures(f, h, word, erased):
    """Gauss-Jordan on the erased columns; returns the completed word."""
    idx = sorted(erased)
    aug = []
    for row in h:
        rhs = 0
        for j, x in enumerate(row):
            if j not in erased:
                rhs ^= f.mul(x, word[j])
        aug.append([row[j] for j in idx] + [rhs])
    rk = 0
    pivots = []
    for c in range(len(idx)):
        piv = next((i for i in range(rk, len(aug)) if aug[i][c]), None)
        if piv is None:
            raise ValueError("erasures not correctable")
        aug[rk], aug[piv] = aug[piv], aug[rk]
        inv = f.inv(aug[rk][c])
        aug[rk] = [f.mul(inv, x) for x in aug[rk]]
        for i in range(len(aug)):
            if i != rk and aug[i][c]:
                g = aug[i][c]
                aug[i] = [x ^ f.mul(g, y) for x, y in zip(aug[i], aug[rk])]
        pivots.append(c)
        rk += 1
    out = list(word)
    for r, c in enumerate(pivots):
        out[idx[c]] = aug[r][-1]
    return out


def triangulate(f, nodes, nrows):
    v = [[f.pow(x, r) for x in nodes] for r in range(nrows)]
    for c in range(nrows):
        inv = f.inv(v[c][c])
        v[c] = [f.mul(inv, x) for x in v[c]]
        for i in range(c + 1, nrows):
            g = v[i][c]
            if g:
                v[i] = [x ^ f.mul(g, y) for x, y in zip(v[i], v[c])]
    return v


def condition_35(f, m, n):
    for i1 in range(1, m):
        for i2 in [x for x in range(-(m - 1), m) if x]:
            for j1 in range(1, n):
                for j2 in [x for x in range(-(n - 1), n) if x]:
                    if 1 ^ f.apow(-j1) ^ f.apow(-i2 * n + j2) ^ f.apow(-(i2 - i1) * n + j2) == 0:
                        return False
    return True


def main():
    gf8 = GF(3, 0xB)
    gf16 = GF(4, 0x13)
    gf32 = GF(5, 0x25)
    m11 = GF(10, (1 << 11) - 1)
    m13 = GF(12, (1 << 13) - 1)
    out = {}

    # [42,19] code with d = 10.
    h = gpc_h(gf8, 6, 7, 4, [2, 1, 3], [1, 3, 4])
    out["c7_4_11344"] = {"rank": rank(gf8, h)}
    layout = parity_layout(6, 7, 4, [2, 1, 3], [1, 3, 4])
    data = [(i % 7) + 1 for i in range(42 - len(layout))]
    word = [0] * 42
    data_pos = [p for p in range(42) if p not in layout]
    for p, d in zip(data_pos, data):
        word[p] = d
    out["c7_4_11344"]["encoded"] = {"data": data, "array": solve_erasures(gf8, h, word, set(layout))}
    out["c7_4_11344"]["triangulated"] = triangulate(gf8, [gf8.apow(r) for r in [1, 4, 2, 3, 0, 5]], 4)

    h = gpc_h(gf8, 4, 5, 3, [2, 2], [1, 2])
    out["c5_3_1122"] = {"rank": rank(gf8, h), "distance": min_distance(gf8, h)}

    for name, s, u in [("c5_4_11133", [3, 2], [1, 3]), ("c5_4_11222", [2, 3], [1, 2])]:
        h = gpc_h(gf8, 5, 5, 4, s, u)
        out[name] = {"rank": rank(gf8, h), "distance": min_distance(gf8, h)}

    h = h2(gf16, 3, 3)
    out["h2_3x3_gf16"] = {
        "rank": rank(gf16, h),
        "distance": min_distance(gf16, h),
        "weight7_correctable": sum(not dependent(gf16, h, p) for p in itertools.combinations(range(9), 7)),
    }
    h = h2(m11, 3, 3, third=True)
    out["h3_3x3_m11"] = {"rank": rank(m11, h), "distance": min_distance(m11, h), "condition35": condition_35(m11, 3, 3)}
    h = h2(m13, 3, 4, third=True)
    out["h3_3x4_m13"] = {
        "rank": rank(m13, h),
        "distance": min_distance(m13, h),
        "condition35": condition_35(m13, 3, 4),
        "weight8_correctable": sum(not dependent(m13, h, p) for p in itertools.combinations(range(12), 8)),
    }

    # Two rows of 3 erasures and one row of 2 in a 5x5 array.
    pattern = [0, 1, 3, 5, 6, 10, 11, 13]
    h = gpc_h(gf8, 5, 5, 4, [2, 1, 2], [1, 2, 3])
    hh = h2(gf32, 5, 5)
    out["two_threes_one_two"] = {
        "pattern": pattern,
        "gpc_c5_4_11233_correctable": not dependent(gf8, h, pattern),
        "h2_5x5_gf32_correctable": not dependent(gf32, hh, pattern),
    }

    # EP(7,2;8,3;3) as a 2-level GPC; 4x5 rectangle in the top-left corner.
    h = gpc_h(gf16, 7, 8, 5, [2, 5], [3, 4])
    rect = [r * 8 + c for r in range(4) for c in range(5)]
    out["ep_7_2_8_3_3"] = {"rank": rank(gf16, h), "rectangle_correctable": not dependent(gf16, h, rect)}

    h = gpc_h(gf8, 6, 7, 5, [2, 2, 2], [1, 3, 5])
    stair = [r * 7 + c for r, c in [(0, 0), (0, 4), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4)]]
    out["c7_5_113355"] = {"rank": rank(gf8, h), "staircase_correctable": not dependent(gf8, h, stair)}

    path = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).parents[1] / "data" / "derived.json"
    # Reuse this file's license header as // comments (the C++ reader accepts them).
    header = itertools.takewhile(lambda l: l.startswith("#"), pathlib.Path(__file__).read_text().splitlines()[1:])
    prefix = "".join(("//" + line[1:]).rstrip() + "\n" for line in header)
    path.write_text(prefix + "\n" + json.dumps(out, indent=1) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
