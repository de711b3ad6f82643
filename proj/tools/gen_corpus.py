#!/usr/bin/env python3
"""Regenerates core/data/known_cases.json with mpmath reference values.

Usage: python3 tools/gen_corpus.py [output]
"""
import json
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40


def besselk0_sum(x):
    return 2 * mp.besselk(0, x)


CASES = [
    {
        "id": "exp",
        "description": "H^{1,0}_{0,1}[z | -; (0,1)] = exp(-z)",
        "provenance": "Gamma(s) Mellin pair",
        "params": {"m": 1, "n": 0, "p": 0, "q": 1, "upper": [], "lower": [[0, 0, 1]],
                   "rational": {"upper_re": [], "lower_re": ["0"]}},
        "validity": {"kind": "entire"},
        "f": lambda z: mp.exp(-z),
        "grid": [0.1, 0.5, 1, 2, 5, 1 + 1j, -0.5 + 0.3j, -3, 3 - 4j],
    },
    {
        "id": "power_exp",
        "description": "H^{1,0}_{0,1}[z | -; (2,1)] = z^2 exp(-z)",
        "provenance": "exp case with s -> s + 2",
        "params": {"m": 1, "n": 0, "p": 0, "q": 1, "upper": [], "lower": [[2, 0, 1]],
                   "rational": {"upper_re": [], "lower_re": ["2"]}},
        "validity": {"kind": "entire"},
        "f": lambda z: z ** 2 * mp.exp(-z),
        "grid": [0.5, 1, 2, 4, 1 + 1j],
    },
    {
        "id": "power_exp_complex",
        "description": "H^{1,0}_{0,1}[z | -; (1/2 + i/4, 1)] = z^{1/2 + i/4} exp(-z)",
        "provenance": "exp case with a complex shift",
        "params": {"m": 1, "n": 0, "p": 0, "q": 1, "upper": [], "lower": [[0.5, 0.25, 1]],
                   "rational": {"upper_re": [], "lower_re": ["1/2"]}},
        "validity": {"kind": "all_nonzero"},
        "f": lambda z: mp.power(z, mp.mpc(0.5, 0.25)) * mp.exp(-z),
        "grid": [0.3, 1, 2.5, 1 + 0.5j, -1 + 0.5j],
    },
    {
        "id": "exp_half",
        "description": "H^{1,0}_{0,1}[z | -; (0,2)] = exp(-sqrt z) / 2",
        "provenance": "exp case with s -> 2s",
        "params": {"m": 1, "n": 0, "p": 0, "q": 1, "upper": [], "lower": [[0, 0, 2]],
                   "rational": {"upper_re": [], "lower_re": ["0"]}},
        "validity": {"kind": "all_nonzero"},
        "f": lambda z: mp.exp(-mp.sqrt(z)) / 2,
        "grid": [0.04, 0.25, 1, 4, 9, 2 + 1j],
    },
    {
        "id": "bessel_k",
        "description": "H^{2,0}_{0,2}[z | -; (0,1),(0,1)] = 2 K_0(2 sqrt z)",
        "provenance": "Meijer G^{2,0}_{0,2} with equal lower parameters",
        "params": {"m": 2, "n": 0, "p": 0, "q": 2, "upper": [], "lower": [[0, 0, 1], [0, 0, 1]],
                   "rational": {"upper_re": [], "lower_re": ["0", "0"]}},
        "validity": {"kind": "all_nonzero"},
        "f": lambda z: besselk0_sum(2 * mp.sqrt(z)),
        "grid": [0.04, 0.25, 1, 4, 0.5 + 0.5j, 2 - 1j],
    },
    {
        "id": "bessel_k_quarter",
        "description": "H^{2,0}_{0,2}[z | -; (0,2),(0,2)] = K_0(2 z^{1/4})",
        "provenance": "bessel_k case with s -> 2s",
        "params": {"m": 2, "n": 0, "p": 0, "q": 2, "upper": [], "lower": [[0, 0, 2], [0, 0, 2]],
                   "rational": {"upper_re": [], "lower_re": ["0", "0"]}},
        "validity": {"kind": "all_nonzero"},
        "f": lambda z: mp.besselk(0, 2 * mp.power(z, 0.25)),
        "grid": [0.01, 0.1, 1, 4],
    },
    {
        "id": "geometric",
        "description": "H^{1,1}_{1,1}[z | (0,1); (0,1)] = 1 / (1 + z)",
        "provenance": "Gamma(s) Gamma(1 - s) = pi / sin(pi s)",
        "params": {"m": 1, "n": 1, "p": 1, "q": 1, "upper": [[0, 0, 1]], "lower": [[0, 0, 1]],
                   "rational": {"upper_re": ["0"], "lower_re": ["0"]}},
        "validity": {"kind": "excluded_circle", "radius": 1},
        "f": lambda z: 1 / (1 + z),
        "grid": [0.1, 0.5, -0.5, 0.3 + 0.4j, 2, 5, -3 + 1j],
    },
    {
        "id": "mirror_exp",
        "description": "H^{0,1}_{1,0}[z | (1,1); -] = exp(-1/z)",
        "provenance": "exp case under z -> 1/z",
        "params": {"m": 0, "n": 1, "p": 1, "q": 0, "upper": [[1, 0, 1]], "lower": [],
                   "rational": {"upper_re": ["1"], "lower_re": []}},
        "validity": {"kind": "all_nonzero"},
        "f": lambda z: mp.exp(-1 / z),
        "grid": [0.2, 0.5, 1, 3, 1 + 1j, -2 + 0.5j],
    },
    {
        "id": "bessel_k_mirror",
        "description": "H^{0,2}_{2,0}[z | (1,1),(1,1); -] = 2 K_0(2 / sqrt z)",
        "provenance": "bessel_k case under z -> 1/z",
        "params": {"m": 0, "n": 2, "p": 2, "q": 0, "upper": [[1, 0, 1], [1, 0, 1]], "lower": [],
                   "rational": {"upper_re": ["1", "1"], "lower_re": []}},
        "validity": {"kind": "all_nonzero"},
        "f": lambda z: besselk0_sum(2 / mp.sqrt(z)),
        "grid": [0.25, 1, 4, 25, 1 + 1j],
    },
    {
        "id": "g1011_beta",
        "description": "H^{1,0}_{1,1}[z | (5/2,1); (0,1)] = (1 - z)^{3/2} / Gamma(5/2) for |z| < 1, 0 for |z| > 1",
        "provenance": "Meijer G^{1,0}_{1,1} beta-type kernel",
        "params": {"m": 1, "n": 0, "p": 1, "q": 1, "upper": [[2.5, 0, 1]], "lower": [[0, 0, 1]],
                   "rational": {"upper_re": ["5/2"], "lower_re": ["0"]}},
        "validity": {"kind": "excluded_circle", "radius": 1},
        "f": lambda z: (mp.power(1 - z, 1.5) / mp.gamma(2.5)) if abs(z) < 1 else mp.mpf(0),
        "grid": [0.1, 0.5, -0.7, 0.3 + 0.3j, 2, 3 + 1j],
    },
]


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "core/data/known_cases.json"
    corpus = []
    for case in CASES:
        pts = []
        for z in case["grid"]:
            zc = mp.mpc(complex(z))
            v = mp.mpc(case["f"](zc))
            pts.append([float(zc.real), float(zc.imag), float(v.real), float(v.imag)])
        entry = {k: case[k] for k in ("id", "description", "provenance", "params", "validity")}
        entry["reference_points"] = pts
        corpus.append(entry)
    out.write_text(json.dumps(corpus, indent=1) + "\n")


if __name__ == "__main__":
    main()
