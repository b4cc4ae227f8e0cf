"""Structural registry for the H3/H4 table build: character bookkeeping
(eigenvalues, aA values, series, duals) and block membership lists.

Degrees are *derived* by the builder via relative degrees of the cyclotomic
Hecke algebras; this module only pins down the discrete scaffolding.
Eigenvalue tokens: i, -1, z3 (cube root), z5, z15, and products; exponents
are fractions of a full turn.
"""

from __future__ import annotations

from fractions import Fraction

F = Fraction


def eig(token: str) -> Fraction:
    table = {
        "1": F(0), "-1": F(1, 2), "i": F(1, 4), "-i": F(3, 4),
        "z3": F(1, 3), "z3^2": F(2, 3), "-z3": F(5, 6), "-z3^2": F(1, 6),
        "z5": F(1, 5), "z5^2": F(2, 5), "z5^3": F(3, 5), "z5^4": F(4, 5),
        "-z5": F(7, 10), "-z5^2": F(9, 10), "-z5^3": F(1, 10), "-z5^4": F(3, 10),
        "z15^2": F(2, 15), "z15^7": F(7, 15), "z15^8": F(8, 15),
        "z15^13": F(13, 15),
    }
    return table[token]


def cusp_token(cid: str) -> str:
    return cid[cid.index("[") + 1: cid.index("]")]


# --- H3 characters -------------------------------------------------------
# id -> (aA, eigenvalue exponent, principal_series, hc_series, dual)

H3_CHARS: dict[str, tuple[int, Fraction, bool, str, str]] = {
    "phi{1,0}":   (0,  F(0), True, "1", "phi{1,0}"),
    "phi{3,1}":   (10, F(0), True, "1", "phi{3,1}"),
    "phi{3,3}":   (10, F(0), True, "1", "phi{3,3}"),
    "phi{5,2}":   (12, F(0), True, "1", "phi{5,2}"),
    "phi{4,3}":   (15, F(0), True, "1", "phi{4,3}"),
    "phi{4,4}":   (15, F(0), True, "1", "phi{4,4}"),
    "phi{5,5}":   (18, F(0), True, "1", "phi{5,5}"),
    "phi{3,6}":   (20, F(0), True, "1", "phi{3,6}"),
    "phi{3,8}":   (20, F(0), True, "1", "phi{3,8}"),
    "phi{1,15}":  (30, F(0), True, "1", "phi{1,15}"),
    "I2(5)[1,2];1":   (10, F(3, 5), False, "I2(5)[1,2]", "I2(5)[1,3];1"),
    "I2(5)[1,2];eps": (20, F(3, 5), False, "I2(5)[1,2]", "I2(5)[1,3];eps"),
    "I2(5)[1,3];1":   (10, F(2, 5), False, "I2(5)[1,3]", "I2(5)[1,2];1"),
    "I2(5)[1,3];eps": (20, F(2, 5), False, "I2(5)[1,3]", "I2(5)[1,2];eps"),
    "H3[i]":      (15, F(1, 4), False, "H3[i]", "H3[-i]"),
    "H3[-i]":     (15, F(3, 4), False, "H3[-i]", "H3[i]"),
}

# --- H4 characters -------------------------------------------------------

_H4_PS_AA = {
    "phi{1,0}": 0, "phi{4,1}": 30, "phi{4,7}": 30, "phi{9,2}": 40,
    "phi{9,6}": 40, "phi{16,3}": 45, "phi{16,6}": 45, "phi{25,4}": 48,
    "phi{6,12}": 60, "phi{6,20}": 60, "phi{8,12}": 60, "phi{8,13}": 60,
    "phi{10,12}": 60, "phi{16,11}": 60, "phi{16,13}": 60, "phi{18,10}": 60,
    "phi{24,6}": 60, "phi{24,7}": 60, "phi{24,11}": 60, "phi{24,12}": 60,
    "phi{30,10}'": 60, "phi{30,10}''": 60, "phi{36,5}": 60, "phi{36,15}": 60,
    "phi{40,8}": 60, "phi{48,9}": 60, "phi{25,16}": 72, "phi{16,18}": 75,
    "phi{16,21}": 75, "phi{9,22}": 80, "phi{9,26}": 80, "phi{4,31}": 90,
    "phi{4,37}": 90, "phi{1,60}": 120,
}

_H4_I2_AA = {
    "phi{1,0}": 30, "phi{1,5}''": 40, "phi{2,1}": 60, "phi{2,2}": 60,
    "phi{2,3}": 60, "phi{2,4}": 60, "phi{1,5}'": 80, "phi{1,10}": 90,
}

_H4_I2_SERIES_EIG = {"I2(5)[1,2]": F(3, 5), "I2(5)[1,3]": F(2, 5)}


_H4_CUSPIDALS = [
    "H4[i]", "H4[-i]",
    "H4^I[z3]", "H4^I[z3^2]", "H4^II[z3]", "H4^II[z3^2]",
    "H4^III[z3]", "H4^III[z3^2]", "H4[-z3]", "H4[-z3^2]",
    "H4^I[-1]", "H4^II[-1]", "H4^III[-1]", "H4^IV[-1]", "H4^V[-1]",
    "H4^VI[-1]",
    "H4^I[z5]", "H4^I[z5^2]", "H4^I[z5^3]", "H4^I[z5^4]",
    "H4^II[z5]", "H4^II[z5^2]", "H4^II[z5^3]", "H4^II[z5^4]",
    "H4^III[z5]", "H4^III[z5^4]", "H4^IV[z5]", "H4^IV[z5^4]",
    "H4^V[z5]", "H4^V[z5^4]",
    "H4^VI[z5]", "H4^VI[z5^4]",
    "H4^I[-z5]", "H4^I[-z5^2]", "H4^I[-z5^3]", "H4^I[-z5^4]",
    "H4^II[-z5]", "H4^II[-z5^2]", "H4^II[-z5^3]", "H4^II[-z5^4]",
    "H4[z15^2]", "H4[z15^7]", "H4[z15^8]", "H4[z15^13]",
]

_CONJ_TOKEN = {
    "i": "-i", "-i": "i", "-1": "-1", "z3": "z3^2", "z3^2": "z3",
    "-z3": "-z3^2", "-z3^2": "-z3", "z5": "z5^4", "z5^4": "z5",
    "z5^2": "z5^3", "z5^3": "z5^2", "-z5": "-z5^4", "-z5^4": "-z5",
    "-z5^2": "-z5^3", "-z5^3": "-z5^2", "z15^2": "z15^13",
    "z15^13": "z15^2", "z15^7": "z15^8", "z15^8": "z15^7",
}


def cusp_dual(cid: str) -> str:
    head, tok = cid.split("["), cusp_token(cid)
    return f"{head[0]}[{_CONJ_TOKEN[tok]}]"


def h4_characters() -> dict[str, tuple[int, Fraction, bool, str, str]]:
    chars: dict[str, tuple[int, Fraction, bool, str, str]] = {}
    for cid, aa in _H4_PS_AA.items():
        chars[cid] = (aa, F(0), True, "1", cid)
    for series in ("I2(5)[1,2]", "I2(5)[1,3]"):
        other = "I2(5)[1,3]" if series.endswith("2]") else "I2(5)[1,2]"
        for comp, aa in _H4_I2_AA.items():
            cid = f"{series};{comp}"
            chars[cid] = (aa, _H4_I2_SERIES_EIG[series], False, series,
                          f"{other};{comp}")
    for tok, series in (("i", "H3[i]"), ("-i", "H3[-i]")):
        other = "H3[-i]" if tok == "i" else "H3[i]"
        for comp, aa in (("1", 45), ("eps", 75)):
            dual_comp = comp
            chars[f"{series};{comp}"] = (aa, eig(tok), False, series,
                                         f"{other};{dual_comp}")
    for cid in _H4_CUSPIDALS:
        chars[cid] = (60, eig(cusp_token(cid)), False, cid, cusp_dual(cid))
    return chars


# --- H3 block scaffolding -----------------------------------------------
# label -> (kappas, cuspidal char id, cuspidal degree spec, levi, members,
#           muller line, hc pairs)
# cuspidal degree spec: (scalar string, qpower, factor strings)

TRIVIAL = ("1", 0, ())

H3_BLOCKS = {
    "Phi3": {
        "kappas": (1, 2),
        "cuspidal": ("1", TRIVIAL, "torus Phi3.Phi1"),
        "members": ["phi{1,0}", "phi{5,2}", "phi{5,5}", "phi{1,15}",
                    "phi{4,3}", "phi{4,4}"],
        "muller": ["phi{4,4}", "phi{5,5}", "phi{1,15}", "*", "phi{4,3}", "phi{5,2}", "phi{1,0}"],
        "hc": [],
    },
    "Phi5''": {
        "kappas": (1, 4),
        "cuspidal": ("1", TRIVIAL, "torus Phi5''.Phi1"),
        "members": ["phi{1,0}", "phi{4,3}", "phi{3,8}", "phi{1,15}",
                    "phi{4,4}", "phi{3,3}",
                    "I2(5)[1,2];1", "I2(5)[1,2];eps",
                    "I2(5)[1,3];1", "I2(5)[1,3];eps"],
        "muller": ["phi{3,3}", "phi{4,4}", "phi{1,15}", "*", "phi{3,8}", "phi{4,3}", "phi{1,0}"],
        "hc": [["I2(5)[1,2];1", "I2(5)[1,2];eps",
                "Harish-Chandra induction of the projective I2(5)[1,2]"],
               ["I2(5)[1,3];1", "I2(5)[1,3];eps",
                "Harish-Chandra induction of the projective I2(5)[1,3]"]],
    },
    "Phi5'": {
        "kappas": (2, 3),
        "cuspidal": ("1", TRIVIAL, "torus Phi5'.Phi1"),
        "members": ["phi{1,0}", "phi{4,3}", "phi{3,6}", "phi{1,15}",
                    "phi{4,4}", "phi{3,1}",
                    "I2(5)[1,2];1", "I2(5)[1,2];eps",
                    "I2(5)[1,3];1", "I2(5)[1,3];eps"],
        "muller": ["phi{3,1}", "phi{4,4}", "phi{1,15}", "*", "phi{3,6}", "phi{4,3}", "phi{1,0}"],
        "hc": [["I2(5)[1,2];1", "I2(5)[1,2];eps",
                "Harish-Chandra induction of the projective I2(5)[1,2]"],
               ["I2(5)[1,3];1", "I2(5)[1,3];eps",
                "Harish-Chandra induction of the projective I2(5)[1,3]"]],
    },
    "Phi6": {
        "kappas": (1, 5),
        "cuspidal": ("1", TRIVIAL, "torus Phi6.Phi1"),
        "members": ["phi{1,0}", "phi{5,2}", "phi{5,5}", "phi{1,15}",
                    "H3[i]", "H3[-i]"],
        "muller": ["phi{1,0}", "phi{5,2}", "phi{5,5}", "phi{1,15}", "*"],
        "hc": [],
    },
    "Phi10''": {
        "kappas": (1, 9),
        "cuspidal": ("1", TRIVIAL, "torus Phi10''.Phi1"),
        "members": ["phi{1,0}", "phi{3,1}", "phi{3,6}", "phi{1,15}",
                    "I2(5)[1,2];1", "I2(5)[1,2];eps",
                    "I2(5)[1,3];1", "I2(5)[1,3];eps", "H3[i]", "H3[-i]"],
        "muller": ["phi{1,0}", "phi{3,1}", "phi{3,6}", "phi{1,15}", "*"],
        "hc": [["I2(5)[1,2];1", "I2(5)[1,2];eps",
                "Harish-Chandra induction of the projective I2(5)[1,2]"],
               ["I2(5)[1,3];1", "I2(5)[1,3];eps",
                "Harish-Chandra induction of the projective I2(5)[1,3]"]],
    },
    "Phi10'": {
        "kappas": (3, 7),
        "cuspidal": ("1", TRIVIAL, "torus Phi10'.Phi1"),
        "members": ["phi{1,0}", "phi{3,3}", "phi{3,8}", "phi{1,15}",
                    "I2(5)[1,2];1", "I2(5)[1,2];eps",
                    "I2(5)[1,3];1", "I2(5)[1,3];eps", "H3[i]", "H3[-i]"],
        "muller": ["phi{1,0}", "phi{3,3}", "phi{3,8}", "phi{1,15}", "*"],
        "hc": [["I2(5)[1,2];1", "I2(5)[1,2];eps",
                "Harish-Chandra induction of the projective I2(5)[1,2]"],
               ["I2(5)[1,3];1", "I2(5)[1,3];eps",
                "Harish-Chandra induction of the projective I2(5)[1,3]"]],
    },
    # the two non-principal pairs; the d=2 cuspidal data is the Ennola twist
    "Phi1:I2(5)[1,2]": {
        "label": "Phi1", "kappas": (0,),
        "cuspidal": ("I2(5)[1,2]",
                     ("(0+1*sqrt5)/5", 1, ("Phi1", "Phi1", "Phi2")),
                     "Phi1.I2(5)"),
        "members": ["I2(5)[1,2];1", "I2(5)[1,2];eps"],
        "muller": [], "hc": [],
    },
    "Phi1:I2(5)[1,3]": {
        "label": "Phi1", "kappas": (0,),
        "cuspidal": ("I2(5)[1,3]",
                     ("(0+1*sqrt5)/5", 1, ("Phi1", "Phi1", "Phi2")),
                     "Phi1.I2(5)"),
        "members": ["I2(5)[1,3];1", "I2(5)[1,3];eps"],
        "muller": [], "hc": [],
    },
    "Phi2:I2(5)[1,2]": {
        "label": "Phi2", "kappas": (1,),
        "cuspidal": ("2I2(5)[1,2]",
                     ("(0+1*sqrt5)/5", 1, ("Phi1", "Phi2", "Phi2")),
                     "Phi2.2I2(5)"),
        "members": ["I2(5)[1,2];1", "I2(5)[1,2];eps"],
        "muller": [], "hc": [],
    },
    "Phi2:I2(5)[1,3]": {
        "label": "Phi2", "kappas": (1,),
        "cuspidal": ("2I2(5)[1,3]",
                     ("(0+1*sqrt5)/5", 1, ("Phi1", "Phi2", "Phi2")),
                     "Phi2.2I2(5)"),
        "members": ["I2(5)[1,3];1", "I2(5)[1,3];eps"],
        "muller": [], "hc": [],
    },
}

# --- H4 block scaffolding -----------------------------------------------

_I2SER = lambda comp: [f"I2(5)[1,2];{comp}", f"I2(5)[1,3];{comp}"]

H4_BLOCKS = {
    "Phi12": {
        "kappas": (1, 5, 7, 11),
        "cuspidal": ("1", TRIVIAL, "torus Phi12"),
        "members": ["phi{1,0}", "phi{25,4}", "phi{48,9}", "phi{25,16}",
                    "phi{1,60}", "H4^VI[-1]", "H4^I[z3]", "H4^I[z3^2]",
                    "H4[i]", "H4[-i]", "H4[-z3]", "H4[-z3^2]"],
        "muller": ["phi{1,0}", "phi{25,4}", "phi{48,9}", "phi{25,16}", "phi{1,60}", "*"],
        "hc": [],
    },
    "Phi15''": {
        "kappas": (1, 4, 11, 14),
        "cuspidal": ("1", TRIVIAL, "torus Phi15''"),
        "members": ["phi{1,0}", "phi{16,3}", "phi{30,10}'", "phi{16,21}",
                    "phi{1,60}", "phi{4,37}", "phi{16,18}", "phi{24,7}",
                    "phi{16,6}", "phi{4,7}"]
                   + _I2SER("phi{1,10}") + _I2SER("phi{2,2}")
                   + _I2SER("phi{1,0}")
                   + ["H4[z15^2]", "H4[z15^7]", "H4[z15^8]", "H4[z15^13]",
                      "H4^II[z5]", "H4^II[z5^2]", "H4^II[z5^3]", "H4^II[z5^4]",
                      "H4^I[z3]", "H4^I[z3^2]", "H4^III[z3]", "H4^III[z3^2]",
                      "H4^VI[z5]", "H4^VI[z5^4]"],
        "muller": ["phi{1,0}", "phi{16,3}", "phi{30,10}'", "phi{16,21}", "phi{1,60}", "*", "phi{4,37}", "phi{16,18}", "phi{24,7}", "phi{16,6}", "phi{4,7}"],
        "hc": [["I2(5)[1,2];phi{1,10}", "I2(5)[1,2];phi{2,2}",
                "Harish-Chandra induction of I2(5)[1,2];eps from the H3 Levi"],
               ["I2(5)[1,2];phi{2,2}", "I2(5)[1,2];phi{1,0}",
                "Harish-Chandra induction of I2(5)[1,2];1 from the H3 Levi"],
               ["I2(5)[1,3];phi{1,10}", "I2(5)[1,3];phi{2,2}",
                "Harish-Chandra induction of I2(5)[1,3];eps from the H3 Levi"],
               ["I2(5)[1,3];phi{2,2}", "I2(5)[1,3];phi{1,0}",
                "Harish-Chandra induction of I2(5)[1,3];1 from the H3 Levi"]],
    },
    "Phi15'": {
        "kappas": (2, 7, 8, 13),
        "cuspidal": ("1", TRIVIAL, "torus Phi15'"),
        "members": ["phi{1,0}", "phi{16,3}", "phi{30,10}''", "phi{16,21}",
                    "phi{1,60}", "phi{4,31}", "phi{16,18}", "phi{24,11}",
                    "phi{16,6}", "phi{4,1}"]
                   + _I2SER("phi{1,10}") + _I2SER("phi{2,4}")
                   + _I2SER("phi{1,0}")
                   + ["H4[z15^2]", "H4[z15^7]", "H4[z15^8]", "H4[z15^13]",
                      "H4^I[z5]", "H4^I[z5^2]", "H4^I[z5^3]", "H4^I[z5^4]",
                      "H4^II[z3]", "H4^II[z3^2]", "H4^I[z3]", "H4^I[z3^2]",
                      "H4^V[z5]", "H4^V[z5^4]"],
        "muller": ["phi{1,0}", "phi{16,3}", "phi{30,10}''", "phi{16,21}", "phi{1,60}", "*", "phi{4,31}", "phi{16,18}", "phi{24,11}", "phi{16,6}", "phi{4,1}"],
        "hc": [["I2(5)[1,2];phi{1,10}", "I2(5)[1,2];phi{2,4}",
                "Harish-Chandra induction of I2(5)[1,2];eps from the H3 Levi"],
               ["I2(5)[1,2];phi{2,4}", "I2(5)[1,2];phi{1,0}",
                "Harish-Chandra induction of I2(5)[1,2];1 from the H3 Levi"],
               ["I2(5)[1,3];phi{1,10}", "I2(5)[1,3];phi{2,4}",
                "Harish-Chandra induction of I2(5)[1,3];eps from the H3 Levi"],
               ["I2(5)[1,3];phi{2,4}", "I2(5)[1,3];phi{1,0}",
                "Harish-Chandra induction of I2(5)[1,3];1 from the H3 Levi"]],
    },
    "Phi20''": {
        "kappas": (1, 9, 11, 19),
        "cuspidal": ("1", TRIVIAL, "torus Phi20''"),
        "members": ["phi{1,0}", "phi{9,2}", "phi{16,11}", "phi{9,22}",
                    "phi{1,60}", "H4^II[-1]"]
                   + _I2SER("phi{1,5}'") + _I2SER("phi{2,4}")
                   + _I2SER("phi{1,5}''")
                   + ["H4[i]", "H4[-i]", "H4^II[z5]", "H4^II[z5^4]",
                      "H4^I[-z5^2]", "H4^I[-z5^3]", "H4^II[-z5]",
                      "H4^II[-z5^4]"],
        "muller": ["phi{1,0}", "phi{9,2}", "phi{16,11}", "phi{9,22}", "phi{1,60}", "*"],
        "hc": [["I2(5)[1,3];phi{1,5}'", "I2(5)[1,3];phi{2,4}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,3];phi{2,4}", "I2(5)[1,3];phi{1,5}''",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,2];phi{1,5}'", "I2(5)[1,2];phi{2,4}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,2];phi{2,4}", "I2(5)[1,2];phi{1,5}''",
                "Harish-Chandra induction from the I2(5) Levi"]],
    },
    "Phi20'": {
        "kappas": (3, 7, 13, 17),
        "cuspidal": ("1", TRIVIAL, "torus Phi20'"),
        "members": ["phi{1,0}", "phi{9,6}", "phi{16,13}", "phi{9,26}",
                    "phi{1,60}", "H4^III[-1]"]
                   + _I2SER("phi{1,5}''") + _I2SER("phi{2,2}")
                   + _I2SER("phi{1,5}'")
                   + ["H4[i]", "H4[-i]", "H4^I[z5]", "H4^I[z5^4]",
                      "H4^I[-z5]", "H4^II[-z5^2]", "H4^II[-z5^3]",
                      "H4^I[-z5^4]"],
        "muller": ["phi{1,0}", "phi{9,6}", "phi{16,13}", "phi{9,26}", "phi{1,60}", "*"],
        "hc": [["I2(5)[1,2];phi{1,5}'", "I2(5)[1,2];phi{2,2}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,2];phi{2,2}", "I2(5)[1,2];phi{1,5}''",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,3];phi{1,5}'", "I2(5)[1,3];phi{2,2}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,3];phi{2,2}", "I2(5)[1,3];phi{1,5}''",
                "Harish-Chandra induction from the I2(5) Levi"]],
    },
    "Phi30'": {
        "kappas": (7, 13, 17, 23),
        "cuspidal": ("1", TRIVIAL, "torus Phi30'"),
        "members": ["phi{1,0}", "phi{4,7}", "phi{6,20}", "phi{4,37}",
                    "phi{1,60}", "H4^IV[-1]",
                    "H3[i];1", "H3[i];eps", "H3[-i];1", "H3[-i];eps"]
                   + _I2SER("phi{1,0}") + _I2SER("phi{2,3}")
                   + _I2SER("phi{1,10}")
                   + ["H4[z15^2]", "H4[z15^7]", "H4[z15^8]", "H4[z15^13]",
                      "H4^II[z3]", "H4^II[z3^2]", "H4[-z3]", "H4[-z3^2]",
                      "H4^II[-z5]", "H4^II[-z5^2]", "H4^II[-z5^3]",
                      "H4^II[-z5^4]", "H4^III[z5]", "H4^III[z5^4]"],
        "muller": ["phi{1,0}", "phi{4,7}", "phi{6,20}", "phi{4,37}", "phi{1,60}", "*"],
        "hc": [["I2(5)[1,3];phi{1,10}", "I2(5)[1,3];phi{2,3}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,3];phi{2,3}", "I2(5)[1,3];phi{1,0}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,2];phi{1,10}", "I2(5)[1,2];phi{2,3}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,2];phi{2,3}", "I2(5)[1,2];phi{1,0}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["H3[i];1", "H3[i];eps",
                "Harish-Chandra induction of the projective H3[i]"],
               ["H3[-i];1", "H3[-i];eps",
                "Harish-Chandra induction of the projective H3[-i]"]],
    },
    # Phi30'' membership is resolved computationally (Coxeter case; the tree
    # follows the eigenvalue-line rule and is generated, not drawn).
    "Phi30''": {
        "kappas": (1, 11, 19, 29),
        "cuspidal": ("1", TRIVIAL, "torus Phi30''"),
        "members": None,
        "muller": ["phi{1,0}", "phi{4,1}", "phi{6,20}", "phi{4,31}", "phi{1,60}", "*"],
        "hc": [["I2(5)[1,3];phi{1,10}", "I2(5)[1,3];phi{2,1}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["I2(5)[1,2];phi{1,10}", "I2(5)[1,2];phi{2,1}",
                "Harish-Chandra induction from the I2(5) Levi"],
               ["H3[i];1", "H3[i];eps",
                "Harish-Chandra induction of the projective H3[i]"],
               ["H3[-i];1", "H3[-i];eps",
                "Harish-Chandra induction of the projective H3[-i]"]],
    },
    "Phi10''": {
        "kappas": (1, 9),
        "cuspidal": ("2I2(5)phi{2,1}",
                     ("(5-1*sqrt5)/10", 1, ("Phi1", "Phi10''")),
                     "Phi10''.2I2(5)"),
        "members": ["phi{4,1}", "phi{9,2}", "phi{10,12}", "phi{9,22}",
                    "phi{4,31}", "H4^I[-1]", "H4^I[z5^2]", "H4^I[z5^3]",
                    "H4^I[-z5^2]", "H4^I[-z5^3]"],
        "muller": ["*", "phi{4,31}", "phi{9,22}", "phi{10,12}", "phi{9,2}",
                   "phi{4,1}"],
        "hc": [],
    },
    "Phi10'": {
        "kappas": (3, 7),
        "cuspidal": ("2I2(5)phi{2,2}",
                     ("(5+1*sqrt5)/10", 1, ("Phi1", "Phi10'")),
                     "Phi10'.2I2(5)"),
        "members": ["phi{4,7}", "phi{9,6}", "phi{10,12}", "phi{9,26}",
                    "phi{4,37}", "H4^I[-1]", "H4^II[z5^2]", "H4^II[z5^3]",
                    "H4^II[-z5^2]", "H4^II[-z5^3]"],
        "muller": ["*", "phi{4,37}", "phi{9,26}", "phi{10,12}", "phi{9,6}",
                   "phi{4,7}"],
        "hc": [],
    },
    "Phi5''": {
        "kappas": (1, 4),
        "cuspidal": ("I2(5)phi{2,2}",
                     ("(5+1*sqrt5)/10", 1, ("Phi2", "Phi5''")),
                     "Phi5''.I2(5)"),
        "members": ["phi{4,7}", "phi{8,13}", "phi{4,37}", "phi{9,26}",
                    "phi{18,10}", "phi{9,6}"]
                   + _I2SER("phi{2,2}") + _I2SER("phi{2,3}"),
        "muller": ["phi{9,6}", "phi{18,10}", "phi{9,26}", "*", "phi{4,37}",
                   "phi{8,13}", "phi{4,7}"],
        "hc": [],
    },
    "Phi5'": {
        "kappas": (2, 3),
        "cuspidal": ("I2(5)phi{2,1}",
                     ("(5-1*sqrt5)/10", 1, ("Phi2", "Phi5'")),
                     "Phi5'.I2(5)"),
        "members": ["phi{4,1}", "phi{8,13}", "phi{4,31}", "phi{9,22}",
                    "phi{18,10}", "phi{9,2}"]
                   + _I2SER("phi{2,1}") + _I2SER("phi{2,4}"),
        "muller": ["phi{9,2}", "phi{18,10}", "phi{9,22}", "*", "phi{4,31}",
                   "phi{8,13}", "phi{4,1}"],
        "hc": [["I2(5)[1,2];phi{2,1}", "phi{4,31}",
                "Harish-Chandra induction of a projective from the H3 Levi"],
               ["I2(5)[1,3];phi{2,1}", "phi{4,31}",
                "Harish-Chandra induction of a projective from the H3 Levi"],
               ["I2(5)[1,2];phi{2,4}", "phi{9,22}",
                "Harish-Chandra induction of a projective from the H3 Levi"],
               ["I2(5)[1,3];phi{2,4}", "phi{9,22}",
                "Harish-Chandra induction of a projective from the H3 Levi"]],
    },
    "Phi1:H3[i]": {
        "label": "Phi1", "kappas": (0,),
        "cuspidal": ("H3[i]", ("1/2", 3, ("Phi1",) * 3 + ("Phi3", "Phi5'", "Phi5''")),
                     "Phi1.H3"),
        "members": ["H3[i];1", "H3[i];eps"], "muller": [], "hc": [],
    },
    "Phi1:H3[-i]": {
        "label": "Phi1", "kappas": (0,),
        "cuspidal": ("H3[-i]", ("1/2", 3, ("Phi1",) * 3 + ("Phi3", "Phi5'", "Phi5''")),
                     "Phi1.H3"),
        "members": ["H3[-i];1", "H3[-i];eps"], "muller": [], "hc": [],
    },
    "Phi2:phi{4,3}": {
        "label": "Phi2", "kappas": (1,),
        "cuspidal": ("H3phi{4,3}",
                     ("1/2", 3, ("Phi2",) * 3 + ("Phi6", "Phi10'", "Phi10''")),
                     "Phi2.H3"),
        "members": ["phi{16,3}", "phi{16,18}"],
        "muller": ["phi{16,3}", "phi{16,18}", "*"], "hc": [],
    },
    "Phi2:phi{4,4}": {
        "label": "Phi2", "kappas": (1,),
        "cuspidal": ("H3phi{4,4}",
                     ("1/2", 3, ("Phi2",) * 3 + ("Phi6", "Phi10'", "Phi10''")),
                     "Phi2.H3"),
        "members": ["phi{16,6}", "phi{16,21}"],
        "muller": ["phi{16,6}", "phi{16,21}", "*"], "hc": [],
    },
}
