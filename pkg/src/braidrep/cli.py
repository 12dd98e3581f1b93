"""Command-line interface: JSON in, JSON out.

Subcommands: braid, burau, alexander, ybe, verma, kz, selftest.  Exit code
0 on success, 1 on computation errors (reported as {"error": ...}), 2 on
usage errors.  Complex numbers are "a+bi" strings on input and [re, im]
pairs on output; rational weights are "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

import numpy as np

from . import alexander, kz, verma, words, yang_baxter
from .burau import burau as burau_matrix
from .burau import conjugation_check
from .burau import reduced_burau as reduced_burau_matrix


def parse_complex(text: str) -> complex:
    return complex(text.strip().replace("i", "j").replace(" ", ""))


def parse_weight(text: str):
    """Rational "p/q" (kept exact) or complex "a+bi"."""
    text = text.strip()
    if "i" in text or "j" in text:
        return parse_complex(text)
    return Fraction(text)


def complex_pairs(matrix: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload))


def _word(args) -> words.BraidWord:
    return words.BraidWord.parse(args.word, args.n)


def cmd_braid(args) -> dict:
    w = _word(args)
    perm = words.underlying_permutation(w)
    return {
        "permutation": list(perm.images),
        "cycles": perm.cycles(),
        "pure": perm.is_identity(),
        "exponent_sum": words.exponent_sum(w),
        "components": words.closure_component_count(w),
    }


def cmd_burau(args) -> dict:
    w = _word(args)
    image = reduced_burau_matrix(w) if args.reduced else burau_matrix(w)
    return {"n": image.n, "reduced": image.reduced, "matrix": image.matrix.to_json()}


def cmd_alexander(args) -> dict:
    result = alexander.alexander_conway(_word(args))
    return {"conway": str(result.poly), "components": result.components}


_BUILTIN_R = {
    "identity": lambda d: yang_baxter.identity_r(d),
    "flip": lambda d: yang_baxter.flip_r(d),
    "rq": lambda d: yang_baxter.rq_r(),
}


def cmd_ybe(args) -> dict:
    if args.file:
        with open(args.file) as fh:
            spec = yang_baxter.r_matrix_from_json(json.load(fh))
    else:
        spec = _BUILTIN_R[args.builtin](args.dim)
    report = yang_baxter.check_quasitriangular_matrix_axioms(spec)
    return {
        "braid_ybe": report["braid_ybe"],
        "qybe": report["qybe"],
        "invertible": report["invertible"],
    }


def cmd_verma_dims(args) -> dict:
    lam = parse_weight(args.lam)
    null = verma.nullspace_basis(args.n, lam, args.m)
    return {"weight_dim": verma.weight_dim(args.n, args.m), "null_dim": len(null)}


def cmd_verma_omega(args) -> dict:
    lam = parse_weight(args.lam)
    if not isinstance(lam, Fraction):
        raise ValueError("omega export needs a rational highest weight")
    block = verma.omega_matrix(args.n, args.i, args.j, lam, args.m).block
    entries = [[str(Fraction(x)) for x in row] for row in block]
    return {
        "i": args.i,
        "j": args.j,
        "matrix": {"rows": len(block), "cols": len(block), "entries": entries},
    }


def _kz_spec(args, restrict: bool) -> kz.KzSpec:
    lam = parse_weight(args.lam)
    if (args.h is None) == (args.tau is None):
        raise ValueError("give exactly one of --h and --tau")
    if args.h is not None:
        return kz.KzSpec(args.n, lam, args.m, h=parse_complex(args.h), restrict_to_nullspace=restrict)
    return kz.KzSpec(args.n, lam, args.m, tau=parse_complex(args.tau), restrict_to_nullspace=restrict)


def cmd_kz_monodromy(args) -> dict:
    spec = _kz_spec(args, args.nullspace)
    result = kz.monodromy(spec, words.BraidWord.parse(args.word, args.n), args.tol)
    return {"matrix": complex_pairs(result.matrix), "est_error": result.est_error}


def cmd_kz_check(args) -> dict:
    spec = _kz_spec(args, False)
    if args.n >= 3:
        left = kz.monodromy(spec, words.BraidWord.parse("s1 s2 s1", args.n), args.tol)
        right = kz.monodromy(spec, words.BraidWord.parse("s2 s1 s2", args.n), args.tol)
        braid_residual = float(np.max(np.abs(left.matrix - right.matrix)))
    else:
        # two strands have no relation; report the inverse-consistency residual
        loop = kz.monodromy(spec, words.BraidWord.parse("s1 s1^-1", 2), args.tol)
        braid_residual = float(np.max(np.abs(loop.matrix - np.eye(loop.matrix.shape[0]))))
    rng = random.Random(args.seed)
    flat = 0.0
    for _ in range(10):
        z = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(args.n)]
        while min(
            abs(a - b) for i, a in enumerate(z) for b in z[i + 1 :]
        ) < 0.3:
            z = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(args.n)]
        u = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(args.n)]
        v = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(args.n)]
        flat = max(flat, kz.flatness_residual(spec, z, u, v))
    homotopy = kz.homotopy_invariance_check(spec, args.tol)
    return {
        "braid_residual": braid_residual,
        "flatness_residual": flat,
        "homotopy_residual": homotopy,
    }


# -- selftest ----------------------------------------------------------------

def _random_word(rng: random.Random, n: int, max_len: int) -> words.BraidWord:
    length = rng.randint(0, max_len)
    return words.BraidWord(
        n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length))
    )


def _selftest_checks(seed: int):
    rng = random.Random(seed)

    def words_check():
        for _ in range(50):
            n = rng.randint(2, 6)
            w, g = _random_word(rng, n, 8), _random_word(rng, n, 8)
            if (w * w.inverse()).free_reduce().letters:
                return False
            lhs = words.underlying_permutation(w * g)
            rhs = words.underlying_permutation(w).then(words.underlying_permutation(g))
            if lhs != rhs:
                return False
            if words.exponent_sum(words.markov_conjugate(w, g)) != words.exponent_sum(w):
                return False
        return True

    def burau_check():
        for n in range(2, 6):
            for i in range(1, n - 1):
                a = words.BraidWord(n, ((i, 1), (i + 1, 1), (i, 1)))
                b = words.BraidWord(n, ((i + 1, 1), (i, 1), (i + 1, 1)))
                if burau_matrix(a).matrix != burau_matrix(b).matrix:
                    return False
                if reduced_burau_matrix(a).matrix != reduced_burau_matrix(b).matrix:
                    return False
        return all(conjugation_check(n, i) for n in range(3, 7) for i in range(1, n))

    def alexander_check():
        trefoil = alexander.markov_f(words.BraidWord.parse("s1 s1 s1", 2))
        if str(trefoil) != "s^-2 - 1 + s^2":
            return False
        for _ in range(15):
            n = rng.randint(2, 4)
            w, g = _random_word(rng, n, 7), _random_word(rng, n, 7)
            if not alexander.markov_invariance_check(w, g):
                return False
        for _ in range(10):
            n = rng.randint(2, 4)
            if not alexander.skein_check(
                _random_word(rng, n, 5), rng.randint(1, n - 1), _random_word(rng, n, 5)
            ):
                return False
        return True

    def ybe_check():
        for spec in (yang_baxter.identity_r(2), yang_baxter.flip_r(3), yang_baxter.rq_r()):
            if not yang_baxter.check_braid_ybe(spec).passes:
                return False
        bad = yang_baxter.RMatrixSpec(
            2,
            "rational",
            yang_baxter.RingMatrix.from_rows(
                [[Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(4)] for _ in range(4)]
            ),
        )
        return yang_baxter.check_braid_ybe(bad).norm != 0

    def verma_check():
        lam = Fraction(7, 3)
        for n in range(2, 5):
            if len(verma.nullspace_basis(n, lam, 2)) != n * (n - 1) // 2:
                return False
        return verma.kd_relation_check(3, lam, 2) and verma.equivariance_check(2, lam, 2)

    # scipy-free: the abelian transport is compared against a truncated
    # exponential series, which is an independent closed form
    def kz_numeric_check():
        lam = Fraction(1, 2)
        spec = kz.KzSpec(2, lam, 1, h=0.1)
        result = kz.monodromy(spec, words.BraidWord.parse("s1 s1", 2), 1e-9)
        om = np.asarray(
            verma.omega_matrix(2, 1, 2, complex(float(lam)), 1).block, dtype=complex
        )
        expected = np.eye(2, dtype=complex)
        term = np.eye(2, dtype=complex)
        for k in range(1, 30):
            term = term @ (0.1 * om) / k
            expected = expected + term
        if np.max(np.abs(result.matrix - expected)) > 1e-7:
            return False
        spec3 = kz.KzSpec(3, lam, 1, h=0.1 + 0.05j)
        left = kz.monodromy(spec3, words.BraidWord.parse("s1 s2 s1", 3), 1e-8)
        right = kz.monodromy(spec3, words.BraidWord.parse("s2 s1 s2", 3), 1e-8)
        return float(np.max(np.abs(left.matrix - right.matrix))) < 1e-6

    return [
        ("braid_words", words_check),
        ("burau_relations", burau_check),
        ("alexander_markov_skein", alexander_check),
        ("yang_baxter_corpus", ybe_check),
        ("verma_dimensions_relations", verma_check),
        ("kz_monodromy", kz_numeric_check),
    ]


def cmd_selftest(args) -> dict:
    results = []
    ok = True
    for name, check in _selftest_checks(args.seed):
        passed = bool(check())
        ok = ok and passed
        results.append({"name": name, "passed": passed})
    return {"seed": args.seed, "checks": results, "all_passed": ok}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="Braid representations: Burau, Alexander-Conway, Yang-Baxter, KZ monodromy.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", help="permutation, purity, exponent sum of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("burau", help="Burau matrix of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("word")
    p.set_defaults(func=cmd_burau)

    p = sub.add_parser("alexander", help="Alexander-Conway polynomial of the closure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("ybe", help="Yang-Baxter residuals of an r-matrix")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="JSON r-matrix file")
    src.add_argument("--builtin", choices=sorted(_BUILTIN_R))
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("verma", help="weight spaces and Omega matrices")
    vsub = p.add_subparsers(dest="verma_command", required=True)
    q = vsub.add_parser("dims")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.set_defaults(func=cmd_verma_dims)
    q = vsub.add_parser("omega")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.set_defaults(func=cmd_verma_omega)

    p = sub.add_parser("kz", help="KZ parallel transport and residual checks")
    ksub = p.add_subparsers(dest="kz_command", required=True)
    q = ksub.add_parser("monodromy")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--h", default=None)
    q.add_argument("--tau", default=None)
    q.add_argument("--word", required=True)
    q.add_argument("--tol", type=float, default=1e-9)
    q.add_argument("--nullspace", action="store_true")
    q.set_defaults(func=cmd_kz_monodromy)
    q = ksub.add_parser("check")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--h", default=None)
    q.add_argument("--tau", default=None)
    q.add_argument("--tol", type=float, default=1e-9)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_kz_check)

    p = sub.add_parser("selftest", help="run the deterministic property suites")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except Exception as exc:  # computation errors -> JSON + exit 1
        print(json.dumps({"error": str(exc)}))
        return 1
    _emit(payload, args.pretty)
    if args.command == "selftest" and not payload["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
