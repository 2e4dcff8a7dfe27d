"""Command-line front end: classification runs, archive persistence, PGM and
CSV exporters, thin wrappers over the library operations, and the named
verification suites.

Exit codes: 0 success, 2 usage or parse failure, 3 domain error (not bent,
bad dimension, missing file), 4 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import catalog
from .boolean_fn import (
    BooleanFunction,
    DimensionMismatch,
    NotBent,
    NotBentWeight,
    anf_of,
    anf_text,
    degree,
    dual,
    is_bent,
    walsh_hadamard,
    weight_class,
)
from .codes_designs import (
    TooLarge,
    code_of,
    graph_R,
    has_sdp_property,
    is_projective,
    min_weight_rows_check,
    minimum_distance,
    sdp_design,
    weight_distribution,
)
from .equivalence import (
    Classification,
    cayley_translations,
    classify_et_class,
    dillon_schatz_matrix,
    is_extended_cayley_equivalent,
    verify_quadratic_theorem,
    weight_class_matrix,
)
from .graph import (
    DenseGraph,
    NonzeroAtOrigin,
    canonical_form,
    cayley_graph,
    clique_polynomial,
    graph6_decode,
    rank2,
    srg_params,
)
from .ingest import (
    CountError,
    ParseError,
    RangeError,
    VariableOutOfRange,
    parse_anf,
    parse_cast128_sboxes,
    sbox_bit_function,
)
from .sequences import sigma, tau


class MissingArchive(ValueError):
    """Raised when a classification archive file cannot be found."""


ARCHIVE_VERSION = 1


# ---------------------------------------------------------------------------
# archive container


def save_classification(cl: Classification, path: str) -> None:
    """Write the self-describing text archive; deterministic byte-for-byte."""
    size = 1 << cl.n
    lines = [f"version {ARCHIVE_VERSION}", f"dim {cl.n}", f"anf {cl.anf}",
             f"graphs {len(cl.graphs)}"]
    for i, g6 in enumerate(cl.graphs):
        lines.append(f"{i} {g6}")
    for name, mat in (("bent", cl.bent_index), ("dual", cl.dual_index),
                      ("wc", cl.wc_matrix)):
        lines.append(f"matrix {name}")
        for r in range(size):
            lines.append(" ".join(str(int(x)) for x in mat[r]))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_classification(path: str) -> Classification:
    if not os.path.exists(path):
        raise MissingArchive(f"no archive at {path}")
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    pos = 0

    def expect(keyword: str) -> str:
        nonlocal pos
        if pos >= len(lines) or not lines[pos].startswith(keyword + " "):
            raise ValueError(f"archive corrupt: expected {keyword!r} at line {pos + 1}")
        value = lines[pos][len(keyword) + 1:]
        pos += 1
        return value

    version = int(expect("version"))
    if version != ARCHIVE_VERSION:
        raise ValueError(f"unsupported archive version {version}")
    n = int(expect("dim"))
    anf = expect("anf")
    ngraphs = int(expect("graphs"))
    graphs = []
    for i in range(ngraphs):
        idx, _, g6 = lines[pos].partition(" ")
        if int(idx) != i or not g6:
            raise ValueError(f"archive corrupt: bad graph line {pos + 1}")
        graphs.append(g6)
        pos += 1
    size = 1 << n
    mats = {}
    for name in ("bent", "dual", "wc"):
        label = expect("matrix")
        if label != name:
            raise ValueError(f"archive corrupt: expected matrix {name}, got {label}")
        rows = []
        for _ in range(size):
            rows.append([int(t) for t in lines[pos].split()])
            pos += 1
        mats[name] = np.array(rows)
    return Classification(anf, n, graphs, mats["bent"], mats["dual"], mats["wc"])


# ---------------------------------------------------------------------------
# exporters


def write_pgm(matrix: np.ndarray, path: str) -> None:
    """Binary PGM (P5) with grey levels spread linearly over the matrix values,
    0 mapped to black."""
    mat = np.asarray(matrix, dtype=np.int64)
    top = int(mat.max(initial=0))
    levels = (mat * 255 // top if top else mat).astype(np.uint8)
    h, w = levels.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(levels.tobytes())


def _class_descriptor(g6: str):
    g = graph6_decode(g6)
    params = srg_params(g)
    if params is not None:
        label = str(params.as_tuple())
        v, k, lam, mu = params.as_tuple()
    else:
        deg = g.degree(0)
        label = f"K{g.v}" if deg == g.v - 1 else ("empty" if deg == 0 else "non-SRG")
        v, k, lam, mu = g.v, deg, None, None
    return label, (v, k, lam, mu), rank2(g), clique_polynomial(g)


def classification_summary(cl: Classification) -> list[dict]:
    freqs = cl.bent_frequencies()
    rows = []
    for idx in sorted(freqs):
        label, params, rk, poly = _class_descriptor(cl.graphs[idx])
        rows.append({"class": idx, "label": label, "params": params, "rank2": rk,
                     "poly": poly, "frequency": freqs[idx]})
    return rows


def print_summary(cl: Classification, out=None) -> None:
    out = out or sys.stdout
    print(f"{'class':>5}  {'parameters':<18} {'2-rank':>6}  "
          f"{'frequency':>9}  clique polynomial", file=out)
    for row in classification_summary(cl):
        print(f"{row['class']:>5}  {row['label']:<18} {row['rank2']:>6}  "
              f"{row['frequency']:>9}  {row['poly']}", file=out)


def write_csv(cl: Classification, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("class,v,k,lambda,mu,rank2,clique_poly,frequency\n")
        for row in classification_summary(cl):
            v, k, lam, mu = row["params"]
            lam = "" if lam is None else lam
            mu = "" if mu is None else mu
            poly = " ".join(str(c) for c in row["poly"].coeffs)
            fh.write(f"{row['class']},{v},{k},{lam},{mu},{row['rank2']},"
                     f"{poly},{row['frequency']}\n")


# ---------------------------------------------------------------------------
# command implementations


def _function_from_args(args) -> BooleanFunction:
    return parse_anf(args.anf, args.dim)


def cmd_classify(args) -> int:
    f = _function_from_args(args)
    if not is_bent(f):
        print("not bent", file=sys.stderr)
        return 3
    cl = classify_et_class(f, workers=args.workers)
    print_summary(cl)
    if args.out:
        save_classification(cl, args.out)
        print(f"archive written to {args.out}")
    if args.csv:
        write_csv(cl, args.csv)
        print(f"csv written to {args.csv}")
    return 0


def cmd_plot(args) -> int:
    cl = load_classification(args.archive)
    mats = {"bent": cl.bent_index, "dual": cl.dual_index, "wc": cl.wc_matrix}
    write_pgm(mats[args.matrix], args.out)
    print(f"pgm written to {args.out}")
    return 0


def cmd_bent_check(args) -> int:
    f = _function_from_args(args)
    print("bent" if is_bent(f) else "not bent")
    return 0


def cmd_dual(args) -> int:
    f = _function_from_args(args)
    print(anf_text(anf_of(dual(f))))
    return 0


def cmd_wht(args) -> int:
    f = _function_from_args(args)
    print(" ".join(str(int(w)) for w in walsh_hadamard(f).values))
    return 0


def cmd_anf(args) -> int:
    bits = [ch for ch in args.table if ch in "01"]
    if len(bits) != len(args.table.strip()):
        raise ParseError("truth table must be a string of 0s and 1s")
    n = (len(bits) - 1).bit_length()
    if len(bits) != 1 << n or not bits:
        raise ParseError("truth table length must be a power of two")
    f = BooleanFunction(n, [int(b) for b in bits])
    print(anf_text(anf_of(f)))
    return 0


def cmd_code(args) -> int:
    f = _function_from_args(args)
    code = code_of(f)
    dist = weight_distribution(code)
    d = minimum_distance(code)
    print(f"[{code.length},{code.dimension},{d}] projective={is_projective(code)}")
    print("weights " + " ".join(f"{w}:{c}" for w, c in sorted(dist.items())))
    return 0


def cmd_srg(args) -> int:
    f = _function_from_args(args)
    params = srg_params(cayley_graph(f))
    print(params.as_tuple() if params else "not strongly regular")
    return 0


def cmd_clique_poly(args) -> int:
    f = _function_from_args(args)
    print(clique_polynomial(cayley_graph(f)))
    return 0


def cmd_rank2(args) -> int:
    f = _function_from_args(args)
    print(rank2(cayley_graph(f)))
    return 0


def cmd_sequence(args) -> int:
    f = sigma(args.m) if args.kind == "sigma" else tau(args.m)
    print(anf_text(anf_of(f)))
    return 0


def cmd_cast128(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        tables = parse_cast128_sboxes(fh.read())
    if args.check_bent:
        good = sum(1 for box in range(1, 9) for bit in range(32)
                   if is_bent(sbox_bit_function(tables, box, bit)))
        print(f"{good}/256 bent")
        return 0 if good == 256 else 4
    f = sbox_bit_function(tables, args.box, args.bit)
    print(anf_text(anf_of(f)))
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _check(name: str, ok: bool) -> bool:
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return ok


def verify_quadratic(args) -> bool:
    return _check(f"quadratic classes m={args.m}",
                  verify_quadratic_theorem(args.m, workers=args.workers))


def verify_dillon_schatz(args) -> bool:
    ok = True
    for name, f in catalog.representatives_for_dim(args.dim).items():
        same = np.array_equal(weight_class_matrix(f), dillon_schatz_matrix(f))
        ok &= _check(f"dillon-schatz {name}", same)
    return ok


def verify_r_graph(args) -> bool:
    ok = True
    for name, f in catalog.representatives_for_dim(args.dim).items():
        seeds = cayley_translations(f.n)
        lhs = canonical_form(graph_R(f), seed_automorphisms=seeds).g6
        target = BooleanFunction(f.n, dual(f).table ^ weight_class(f))
        rhs = canonical_form(cayley_graph(target), seed_automorphisms=seeds).g6
        ok &= _check(f"r-graph {name}", lhs == rhs)
    return ok


def verify_sdp(args) -> bool:
    ok = True
    for name, f in catalog.representatives_for_dim(args.dim).items():
        ok &= _check(f"sdp property {name}", has_sdp_property(sdp_design(f)))
        if f.n <= 6:
            ok &= _check(f"sdp min-weight rows {name}", min_weight_rows_check(f))
    return ok


def verify_sigma_tau(args) -> bool:
    m = args.m
    s, t = sigma(m), tau(m)
    n = 2 * m
    expected = (4 ** m, (1 << (n - 1)) - (1 << (m - 1)),
                (1 << (n - 2)) - (1 << (m - 1)), (1 << (n - 2)) - (1 << (m - 1)))
    ok = True
    for name, f in (("sigma", s), ("tau", t)):
        params = srg_params(cayley_graph(f))
        ok &= _check(f"{name}_{m} SRG parameters",
                     params is not None and params.as_tuple() == expected)
    equivalent = is_extended_cayley_equivalent(s, t)
    ok &= _check(f"sigma_{m} ~ tau_{m} is {m <= 3}", equivalent == (m <= 3))
    return ok


def verify_cast128(args) -> bool:
    with open(args.file, "r", encoding="utf-8") as fh:
        tables = parse_cast128_sboxes(fh.read())
    ok = True
    bad = [(box, bit) for box in range(1, 9) for bit in range(32)
           if not is_bent(sbox_bit_function(tables, box, bit))]
    ok &= _check("all 256 S-box bit functions bent", not bad)
    wrong = [(box, bit) for box in range(1, 9) for bit in range(32)
             if degree(sbox_bit_function(tables, box, bit)) != 4]
    ok &= _check("all 256 S-box bit functions of degree 4", not wrong)
    return ok


def cmd_verify(args) -> int:
    runner = {
        "quadratic": verify_quadratic,
        "dillon-schatz": verify_dillon_schatz,
        "r-graph": verify_r_graph,
        "sdp": verify_sdp,
        "sigma-tau": verify_sigma_tau,
        "cast128": verify_cast128,
    }[args.suite]
    return 0 if runner(args) else 4


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bentcayley",
        description="Extended-Cayley classification of bent Boolean functions")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fn_args(p):
        p.add_argument("--anf", required=True, help="ANF text, e.g. 'x0*x1 + x2*x3'")
        p.add_argument("--dim", required=True, type=int, help="variable count n")

    p = sub.add_parser("classify", help="classify an ET class by Cayley graphs")
    add_fn_args(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write a classification archive")
    p.add_argument("--csv", help="write the class summary as CSV")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("plot", help="export an archive matrix as binary PGM")
    p.add_argument("--archive", required=True)
    p.add_argument("--matrix", required=True, choices=["bent", "dual", "wc"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)

    for name, func, helptext in (
            ("bent-check", cmd_bent_check, "test bentness"),
            ("dual", cmd_dual, "ANF of the dual bent function"),
            ("wht", cmd_wht, "Walsh-Hadamard spectrum"),
            ("code", cmd_code, "parameters of the support code C(f)"),
            ("srg", cmd_srg, "SRG parameters of the Cayley graph"),
            ("clique-poly", cmd_clique_poly, "clique polynomial of the Cayley graph"),
            ("rank2", cmd_rank2, "GF(2) rank of the Cayley graph adjacency")):
        p = sub.add_parser(name, help=helptext)
        add_fn_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("anf", help="ANF of a truth table bit string")
    p.add_argument("--table", required=True, help="bit string of length 2^n")
    p.set_defaults(func=cmd_anf)

    p = sub.add_parser("sequence", help="ANF of a sequence function")
    p.add_argument("kind", choices=["sigma", "tau"])
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("cast128", help="CAST-128 S-box bit functions")
    p.add_argument("--file", required=True, help="RFC 2144 formatted S-box text")
    p.add_argument("--check-bent", action="store_true")
    p.add_argument("--box", type=int, default=1)
    p.add_argument("--bit", type=int, default=0)
    p.set_defaults(func=cmd_cast128)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=["quadratic", "dillon-schatz", "r-graph",
                                     "sdp", "sigma-tau", "cast128"])
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--file", help="S-box text for the cast128 suite")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, VariableOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotBent, NotBentWeight, NonzeroAtOrigin, DimensionMismatch,
            MissingArchive, TooLarge, CountError, RangeError, ValueError,
            FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
